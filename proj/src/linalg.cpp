#include "planar/linalg.hpp"

#include <cstdint>

#ifdef PLANAR_HAVE_OPENMP
#include <omp.h>
#endif

namespace planar {

Matrix Matrix::identity(const Ring& r, size_t n) {
  Matrix m(r, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(r);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix r(ring_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(ring_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector size mismatch");
  std::vector<Scalar> r(rows_, Scalar::zero(ring_));
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

namespace {

// Row echelon over the fraction field. Deterministic: pivot = first nonzero
// entry in column order. Row updates are independent, so the parallel path
// produces bit-identical results.
struct EchelonResult {
  Matrix m;
  std::vector<size_t> pivot_cols;
};

EchelonResult echelon(Matrix m, Exec exec) {
  const size_t rows = m.rows(), cols = m.cols();
  std::vector<size_t> pivots;
  size_t lead = 0;
  for (size_t col = 0; col < cols && lead < rows; ++col) {
    size_t piv = lead;
    while (piv < rows && m.at(piv, col).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != lead)
      for (size_t j = col; j < cols; ++j) std::swap(m.at(piv, j), m.at(lead, j));
    const Scalar inv = m.at(lead, col).inverse();
    for (size_t j = col; j < cols; ++j)
      if (!m.at(lead, j).is_zero()) m.at(lead, j) = m.at(lead, j) * inv;
    // per-pivot region overhead beats tiny updates; only fork on real work
    const bool par = exec == Exec::Parallel &&
                     (rows - lead) * (cols - col) >= 32768;
    (void)par;
#ifdef PLANAR_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (par)
#endif
    for (size_t i = lead + 1; i < rows; ++i) {
      if (m.at(i, col).is_zero()) continue;
      const Scalar f = m.at(i, col);
      for (size_t j = col; j < cols; ++j)
        if (!m.at(lead, j).is_zero())
          m.at(i, j) = m.at(i, j) - f * m.at(lead, j);
    }
    pivots.push_back(col);
    ++lead;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

size_t rank(const Matrix& m, Exec exec) {
  return echelon(m, exec).pivot_cols.size();
}

std::vector<std::vector<Scalar>> kernel(const Matrix& m, Exec exec) {
  auto ech = echelon(m, exec);
  const Ring& r = m.ring();
  const size_t cols = m.cols();
  // back-substitute to reduced form
  Matrix& e = ech.m;
  for (size_t pi = ech.pivot_cols.size(); pi-- > 0;) {
    size_t col = ech.pivot_cols[pi];
    for (size_t i = 0; i < pi; ++i) {
      if (e.at(i, col).is_zero()) continue;
      const Scalar f = e.at(i, col);
      for (size_t j = col; j < cols; ++j)
        if (!e.at(pi, j).is_zero()) e.at(i, j) = e.at(i, j) - f * e.at(pi, j);
    }
  }
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : ech.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Scalar> v(cols, Scalar::zero(r));
    v[free_col] = Scalar::one(r);
    for (size_t pi = 0; pi < ech.pivot_cols.size(); ++pi)
      v[ech.pivot_cols[pi]] = -e.at(pi, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Fraction-free Bareiss; every division is exact in the entry ring.
Scalar det(const Matrix& m0, Exec exec) {
  if (m0.rows() != m0.cols()) throw std::invalid_argument("det needs square");
  const size_t n = m0.rows();
  const Ring& r = m0.ring();
  if (n == 0) return Scalar::one(r);
  Matrix m = m0;
  Scalar prev = Scalar::one(r);
  bool negate = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t piv = k;
    while (piv < n && m.at(piv, k).is_zero()) ++piv;
    if (piv == n) return Scalar::zero(r);
    if (piv != k) {
      for (size_t j = k; j < n; ++j) std::swap(m.at(piv, j), m.at(k, j));
      negate = !negate;
    }
    const bool par = exec == Exec::Parallel && (n - k) * (n - k) >= 32768;
    (void)par;
#ifdef PLANAR_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (par)
#endif
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        m.at(i, j) =
            (m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j)) / prev;
      m.at(i, k) = Scalar::zero(r);
    }
    prev = m.at(k, k);
  }
  Scalar d = m.at(n - 1, n - 1);
  return negate ? -d : d;
}

std::optional<std::vector<Scalar>> solve(const Matrix& a,
                                         const std::vector<Scalar>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve shape");
  const Ring& r = a.ring();
  Matrix aug(r, a.rows(), a.cols() + 1);
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  auto ech = echelon(std::move(aug), Exec::Serial);
  for (size_t c : ech.pivot_cols)
    if (c == a.cols()) return std::nullopt;  // inconsistent
  // back substitution
  std::vector<Scalar> x(a.cols(), Scalar::zero(r));
  for (size_t pi = ech.pivot_cols.size(); pi-- > 0;) {
    size_t col = ech.pivot_cols[pi];
    Scalar v = ech.m.at(pi, a.cols());
    for (size_t j = col + 1; j < a.cols(); ++j)
      if (!ech.m.at(pi, j).is_zero()) v = v - ech.m.at(pi, j) * x[j];
    x[col] = v;  // pivot normalized to 1 in echelon()
  }
  return x;
}

// ---------------------------------------------------------------------------
// mod-p determinant certificate

namespace {

constexpr uint64_t kCertPrimes[] = {
    2305843009213693951ull,  // 2^61 - 1
    1152921504606846883ull,
    576460752303423619ull,
    4611686018427387847ull,
};

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

uint64_t mpz_mod_u64(const mpz_class& z, uint64_t p) {
  mpz_class pp;
  mpz_import(pp.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  mpz_class m;
  mpz_mod(m.get_mpz_t(), z.get_mpz_t(), pp.get_mpz_t());
  uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, m.get_mpz_t());
  return out;
}

// dense Gauss mod p; returns true iff the matrix is invertible mod p
bool invertible_mod_p(std::vector<uint64_t> m, size_t n, uint64_t p,
                      Exec exec) {
  const bool par = exec == Exec::Parallel;
  (void)par;
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && m[piv * n + k] == 0) ++piv;
    if (piv == n) return false;
    if (piv != k)
      for (size_t j = k; j < n; ++j) std::swap(m[piv * n + j], m[k * n + j]);
    uint64_t inv = powmod(m[k * n + k], p - 2, p);
#ifdef PLANAR_HAVE_OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
    for (size_t i = k + 1; i < n; ++i) {
      uint64_t f = mulmod(m[i * n + k], inv, p);
      if (f == 0) continue;
      for (size_t j = k; j < n; ++j) {
        uint64_t sub = mulmod(f, m[k * n + j], p);
        m[i * n + j] = (m[i * n + j] + p - sub) % p;
      }
    }
  }
  return true;
}

}  // namespace

bool det_nonzero_certificate(const Matrix& m, Exec exec) {
  if (m.rows() != m.cols()) throw std::invalid_argument("square needed");
  if (m.ring()->kind != RingKind::Rational) return false;
  const size_t n = m.rows();
  if (n == 0) return true;
  for (uint64_t p : kCertPrimes) {
    std::vector<uint64_t> red(n * n);
    bool good = true;
    for (size_t i = 0; i < n * n && good; ++i) {
      const mpq_class& q = m.at(i / n, i % n).rat();
      uint64_t den = mpz_mod_u64(q.get_den(), p);
      if (den == 0) {
        good = false;
        break;
      }
      uint64_t num = mpz_mod_u64(q.get_num(), p);
      red[i] = mulmod(num, powmod(den, p - 2, p), p);
    }
    if (!good) continue;
    if (invertible_mod_p(std::move(red), n, p, exec)) return true;
  }
  return false;
}

}  // namespace planar
