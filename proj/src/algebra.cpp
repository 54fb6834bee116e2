#include "planar/algebra.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace planar {

std::vector<Scalar> FinDimAlgebra::multiply(
    const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
  const size_t d = dim();
  std::vector<Scalar> r(d, Scalar::zero(ring));
  for (size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (const auto& [k, c] : entry(i, j)) r[k] += xy * c;
    }
  }
  return r;
}

Matrix FinDimAlgebra::left_mult(const std::vector<Scalar>& x) const {
  const size_t d = dim();
  Matrix m(ring, d, d);
  for (size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < d; ++j)
      for (const auto& [k, c] : entry(i, j)) m.at(k, j) += x[i] * c;
  }
  return m;
}

Matrix FinDimAlgebra::right_mult(const std::vector<Scalar>& x) const {
  const size_t d = dim();
  Matrix m(ring, d, d);
  for (size_t j = 0; j < d; ++j) {
    if (x[j].is_zero()) continue;
    for (size_t i = 0; i < d; ++i)
      for (const auto& [k, c] : entry(i, j)) m.at(k, i) += x[j] * c;
  }
  return m;
}

std::vector<Scalar> FinDimAlgebra::basis_vector(size_t i) const {
  std::vector<Scalar> v(dim(), Scalar::zero(ring));
  v[i] = Scalar::one(ring);
  return v;
}

Scalar FinDimAlgebra::apply_trace(const std::vector<Scalar>& x) const {
  if (!trace) throw std::invalid_argument("algebra has no trace attached");
  Scalar s = Scalar::zero(ring);
  for (size_t i = 0; i < dim(); ++i)
    if (!x[i].is_zero()) s += x[i] * (*trace)[i];
  return s;
}

std::vector<Scalar> FinDimAlgebra::regular_trace() const {
  const size_t d = dim();
  std::vector<Scalar> tau(d, Scalar::zero(ring));
  for (size_t k = 0; k < d; ++k)
    for (size_t i = 0; i < d; ++i)
      for (const auto& [idx, c] : entry(k, i))
        if (idx == i) tau[k] += c;
  return tau;
}

void FinDimAlgebra::check_axioms(uint64_t seed, size_t exhaustive_limit) const {
  const size_t d = dim();
  for (size_t j = 0; j < d; ++j) {
    if (!(multiply(unit, basis_vector(j)) == basis_vector(j)) ||
        !(multiply(basis_vector(j), unit) == basis_vector(j)))
      throw std::logic_error("unit law fails in algebra");
  }
  auto assoc = [&](size_t i, size_t j, size_t k) {
    auto l = multiply(multiply(basis_vector(i), basis_vector(j)),
                      basis_vector(k));
    auto r = multiply(basis_vector(i),
                      multiply(basis_vector(j), basis_vector(k)));
    if (!(l == r)) throw std::logic_error("associativity fails in algebra");
  };
  if (d <= exhaustive_limit) {
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j)
        for (size_t k = 0; k < d; ++k) assoc(i, j, k);
  } else {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 500; ++t)
      assoc(rng() % d, rng() % d, rng() % d);
  }
}

bool FinDimAlgebra::is_nilpotent(const std::vector<Scalar>& x) const {
  std::vector<Scalar> p = x;
  for (size_t k = 0; k < dim(); ++k) {
    bool zero = true;
    for (const auto& c : p) zero = zero && c.is_zero();
    if (zero) return true;
    p = multiply(p, x);
  }
  for (const auto& c : p)
    if (!c.is_zero()) return false;
  return true;
}

Matrix gram_matrix(const FinDimAlgebra& a, const std::vector<Scalar>& tau,
                   Exec exec) {
  const size_t d = a.dim();
  Matrix g(a.ring, d, d);
  const bool par = exec == Exec::Parallel;
  (void)par;
#ifdef PLANAR_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (par)
#endif
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      Scalar s = Scalar::zero(a.ring);
      for (const auto& [k, c] : a.entry(i, j))
        if (!tau[k].is_zero()) s += c * tau[k];
      g.at(i, j) = s;
    }
  return g;
}

std::vector<std::vector<Scalar>> radical(const FinDimAlgebra& a, Exec exec) {
  if (!a.trace) throw std::invalid_argument("radical needs a trace");
  return kernel(gram_matrix(a, *a.trace, exec), exec);
}

bool radical_is_zero(const FinDimAlgebra& a, Exec exec) {
  if (!a.trace) throw std::invalid_argument("radical needs a trace");
  Matrix g = gram_matrix(a, *a.trace, exec);
  if (g.ring()->kind == RingKind::Rational &&
      det_nonzero_certificate(g, exec))
    return true;
  return kernel(g, exec).empty();
}

// ---------------------------------------------------------------------------
// block decomposition of split semisimple rational algebras

namespace {

// minimal polynomial of z relative to the idempotent e (the identity of the
// corner algebra): monic coefficients c with z^k = sum c_i z^i, z^0 := e
std::vector<Scalar> relative_min_poly(const FinDimAlgebra& a,
                                      const std::vector<Scalar>& e,
                                      const std::vector<Scalar>& z) {
  const size_t d = a.dim();
  const Ring& r = a.ring;
  std::vector<std::vector<Scalar>> powers{e};
  std::vector<Scalar> cur = e;
  for (size_t k = 1; k <= d + 1; ++k) {
    cur = a.multiply(cur, z);
    // is cur in the span of powers?
    Matrix m(r, d, powers.size());
    for (size_t j = 0; j < powers.size(); ++j)
      for (size_t i = 0; i < d; ++i) m.at(i, j) = powers[j][i];
    auto sol = solve(m, cur);
    if (sol) return *sol;  // z^k = sum sol_i z^i
    powers.push_back(cur);
  }
  throw std::logic_error("minimal polynomial not found");
}

// integer roots of the monic integer polynomial x^k - sum c_i x^i given by
// rational coefficients scaled by substitution x -> x/scale
std::vector<mpz_class> integer_roots_monic(const std::vector<mpz_class>& cs) {
  // cs: coefficients of monic poly p(x) = x^n + cs[n-1] x^(n-1) + ... + cs[0]
  const size_t n = cs.size();
  auto eval = [&](const mpz_class& x) {
    mpz_class v = 1;
    for (size_t i = n; i-- > 0;) v = v * x + cs[i];
    return v;
  };
  std::vector<mpz_class> roots;
  if (cs[0] == 0) {
    roots.push_back(0);
  } else {
    mpz_class c0 = abs(cs[0]);
    std::vector<mpz_class> divisors;
    for (mpz_class d = 1; d * d <= c0; ++d) {
      if (c0 % d == 0) {
        divisors.push_back(d);
        divisors.push_back(c0 / d);
      }
    }
    for (const auto& d : divisors)
      for (int sign : {1, -1}) {
        mpz_class cand = sign * d;
        if (eval(cand) == 0 &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
  }
  return roots;
}

}  // namespace

std::vector<size_t> block_dimensions(const FinDimAlgebra& a0, Exec exec) {
  if (a0.ring->kind != RingKind::Rational)
    throw std::invalid_argument(
        "block_dimensions supports rational algebras (non-split otherwise)");
  FinDimAlgebra a = a0;
  a.trace = a.regular_trace();
  if (!radical_is_zero(a, exec))
    throw std::invalid_argument("block_dimensions needs a semisimple algebra");
  const size_t d = a.dim();
  const Ring& r = a.ring;

  // center: x with b_i x = x b_i for all i
  Matrix comm(r, d * d, d);
  for (size_t i = 0; i < d; ++i) {
    Matrix li = a.left_mult(a.basis_vector(i));
    Matrix ri = a.right_mult(a.basis_vector(i));
    for (size_t row = 0; row < d; ++row)
      for (size_t col = 0; col < d; ++col)
        comm.at(i * d + row, col) = li.at(row, col) - ri.at(row, col);
  }
  auto center = kernel(comm, exec);

  std::vector<std::vector<Scalar>> primitive;
  std::vector<std::vector<Scalar>> work{a.unit};
  std::mt19937_64 rng(12345);
  while (!work.empty()) {
    std::vector<Scalar> e = work.back();
    work.pop_back();
    // center of the corner eAe: spanned by e*z*e for central z
    std::vector<std::vector<Scalar>> corner;
    Matrix span(r, d, 0);
    std::vector<std::vector<Scalar>> indep;
    for (const auto& z : center) {
      auto ez = a.multiply(a.multiply(e, z), e);
      // linear independence via rank growth
      Matrix m(r, d, indep.size() + 1);
      for (size_t j = 0; j < indep.size(); ++j)
        for (size_t i = 0; i < d; ++i) m.at(i, j) = indep[j][i];
      for (size_t i = 0; i < d; ++i) m.at(i, indep.size()) = ez[i];
      if (rank(m, Exec::Serial) == indep.size() + 1) indep.push_back(ez);
    }
    corner = indep;
    if (corner.size() <= 1) {
      primitive.push_back(e);
      continue;
    }
    // find a splitting element: corner basis elements, then random combos
    bool split_done = false;
    for (int attempt = 0; attempt < 40 && !split_done; ++attempt) {
      std::vector<Scalar> z(d, Scalar::zero(r));
      if (attempt < static_cast<int>(corner.size())) {
        z = corner[attempt];
      } else {
        for (const auto& c : corner) {
          long coef = static_cast<long>(rng() % 7) - 3;
          for (size_t i = 0; i < d; ++i)
            z[i] += Scalar::integer(r, coef) * c[i];
        }
      }
      auto mp = relative_min_poly(a, e, z);
      if (mp.size() <= 1) continue;  // scalar multiple of e
      // scale to a monic integer polynomial: x -> x/L with L = lcm of dens
      mpz_class lcm = 1;
      for (const auto& c : mp) {
        mpz_class den = c.rat().get_den();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
      }
      const size_t n = mp.size();
      // p(x) = x^n - sum mp[i] x^i; substitute x = y/L, multiply by L^n:
      // y^n - sum mp[i] L^(n-i) y^i
      std::vector<mpz_class> cs(n);
      mpz_class lpow = 1;
      for (size_t i = n; i-- > 0;) {
        lpow *= lcm;  // L^(n-i)
        mpq_class scaled = -mp[i].rat() * mpq_class(lpow);
        if (scaled.get_den() != 1) throw std::logic_error("scaling failed");
        cs[i] = scaled.get_num();
      }
      auto roots = integer_roots_monic(cs);
      if (roots.size() != n) continue;  // not fully split; try another z
      // idempotents: e_r = prod_{s != r} (z - (s/L) e) / ((r-s)/L)
      std::vector<std::vector<Scalar>> parts;
      bool ok = true;
      for (const auto& root : roots) {
        std::vector<Scalar> p = e;
        for (const auto& other : roots) {
          if (other == root) continue;
          // (z - (other/L) e) / ((root-other)/L)
          Scalar oc = Scalar::rational(r, mpq_class(other, lcm));
          Scalar denom = Scalar::rational(r, mpq_class(root - other, lcm));
          std::vector<Scalar> factor(d, Scalar::zero(r));
          for (size_t i = 0; i < d; ++i)
            factor[i] = (z[i] - oc * e[i]) / denom;
          p = a.multiply(p, factor);
        }
        // sanity: idempotent
        if (!(a.multiply(p, p) == p)) {
          ok = false;
          break;
        }
        bool zero = true;
        for (const auto& c : p) zero = zero && c.is_zero();
        if (!zero) parts.push_back(p);
      }
      if (!ok || parts.size() < 2) continue;
      for (auto& p : parts) work.push_back(std::move(p));
      split_done = true;
    }
    if (!split_done)
      throw std::invalid_argument("block failed to split over the rationals");
  }

  std::vector<size_t> dims;
  size_t total = 0;
  for (const auto& e : primitive) {
    Matrix ideal(r, d, d);
    for (size_t j = 0; j < d; ++j) {
      auto ej = a.multiply(e, a.basis_vector(j));
      for (size_t i = 0; i < d; ++i) ideal.at(i, j) = ej[i];
    }
    size_t dimideal = rank(ideal, exec);
    size_t b = 0;
    while (b * b < dimideal) ++b;
    if (b * b != dimideal)
      throw std::invalid_argument("block dimension is not a perfect square");
    dims.push_back(b);
    total += dimideal;
  }
  if (total != d) throw std::logic_error("block dimensions do not sum");
  std::sort(dims.begin(), dims.end());
  return dims;
}

// ---------------------------------------------------------------------------
// diagram algebras

size_t DiagramAlgebra::index_of(const Diagram& d) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), d);
  if (it == basis.end() || !(*it == d))
    throw std::invalid_argument("diagram not in basis");
  return static_cast<size_t>(it - basis.begin());
}

size_t DiagramAlgebra::identity_index() const {
  return index_of(Diagram::identity(flavor, word));
}

std::vector<Scalar> DiagramAlgebra::coords(const DiagramVector& v) const {
  std::vector<Scalar> c(dim(), Scalar::zero(params.ring()));
  for (const auto& [d, s] : v.terms()) c[index_of(d)] = s;
  return c;
}

DiagramVector DiagramAlgebra::vector(const std::vector<Scalar>& coords) const {
  DiagramVector v(Shape{flavor, word, word}, params.ring());
  for (size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) v.add_term(basis[i], coords[i]);
  return v;
}

FinDimAlgebra DiagramAlgebra::algebra(
    std::optional<std::vector<Scalar>> trace) const {
  FinDimAlgebra a;
  a.ring = params.ring();
  const size_t d = dim();
  a.labels.reserve(d);
  for (const auto& b : basis) a.labels.push_back(b.to_string());
  a.mult.resize(d * d);
  for (size_t i = 0; i < d * d; ++i) {
    const auto& [k, c] = table[i];
    if (k != kNone) a.mult[i].push_back({k, c});
  }
  a.unit = std::vector<Scalar>(d, Scalar::zero(a.ring));
  a.unit[identity_index()] = Scalar::one(a.ring);
  a.trace = std::move(trace);
  return a;
}

namespace {

std::pair<uint32_t, Scalar> one_product(const std::vector<Diagram>& basis,
                                        size_t i, size_t j,
                                        const EvalParams& params) {
  DiagramVector v = compose(basis[i], basis[j], params);
  if (v.is_zero())
    return {DiagramAlgebra::kNone, Scalar::zero(params.ring())};
  const auto& [w, c] = *v.terms().begin();
  auto it = std::lower_bound(basis.begin(), basis.end(), w);
  if (it == basis.end() || !(*it == w))
    throw std::logic_error("composition left the diagram basis");
  return {static_cast<uint32_t>(it - basis.begin()), c};
}

}  // namespace

std::vector<std::pair<uint32_t, Scalar>> structure_table_serial(
    const std::vector<Diagram>& basis, const EvalParams& params) {
  const size_t d = basis.size();
  std::vector<std::pair<uint32_t, Scalar>> table(
      d * d, {DiagramAlgebra::kNone, Scalar::zero(params.ring())});
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) table[i * d + j] = one_product(basis, i, j, params);
  return table;
}

std::vector<std::pair<uint32_t, Scalar>> structure_table_parallel(
    const std::vector<Diagram>& basis, const EvalParams& params) {
  const size_t d = basis.size();
  std::vector<std::pair<uint32_t, Scalar>> table(
      d * d, {DiagramAlgebra::kNone, Scalar::zero(params.ring())});
#ifdef PLANAR_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (size_t idx = 0; idx < d * d; ++idx)
    table[idx] = one_product(basis, idx / d, idx % d, params);
  return table;
}

DiagramAlgebra build_diagram_algebra(Flavor f, const Word& w,
                                     const EvalParams& params, Exec exec) {
  DiagramAlgebra alg{f, w, params, enumerate_basis(f, w, w), {}};
  alg.table = exec == Exec::Parallel
                  ? structure_table_parallel(alg.basis, params)
                  : structure_table_serial(alg.basis, params);
  return alg;
}

}  // namespace planar
