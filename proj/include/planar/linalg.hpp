// Exact dense linear algebra over Scalar rings: rank, kernel, determinant,
// solving. Elimination runs over the fraction field (laurent entries divide
// into laurent fractions, which stay exact); determinants use fraction-free
// Bareiss steps whose divisions are exact in the ring. A mod-p determinant
// certificate provides a fast exact proof of nondegeneracy for rational
// matrices.
#pragma once

#include <optional>
#include <vector>

#include "planar/exec.hpp"
#include "planar/scalar.hpp"

namespace planar {

class Matrix {
 public:
  Matrix() = default;
  Matrix(Ring ring, size_t rows, size_t cols)
      : ring_(std::move(ring)),
        rows_(rows),
        cols_(cols),
        a_(rows * cols, Scalar::zero(ring_)) {}

  static Matrix identity(const Ring& r, size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const Ring& ring() const { return ring_; }
  Scalar& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  Matrix operator*(const Matrix& o) const;
  Matrix transpose() const;
  bool operator==(const Matrix& o) const;
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;  // M v

 private:
  Ring ring_ = ring_rational();
  size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

size_t rank(const Matrix& m, Exec exec = Exec::Parallel);

// Basis of the right kernel {v : M v = 0}; rank + kernel size = cols.
std::vector<std::vector<Scalar>> kernel(const Matrix& m,
                                        Exec exec = Exec::Parallel);

Scalar det(const Matrix& m, Exec exec = Exec::Parallel);

// One solution of A x = b, or nullopt if inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& a,
                                         const std::vector<Scalar>& b);

// Exact certificate that det != 0, for square matrices over the rationals:
// a nonzero determinant modulo any good prime proves nondegeneracy. Returns
// false when no tried prime certifies (inconclusive).
bool det_nonzero_certificate(const Matrix& m, Exec exec = Exec::Parallel);

}  // namespace planar
