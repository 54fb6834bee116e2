// Finite-dimensional algebras presented by structure constants: radicals via
// trace-form kernels, block decomposition of split semisimple algebras, and
// the builder that turns a diagram basis plus evaluation parameters into an
// algebra (the all-pairs composition table is one of the parallel kernels).
#pragma once

#include <optional>

#include "planar/diagram.hpp"
#include "planar/exec.hpp"
#include "planar/linalg.hpp"

namespace planar {

struct FinDimAlgebra {
  Ring ring;
  std::vector<std::string> labels;
  // mult[i*dim+j]: sparse expansion of b_i * b_j in the basis
  std::vector<std::vector<std::pair<uint32_t, Scalar>>> mult;
  std::vector<Scalar> unit;
  std::optional<std::vector<Scalar>> trace;  // functional on basis elements

  size_t dim() const { return labels.size(); }
  const std::vector<std::pair<uint32_t, Scalar>>& entry(size_t i,
                                                        size_t j) const {
    return mult[i * dim() + j];
  }

  std::vector<Scalar> multiply(const std::vector<Scalar>& x,
                               const std::vector<Scalar>& y) const;
  Matrix left_mult(const std::vector<Scalar>& x) const;
  Matrix right_mult(const std::vector<Scalar>& x) const;
  std::vector<Scalar> basis_vector(size_t i) const;
  Scalar apply_trace(const std::vector<Scalar>& x) const;

  // trace of left multiplication, on each basis element
  std::vector<Scalar> regular_trace() const;

  // unit laws and associativity; exhaustive below the limit, sampled above
  void check_axioms(uint64_t seed = 1, size_t exhaustive_limit = 64) const;

  bool is_nilpotent(const std::vector<Scalar>& x) const;
};

// Gram matrix of the pairing (x, y) -> tau(x y) on the basis.
Matrix gram_matrix(const FinDimAlgebra& a, const std::vector<Scalar>& tau,
                   Exec exec = Exec::Parallel);

// Basis of {x : tau(x y) = 0 for all y} using the algebra's attached trace.
std::vector<std::vector<Scalar>> radical(const FinDimAlgebra& a,
                                         Exec exec = Exec::Parallel);

// Exact fast path: proves the radical vanishes without computing a kernel
// when a mod-p determinant certificate succeeds; falls back to the kernel.
bool radical_is_zero(const FinDimAlgebra& a, Exec exec = Exec::Parallel);

// Simple-block sizes of a split semisimple algebra over the rationals, via
// central idempotents obtained from integer roots of central minimal
// polynomials. Throws if the radical is nonzero or a block fails to split.
std::vector<size_t> block_dimensions(const FinDimAlgebra& a,
                                     Exec exec = Exec::Parallel);

// ---------------------------------------------------------------------------
// diagram algebras

struct DiagramAlgebra {
  Flavor flavor;
  Word word;
  EvalParams params;
  std::vector<Diagram> basis;
  // flattened dim x dim table: product of basis diagrams is scalar * basis
  // diagram (index kNone when the scalar vanishes)
  static constexpr uint32_t kNone = UINT32_MAX;
  std::vector<std::pair<uint32_t, Scalar>> table;

  size_t dim() const { return basis.size(); }
  const std::pair<uint32_t, Scalar>& product(size_t i, size_t j) const {
    return table[i * dim() + j];
  }
  size_t index_of(const Diagram& d) const;
  size_t identity_index() const;
  std::vector<Scalar> coords(const DiagramVector& v) const;
  DiagramVector vector(const std::vector<Scalar>& coords) const;

  // attach the given functional (empty: none)
  FinDimAlgebra algebra(std::optional<std::vector<Scalar>> trace) const;
};

DiagramAlgebra build_diagram_algebra(Flavor f, const Word& w,
                                     const EvalParams& params,
                                     Exec exec = Exec::Parallel);

// serial reference for the structure-constant table; the parallel builder
// must match it exactly
std::vector<std::pair<uint32_t, Scalar>> structure_table_serial(
    const std::vector<Diagram>& basis, const EvalParams& params);
std::vector<std::pair<uint32_t, Scalar>> structure_table_parallel(
    const std::vector<Diagram>& basis, const EvalParams& params);

}  // namespace planar
