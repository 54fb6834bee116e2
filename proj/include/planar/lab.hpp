// Executable verification lab: the braid-lift pairing matrix in OB(infinity),
// the matching-pairing matrix with its z/z* exponent laws, the good-retraction
// search, negligible quotients with an independent fusion oracle, trace-on-
// radical checks, growth dimension, and rigidity certificates.
#pragma once

#include "planar/braid.hpp"
#include "planar/brauer.hpp"

namespace planar {

// Z_+-based ring: nonnegative integer structure constants, unit label,
// duality involution.
struct BasedRing {
  std::vector<std::string> labels;
  size_t unit = 0;
  std::vector<uint32_t> dual;
  std::vector<std::vector<std::pair<uint32_t, mpz_class>>> mult;  // dim x dim

  size_t dim() const { return labels.size(); }
  const std::vector<std::pair<uint32_t, mpz_class>>& entry(size_t i,
                                                           size_t j) const {
    return mult[i * dim() + j];
  }
  std::vector<mpz_class> multiply(const std::vector<mpz_class>& v,
                                  size_t by) const;  // v * X_by
  void validate() const;
};

// SL(2)-type fusion rings computed by the Chebyshev recursion
// X_i = X_1 X_{i-1} - X_{i-2}; level = nullopt means no truncation.
BasedRing sl2_fusion_ring(size_t max_label,
                          std::optional<size_t> level = std::nullopt);

struct PhiBraidLiftResult {
  size_t n = 0;
  Matrix matrix;  // n! x n!, rationals, rows/cols in lex permutation order
  bool braid_lifts_consistent = false;  // swap composites = permutation diagrams
  bool is_identity = false;
};
PhiBraidLiftResult phi_braid_lift_matrix(size_t n, Exec exec = Exec::Parallel);

struct PhiMatchingsResult {
  size_t n = 0;
  std::vector<size_t> d_values;  // D(u), basis sorted by (D, diagram)
  Matrix matrix;                 // over laurent(z,zs)
  std::vector<long> a_exp, b_exp;  // flattened exponent tables
  bool entries_monomial = false;
  bool exponent_law = false;     // a - b = D(u) - D(v)
  bool offdiag_positive = false; // a + b > 0 off the diagonal
  bool diagonal_one = false;
  bool det_z0_unit = false;
  bool det_zs0_unit = false;
  bool count_is_catalan = false;
  bool pass = false;
};
PhiMatchingsResult phi_matrix_matchings(size_t n, Exec exec = Exec::Parallel);

struct RetractionResult {
  DiagramVector r;  // Z -> 1
  DiagramVector s;  // 1 -> Z, with r s = 1
  bool rs_one = false;
  bool kills_nilpotents = false;  // r x a = 0 on full bases
  size_t improvement_steps = 0;
};
// Follows the minimal-k descent of the retraction-improvement argument;
// throws if the unit is not a summand of Z or N is not nilpotent.
RetractionResult good_retraction(Flavor f, const Word& z, const EvalParams& p,
                                 const std::vector<DiagramVector>& nilpotents);

struct SsimpResult {
  BasedRing ring;                  // fusion ring of the surviving labels
  std::vector<size_t> kept;        // labels with nonzero trace idempotent
  std::optional<size_t> first_negligible;
  bool matches_oracle = false;
  bool star_symmetric = false;
  bool pass = false;
};
// semisimplification of tensor powers of the TL strand at the given delta:
// multiplicities are ranks of closure-trace pairings between JW-projected
// hom spaces; the comparison oracle is the independent fusion recursion
SsimpResult negligible_quotient_tl(const Scalar& delta, size_t max_power);

struct TraceRadicalReport {
  size_t end_dim = 0;
  size_t radical_dim = 0;
  bool trace_vanishes_on_radical = false;
  bool has_nonnegligible = false;
  bool radical_equals_trace_kernel = false;
  bool nilpotent_with_nonzero_trace = false;  // characteristic-p phenomenon
  bool pass = false;
};
TraceRadicalReport trace_radical_check(Flavor f, const Word& w,
                                       const EvalParams& p,
                                       Exec exec = Exec::Parallel);

struct GrowthResult {
  std::vector<mpz_class> lengths;  // d_1 .. d_N
  bool supermultiplicative = false;
  size_t best_n = 0;   // maximizer of d_n^(1/n) among computed values
  mpz_class best_d;
};
GrowthResult growth_dimension(const BasedRing& ring, size_t x, size_t n_max);

// first n with dim End(X^n) < n!, if any (dims[i] is dim End(X^(i+1)))
std::optional<size_t> moderate_growth_test(
    const std::vector<mpz_class>& end_dims);

struct RigidityResult {
  bool rigid = false;
  // on success: (ev, coev) passing both zig-zag identities exactly
  std::optional<std::pair<DiagramVector, DiagramVector>> certificate;
  // on refutation: every basis zig-zag composite was nilpotent
  bool all_composites_nilpotent = false;
  size_t composites_checked = 0;
  bool nonnegligible = false;  // some pairing 1 -> YX -> 1 is invertible
};
RigidityResult rigidity_certificate(Flavor f, const Word& x, const Word& y,
                                    const EvalParams& p);

}  // namespace planar
