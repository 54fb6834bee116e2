// Temperley-Lieb engine: Jones-Wenzl idempotents (asymptotic recursion,
// closed form, classical recursion with quantum integers), Kauffman bracket
// resolution of braid words, quantum traces via diagram closure, and the cup
// and lopsided filtration reports.
#pragma once

#include "planar/algebra.hpp"

namespace planar {

// [k] as Chebyshev polynomials in delta: [1]=1, [2]=delta,
// [k+1] = delta*[k] - [k-1]
std::vector<Scalar> quantum_integers(const Scalar& delta, size_t upto);

// asymptotic recursion JW_{n+1} = JW_n(x)1 - (JW_n(x)1) e_n (JW_n(x)1)
DiagramVector jones_wenzl_infinity(size_t n, const Ring& r);

// sum over self-flipped diagrams with pairwise non-nested cups, coefficient
// (-1)^(number of caps)
DiagramVector jones_wenzl_closed_form_infinity(size_t n, const Ring& r);

// classical recursion with coefficient [n]/[n+1]; throws domain_error when a
// needed quantum integer vanishes at the given delta
DiagramVector jones_wenzl_classical(size_t n, const Scalar& delta);

enum class Braiding { None, Kauffman, SymmetricSwap };

// image of a braid word under the Kauffman bracket skein relation
// sigma_i -> A id + A^-1 e_i, over laurent(A) with delta = -A^2 - A^-2
DiagramVector kauffman_resolve(const std::vector<int>& letters,
                               size_t strands, const Ring& ring_a);
EvalParams kauffman_params(const Ring& ring_a);

// closure trace of an endomorphism; Kauffman and SymmetricSwap insert the
// cable crossing of the closure picture before closing
Scalar quantum_trace(const DiagramVector& f, const EvalParams& p,
                     Braiding b = Braiding::None);

enum class TraceKind { None, Regular, Markov };
struct EndAlgebra {
  DiagramAlgebra diagrams;
  FinDimAlgebra algebra;
};
EndAlgebra end_algebra(Flavor f, const Word& w, const EvalParams& p,
                       TraceKind trace, Exec exec = Exec::Parallel);

struct FiltrationLayer {
  long degree = 0;
  size_t dim = 0;
  std::vector<size_t> blocks;
};

struct FiltrationReport {
  std::string kind;
  std::string word;
  size_t algebra_dim = 0;
  std::vector<FiltrationLayer> layers;
  bool ideals_ok = false;
  bool layers_ok = false;
  bool graded_matches_infinity = true;  // lopsided reports only
  bool radical_zero = false;
  bool total_ok = false;
  bool pass = false;
};

// cup filtration of TLJ_n(infinity): ideals, layer dimensions, graded
// matrix-unit blocks, total reconstruction, radical
FiltrationReport cup_filtration_report(size_t n, Exec exec = Exec::Parallel);

// lopsided filtration of TLJ_word(delta, infinity) by (#s+ - #r+), with the
// associated graded algebra compared against the (infinity, infinity) kernel
FiltrationReport lopsided_filtration_report(const Word& w, const Scalar& delta,
                                            Exec exec = Exec::Parallel);

struct ZigzagScalars {
  Scalar z1, z2, z3, z4;
  bool consistent = false;  // z1 == z2 and z3 == z4
};
ZigzagScalars zigzag_scalars(const EvalParams& p);

}  // namespace planar
