// Oriented and walled Brauer categories OB(t) and OB(infinity): symmetric
// braiding, endomorphism algebras with their closure trace, the cup
// filtration block formula for W_{n,m}(infinity), and the characteristic-two
// nilpotent-with-nonzero-trace example.
#pragma once

#include "planar/tl.hpp"

namespace planar {

// transposition diagram swapping strands i, i+1 (1-based) of the word
Diagram symmetric_braiding(const Word& w, size_t i);

struct BrauerLayer {
  size_t cups = 0;
  size_t dim = 0;
  mpz_class expected;  // (n-k)! (m-k)! M_k^2
};

struct BrauerBlockReport {
  size_t n = 0, m = 0;
  size_t algebra_dim = 0;
  std::vector<BrauerLayer> layers;
  bool ideals_ok = false;
  bool layer_dims_ok = false;
  bool total_ok = false;       // sum = (n+m)! = basis count
  bool radical_zero = false;
  bool pass = false;
};

// cup filtration of W_{n,m}(infinity) against the block formula
// I_k/I_{k+1} = C[S_{n-k}] (x) C[S_{m-k}] (x) Mat(n!m!/((n-k)!(m-k)!k!))
BrauerBlockReport brauer_block_report(size_t n, size_t m,
                                      Exec exec = Exec::Parallel);

struct Char2Report {
  bool z_squared_zero = false;
  Scalar trace_z;
  bool trace_nonzero = false;
  bool char0_z_squared_nonzero = false;  // the same construction over Q(t)
  bool pass = false;
  Char2Report() : trace_z(Scalar::zero(ring_rational())) {}
};

// over fp:2[t] in OB(t): z = 1 - swap on X^2 satisfies z^2 = 0 while
// Tr(z) = t^2 - t != 0
Char2Report char2_nilpotent_trace_demo();

}  // namespace planar
