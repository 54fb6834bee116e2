// The parallel kernels must be bit-identical to their serial reference
// implementations: structure-constant tables, Gram matrices, elimination,
// and the pairing-matrix builders.
#include <doctest.h>

#include "planar/checks.hpp"
#include "planar/lab.hpp"

using namespace planar;

TEST_CASE("structure tables: parallel == serial on several regimes") {
  Ring L = ring_laurent({"d"});
  Scalar d = Scalar::variable(L, "d");
  for (const EvalParams& p :
       {EvalParams::tl_standard(d), EvalParams::tl_renormalized(d),
        EvalParams::infinity(L)}) {
    auto basis = enumerate_tl_basis(5, 5);
    CHECK(structure_table_serial(basis, p) ==
          structure_table_parallel(basis, p));
  }
  Word w = Word::xy_block(2, 2);
  auto wb = enumerate_brauer_basis(w, w);
  EvalParams inf = EvalParams::infinity(ring_rational());
  CHECK(structure_table_serial(wb, inf) == structure_table_parallel(wb, inf));
}

TEST_CASE("gram, rank, kernel, det: parallel == serial") {
  auto [da, alg] = end_algebra(Flavor::PlainTL, Word::plain(4),
                               EvalParams::infinity(ring_rational()),
                               TraceKind::Regular, Exec::Parallel);
  Matrix gs = gram_matrix(alg, *alg.trace, Exec::Serial);
  Matrix gp = gram_matrix(alg, *alg.trace, Exec::Parallel);
  CHECK(gs == gp);
  CHECK(rank(gs, Exec::Serial) == rank(gs, Exec::Parallel));
  CHECK(kernel(gs, Exec::Serial) == kernel(gs, Exec::Parallel));
  CHECK(det(gs, Exec::Serial) == det(gs, Exec::Parallel));
  CHECK(det_nonzero_certificate(gs, Exec::Serial) ==
        det_nonzero_certificate(gs, Exec::Parallel));
}

TEST_CASE("pairing matrices: parallel == serial") {
  auto ps = phi_braid_lift_matrix(3, Exec::Serial);
  auto pp = phi_braid_lift_matrix(3, Exec::Parallel);
  CHECK(ps.matrix == pp.matrix);
  auto ms = phi_matrix_matchings(4, Exec::Serial);
  auto mp = phi_matrix_matchings(4, Exec::Parallel);
  CHECK(ms.matrix == mp.matrix);
  CHECK(ms.a_exp == mp.a_exp);
}

TEST_CASE("acceptance checks are execution-mode independent") {
  // a fast subset, both modes, equal outcomes and details
  for (int id : {2, 6, 8, 9, 11}) {
    auto s = run_acceptance_check(id, 1, Exec::Serial);
    auto p = run_acceptance_check(id, 1, Exec::Parallel);
    CHECK(s.pass == p.pass);
    CHECK(s.details == p.details);
  }
}
