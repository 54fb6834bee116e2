// Benchmark of the parallel kernels against their serial reference
// implementations: structure-constant tables, Gram assembly, the pairing
// matrices, exact elimination, and the mod-p certificate. Results must
// agree bit for bit; the table reports wall times and speedups.
#include <chrono>
#include <cstdio>
#include <random>

#include "planar/lab.hpp"

#ifdef PLANAR_HAVE_OPENMP
#include <omp.h>
#endif

using namespace planar;

namespace {

double now() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

template <typename F>
double time_of(F&& f) {
  double t0 = now();
  f();
  return now() - t0;
}

void row(const char* name, double serial, double parallel, bool equal) {
  std::printf("%-34s %9.3fs %9.3fs %6.2fx  %s\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0,
              equal ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef PLANAR_HAVE_OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not available; both columns run serially\n");
#endif
  std::printf("%-34s %10s %10s %7s\n", "kernel", "serial", "parallel",
              "speedup");

  {
    Ring L = ring_laurent({"d"});
    EvalParams p = EvalParams::tl_standard(Scalar::variable(L, "d"));
    auto basis = enumerate_tl_basis(6, 6);  // 132 diagrams, 17424 products
    std::vector<std::pair<uint32_t, Scalar>> ts, tp;
    double s = time_of([&] { ts = structure_table_serial(basis, p); });
    double q = time_of([&] { tp = structure_table_parallel(basis, p); });
    row("TL_6 structure table (classical)", s, q, ts == tp);
  }
  {
    Ring Q = ring_rational();
    EvalParams p = EvalParams::infinity(Q);
    auto basis = enumerate_tl_basis(7, 7);  // 429 diagrams, 184041 products
    std::vector<std::pair<uint32_t, Scalar>> ts, tp;
    double s = time_of([&] { ts = structure_table_serial(basis, p); });
    double q = time_of([&] { tp = structure_table_parallel(basis, p); });
    row("TLJ_7(infinity) structure table", s, q, ts == tp);
  }
  {
    auto [da, alg] = end_algebra(Flavor::PlainTL, Word::plain(7),
                                 EvalParams::infinity(ring_rational()),
                                 TraceKind::Regular, Exec::Parallel);
    Matrix gs, gp;
    double s = time_of([&] { gs = gram_matrix(alg, *alg.trace, Exec::Serial); });
    double q =
        time_of([&] { gp = gram_matrix(alg, *alg.trace, Exec::Parallel); });
    row("TLJ_7 regular Gram (429x429)", s, q, gs == gp);
    bool cs = false, cp = false;
    double s2 = time_of([&] { cs = det_nonzero_certificate(gs, Exec::Serial); });
    double q2 =
        time_of([&] { cp = det_nonzero_certificate(gs, Exec::Parallel); });
    row("mod-p nondegeneracy certificate", s2, q2, cs == cp && cs);
  }
  {
    PhiMatchingsResult ms, mp;
    double s = time_of([&] { ms = phi_matrix_matchings(6, Exec::Serial); });
    double q = time_of([&] { mp = phi_matrix_matchings(6, Exec::Parallel); });
    row("matching pairing matrix, n = 6", s, q, ms.matrix == mp.matrix);
  }
  {
    PhiBraidLiftResult ps, pp;
    double s = time_of([&] { ps = phi_braid_lift_matrix(4, Exec::Serial); });
    double q = time_of([&] { pp = phi_braid_lift_matrix(4, Exec::Parallel); });
    row("braid-lift pairing matrix, n = 4", s, q, ps.matrix == pp.matrix);
  }
  {
    // dense exact elimination over the rationals
    std::mt19937_64 rng(99);
    Ring Q = ring_rational();
    Matrix m(Q, 80, 80);
    for (size_t i = 0; i < 80; ++i)
      for (size_t j = 0; j < 80; ++j)
        m.at(i, j) = Scalar::integer(Q, static_cast<long>(rng() % 19) - 9);
    size_t rs = 0, rp = 0;
    double s = time_of([&] { rs = rank(m, Exec::Serial); });
    double q = time_of([&] { rp = rank(m, Exec::Parallel); });
    row("exact rank, dense 80x80 over Q", s, q, rs == rp);
  }
  return 0;
}
