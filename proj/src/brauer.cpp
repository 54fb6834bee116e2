#include "planar/brauer.hpp"

namespace planar {

Diagram symmetric_braiding(const Word& w, size_t i) {
  const size_t n = w.size();
  if (i < 1 || i >= n)
    throw std::invalid_argument("braiding index out of range");
  std::vector<uint32_t> pi(n);
  for (size_t j = 0; j < n; ++j) pi[j] = static_cast<uint32_t>(j);
  std::swap(pi[i - 1], pi[i]);
  // letters of the top word swap accordingly
  std::vector<Letter> top = w.letters();
  std::swap(top[i - 1], top[i]);
  std::vector<std::pair<uint16_t, uint16_t>> arcs;
  for (size_t j = 0; j < n; ++j)
    arcs.push_back({static_cast<uint16_t>(j),
                    static_cast<uint16_t>(n + pi[j])});
  return Diagram(Flavor::Brauer, w, Word::oriented(std::move(top)),
                 std::move(arcs));
}

BrauerBlockReport brauer_block_report(size_t n, size_t m, Exec exec) {
  Ring Q = ring_rational();
  Word w = Word::xy_block(n, m);
  auto [da, alg] = end_algebra(Flavor::Brauer, w, EvalParams::infinity(Q),
                               TraceKind::Regular, exec);
  const size_t d = da.dim();

  BrauerBlockReport rep;
  rep.n = n;
  rep.m = m;
  rep.algebra_dim = d;

  std::vector<size_t> deg(d);
  for (size_t i = 0; i < d; ++i) deg[i] = da.basis[i].cup_count();

  rep.ideals_ok = true;
  for (size_t i = 0; i < d && rep.ideals_ok; ++i)
    for (size_t j = 0; j < d; ++j) {
      const auto& [k, c] = da.product(i, j);
      if (k == DiagramAlgebra::kNone || c.is_zero()) continue;
      if (deg[k] < std::max(deg[i], deg[j])) {
        rep.ideals_ok = false;
        break;
      }
    }

  rep.layer_dims_ok = true;
  mpz_class total = 0;
  const size_t kmax = std::min(n, m);
  for (size_t k = 0; k <= kmax; ++k) {
    BrauerLayer layer;
    layer.cups = k;
    for (size_t i = 0; i < d; ++i) layer.dim += deg[i] == k;
    // M_k = n! m! / ((n-k)! (m-k)! k!)
    mpz_class mk = factorial(n) * factorial(m) /
                   (factorial(n - k) * factorial(m - k) * factorial(k));
    layer.expected = factorial(n - k) * factorial(m - k) * mk * mk;
    if (mpz_class(layer.dim) != layer.expected) rep.layer_dims_ok = false;
    total += layer.dim;
    rep.layers.push_back(std::move(layer));
  }
  rep.total_ok = total == factorial(n + m) && mpz_class(d) == total;
  rep.radical_zero = radical_is_zero(alg, exec);
  rep.pass =
      rep.ideals_ok && rep.layer_dims_ok && rep.total_ok && rep.radical_zero;
  return rep;
}

Char2Report char2_nilpotent_trace_demo() {
  Char2Report rep;
  Ring F = ring_fp(2, {"t"});
  Scalar t = Scalar::variable(F, "t");
  EvalParams p = EvalParams::brauer_standard(t);
  Word xx = Word::power(Letter::X, 2);

  Diagram id = Diagram::identity(Flavor::Brauer, xx);
  Diagram swap = symmetric_braiding(xx, 1);
  DiagramVector z = DiagramVector::single(id, Scalar::one(F)) -
                    DiagramVector::single(swap, Scalar::one(F));

  rep.z_squared_zero = compose(z, z, p).is_zero();
  rep.trace_z = quantum_trace(z, p, Braiding::SymmetricSwap);
  // t^2 - t = t^2 + t in characteristic two
  rep.trace_nonzero = !rep.trace_z.is_zero() && rep.trace_z == t * t + t;

  // over a characteristic-zero field the same z is not nilpotent:
  // (1 - s)^2 = 2 (1 - s)
  Ring L = ring_laurent({"t"});
  Scalar t0 = Scalar::variable(L, "t");
  EvalParams p0 = EvalParams::brauer_standard(t0);
  DiagramVector z0 =
      DiagramVector::single(Diagram::identity(Flavor::Brauer, xx),
                            Scalar::one(L)) -
      DiagramVector::single(swap, Scalar::one(L));
  DiagramVector z0sq = compose(z0, z0, p0);
  rep.char0_z_squared_nonzero =
      !z0sq.is_zero() && z0sq == z0.scale(Scalar::integer(L, 2));

  rep.pass =
      rep.z_squared_zero && rep.trace_nonzero && rep.char0_z_squared_nonzero;
  return rep;
}

}  // namespace planar
