#include <doctest.h>

#include <random>

#include "planar/brauer.hpp"

using namespace planar;

namespace {

Ring Q() { return ring_rational(); }

size_t cycle_count(const std::vector<uint32_t>& pi) {
  std::vector<bool> seen(pi.size(), false);
  size_t cycles = 0;
  for (size_t i = 0; i < pi.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = pi[j];
    }
  }
  return cycles;
}

}  // namespace

TEST_CASE("symmetric braiding is an involution and satisfies the braid law") {
  Word xx = Word::power(Letter::X, 2);
  Diagram s = symmetric_braiding(xx, 1);
  EvalParams p = EvalParams::infinity(Q());
  CHECK(compose(s, s, p) ==
        DiagramVector::single(Diagram::identity(Flavor::Brauer, xx),
                              Scalar::one(Q())));

  // swap on XY is the four-point crossing
  Word xy = Word::oriented("XY");
  Diagram sxy = symmetric_braiding(xy, 1);
  CHECK(sxy.arcs() == std::vector<std::pair<uint16_t, uint16_t>>{{0, 3},
                                                                 {1, 2}});
  CHECK(!sxy.is_planar());

  // braid relation on XXX
  Word xxx = Word::power(Letter::X, 3);
  auto s1 = DiagramVector::single(symmetric_braiding(xxx, 1), Scalar::one(Q()));
  auto s2 = DiagramVector::single(symmetric_braiding(xxx, 2), Scalar::one(Q()));
  CHECK(compose(compose(s1, s2, p), s1, p) ==
        compose(compose(s2, s1, p), s2, p));
  CHECK_THROWS_AS(symmetric_braiding(xxx, 3), std::invalid_argument);
}

TEST_CASE("naturality of the swap on generator morphisms") {
  // swap_{B,D} . (f (x) g) = (g (x) f) . swap_{A,C} for generator
  // morphisms f: A -> B and g: C -> D on words of length <= 4
  auto block_swap = [](const Word& a, const Word& b) {
    const size_t na = a.size(), nb = b.size();
    std::vector<std::pair<uint16_t, uint16_t>> arcs;
    for (size_t i = 0; i < na; ++i)
      arcs.push_back({static_cast<uint16_t>(i),
                      static_cast<uint16_t>(na + nb + nb + i)});
    for (size_t j = 0; j < nb; ++j)
      arcs.push_back({static_cast<uint16_t>(na + j),
                      static_cast<uint16_t>(na + nb + j)});
    return Diagram(Flavor::Brauer, a.concat(b), b.concat(a),
                   std::move(arcs));
  };
  auto dv = [](const Diagram& d) {
    return DiagramVector::single(d, Scalar::one(Q()));
  };
  std::vector<DiagramVector> morphisms{
      dv(Diagram::identity(Flavor::Brauer, Word::oriented("X"))),
      dv(Diagram::identity(Flavor::Brauer, Word::oriented("Y"))),
      dv(Diagram(Flavor::Brauer, Word::oriented("XY"), Word::oriented(""),
                 {{0, 1}})),  // cap
      dv(Diagram(Flavor::Brauer, Word::oriented(""), Word::oriented("YX"),
                 {{0, 1}})),  // cup
      dv(symmetric_braiding(Word::oriented("XY"), 1)),
      dv(symmetric_braiding(Word::power(Letter::X, 2), 1)),
  };
  for (const EvalParams& p : {EvalParams::infinity(Q()),
                              EvalParams::brauer_standard(
                                  Scalar::integer(Q(), 3))}) {
    for (const auto& f : morphisms)
      for (const auto& g : morphisms) {
        Word a = f.shape().bottom, b = f.shape().top;
        Word c = g.shape().bottom, d = g.shape().top;
        auto lhs = compose(dv(block_swap(b, d)), tensor(f, g), p);
        auto rhs = compose(tensor(g, f), dv(block_swap(a, c)), p);
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("end algebras: dimensions and circle trace") {
  Ring L = ring_laurent({"t"});
  Scalar t = Scalar::variable(L, "t");
  EvalParams p = EvalParams::brauer_standard(t);

  // word X: one-dimensional, Tr(id) = t
  Word x = Word::oriented("X");
  auto ex = end_algebra(Flavor::Brauer, x, p, TraceKind::Markov);
  CHECK(ex.algebra.dim() == 1);
  CHECK((*ex.algebra.trace)[0] == t);

  // word X^n: dimension n!, only permutation diagrams
  for (size_t n = 1; n <= 4; ++n) {
    Word xn = Word::power(Letter::X, n);
    auto en = end_algebra(Flavor::Brauer, xn, p, TraceKind::None);
    CHECK(mpz_class(en.algebra.dim()) == factorial(n));
  }

  // word XY at infinity: dimension 2
  auto exy = end_algebra(Flavor::Brauer, Word::oriented("XY"),
                         EvalParams::infinity(Q()), TraceKind::None);
  CHECK(exy.algebra.dim() == 2);
}

TEST_CASE("trace of a permutation diagram is t^cycles") {
  Ring L = ring_laurent({"t"});
  Scalar t = Scalar::variable(L, "t");
  EvalParams p = EvalParams::brauer_standard(t);
  std::mt19937 rng(55);
  for (size_t n = 1; n <= 4; ++n) {
    Word xn = Word::power(Letter::X, n);
    std::vector<uint32_t> pi(n);
    for (size_t i = 0; i < n; ++i) pi[i] = static_cast<uint32_t>(i);
    for (int it = 0; it < 8; ++it) {
      std::shuffle(pi.begin(), pi.end(), rng);
      Diagram d = Diagram::permutation(Flavor::Brauer, xn, pi);
      Scalar tr = quantum_trace(DiagramVector::single(d, Scalar::one(L)), p,
                                Braiding::SymmetricSwap);
      CHECK(tr == t.pow(static_cast<long>(cycle_count(pi))));
      // the symmetric kink is trivial: plain closure agrees
      CHECK(tr == quantum_trace(DiagramVector::single(d, Scalar::one(L)), p,
                                Braiding::None));
    }
  }
}

TEST_CASE("trace of the crossed retraction composite equals rs") {
  // f = (1 (x) r) . (swap (x) 1) . (1 (x) s): closing f straightens to the
  // scalar r s, so a normalized retraction pair gives trace exactly one
  auto build_f = [](const EvalParams& p) {
    const Ring& R = p.ring();
    Diagram s(Flavor::Brauer, Word::oriented("X"), Word::oriented("XXY"),
              {{0, 1}, {2, 3}});  // 1 (x) s-, cup on the appended XY
    Diagram sw(Flavor::Brauer, Word::oriented("XXY"), Word::oriented("XXY"),
               {{0, 4}, {1, 3}, {2, 5}});  // swap the two X strands
    Diagram r(Flavor::Brauer, Word::oriented("XXY"), Word::oriented("X"),
              {{0, 3}, {1, 2}});  // 1 (x) r-, cap on the trailing XY
    auto one = Scalar::one(R);
    return compose(DiagramVector::single(r, one),
                   compose(DiagramVector::single(sw, one),
                           DiagramVector::single(s, one), p),
                   p);
  };
  // classical OB(t): f is the identity strand (one straightening, zeta = 1),
  // its closure is the circle t, and normalizing r by 1/t gives trace one
  Ring L = ring_laurent({"t"});
  Scalar t = Scalar::variable(L, "t");
  EvalParams pt = EvalParams::brauer_standard(t);
  DiagramVector f = build_f(pt);
  CHECK(f == DiagramVector::single(
                 Diagram::identity(Flavor::Brauer, Word::oriented("X")),
                 Scalar::one(L)));
  CHECK(quantum_trace(f, pt, Braiding::SymmetricSwap) == t);
  CHECK(quantum_trace(f.scale(t.inverse()), pt, Braiding::SymmetricSwap)
            .is_one());
  // in the asymptotic regime the crossed composite consumes a straightening
  // and vanishes exactly: non-negligibility there is witnessed by rs = 1
  // alone, never by a crossed closure
  Ring Q = ring_rational();
  EvalParams inf = EvalParams::infinity(Q);
  CHECK(build_f(inf).is_zero());
}

TEST_CASE("asymptotic kernel: straightening kills, pure loops give one") {
  EvalParams inf = EvalParams::infinity(Q());
  Word w = Word::xy_block(2, 2);
  auto basis = enumerate_brauer_basis(w, w);
  for (const auto& a : basis)
    for (const auto& b : basis) {
      auto [vec, stats] = compose_with_stats(a, b, inf);
      if (stats.sigma > stats.loops) {
        CHECK(vec.is_zero());
      } else {
        REQUIRE(vec.size() == 1);
        CHECK(vec.terms().begin()->second.is_one());
      }
    }
}

TEST_CASE("walled Brauer block reports") {
  auto r11 = brauer_block_report(1, 1);
  CHECK(r11.pass);
  REQUIRE(r11.layers.size() == 2);
  CHECK(r11.layers[0].dim == 1);
  CHECK(r11.layers[1].dim == 1);
  CHECK(r11.algebra_dim == 2);

  auto r21 = brauer_block_report(2, 1);
  CHECK(r21.pass);
  REQUIRE(r21.layers.size() == 2);
  CHECK(r21.layers[0].dim == 2);
  CHECK(r21.layers[1].dim == 4);
  CHECK(r21.algebra_dim == 6);

  auto r22 = brauer_block_report(2, 2);
  CHECK(r22.pass);
  REQUIRE(r22.layers.size() == 3);
  CHECK(r22.layers[0].dim == 4);
  CHECK(r22.layers[1].dim == 16);
  CHECK(r22.layers[2].dim == 4);
  CHECK(r22.algebra_dim == 24);
}

TEST_CASE("characteristic-two demo") {
  auto rep = char2_nilpotent_trace_demo();
  CHECK(rep.z_squared_zero);
  CHECK(rep.trace_nonzero);
  CHECK(rep.trace_z.to_string() == "t^2+t");
  CHECK(rep.char0_z_squared_nonzero);
  CHECK(rep.pass);
}
