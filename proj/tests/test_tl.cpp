#include <doctest.h>

#include <random>

#include "planar/tl.hpp"

using namespace planar;

namespace {

Ring Q() { return ring_rational(); }
Ring LQ() { return ring_laurent({"q"}); }
Ring LA() { return ring_laurent({"A"}); }

DiagramVector dv(const Diagram& d, const Ring& r) {
  return DiagramVector::single(d, Scalar::one(r));
}

}  // namespace

TEST_CASE("jones-wenzl at infinity: small closed forms") {
  Ring r = Q();
  // n = 1: the identity strand
  CHECK(jones_wenzl_infinity(1, r) ==
        dv(Diagram::identity(Flavor::PlainTL, Word::plain(1)), r));

  // n = 2: id - e1
  auto jw2 = jones_wenzl_infinity(2, r);
  CHECK(jw2.size() == 2);
  CHECK(jw2.coefficient(Diagram::identity(Flavor::PlainTL, Word::plain(2)))
            .is_one());
  CHECK(jw2.coefficient(Diagram::e_generator(2, 1)) ==
        -Scalar::one(r));

  // n = 3: id - e1 - e2
  auto jw3 = jones_wenzl_infinity(3, r);
  CHECK(jw3.size() == 3);
  CHECK(jw3.coefficient(Diagram::e_generator(3, 1)) == -Scalar::one(r));
  CHECK(jw3.coefficient(Diagram::e_generator(3, 2)) == -Scalar::one(r));

  // n = 4: id - e1 - e2 - e3 + (e1 e3 diagram), the two-cap term positive
  auto jw4 = jones_wenzl_infinity(4, r);
  CHECK(jw4.size() == 5);
  Diagram e1e3(Flavor::PlainTL, Word::plain(4), Word::plain(4),
               {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  CHECK(jw4.coefficient(e1e3).is_one());
  CHECK(jw4.coefficient(Diagram::e_generator(4, 2)) == -Scalar::one(r));
}

TEST_CASE("jones-wenzl at infinity: recursion equals closed form, n <= 8") {
  Ring r = Q();
  for (size_t n = 1; n <= 8; ++n)
    CHECK(jones_wenzl_infinity(n, r) ==
          jones_wenzl_closed_form_infinity(n, r));
}

TEST_CASE("jones-wenzl at infinity: idempotent and killed by e_i, n <= 8") {
  Ring r = Q();
  EvalParams inf = EvalParams::infinity(r);
  for (size_t n = 2; n <= 8; ++n) {
    auto jw = jones_wenzl_infinity(n, r);
    CHECK(compose(jw, jw, inf) == jw);
    CHECK(jw.coefficient(Diagram::identity(Flavor::PlainTL, Word::plain(n)))
              .is_one());
    for (size_t i = 1; i < n; ++i) {
      auto ei = dv(Diagram::e_generator(n, i), r);
      CHECK(compose(ei, jw, inf).is_zero());
      CHECK(compose(jw, ei, inf).is_zero());
    }
  }
}

TEST_CASE("classical jones-wenzl over laurent(q)") {
  Scalar q = Scalar::variable(LQ(), "q");
  Scalar delta = q + q.inverse();
  EvalParams p = EvalParams::tl_standard(delta);

  // JW_2 = id - (1/[2]) e1
  auto jw2 = jones_wenzl_classical(2, delta);
  CHECK(jw2.coefficient(Diagram::identity(Flavor::PlainTL, Word::plain(2)))
            .is_one());
  CHECK(jw2.coefficient(Diagram::e_generator(2, 1)) ==
        -delta.inverse());

  for (size_t n = 2; n <= 6; ++n) {
    auto jw = jones_wenzl_classical(n, delta);
    CHECK(compose(jw, jw, p) == jw);
    for (size_t i = 1; i < n; ++i) {
      auto ei = dv(Diagram::e_generator(n, i), LQ());
      CHECK(compose(ei, jw, p).is_zero());
      CHECK(compose(jw, ei, p).is_zero());
    }
  }

  // vanishing quantum integer: [2] = delta = 0 blocks JW_2
  CHECK_THROWS_AS(jones_wenzl_classical(2, Scalar::zero(Q())),
                  std::domain_error);
  // golden ratio delta: [5] = 0 blocks JW_5 but not JW_4, and the last
  // existing idempotent still satisfies all its laws at the boundary
  Ring G = ring_algebraic({-1, -1, 1});
  Scalar phi = Scalar::generator(G);
  CHECK_THROWS_AS(jones_wenzl_classical(5, phi), std::domain_error);
  auto jw4 = jones_wenzl_classical(4, phi);
  EvalParams pg = EvalParams::tl_standard(phi);
  CHECK(compose(jw4, jw4, pg) == jw4);
  for (size_t i = 1; i < 4; ++i) {
    auto ei = dv(Diagram::e_generator(4, i), G);
    CHECK(compose(ei, jw4, pg).is_zero());
    CHECK(compose(jw4, ei, pg).is_zero());
  }
  // its closure trace is exactly zero: the idempotent went negligible
  CHECK(quantum_trace(jw4, pg, Braiding::None).is_zero());
}

TEST_CASE("quantum integers are chebyshev in delta") {
  Scalar q = Scalar::variable(LQ(), "q");
  Scalar delta = q + q.inverse();
  auto qi = quantum_integers(delta, 5);
  // [n] = q^(n-1) + q^(n-3) + ... + q^(1-n)
  for (long n = 1; n <= 5; ++n) {
    Scalar expect = Scalar::zero(LQ());
    for (long e = n - 1; e >= 1 - n; e -= 2) expect += q.pow(e);
    CHECK(qi[static_cast<size_t>(n)] == expect);
  }
}

TEST_CASE("kauffman bracket resolution") {
  Ring r = LA();
  Scalar a = Scalar::variable(r, "A");
  EvalParams p = kauffman_params(r);

  // empty word is the identity
  CHECK(kauffman_resolve({}, 2, r) ==
        dv(Diagram::identity(Flavor::PlainTL, Word::plain(2)), r));

  // sigma_1 = A id + A^-1 e1
  auto s1 = kauffman_resolve({1}, 2, r);
  CHECK(s1.coefficient(Diagram::identity(Flavor::PlainTL, Word::plain(2))) ==
        a);
  CHECK(s1.coefficient(Diagram::e_generator(2, 1)) == a.inverse());

  // sigma sigma^-1 = id exactly (needs the -A^2 - A^-2 circle to cancel)
  CHECK(kauffman_resolve({1, -1}, 2, r) ==
        dv(Diagram::identity(Flavor::PlainTL, Word::plain(2)), r));
  CHECK(kauffman_resolve({2, -2, 1, -1}, 3, r) ==
        dv(Diagram::identity(Flavor::PlainTL, Word::plain(3)), r));

  // braid relations: images agree
  CHECK(kauffman_resolve({1, 2, 1}, 3, r) == kauffman_resolve({2, 1, 2}, 3, r));
  CHECK(kauffman_resolve({1, 3}, 4, r) == kauffman_resolve({3, 1}, 4, r));
  CHECK(kauffman_resolve({2, 3, 2}, 4, r) == kauffman_resolve({3, 2, 3}, 4, r));
  // a length-6 word rewritten by one relation and one far commutation
  CHECK(kauffman_resolve({1, 2, 1, 3, 2, 1}, 4, r) ==
        kauffman_resolve({2, 1, 2, 3, 2, 1}, 4, r));
  CHECK(kauffman_resolve({1, 3, 2, 1, 3, 2}, 4, r) ==
        kauffman_resolve({3, 1, 2, 3, 1, 2}, 4, r));

  // out of range generator
  CHECK_THROWS_AS(kauffman_resolve({2}, 2, r), std::invalid_argument);
}

TEST_CASE("quantum trace: zero, kink constant, cyclicity") {
  Ring r = LA();
  Scalar a = Scalar::variable(r, "A");
  EvalParams p = kauffman_params(r);

  // Tr(0) = 0
  DiagramVector zero(Shape{Flavor::PlainTL, Word::plain(1), Word::plain(1)},
                     r);
  CHECK(quantum_trace(zero, p, Braiding::Kauffman).is_zero());

  // the closed single kink: expanding the crossing gives
  // A*delta + A^-1*delta^2 = -A^-3 * delta; frozen as the golden constant
  Scalar delta = -(a * a) - (a * a).inverse();
  Scalar expect = (a * delta + a.inverse() * delta * delta);
  CHECK(expect == -a.pow(-3) * delta);
  Diagram id1 = Diagram::identity(Flavor::PlainTL, Word::plain(1));
  CHECK(quantum_trace(dv(id1, r), p, Braiding::Kauffman) == expect);

  // plain closure of the identity is delta^n
  CHECK(quantum_trace(dv(id1, r), p, Braiding::None) == delta);
  Diagram id3 = Diagram::identity(Flavor::PlainTL, Word::plain(3));
  CHECK(quantum_trace(dv(id3, r), p, Braiding::None) == delta.pow(3));

  // cyclicity Tr(fg) = Tr(gf) on random pairs in End(TL_3)
  std::mt19937 rng(271);
  auto basis = enumerate_tl_basis(3, 3);
  for (int it = 0; it < 30; ++it) {
    DiagramVector f(Shape{Flavor::PlainTL, Word::plain(3), Word::plain(3)}, r);
    DiagramVector g = f;
    for (int t = 0; t < 3; ++t) {
      f.add_term(basis[rng() % basis.size()],
                 Scalar::integer(r, static_cast<long>(rng() % 5) - 2));
      g.add_term(basis[rng() % basis.size()],
                 Scalar::integer(r, static_cast<long>(rng() % 5) - 2));
    }
    for (Braiding b : {Braiding::None, Braiding::Kauffman})
      CHECK(quantum_trace(compose(f, g, p), p, b) ==
            quantum_trace(compose(g, f, p), p, b));
  }
}

TEST_CASE("cup filtration of TLJ_n(infinity)") {
  // n = 1: single layer of dim 1
  auto r1 = cup_filtration_report(1);
  CHECK(r1.pass);
  REQUIRE(r1.layers.size() == 1);
  CHECK(r1.layers[0].dim == 1);

  // n = 2: layers {1, 1}
  auto r2 = cup_filtration_report(2);
  CHECK(r2.pass);
  REQUIRE(r2.layers.size() == 2);
  CHECK(r2.layers[0].dim == 1);
  CHECK(r2.layers[1].dim == 1);

  // n = 3: layers {1, 4}, blocks {1} and {2}
  auto r3 = cup_filtration_report(3);
  CHECK(r3.pass);
  REQUIRE(r3.layers.size() == 2);
  CHECK(r3.layers[0].dim == 1);
  CHECK(r3.layers[1].dim == 4);
  CHECK(r3.layers[0].blocks == std::vector<size_t>{1});
  CHECK(r3.layers[1].blocks == std::vector<size_t>{2});

  // larger n: everything still verifies, blocks are ballot numbers
  auto r5 = cup_filtration_report(5);
  CHECK(r5.pass);
  size_t sum = 0;
  for (const auto& l : r5.layers) sum += l.dim;
  CHECK(mpz_class(sum) == catalan(5));
}

TEST_CASE("lopsided filtration reports") {
  Ring L = ring_laurent({"d"});
  Scalar delta = Scalar::variable(L, "d");

  auto rxy = lopsided_filtration_report(Word::oriented("XY"), delta);
  CHECK(rxy.algebra_dim == 2);
  CHECK(rxy.pass);

  auto ryx2 = lopsided_filtration_report(Word::oriented("YXYX"), delta);
  CHECK(ryx2.pass);

  auto rempty = lopsided_filtration_report(Word::oriented(""), delta);
  CHECK(rempty.algebra_dim == 1);
  CHECK(rempty.pass);

  CHECK_THROWS_AS(lopsided_filtration_report(Word::oriented("XX"), delta),
                  std::invalid_argument);
}

TEST_CASE("zig-zag scalars by regime") {
  Ring L2 = ring_laurent({"d1", "d2"});
  Scalar d1 = Scalar::variable(L2, "d1"), d2 = Scalar::variable(L2, "d2");

  // renormalized: z = d1^-1, z* = d2^-1
  auto zz = zigzag_scalars(EvalParams::oriented_renormalized(d1, d2));
  CHECK(zz.consistent);
  CHECK(zz.z1 == d1.inverse());
  CHECK(zz.z3 == d2.inverse());

  // (infinity, infinity): both vanish
  auto zi = zigzag_scalars(EvalParams::infinity(L2));
  CHECK(zi.consistent);
  CHECK(zi.z1.is_zero());
  CHECK(zi.z3.is_zero());

  // (infinity, delta): z = 0, z* = delta^-1
  Ring L = ring_laurent({"d"});
  Scalar d = Scalar::variable(L, "d");
  auto zl = zigzag_scalars(EvalParams::lopsided_other(d));
  CHECK(zl.consistent);
  CHECK(zl.z1.is_zero());
  CHECK(zl.z3 == d.inverse());

  // lopsided (delta, infinity): z = delta^-1, z* = 0
  auto zd = zigzag_scalars(EvalParams::lopsided(d));
  CHECK(zd.consistent);
  CHECK(zd.z1 == d.inverse());
  CHECK(zd.z3.is_zero());
}
