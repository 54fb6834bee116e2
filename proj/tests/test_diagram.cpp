#include <doctest.h>

#include <random>
#include <set>

#include "planar/diagram.hpp"

using namespace planar;

namespace {

// Independent reference for the classical regime: count interface loops by
// BFS over an explicit edge list (a different traversal than the kernel's
// alternating walk) and evaluate with circle = delta only.
struct ClassicalResult {
  size_t loops;
  Diagram w;
};

ClassicalResult classical_compose(const Diagram& u, const Diagram& v) {
  const size_t kb = v.n_bottom(), n = v.n_top(), m = u.n_top();
  // nodes: 0..kb-1 bottom, kb..kb+n-1 interface, kb+n.. top
  const size_t total = kb + n + m;
  std::vector<std::vector<size_t>> adj(total);
  auto add_edge = [&](size_t a, size_t b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (auto [p, q] : v.arcs()) {
    auto node = [&](uint16_t x) -> size_t {
      return x < kb ? x : kb + (x - kb);
    };
    add_edge(node(p), node(q));
  }
  for (auto [p, q] : u.arcs()) {
    auto node = [&](uint16_t x) -> size_t {
      return x < n ? kb + x : kb + n + (x - n);
    };
    add_edge(node(p), node(q));
  }
  std::vector<int> comp(total, -1);
  size_t ncomp = 0;
  for (size_t s = 0; s < total; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<size_t> stack{s};
    comp[s] = static_cast<int>(ncomp);
    while (!stack.empty()) {
      size_t x = stack.back();
      stack.pop_back();
      for (size_t y : adj[x])
        if (comp[y] < 0) {
          comp[y] = static_cast<int>(ncomp);
          stack.push_back(y);
        }
    }
    ++ncomp;
  }
  // loops: components with no external node
  std::vector<bool> has_external(ncomp, false);
  for (size_t i = 0; i < kb; ++i) has_external[comp[i]] = true;
  for (size_t i = 0; i < m; ++i) has_external[comp[kb + n + i]] = true;
  size_t loops = 0;
  for (size_t c = 0; c < ncomp; ++c) loops += !has_external[c];
  // result arcs: pair up external nodes by component
  std::map<int, std::vector<uint16_t>> ends;
  for (size_t i = 0; i < kb; ++i)
    ends[comp[i]].push_back(static_cast<uint16_t>(i));
  for (size_t i = 0; i < m; ++i)
    ends[comp[kb + n + i]].push_back(static_cast<uint16_t>(kb + i));
  std::vector<std::pair<uint16_t, uint16_t>> arcs;
  for (auto& [c, e] : ends) {
    REQUIRE(e.size() == 2);
    arcs.push_back({std::min(e[0], e[1]), std::max(e[0], e[1])});
  }
  return {loops, Diagram(u.flavor(), v.bottom(), u.top(), std::move(arcs))};
}

Ring LD() { return ring_laurent({"d"}); }
Scalar delta() { return Scalar::variable(LD(), "d"); }

Diagram random_diagram(Flavor f, const Word& bottom, const Word& top,
                       std::mt19937& rng) {
  auto basis = enumerate_basis(f, bottom, top);
  REQUIRE(!basis.empty());
  return basis[rng() % basis.size()];
}

}  // namespace

TEST_CASE("kernel matches the independent classical reference") {
  std::mt19937 rng(101);
  EvalParams std_params = EvalParams::tl_standard(delta());
  auto check_one = [&](const Diagram& u, const Diagram& v,
                       const EvalParams& p) {
    auto [vec, stats] = compose_with_stats(u, v, p);
    auto ref = classical_compose(u, v);
    REQUIRE(vec.size() == 1);
    const auto& [w, c] = *vec.terms().begin();
    CHECK(w == ref.w);
    CHECK(c == delta().pow(static_cast<long>(ref.loops)));
    CHECK(stats.loops == ref.loops);
    // counting law: k(u)+k(v)-k(w) = 2*sigma >= 2*loops
    size_t k = u.cup_cap_count() + v.cup_cap_count() - w.cup_cap_count();
    CHECK(k % 2 == 0);
    CHECK(k == 2 * stats.sigma);
    CHECK(stats.sigma >= stats.loops);
  };
  for (int it = 0; it < 200; ++it) {
    size_t n = 1 + rng() % 3, mid = (rng() % 2) ? n : n + 2, m = mid;
    if ((n + mid) % 2) ++mid, m = mid;
    Diagram v = random_diagram(Flavor::PlainTL, Word::plain(n),
                               Word::plain(mid), rng);
    Diagram u = random_diagram(Flavor::PlainTL, Word::plain(mid),
                               Word::plain(m), rng);
    check_one(u, v, std_params);
  }
  // walled Brauer endomorphisms against the same reference (t = delta)
  EvalParams brauer_params = EvalParams::brauer_standard(delta());
  Word w22 = Word::xy_block(2, 2);
  for (int it = 0; it < 150; ++it) {
    Diagram v = random_diagram(Flavor::Brauer, w22, w22, rng);
    Diagram u = random_diagram(Flavor::Brauer, w22, w22, rng);
    check_one(u, v, brauer_params);
  }
}

TEST_CASE("calibration examples") {
  Diagram e1 = Diagram::e_generator(2, 1);
  EvalParams renorm = EvalParams::tl_renormalized(delta());
  EvalParams inf = EvalParams::infinity(LD());
  EvalParams std_p = EvalParams::tl_standard(delta());

  // e1 . e1 = delta e1 classically, 1*e1 renormalized
  CHECK(compose(e1, e1, std_p) == DiagramVector::single(e1, delta()));
  CHECK(compose(e1, e1, renorm) ==
        DiagramVector::single(e1, Scalar::one(LD())));
  CHECK(compose(e1, e1, inf) ==
        DiagramVector::single(e1, Scalar::one(LD())));

  // zig-zag (cap (x) id) . (id (x) cup): classically id, delta^-1 id
  // renormalized, 0 at infinity
  Diagram id1 = Diagram::identity(Flavor::PlainTL, Word::plain(1));
  Diagram zig_bottom(Flavor::PlainTL, Word::plain(1), Word::plain(3),
                     {{0, 1}, {2, 3}});  // id (x) cup
  Diagram zig_top(Flavor::PlainTL, Word::plain(3), Word::plain(1),
                  {{0, 1}, {2, 3}});  // cap (x) id
  CHECK(compose(zig_top, zig_bottom, std_p) ==
        DiagramVector::single(id1, Scalar::one(LD())));
  CHECK(compose(zig_top, zig_bottom, renorm) ==
        DiagramVector::single(id1, delta().inverse()));
  CHECK(compose(zig_top, zig_bottom, inf).is_zero());

  // e1 . e2 in TL3 vanishes at infinity (interface has a straightening)
  Diagram e1_3 = Diagram::e_generator(3, 1), e2_3 = Diagram::e_generator(3, 2);
  CHECK(compose(e1_3, e2_3, inf).is_zero());
  // but classically it is the hook with coefficient 1
  auto hook = compose(e1_3, e2_3, std_p);
  REQUIRE(hook.size() == 1);
  CHECK(hook.terms().begin()->second.is_one());
}

TEST_CASE("composition errors") {
  Diagram e1 = Diagram::e_generator(2, 1);
  Diagram id3 = Diagram::identity(Flavor::PlainTL, Word::plain(3));
  EvalParams p = EvalParams::tl_standard(delta());
  CHECK_THROWS_AS(compose(e1, id3, p), std::invalid_argument);
  Diagram idxy = Diagram::identity(Flavor::OrientedTL, Word::oriented("XY"));
  CHECK_THROWS_AS(compose(e1, idxy, p), std::invalid_argument);
}

TEST_CASE("associativity across regimes: all triples in TL3") {
  auto basis = enumerate_tl_basis(3, 3);
  REQUIRE(basis.size() == 5);
  for (const EvalParams& p :
       {EvalParams::tl_standard(delta()), EvalParams::tl_renormalized(delta()),
        EvalParams::infinity(LD())}) {
    for (const auto& a : basis)
      for (const auto& b : basis)
        for (const auto& c : basis) {
          auto left = compose(compose(a, b, p),
                              DiagramVector::single(c, Scalar::one(LD())), p);
          auto right = compose(DiagramVector::single(a, Scalar::one(LD())),
                               compose(b, c, p), p);
          CHECK(left == right);
        }
  }
}

TEST_CASE("associativity: random triples in TL4 and W22") {
  std::mt19937 rng(102);
  auto tl4 = enumerate_tl_basis(4, 4);
  REQUIRE(tl4.size() == 14);
  Word w22 = Word::xy_block(2, 2);
  auto wb = enumerate_brauer_basis(w22, w22);
  REQUIRE(wb.size() == 24);
  std::vector<EvalParams> regimes = {EvalParams::tl_standard(delta()),
                                     EvalParams::tl_renormalized(delta()),
                                     EvalParams::infinity(LD())};
  for (int it = 0; it < 300; ++it) {
    const EvalParams& p = regimes[it % 3];
    const auto& B = (it % 2) ? tl4 : wb;
    const auto &a = B[rng() % B.size()], &b = B[rng() % B.size()],
               &c = B[rng() % B.size()];
    auto left = compose(compose(a, b, p),
                        DiagramVector::single(c, Scalar::one(LD())), p);
    auto right = compose(DiagramVector::single(a, Scalar::one(LD())),
                         compose(b, c, p), p);
    CHECK(left == right);
  }
}

TEST_CASE("flip is an anti-homomorphism with the same scalar") {
  std::mt19937 rng(103);
  EvalParams regimes[] = {EvalParams::tl_standard(delta()),
                          EvalParams::tl_renormalized(delta()),
                          EvalParams::infinity(LD())};
  auto tl4 = enumerate_tl_basis(4, 4);
  for (int it = 0; it < 100; ++it) {
    const auto &a = tl4[rng() % tl4.size()], &b = tl4[rng() % tl4.size()];
    const EvalParams& p = regimes[it % 3];
    CHECK(flip(compose(a, b, p)) == compose(b.flip(), a.flip(), p));
  }
  CHECK(Diagram::cup2().flip() == Diagram::cap2());
  Diagram e1 = Diagram::e_generator(4, 1);
  CHECK(e1.flip() == e1);
  CHECK(e1.flip().flip() == e1);
}

TEST_CASE("flip exchanges the two straightening scalars") {
  // flip(u . v) computed with (c+, c-, z, zs) equals flip(v) . flip(u)
  // computed with (c+, c-, zs, z): the anti-involution swaps cap/cup
  // chirality but keeps loop chirality
  Ring L = ring_laurent({"c1", "c2", "z", "zs"});
  auto var = [&](const char* v) { return Scalar::variable(L, v); };
  EvalParams p(var("c1"), var("c2"), var("z"), var("zs"));
  EvalParams p_swapped(var("c1"), var("c2"), var("zs"), var("z"));
  std::mt19937 rng(104);
  Word w = Word::oriented("XYYX");
  auto basis = enumerate_oriented_tl_basis(w, w);
  REQUIRE(basis.size() > 1);
  for (int it = 0; it < 60; ++it) {
    const auto &u = basis[rng() % basis.size()], &v = basis[rng() % basis.size()];
    CHECK(flip(compose(u, v, p)) == compose(v.flip(), u.flip(), p_swapped));
  }
  // in chirality-symmetric regimes this is the plain anti-homomorphism law
  EvalParams sym(var("c1"), var("c1"), var("z"), var("z"));
  for (int it = 0; it < 30; ++it) {
    const auto &u = basis[rng() % basis.size()], &v = basis[rng() % basis.size()];
    CHECK(flip(compose(u, v, sym)) == compose(v.flip(), u.flip(), sym));
  }
}

TEST_CASE("tensor basics") {
  Diagram id1 = Diagram::identity(Flavor::PlainTL, Word::plain(1));
  Diagram id2 = Diagram::identity(Flavor::PlainTL, Word::plain(2));
  CHECK(id1.tensor(id1) == id2);
  CHECK(Diagram::e_generator(2, 1).tensor(id1) == Diagram::e_generator(3, 1));
  Diagram hook = Diagram::cap2().tensor(Diagram::cup2());
  CHECK(hook.n_bottom() == 2);
  CHECK(hook.n_top() == 2);
  CHECK(hook.cup_cap_count() == 2);
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_tl_basis(1, 1).size() == 1);
  CHECK(enumerate_tl_basis(3, 3).size() == 5);
  CHECK(enumerate_tl_basis(2, 0).size() == 1);
  for (size_t n = 0; n <= 10; ++n)
    CHECK(mpz_class(enumerate_tl_basis(n, n).size()) == catalan(n));

  // oriented matchings on (YX)^n with their D statistics
  auto m1 = enumerate_matchings(Word::oriented("YX"));
  REQUIRE(m1.size() == 1);
  CHECK(m1[0].second == 1);
  auto m2 = enumerate_matchings(Word::oriented("YXYX"));
  REQUIRE(m2.size() == 2);
  std::multiset<size_t> dvals{m2[0].second, m2[1].second};
  CHECK(dvals == std::multiset<size_t>{1, 2});
  CHECK(enumerate_matchings(Word::oriented("YXYXYX")).size() == 5);
  CHECK_THROWS_AS(enumerate_matchings(Word::oriented("XX")),
                  std::invalid_argument);

  // walled Brauer
  Word xy = Word::oriented("XY");
  CHECK(enumerate_brauer_basis(xy, xy).size() == 2);
  Word x22 = Word::xy_block(2, 2);
  CHECK(enumerate_brauer_basis(x22, x22).size() == 24);
  Word x1 = Word::oriented("X");
  CHECK(enumerate_brauer_basis(x1, x1).size() == 1);
  // pure-X words admit only permutation diagrams
  for (size_t n = 1; n <= 5; ++n) {
    Word xn = Word::power(Letter::X, n);
    CHECK(mpz_class(enumerate_brauer_basis(xn, xn).size()) == factorial(n));
  }
}

TEST_CASE("oriented zig-zag chirality") {
  Ring L = ring_laurent({"z", "zs"});
  Scalar z = Scalar::variable(L, "z"), zs = Scalar::variable(L, "zs");
  EvalParams p(Scalar::one(L), Scalar::one(L), z, zs);

  // z1 = (r+ (x) 1)(1 (x) s-): Y -> Y, one z event
  Diagram v1(Flavor::OrientedTL, Word::oriented("Y"), Word::oriented("YXY"),
             {{0, 1}, {2, 3}});
  Diagram u1(Flavor::OrientedTL, Word::oriented("YXY"), Word::oriented("Y"),
             {{0, 1}, {2, 3}});
  auto z1 = compose(u1, v1, p);
  REQUIRE(z1.size() == 1);
  CHECK(z1.terms().begin()->second == z);

  // z3 = (r- (x) 1)(1 (x) s+): X -> X, one z* event
  Diagram v3(Flavor::OrientedTL, Word::oriented("X"), Word::oriented("XYX"),
             {{0, 1}, {2, 3}});
  Diagram u3(Flavor::OrientedTL, Word::oriented("XYX"), Word::oriented("X"),
             {{0, 1}, {2, 3}});
  auto z3 = compose(u3, v3, p);
  REQUIRE(z3.size() == 1);
  CHECK(z3.terms().begin()->second == zs);

  // minimal circles: ccw (r- over s-) uses the ccw scalar, cw the other
  Ring L2 = ring_laurent({"d1", "d2"});
  Scalar d1 = Scalar::variable(L2, "d1"), d2 = Scalar::variable(L2, "d2");
  EvalParams q = EvalParams::oriented_standard(d1, d2);
  Diagram cup_xy(Flavor::OrientedTL, Word::oriented(""), Word::oriented("XY"),
                 {{0, 1}});  // s-
  Diagram cap_xy(Flavor::OrientedTL, Word::oriented("XY"), Word::oriented(""),
                 {{0, 1}});  // r-
  auto ccw = compose(cap_xy, cup_xy, q);
  REQUIRE(ccw.size() == 1);
  CHECK(ccw.terms().begin()->second == d1);
  Diagram cup_yx(Flavor::OrientedTL, Word::oriented(""), Word::oriented("YX"),
                 {{0, 1}});  // s+
  Diagram cap_yx(Flavor::OrientedTL, Word::oriented("YX"), Word::oriented(""),
                 {{0, 1}});  // r+
  auto cw = compose(cap_yx, cup_yx, q);
  REQUIRE(cw.size() == 1);
  CHECK(cw.terms().begin()->second == d2);
}

TEST_CASE("symmetric swap moves cup types with scalar one") {
  // swap . s+ = s- in the oriented Brauer category
  Ring Q = ring_rational();
  EvalParams p = EvalParams::infinity(Q);
  Diagram splus(Flavor::Brauer, Word::oriented(""), Word::oriented("YX"),
                {{0, 1}});
  Diagram swap(Flavor::Brauer, Word::oriented("YX"), Word::oriented("XY"),
               {{0, 3}, {1, 2}});
  auto r = compose(swap, splus, p);
  REQUIRE(r.size() == 1);
  CHECK(r.terms().begin()->second.is_one());
  CHECK(r.terms().begin()->first ==
        Diagram(Flavor::Brauer, Word::oriented(""), Word::oriented("XY"),
                {{0, 1}}));
}

TEST_CASE("brauer flavor rejects two-parameter regimes") {
  Ring L2 = ring_laurent({"d1", "d2"});
  EvalParams q = EvalParams::oriented_standard(
      Scalar::variable(L2, "d1"), Scalar::variable(L2, "d2"));
  Word xy = Word::oriented("XY");
  Diagram id = Diagram::identity(Flavor::Brauer, xy);
  CHECK_THROWS_AS(compose(id, id, q), std::invalid_argument);
}

TEST_CASE("diagram validation") {
  CHECK_THROWS_AS(Diagram(Flavor::PlainTL, Word::plain(2), Word::plain(2),
                          {{0, 3}, {1, 2}}),  // crossing
                  std::invalid_argument);
  CHECK_NOTHROW(Diagram(Flavor::Brauer, Word::oriented("XX"),
                        Word::oriented("XX"), {{0, 3}, {1, 2}}));
  CHECK_THROWS_AS(Diagram(Flavor::OrientedTL, Word::oriented("XX"),
                          Word::oriented("XX"), {{0, 1}, {2, 3}}),
                  std::invalid_argument);  // cup/cap needs X with Y
  CHECK_THROWS_AS(Diagram(Flavor::PlainTL, Word::plain(1), Word::plain(2),
                          {{0, 1}}),
                  std::invalid_argument);  // odd total
}

TEST_CASE("canonical json round-trips and is byte-stable") {
  Diagram e1 = Diagram::e_generator(2, 1);
  std::string j = diagram_to_json(e1);
  CHECK(j ==
        "{\"flavor\":\"tl\",\"bottom\":2,\"top\":2,"
        "\"arcs\":[[\"B1\",\"B2\"],[\"T1\",\"T2\"]]}");
  CHECK(diagram_from_json(j) == e1);
  Diagram sw(Flavor::Brauer, Word::oriented("YX"), Word::oriented("XY"),
             {{0, 3}, {1, 2}});
  CHECK(diagram_from_json(diagram_to_json(sw)) == sw);
}
