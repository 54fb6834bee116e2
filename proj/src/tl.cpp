#include "planar/tl.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace planar {

std::vector<Scalar> quantum_integers(const Scalar& delta, size_t upto) {
  const Ring& r = delta.ring();
  std::vector<Scalar> q{Scalar::zero(r)};  // [0] = 0
  if (upto >= 1) q.push_back(Scalar::one(r));
  for (size_t k = 2; k <= upto; ++k)
    q.push_back(delta * q[k - 1] - q[k - 2]);
  return q;
}

DiagramVector jones_wenzl_infinity(size_t n, const Ring& r) {
  if (n < 1) throw std::invalid_argument("jones_wenzl needs n >= 1");
  EvalParams inf = EvalParams::infinity(r);
  DiagramVector jw = DiagramVector::single(
      Diagram::identity(Flavor::PlainTL, Word::plain(1)), Scalar::one(r));
  DiagramVector id1 = jw;
  for (size_t k = 1; k < n; ++k) {
    DiagramVector ext = tensor(jw, id1);  // JW_k (x) 1
    DiagramVector en = DiagramVector::single(
        Diagram::e_generator(k + 1, k), Scalar::one(r));
    jw = ext - compose(compose(ext, en, inf), ext, inf);
  }
  return jw;
}

DiagramVector jones_wenzl_closed_form_infinity(size_t n, const Ring& r) {
  if (n < 1) throw std::invalid_argument("jones_wenzl needs n >= 1");
  Shape shape{Flavor::PlainTL, Word::plain(n), Word::plain(n)};
  DiagramVector sum(shape, r);
  // subsets of positions {1..n-1} with no two adjacent: the cup/cap pairs
  std::vector<size_t> chosen;
  std::function<void(size_t)> rec = [&](size_t next) {
    // emit current subset
    std::vector<std::pair<uint16_t, uint16_t>> arcs;
    std::vector<bool> used(n, false);
    for (size_t i : chosen) {
      arcs.push_back({static_cast<uint16_t>(i - 1), static_cast<uint16_t>(i)});
      arcs.push_back({static_cast<uint16_t>(n + i - 1),
                      static_cast<uint16_t>(n + i)});
      used[i - 1] = used[i] = true;
    }
    for (size_t j = 0; j < n; ++j)
      if (!used[j])
        arcs.push_back({static_cast<uint16_t>(j),
                        static_cast<uint16_t>(n + j)});
    Scalar coeff = chosen.size() % 2 == 0 ? Scalar::one(r) : -Scalar::one(r);
    sum.add_term(Diagram(Flavor::PlainTL, Word::plain(n), Word::plain(n),
                         std::move(arcs)),
                 coeff);
    for (size_t i = next; i <= n - 1; ++i) {
      chosen.push_back(i);
      rec(i + 2);  // no two adjacent
      chosen.pop_back();
    }
  };
  if (n >= 1) rec(1);
  return sum;
}

DiagramVector jones_wenzl_classical(size_t n, const Scalar& delta) {
  if (n < 1) throw std::invalid_argument("jones_wenzl needs n >= 1");
  const Ring& r = delta.ring();
  EvalParams p = EvalParams::tl_standard(delta);
  auto q = quantum_integers(delta, n + 1);
  DiagramVector jw = DiagramVector::single(
      Diagram::identity(Flavor::PlainTL, Word::plain(1)), Scalar::one(r));
  DiagramVector id1 = jw;
  for (size_t k = 1; k < n; ++k) {
    if (q[k + 1].is_zero())
      throw std::domain_error(
          "vanishing quantum integer [" + std::to_string(k + 1) +
          "]: Jones-Wenzl does not exist at this parameter");
    DiagramVector ext = tensor(jw, id1);
    DiagramVector en = DiagramVector::single(
        Diagram::e_generator(k + 1, k), Scalar::one(r));
    DiagramVector mid = compose(compose(ext, en, p), ext, p);
    jw = ext - mid.scale(q[k] / q[k + 1]);
  }
  return jw;
}

EvalParams kauffman_params(const Ring& ring_a) {
  Scalar a = Scalar::variable(ring_a, "A");
  Scalar delta = -(a * a) - (a * a).inverse();
  return EvalParams::tl_standard(delta);
}

DiagramVector kauffman_resolve(const std::vector<int>& letters,
                               size_t strands, const Ring& ring_a) {
  Scalar a = Scalar::variable(ring_a, "A");
  EvalParams p = kauffman_params(ring_a);
  DiagramVector acc = DiagramVector::single(
      Diagram::identity(Flavor::PlainTL, Word::plain(strands)),
      Scalar::one(ring_a));
  for (int letter : letters) {
    size_t i = static_cast<size_t>(letter < 0 ? -letter : letter);
    if (i < 1 || i >= strands)
      throw std::invalid_argument("braid generator out of range");
    Scalar pos = letter > 0 ? a : a.inverse();
    DiagramVector gen = DiagramVector::single(
        Diagram::identity(Flavor::PlainTL, Word::plain(strands)), pos);
    gen.add_term(Diagram::e_generator(strands, i), pos.inverse());
    acc = compose(gen, acc, p);
  }
  return acc;
}

Scalar quantum_trace(const DiagramVector& f, const EvalParams& p,
                     Braiding braiding) {
  if (!(f.shape().bottom == f.shape().top))
    throw std::invalid_argument("quantum_trace needs an endomorphism");
  const Ring& r = p.ring();
  const Flavor flavor = f.shape().flavor;
  const Word& w = f.shape().bottom;
  const Word wd = w.reversed_dual();
  if (f.is_zero()) return Scalar::zero(r);

  Diagram cups = Diagram::nested_cups(flavor, w);   // 1 -> w . wd
  DiagramVector cups_v = DiagramVector::single(cups, Scalar::one(r));
  DiagramVector idwd = DiagramVector::single(Diagram::identity(flavor, wd),
                                             Scalar::one(r));

  DiagramVector closed(Shape{flavor, Word::plain(0), Word::plain(0)}, r);
  switch (braiding) {
    case Braiding::None: {
      Diagram caps = Diagram::nested_caps(flavor, w);  // w . wd -> 1
      DiagramVector inner = tensor(f, idwd);
      closed = compose(DiagramVector::single(caps, Scalar::one(r)),
                       compose(inner, cups_v, p), p);
      break;
    }
    case Braiding::Kauffman: {
      if (flavor != Flavor::PlainTL)
        throw std::invalid_argument("Kauffman braiding needs plain TL");
      const size_t n = w.size();
      std::vector<int> cable;
      for (size_t i = 1; i <= n; ++i)
        for (size_t j = n + i - 1; j >= i; --j)
          cable.push_back(static_cast<int>(j));
      DiagramVector cross = kauffman_resolve(cable, 2 * n, r);
      Diagram caps = Diagram::nested_caps(flavor, wd);  // wd . w -> 1
      DiagramVector idw2 = DiagramVector::single(
          Diagram::identity(flavor, wd), Scalar::one(r));
      DiagramVector inner = tensor(idw2, f);
      closed = compose(DiagramVector::single(caps, Scalar::one(r)),
                       compose(inner, compose(cross, cups_v, p), p), p);
      break;
    }
    case Braiding::SymmetricSwap: {
      if (flavor != Flavor::Brauer)
        throw std::invalid_argument("symmetric swap needs the Brauer flavor");
      const size_t n = w.size();
      // block transposition w . wd -> wd . w
      std::vector<uint32_t> pi(2 * n);
      for (size_t i = 0; i < n; ++i) pi[i] = static_cast<uint32_t>(n + i);
      for (size_t j = 0; j < n; ++j) pi[n + j] = static_cast<uint32_t>(j);
      Word bottom = w.concat(wd);
      std::vector<std::pair<uint16_t, uint16_t>> arcs;
      for (size_t i = 0; i < 2 * n; ++i)
        arcs.push_back({static_cast<uint16_t>(i),
                        static_cast<uint16_t>(2 * n + pi[i])});
      Diagram swap(flavor, bottom, wd.concat(w), std::move(arcs));
      Diagram caps = Diagram::nested_caps(flavor, wd);  // wd . w -> 1
      DiagramVector inner = tensor(idwd, f);
      closed = compose(
          DiagramVector::single(caps, Scalar::one(r)),
          compose(inner,
                  compose(DiagramVector::single(swap, Scalar::one(r)), cups_v,
                          p),
                  p),
          p);
      break;
    }
  }
  Diagram empty(flavor, f.shape().bottom.oriented_p() ? Word::oriented("")
                                                      : Word::plain(0),
                f.shape().bottom.oriented_p() ? Word::oriented("")
                                              : Word::plain(0),
                {});
  return closed.coefficient(empty);
}

EndAlgebra end_algebra(Flavor f, const Word& w, const EvalParams& p,
                       TraceKind trace, Exec exec) {
  DiagramAlgebra da = build_diagram_algebra(f, w, p, exec);
  std::optional<std::vector<Scalar>> tau;
  if (trace == TraceKind::Markov) {
    std::vector<Scalar> values;
    values.reserve(da.dim());
    for (const auto& b : da.basis)
      values.push_back(quantum_trace(
          DiagramVector::single(b, Scalar::one(p.ring())), p, Braiding::None));
    tau = std::move(values);
  }
  FinDimAlgebra a = da.algebra(std::move(tau));
  if (trace == TraceKind::Regular) a.trace = a.regular_trace();
  return {std::move(da), std::move(a)};
}

// ---------------------------------------------------------------------------
// filtration reports

FiltrationReport cup_filtration_report(size_t n, Exec exec) {
  Ring Q = ring_rational();
  auto [da, alg] =
      end_algebra(Flavor::PlainTL, Word::plain(n), EvalParams::infinity(Q),
                  TraceKind::Regular, exec);
  const size_t d = da.dim();
  FiltrationReport rep;
  rep.kind = "cup";
  rep.word = Word::plain(n).to_string();
  rep.algebra_dim = d;

  std::vector<size_t> deg(d);
  for (size_t i = 0; i < d; ++i) deg[i] = da.basis[i].cup_count();

  // two-sided ideal property of I_k = span{deg >= k}
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

  // graded layers: matrix units indexed by (cap pattern, cup pattern)
  std::map<size_t, std::vector<size_t>> by_degree;
  for (size_t i = 0; i < d; ++i) by_degree[deg[i]].push_back(i);
  rep.layers_ok = true;
  rep.total_ok = true;
  size_t total = 0;
  for (const auto& [k, members] : by_degree) {
    FiltrationLayer layer;
    layer.degree = static_cast<long>(k);
    layer.dim = members.size();
    // cap pattern = bottom arcs, cup pattern = top arcs
    // patterns as boundary positions so bottom caps and top cups compare
    auto caps_of = [&](size_t i) {
      std::vector<std::pair<uint16_t, uint16_t>> caps;
      const Diagram& dg = da.basis[i];
      for (size_t a = 0; a < dg.arcs().size(); ++a)
        if (dg.arc_kind(a) == ArcKind::Cap) caps.push_back(dg.arcs()[a]);
      return caps;
    };
    auto cups_of = [&](size_t i) {
      std::vector<std::pair<uint16_t, uint16_t>> cups;
      const Diagram& dg = da.basis[i];
      const uint16_t nb = static_cast<uint16_t>(dg.n_bottom());
      for (size_t a = 0; a < dg.arcs().size(); ++a)
        if (dg.arc_kind(a) == ArcKind::Cup)
          cups.push_back({static_cast<uint16_t>(dg.arcs()[a].first - nb),
                          static_cast<uint16_t>(dg.arcs()[a].second - nb)});
      return cups;
    };
    std::set<std::vector<std::pair<uint16_t, uint16_t>>> cap_patterns;
    for (size_t i : members) cap_patterns.insert(caps_of(i));
    size_t m = cap_patterns.size();
    if (m * m != members.size()) rep.layers_ok = false;
    // graded product: d1 d2 = [cups(d2) == caps(d1)] (caps(d2), cups(d1))
    for (size_t i : members)
      for (size_t j : members) {
        const auto& [kk, c] = da.product(i, j);
        bool same_layer = kk != DiagramAlgebra::kNone && deg[kk] == k;
        bool expect = cups_of(j) == caps_of(i);
        if (expect) {
          if (!same_layer || !c.is_one() || caps_of(kk) != caps_of(j) ||
              cups_of(kk) != cups_of(i))
            rep.layers_ok = false;
        } else {
          if (same_layer && !c.is_zero()) rep.layers_ok = false;
        }
      }
    layer.blocks = {m};
    total += layer.dim;
    rep.layers.push_back(std::move(layer));
  }
  rep.total_ok = total == d && mpz_class(d) == catalan(n);
  rep.radical_zero = radical_is_zero(alg, exec);
  rep.pass = rep.ideals_ok && rep.layers_ok && rep.total_ok && rep.radical_zero;
  return rep;
}

FiltrationReport lopsided_filtration_report(const Word& w, const Scalar& delta,
                                            Exec exec) {
  if (w.count(Letter::X) != w.count(Letter::Y))
    throw std::invalid_argument("unbalanced word");
  const Ring& r = delta.ring();
  EvalParams lop = EvalParams::lopsided(delta);
  EvalParams inf = EvalParams::infinity(r);
  DiagramAlgebra da = build_diagram_algebra(Flavor::OrientedTL, w, lop, exec);
  DiagramAlgebra di = build_diagram_algebra(Flavor::OrientedTL, w, inf, exec);
  const size_t d = da.dim();

  FiltrationReport rep;
  rep.kind = "lopsided";
  rep.word = w.to_string();
  rep.algebra_dim = d;

  std::vector<long> deg(d);
  for (size_t i = 0; i < d; ++i)
    deg[i] = static_cast<long>(da.basis[i].count_type(ArcType::SPlus)) -
             static_cast<long>(da.basis[i].count_type(ArcType::RPlus));

  rep.ideals_ok = true;
  rep.graded_matches_infinity = true;
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      const auto& [k, c] = da.product(i, j);
      bool nonzero = k != DiagramAlgebra::kNone && !c.is_zero();
      if (nonzero && deg[k] < deg[i] + deg[j]) rep.ideals_ok = false;
      // associated graded structure constants vs the (inf, inf) kernel
      const auto& [ki, ci] = di.product(i, j);
      bool graded_nonzero = nonzero && deg[k] == deg[i] + deg[j];
      bool inf_nonzero = ki != DiagramAlgebra::kNone && !ci.is_zero();
      if (graded_nonzero != inf_nonzero)
        rep.graded_matches_infinity = false;
      else if (graded_nonzero && (k != ki || !(c == ci)))
        rep.graded_matches_infinity = false;
    }

  std::map<long, size_t> by_degree;
  for (size_t i = 0; i < d; ++i) by_degree[deg[i]]++;
  for (const auto& [k, cnt] : by_degree)
    rep.layers.push_back(FiltrationLayer{k, cnt, {}});
  rep.layers_ok = true;
  size_t total = 0;
  for (const auto& l : rep.layers) total += l.dim;
  rep.total_ok = total == d;

  // radical of the (infinity, infinity) algebra over the rationals
  auto [dq, aq] = end_algebra(Flavor::OrientedTL, w,
                              EvalParams::infinity(ring_rational()),
                              TraceKind::Regular, exec);
  rep.radical_zero = radical_is_zero(aq, exec);
  rep.pass = rep.ideals_ok && rep.graded_matches_infinity && rep.total_ok &&
             rep.radical_zero && rep.layers_ok;
  return rep;
}

ZigzagScalars zigzag_scalars(const EvalParams& p) {
  const Ring& r = p.ring();
  auto coeff_of_identity = [&](const Diagram& u, const Diagram& v,
                               const Word& w) {
    DiagramVector c = compose(u, v, p);
    return c.coefficient(Diagram::identity(Flavor::OrientedTL, w));
  };
  Word yw = Word::oriented("Y"), xw = Word::oriented("X");
  // z1 = (r+ (x) 1)(1 (x) s-) on Y
  Diagram v1(Flavor::OrientedTL, yw, Word::oriented("YXY"), {{0, 1}, {2, 3}});
  Diagram u1(Flavor::OrientedTL, Word::oriented("YXY"), yw, {{0, 1}, {2, 3}});
  // z2 = (1 (x) r+)(s- (x) 1) on X
  Diagram v2(Flavor::OrientedTL, xw, Word::oriented("XYX"), {{0, 3}, {1, 2}});
  Diagram u2(Flavor::OrientedTL, Word::oriented("XYX"), xw, {{0, 3}, {1, 2}});
  // z3 = (r- (x) 1)(1 (x) s+) on X
  Diagram v3(Flavor::OrientedTL, xw, Word::oriented("XYX"), {{0, 1}, {2, 3}});
  Diagram u3(Flavor::OrientedTL, Word::oriented("XYX"), xw, {{0, 1}, {2, 3}});
  // z4 = (1 (x) r-)(s+ (x) 1) on Y
  Diagram v4(Flavor::OrientedTL, yw, Word::oriented("YXY"), {{0, 3}, {1, 2}});
  Diagram u4(Flavor::OrientedTL, Word::oriented("YXY"), yw, {{0, 3}, {1, 2}});
  ZigzagScalars out{coeff_of_identity(u1, v1, yw),
                    coeff_of_identity(u2, v2, xw),
                    coeff_of_identity(u3, v3, xw),
                    coeff_of_identity(u4, v4, yw), false};
  out.consistent = out.z1 == out.z2 && out.z3 == out.z4;
  (void)r;
  return out;
}

}  // namespace planar
