#include "planar/lab.hpp"

#include <algorithm>
#include <numeric>

namespace planar {

// ---------------------------------------------------------------------------
// based rings

std::vector<mpz_class> BasedRing::multiply(const std::vector<mpz_class>& v,
                                           size_t by) const {
  std::vector<mpz_class> out(dim(), 0);
  for (size_t i = 0; i < dim(); ++i) {
    if (v[i] == 0) continue;
    for (const auto& [k, c] : entry(i, by)) out[k] += v[i] * c;
  }
  return out;
}

void BasedRing::validate() const {
  const size_t d = dim();
  if (unit >= d || dual.size() != d || mult.size() != d * d)
    throw std::invalid_argument("based ring shape mismatch");
  for (size_t i = 0; i < d; ++i)
    if (dual[dual[i]] != i) throw std::invalid_argument("dual not involutive");
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j)
      for (const auto& [k, c] : entry(i, j)) {
        if (c < 0) throw std::invalid_argument("negative structure constant");
        (void)k;
      }
  for (size_t j = 0; j < d; ++j) {
    auto u1 = entry(unit, j);
    auto u2 = entry(j, unit);
    bool ok1 = u1.size() == 1 && u1[0].first == j && u1[0].second == 1;
    bool ok2 = u2.size() == 1 && u2[0].first == j && u2[0].second == 1;
    if (!ok1 || !ok2) throw std::invalid_argument("unit law fails");
  }
}

BasedRing sl2_fusion_ring(size_t max_label, std::optional<size_t> level) {
  if (level && *level < max_label)
    throw std::invalid_argument("labels exceed the truncation level");
  const size_t d = max_label + 1;
  // the Chebyshev recursion on coordinate vectors: row i of the table is
  // X_i acting on X_j, built from X_1 X_{i-1} - X_{i-2}
  const size_t work = level ? *level + 1 : 2 * max_label + 1;
  auto mult_by_x1 = [&](const std::vector<mpz_class>& v) {
    std::vector<mpz_class> out(work, 0);
    for (size_t j = 0; j < work; ++j) {
      if (v[j] == 0) continue;
      if (j >= 1) out[j - 1] += v[j];
      if (j + 1 < work) out[j + 1] += v[j];  // truncation drops the overflow
    }
    return out;
  };
  BasedRing ring;
  ring.labels.reserve(d);
  for (size_t i = 0; i < d; ++i) ring.labels.push_back("X" + std::to_string(i));
  ring.unit = 0;
  ring.dual.resize(d);
  for (size_t i = 0; i < d; ++i) ring.dual[i] = static_cast<uint32_t>(i);
  ring.mult.resize(d * d);
  for (size_t j = 0; j < d; ++j) {
    // T_i(e_j) by recursion
    std::vector<std::vector<mpz_class>> t;
    std::vector<mpz_class> e(work, 0);
    e[j] = 1;
    t.push_back(e);                 // X_0 X_j
    if (d > 1) t.push_back(mult_by_x1(e));  // X_1 X_j
    for (size_t i = 2; i < d; ++i) {
      auto next = mult_by_x1(t[i - 1]);
      for (size_t k = 0; k < work; ++k) next[k] -= t[i - 2][k];
      t.push_back(std::move(next));
    }
    for (size_t i = 0; i < d; ++i) {
      for (size_t k = 0; k < work; ++k) {
        if (t[i][k] == 0) continue;
        if (t[i][k] < 0)
          throw std::logic_error("fusion recursion went negative");
        if (k < d)
          ring.mult[i * d + j].push_back({static_cast<uint32_t>(k), t[i][k]});
      }
    }
  }
  return ring;
}

// ---------------------------------------------------------------------------
// the braid-lift pairing matrix in OB(infinity)

namespace {

std::vector<Permutation> lex_permutations(size_t n) {
  std::vector<uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation{img});
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// image of a braid word under the symmetric braiding of OB(infinity)
DiagramVector swap_image(const BraidWord& w, const Word& word,
                         const EvalParams& p) {
  DiagramVector acc = DiagramVector::single(
      Diagram::identity(Flavor::Brauer, word), Scalar::one(p.ring()));
  for (int letter : w.letters) {
    size_t i = static_cast<size_t>(letter < 0 ? -letter : letter);
    // the symmetric swap is self-inverse, the sign is immaterial
    Diagram s = symmetric_braiding(word, i);
    acc = compose(DiagramVector::single(s, Scalar::one(p.ring())), acc, p);
  }
  return acc;
}

}  // namespace

PhiBraidLiftResult phi_braid_lift_matrix(size_t n, Exec exec) {
  if (n < 1) throw std::invalid_argument("phi matrix needs n >= 1");
  Ring Q = ring_rational();
  EvalParams p = EvalParams::infinity(Q);
  Word xn = Word::power(Letter::X, n);
  auto perms = lex_permutations(n);
  const size_t m = perms.size();

  PhiBraidLiftResult out;
  out.n = n;
  out.braid_lifts_consistent = true;

  // f_t as swap composites along the canonical braid lifts
  std::vector<DiagramVector> f, f_inv;
  for (const auto& t : perms) {
    BraidWord w = permutation_to_braid(t);
    DiagramVector ft = swap_image(w, xn, p);
    DiagramVector fti = swap_image(w.inverse(), xn, p);
    // in the symmetric category these are plain permutation diagrams
    DiagramVector direct = DiagramVector::single(
        Diagram::permutation(Flavor::Brauer, xn, t.img), Scalar::one(Q));
    DiagramVector direct_inv = DiagramVector::single(
        Diagram::permutation(Flavor::Brauer, xn, t.inverse().img),
        Scalar::one(Q));
    if (!(ft == direct) || !(fti == direct_inv))
      out.braid_lifts_consistent = false;
    f.push_back(std::move(ft));
    f_inv.push_back(std::move(fti));
  }

  Diagram caps = Diagram::nested_caps(Flavor::Brauer, xn);
  Diagram cups = Diagram::nested_cups(Flavor::Brauer, xn);
  DiagramVector caps_v = DiagramVector::single(caps, Scalar::one(Q));
  DiagramVector cups_v = DiagramVector::single(cups, Scalar::one(Q));
  DiagramVector id_yn = DiagramVector::single(
      Diagram::identity(Flavor::Brauer, xn.reversed_dual()), Scalar::one(Q));

  Matrix phi(Q, m, m);
  const bool par = exec == Exec::Parallel;
  (void)par;
#ifdef PLANAR_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (par)
#endif
  for (size_t idx = 0; idx < m * m; ++idx) {
    size_t si = idx / m, ti = idx % m;
    DiagramVector inner = compose(f_inv[si], f[ti], p);
    DiagramVector closed =
        compose(caps_v, compose(tensor(inner, id_yn), cups_v, p), p);
    Diagram empty(Flavor::Brauer, Word::oriented(""), Word::oriented(""), {});
    phi.at(si, ti) = closed.coefficient(empty);
  }
  out.is_identity = phi == Matrix::identity(Q, m);
  out.matrix = std::move(phi);
  return out;
}

// ---------------------------------------------------------------------------
// the matching pairing matrix over laurent(z, zs)

PhiMatchingsResult phi_matrix_matchings(size_t n, Exec exec) {
  if (n < 1) throw std::invalid_argument("phi matrix needs n >= 1");
  Ring L = ring_laurent({"z", "zs"});
  Scalar z = Scalar::variable(L, "z"), zs = Scalar::variable(L, "zs");
  EvalParams p(Scalar::one(L), Scalar::one(L), z, zs);

  std::vector<Letter> letters;
  for (size_t i = 0; i < n; ++i) {
    letters.push_back(Letter::Y);
    letters.push_back(Letter::X);
  }
  Word w = Word::oriented(letters);
  auto matchings = enumerate_matchings(w);
  // order compatible with the D-grading
  std::stable_sort(matchings.begin(), matchings.end(),
                   [](const auto& a, const auto& b) {
                     return a.second < b.second;
                   });
  const size_t m = matchings.size();

  PhiMatchingsResult out;
  out.n = n;
  out.count_is_catalan = mpz_class(m) == catalan(n);
  for (const auto& [d, dv] : matchings) out.d_values.push_back(dv);

  Matrix phi(L, m, m);
  out.a_exp.assign(m * m, 0);
  out.b_exp.assign(m * m, 0);
  out.entries_monomial = true;
  out.exponent_law = true;
  out.offdiag_positive = true;
  out.diagonal_one = true;

  const bool par = exec == Exec::Parallel;
  (void)par;
#ifdef PLANAR_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (par)
#endif
  for (size_t idx = 0; idx < m * m; ++idx) {
    size_t ui = idx / m, vi = idx % m;
    DiagramVector fu = DiagramVector::single(matchings[ui].first,
                                             Scalar::one(L));
    DiagramVector gv = DiagramVector::single(matchings[vi].first.flip(),
                                             Scalar::one(L));
    DiagramVector closed = compose(fu, gv, p);
    Diagram empty(Flavor::OrientedTL, Word::oriented(""), Word::oriented(""),
                  {});
    phi.at(ui, vi) = closed.coefficient(empty);
  }

  for (size_t ui = 0; ui < m; ++ui)
    for (size_t vi = 0; vi < m; ++vi) {
      const Scalar& e = phi.at(ui, vi);
      const auto& lp = e.laurent();
      bool monomial = lp.num.terms.size() == 1 &&
                      lp.num.terms[0].second == 1 &&
                      lp.den.terms.size() == 1 &&
                      lp.den.terms[0].second == 1;
      if (!monomial) {
        out.entries_monomial = false;
        continue;
      }
      long a = lp.num.terms[0].first.e[0], b = lp.num.terms[0].first.e[1];
      out.a_exp[ui * m + vi] = a;
      out.b_exp[ui * m + vi] = b;
      long du = static_cast<long>(out.d_values[ui]);
      long dv = static_cast<long>(out.d_values[vi]);
      if (a - b != du - dv) out.exponent_law = false;
      if (ui == vi && !(a == 0 && b == 0)) out.diagonal_one = false;
      if (ui != vi && a + b <= 0) out.offdiag_positive = false;
    }

  // determinants after killing one straightening scalar are units
  auto unit_det_after = [&](const std::string& kill) {
    Ring L1 = ring_laurent({kill == "z" ? "zs" : "z"});
    std::map<std::string, Scalar> asn{
        {kill, Scalar::zero(L1)},
        {kill == "z" ? "zs" : "z", Scalar::variable(L1, kill == "z" ? "zs"
                                                                    : "z")}};
    Matrix sub(L1, m, m);
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) sub.at(i, j) = phi.at(i, j).evaluate(asn);
    Scalar d = det(sub, exec);
    if (d.is_zero()) return false;
    const auto& lp = d.laurent();
    return lp.num.terms.size() == 1 && abs(lp.num.terms[0].second) == 1 &&
           lp.den.terms.size() == 1 && lp.den.terms[0].second == 1;
  };
  out.det_z0_unit = unit_det_after("z");
  out.det_zs0_unit = unit_det_after("zs");

  out.matrix = std::move(phi);
  out.pass = out.count_is_catalan && out.entries_monomial &&
             out.exponent_law && out.offdiag_positive && out.diagonal_one &&
             out.det_z0_unit && out.det_zs0_unit;
  return out;
}

// ---------------------------------------------------------------------------
// good retraction

namespace {

Scalar closed_scalar(const DiagramVector& v) {
  if (v.is_zero()) return Scalar::zero(v.ring());
  bool oriented = v.shape().bottom.oriented_p();
  Diagram empty(v.shape().flavor,
                oriented ? Word::oriented("") : Word::plain(0),
                oriented ? Word::oriented("") : Word::plain(0), {});
  return v.coefficient(empty);
}

// linear span tracking for DiagramVectors over a fixed End basis
struct SpanTracker {
  const DiagramAlgebra& da;
  std::vector<std::vector<Scalar>> rows;  // reduced echelon rows
  explicit SpanTracker(const DiagramAlgebra& d) : da(d) {}

  bool add(const DiagramVector& v) {  // returns true if it grew the span
    std::vector<Scalar> c = da.coords(v);
    for (const auto& row : rows) {
      // eliminate with the row's leading coordinate
      size_t lead = 0;
      while (lead < row.size() && row[lead].is_zero()) ++lead;
      if (lead >= row.size()) continue;
      if (!c[lead].is_zero()) {
        Scalar f = c[lead] / row[lead];
        for (size_t i = lead; i < c.size(); ++i)
          if (!row[i].is_zero()) c[i] = c[i] - f * row[i];
      }
    }
    bool nonzero = false;
    for (const auto& x : c) nonzero = nonzero || !x.is_zero();
    if (nonzero) rows.push_back(std::move(c));
    return nonzero;
  }
};

}  // namespace

RetractionResult good_retraction(Flavor f, const Word& z, const EvalParams& p,
                                 const std::vector<DiagramVector>& nilpotents) {
  const Ring& R = p.ring();
  Word empty_word = z.oriented_p() ? Word::oriented("") : Word::plain(0);
  auto hom_z1 = enumerate_basis(f, z, empty_word);
  auto hom_1z = enumerate_basis(f, empty_word, z);
  if (hom_z1.empty() || hom_1z.empty())
    throw std::invalid_argument("Hom spaces to/from the unit are empty");

  // nilpotency of the span of N: subspace powers must vanish
  DiagramAlgebra da = build_diagram_algebra(f, z, p, Exec::Serial);
  {
    std::vector<DiagramVector> current = nilpotents;
    for (size_t step = 0; step < da.dim() && !current.empty(); ++step) {
      std::vector<DiagramVector> next;
      SpanTracker span(da);
      for (const auto& x : nilpotents)
        for (const auto& y : current) {
          DiagramVector xy = compose(x, y, p);
          if (!xy.is_zero() && span.add(xy)) next.push_back(xy);
        }
      current = std::move(next);
    }
    if (!current.empty())
      throw std::invalid_argument("N is not nilpotent");
  }

  // initial retraction from any nonvanishing pairing
  DiagramVector r(Shape{f, z, empty_word}, R);
  DiagramVector s(Shape{f, empty_word, z}, R);
  bool found = false;
  for (const auto& ri : hom_z1) {
    for (const auto& sj : hom_1z) {
      Scalar val = closed_scalar(
          compose(DiagramVector::single(ri, Scalar::one(R)),
                  DiagramVector::single(sj, Scalar::one(R)), p));
      if (!val.is_zero()) {
        r = DiagramVector::single(ri, val.inverse());
        s = DiagramVector::single(sj, Scalar::one(R));
        found = true;
        break;
      }
    }
    if (found) break;
  }
  if (!found)
    throw std::invalid_argument("the unit is not a direct summand");

  RetractionResult out{r, s, false, false, 0};

  // descent: while r N^k a != 0 for some k >= 1, improve r
  auto level_bases = [&]() {
    // S_0 = {id}, S_{m+1} = products N * S_m, as explicit vectors
    std::vector<std::vector<DiagramVector>> levels;
    levels.push_back({DiagramVector::single(Diagram::identity(f, z),
                                            Scalar::one(R))});
    for (size_t m = 1; m <= da.dim(); ++m) {
      std::vector<DiagramVector> next;
      SpanTracker span(da);
      for (const auto& x : nilpotents)
        for (const auto& y : levels.back()) {
          DiagramVector xy = compose(x, y, p);
          if (!xy.is_zero() && span.add(xy)) next.push_back(xy);
        }
      if (next.empty()) break;
      levels.push_back(std::move(next));
    }
    return levels;
  };
  auto levels = level_bases();

  for (size_t guard = 0; guard <= da.dim() + 1; ++guard) {
    // largest level L with r S_L a != 0 for some a
    size_t max_nonzero = 0;
    for (size_t L = 1; L < levels.size(); ++L) {
      bool nonzero = false;
      for (const auto& w : levels[L]) {
        DiagramVector rw = compose(out.r, w, p);
        for (const auto& a : hom_1z) {
          if (!closed_scalar(
                   compose(rw, DiagramVector::single(a, Scalar::one(R)), p))
                   .is_zero()) {
            nonzero = true;
            break;
          }
        }
        if (nonzero) break;
      }
      if (nonzero) max_nonzero = L;
    }
    if (max_nonzero == 0) break;
    // pick x in N, w in S_{L-1}, a with r x w a invertible
    bool improved = false;
    for (const auto& x : nilpotents) {
      DiagramVector rx = compose(out.r, x, p);
      for (const auto& w : levels[max_nonzero - 1]) {
        DiagramVector rxw = compose(rx, w, p);
        for (const auto& a : hom_1z) {
          DiagramVector av = DiagramVector::single(a, Scalar::one(R));
          Scalar val = closed_scalar(compose(rxw, av, p));
          if (val.is_zero()) continue;
          out.r = rx.scale(val.inverse());
          out.s = compose(w, av, p);
          ++out.improvement_steps;
          improved = true;
          break;
        }
        if (improved) break;
      }
      if (improved) break;
    }
    if (!improved)
      throw std::logic_error("retraction descent failed to find a witness");
  }

  out.rs_one = closed_scalar(compose(out.r, out.s, p)).is_one();
  out.kills_nilpotents = true;
  for (const auto& x : nilpotents)
    for (const auto& a : hom_1z) {
      DiagramVector rxa =
          compose(compose(out.r, x, p),
                  DiagramVector::single(a, Scalar::one(R)), p);
      if (!closed_scalar(rxa).is_zero()) out.kills_nilpotents = false;
    }
  return out;
}

// ---------------------------------------------------------------------------
// negligible quotient and its oracle

SsimpResult negligible_quotient_tl(const Scalar& delta, size_t max_power) {
  const Ring& R = delta.ring();
  EvalParams p = EvalParams::tl_standard(delta);
  SsimpResult out;

  // Jones-Wenzl ladder: existence bounded by vanishing quantum integers
  std::vector<DiagramVector> jw;  // jw[l] on l strands; l = 0 is the empty
  jw.push_back(DiagramVector::single(
      Diagram(Flavor::PlainTL, Word::plain(0), Word::plain(0), {}),
      Scalar::one(R)));
  for (size_t l = 1; l <= max_power; ++l) {
    try {
      jw.push_back(jones_wenzl_classical(l, delta));
    } catch (const std::domain_error&) {
      break;
    }
  }
  const size_t max_label = jw.size() - 1;

  // keep the labels whose idempotent has nonzero closure trace
  std::vector<Scalar> traces;
  for (size_t l = 0; l <= max_label; ++l) {
    Scalar tr = l == 0 ? Scalar::one(R)
                       : quantum_trace(jw[l], p, Braiding::None);
    traces.push_back(tr);
    if (!tr.is_zero())
      out.kept.push_back(l);
    else if (!out.first_negligible)
      out.first_negligible = l;
  }

  const size_t d = out.kept.size();
  BasedRing ring;
  for (size_t l : out.kept) ring.labels.push_back("X" + std::to_string(l));
  ring.unit = 0;
  ring.dual.resize(d);
  for (size_t i = 0; i < d; ++i) ring.dual[i] = static_cast<uint32_t>(i);
  ring.mult.resize(d * d);

  auto project = [&](size_t i, size_t j, size_t k) -> mpz_class {
    // multiplicity of X_k in X_i (x) X_j as the rank of the closure-trace
    // pairing between JW-projected hom spaces
    size_t li = out.kept[i], lj = out.kept[j], lk = k;
    if ((li + lj + lk) % 2 != 0) return 0;
    auto homs = enumerate_tl_basis(li + lj, lk);
    if (homs.empty()) return 0;
    DiagramVector bottom_proj = tensor(jw[li], jw[lj]);
    std::vector<DiagramVector> a_side, b_side;
    for (const auto& dgm : homs) {
      DiagramVector dv = DiagramVector::single(dgm, Scalar::one(R));
      a_side.push_back(compose(jw[lk], compose(dv, bottom_proj, p), p));
      b_side.push_back(
          compose(bottom_proj, compose(flip(dv), jw[lk], p), p));
    }
    Matrix pairing(R, homs.size(), homs.size());
    for (size_t a = 0; a < homs.size(); ++a)
      for (size_t b = 0; b < homs.size(); ++b)
        pairing.at(a, b) =
            quantum_trace(compose(a_side[a], b_side[b], p), p,
                          Braiding::None);
    return static_cast<long>(rank(pairing, Exec::Serial));
  };

  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j)
      for (size_t k = 0; k < d; ++k) {
        mpz_class c = project(i, j, out.kept[k]);
        if (c != 0)
          ring.mult[i * d + j].push_back({static_cast<uint32_t>(k), c});
      }

  // independent oracle: the fusion recursion, truncated at the level when a
  // label was dropped
  std::optional<size_t> level;
  if (out.first_negligible) level = *out.first_negligible - 1;
  BasedRing oracle = sl2_fusion_ring(out.kept.empty() ? 0 : out.kept.back(),
                                     level);
  out.matches_oracle = true;
  for (size_t i = 0; i < d && out.matches_oracle; ++i)
    for (size_t j = 0; j < d; ++j)
      if (ring.entry(i, j) != oracle.entry(i, j)) {
        out.matches_oracle = false;
        break;
      }

  out.star_symmetric = true;
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j)
      if (ring.entry(i, j) != ring.entry(j, i)) out.star_symmetric = false;

  ring.validate();
  out.ring = std::move(ring);
  out.pass = out.matches_oracle && out.star_symmetric;
  return out;
}

// ---------------------------------------------------------------------------
// trace on the radical

TraceRadicalReport trace_radical_check(Flavor f, const Word& w,
                                       const EvalParams& p, Exec exec) {
  TraceRadicalReport rep;
  auto [da, alg] = end_algebra(f, w, p, TraceKind::Markov, exec);
  rep.end_dim = alg.dim();
  const Ring& R = p.ring();
  const std::vector<Scalar>& markov = *alg.trace;

  rep.has_nonnegligible = false;
  Matrix markov_gram = gram_matrix(alg, markov, exec);
  for (size_t i = 0; i < alg.dim() && !rep.has_nonnegligible; ++i)
    for (size_t j = 0; j < alg.dim(); ++j)
      if (!markov_gram.at(i, j).is_zero()) {
        rep.has_nonnegligible = true;
        break;
      }

  if (R->kind == RingKind::FpPoly) {
    // positive characteristic: search for a nilpotent with nonzero trace
    rep.nilpotent_with_nonzero_trace = false;
    for (size_t j = 0; j < alg.dim(); ++j) {
      std::vector<Scalar> x = alg.unit;
      for (size_t i = 0; i < alg.dim(); ++i)
        x[i] = x[i] - alg.basis_vector(j)[i];
      if (alg.is_nilpotent(x) && !alg.apply_trace(x).is_zero())
        rep.nilpotent_with_nonzero_trace = true;
    }
    rep.pass = rep.nilpotent_with_nonzero_trace;
    return rep;
  }

  // characteristic zero: the true radical from the regular trace form
  FinDimAlgebra reg = alg;
  reg.trace = reg.regular_trace();
  auto rad = radical(reg, exec);
  rep.radical_dim = rad.size();
  rep.trace_vanishes_on_radical = true;
  for (const auto& v : rad)
    if (!alg.apply_trace(v).is_zero()) rep.trace_vanishes_on_radical = false;

  auto markov_kernel = kernel(markov_gram, exec);
  // compare spans: dimensions plus containment of the radical in the kernel
  rep.radical_equals_trace_kernel = markov_kernel.size() == rad.size();
  if (rep.radical_equals_trace_kernel && !rad.empty()) {
    Matrix stack(R, alg.dim(), markov_kernel.size());
    for (size_t j = 0; j < markov_kernel.size(); ++j)
      for (size_t i = 0; i < alg.dim(); ++i)
        stack.at(i, j) = markov_kernel[j][i];
    for (const auto& v : rad) {
      if (!solve(stack, v)) rep.radical_equals_trace_kernel = false;
    }
  }
  rep.pass = rep.trace_vanishes_on_radical;
  return rep;
}

// ---------------------------------------------------------------------------
// growth

GrowthResult growth_dimension(const BasedRing& ring, size_t x, size_t n_max) {
  if (x >= ring.dim()) throw std::invalid_argument("unknown basis label");
  GrowthResult out;
  std::vector<mpz_class> v(ring.dim(), 0);
  v[ring.unit] = 1;
  for (size_t n = 1; n <= n_max; ++n) {
    v = ring.multiply(v, x);
    mpz_class len = 0;
    for (const auto& c : v) len += c;
    out.lengths.push_back(len);
  }
  out.supermultiplicative = true;
  for (size_t a = 1; a <= n_max; ++a)
    for (size_t b = 1; a + b <= n_max; ++b)
      if (out.lengths[a + b - 1] < out.lengths[a - 1] * out.lengths[b - 1])
        out.supermultiplicative = false;
  // best exact lower bound: maximize d_n^(1/n) by cross-powering
  out.best_n = 1;
  out.best_d = out.lengths[0];
  for (size_t n = 2; n <= n_max; ++n) {
    mpz_class lhs, rhs;
    mpz_pow_ui(lhs.get_mpz_t(), out.lengths[n - 1].get_mpz_t(),
               static_cast<unsigned long>(out.best_n));
    mpz_pow_ui(rhs.get_mpz_t(), out.best_d.get_mpz_t(),
               static_cast<unsigned long>(n));
    if (lhs > rhs) {
      out.best_n = n;
      out.best_d = out.lengths[n - 1];
    }
  }
  return out;
}

std::optional<size_t> moderate_growth_test(
    const std::vector<mpz_class>& end_dims) {
  for (size_t i = 0; i < end_dims.size(); ++i)
    if (end_dims[i] < factorial(i + 1)) return i + 1;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// rigidity

RigidityResult rigidity_certificate(Flavor f, const Word& x, const Word& y,
                                    const EvalParams& p) {
  const Ring& R = p.ring();
  Word empty_word = x.oriented_p() ? Word::oriented("") : Word::plain(0);
  auto coevs = enumerate_basis(f, empty_word, x.concat(y));  // 1 -> X Y
  auto evs = enumerate_basis(f, y.concat(x), empty_word);    // Y X -> 1
  if (coevs.empty() || evs.empty())
    throw std::invalid_argument("Hom spaces to/from the unit are empty");

  RigidityResult out;
  DiagramAlgebra endx = build_diagram_algebra(f, x, p, Exec::Serial);
  FinDimAlgebra ax = endx.algebra(std::nullopt);
  DiagramVector idx = DiagramVector::single(Diagram::identity(f, x),
                                            Scalar::one(R));
  DiagramVector idy = DiagramVector::single(Diagram::identity(f, y),
                                            Scalar::one(R));

  out.all_composites_nilpotent = true;
  for (const auto& ev : evs) {
    DiagramVector ev_v = DiagramVector::single(ev, Scalar::one(R));
    for (const auto& coev : coevs) {
      DiagramVector coev_v = DiagramVector::single(coev, Scalar::one(R));
      // z = (id_X (x) ev) . (coev (x) id_X)
      DiagramVector zv =
          compose(tensor(idx, ev_v), tensor(coev_v, idx), p);
      ++out.composites_checked;
      auto zc = endx.coords(zv);
      Matrix lz = ax.left_mult(zc);
      bool invertible = !det(lz, Exec::Serial).is_zero();
      if (!invertible) {
        if (!ax.is_nilpotent(zc)) out.all_composites_nilpotent = false;
        continue;
      }
      // normalize: coev' = (z^-1 (x) id_Y) . coev
      auto zinv = solve(lz, ax.unit);
      if (!zinv) continue;
      DiagramVector zinv_v = endx.vector(*zinv);
      DiagramVector coev2 = compose(tensor(zinv_v, idy), coev_v, p);
      DiagramVector zig1 = compose(tensor(idx, ev_v), tensor(coev2, idx), p);
      DiagramVector zig2 = compose(tensor(ev_v, idy), tensor(idy, coev2), p);
      if (zig1 == idx && zig2 == idy) {
        out.rigid = true;
        out.certificate = {ev_v, coev2};
        out.all_composites_nilpotent = false;
        break;
      }
    }
    if (out.rigid) break;
  }

  // non-negligibility: some pairing 1 -> Y X -> 1 is invertible
  auto cups_yx = enumerate_basis(f, empty_word, y.concat(x));
  for (const auto& ev : evs)
    for (const auto& cup : cups_yx) {
      Scalar val = closed_scalar(
          compose(DiagramVector::single(ev, Scalar::one(R)),
                  DiagramVector::single(cup, Scalar::one(R)), p));
      if (!val.is_zero()) out.nonnegligible = true;
    }
  return out;
}

}  // namespace planar
