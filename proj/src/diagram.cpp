#include "planar/diagram.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <json.hpp>

namespace planar {

// ---------------------------------------------------------------------------
// words

Word Word::plain(size_t n) {
  Word w;
  w.oriented_ = false;
  w.n_ = n;
  return w;
}

Word Word::oriented(std::vector<Letter> letters) {
  Word w;
  w.oriented_ = true;
  w.letters_ = std::move(letters);
  w.n_ = w.letters_.size();
  return w;
}

Word Word::oriented(const std::string& s) {
  std::vector<Letter> l;
  for (char c : s) {
    if (c == 'X' || c == 'x')
      l.push_back(Letter::X);
    else if (c == 'Y' || c == 'y')
      l.push_back(Letter::Y);
    else
      throw std::invalid_argument("oriented word letters must be X or Y");
  }
  return oriented(std::move(l));
}

Word Word::power(Letter l, size_t n) {
  return oriented(std::vector<Letter>(n, l));
}

Word Word::xy_block(size_t n, size_t m) {
  std::vector<Letter> l(n, Letter::X);
  l.insert(l.end(), m, Letter::Y);
  return oriented(std::move(l));
}

Word Word::concat(const Word& o) const {
  if (oriented_ != o.oriented_)
    throw std::invalid_argument("cannot concatenate mixed word flavors");
  if (!oriented_) return plain(n_ + o.n_);
  std::vector<Letter> l = letters_;
  l.insert(l.end(), o.letters_.begin(), o.letters_.end());
  return oriented(std::move(l));
}

Word Word::reversed_dual() const {
  if (!oriented_) return *this;
  std::vector<Letter> l(letters_.rbegin(), letters_.rend());
  for (auto& x : l) x = flip_letter(x);
  return oriented(std::move(l));
}

std::string Word::to_string() const {
  if (!oriented_) return std::to_string(n_);
  std::string s;
  for (Letter l : letters_) s += l == Letter::X ? 'X' : 'Y';
  return s;
}

bool Word::operator==(const Word& o) const {
  return oriented_ == o.oriented_ && size() == o.size() &&
         letters_ == o.letters_;
}

bool Word::operator<(const Word& o) const {
  if (oriented_ != o.oriented_) return oriented_ < o.oriented_;
  if (size() != o.size()) return size() < o.size();
  return letters_ < o.letters_;
}

size_t Word::count(Letter l) const {
  size_t c = 0;
  for (Letter x : letters_) c += x == l;
  return c;
}

// ---------------------------------------------------------------------------
// diagrams

Diagram::Diagram(Flavor f, Word bottom, Word top,
                 std::vector<std::pair<uint16_t, uint16_t>> arcs)
    : flavor_(f),
      bottom_(std::move(bottom)),
      top_(std::move(top)),
      arcs_(std::move(arcs)) {
  const size_t n = bottom_.size(), m = top_.size(), total = n + m;
  if (total % 2 != 0)
    throw std::invalid_argument("diagram needs an even number of points");
  const bool want_oriented = flavor_ != Flavor::PlainTL;
  if (bottom_.oriented_p() != want_oriented ||
      top_.oriented_p() != want_oriented)
    throw std::invalid_argument("word flavor does not match diagram flavor");
  for (auto& a : arcs_)
    if (a.first > a.second) std::swap(a.first, a.second);
  std::sort(arcs_.begin(), arcs_.end());
  if (arcs_.size() * 2 != total)
    throw std::invalid_argument("matching must cover every point");
  std::vector<uint8_t> seen(total, 0);
  for (auto& [p, q] : arcs_) {
    if (p == q || q >= total) throw std::invalid_argument("bad arc endpoint");
    if (seen[p]++ || seen[q]++)
      throw std::invalid_argument("point used twice in matching");
  }
  if (want_oriented) {
    for (size_t i = 0; i < arcs_.size(); ++i) {
      auto [p, q] = arcs_[i];
      bool pb = is_bottom_point(p), qb = is_bottom_point(q);
      if (pb != qb) {
        if (point_letter(p) != point_letter(q))
          throw std::invalid_argument(
              "through-strand must connect equal letters");
      } else {
        if (point_letter(p) == point_letter(q))
          throw std::invalid_argument("cup/cap must connect X with Y");
      }
    }
  }
  if (flavor_ != Flavor::Brauer && !is_planar())
    throw std::invalid_argument("diagram is not planar");
}

Diagram Diagram::identity(Flavor f, const Word& w) {
  std::vector<std::pair<uint16_t, uint16_t>> arcs;
  const size_t n = w.size();
  for (size_t i = 0; i < n; ++i)
    arcs.push_back({static_cast<uint16_t>(i), static_cast<uint16_t>(n + i)});
  return Diagram(f, w, w, std::move(arcs));
}

Diagram Diagram::e_generator(size_t n, size_t i) {
  if (i < 1 || i >= n) throw std::invalid_argument("e_i needs 1 <= i < n");
  std::vector<std::pair<uint16_t, uint16_t>> arcs;
  for (size_t j = 0; j < n; ++j) {
    if (j == i - 1) {
      arcs.push_back({static_cast<uint16_t>(j), static_cast<uint16_t>(j + 1)});
      arcs.push_back({static_cast<uint16_t>(n + j),
                      static_cast<uint16_t>(n + j + 1)});
    } else if (j != i) {
      arcs.push_back({static_cast<uint16_t>(j), static_cast<uint16_t>(n + j)});
    }
  }
  return Diagram(Flavor::PlainTL, Word::plain(n), Word::plain(n),
                 std::move(arcs));
}

Diagram Diagram::cap2() {
  return Diagram(Flavor::PlainTL, Word::plain(2), Word::plain(0), {{0, 1}});
}

Diagram Diagram::cup2() {
  return Diagram(Flavor::PlainTL, Word::plain(0), Word::plain(2), {{0, 1}});
}

Diagram Diagram::nested_caps(Flavor f, const Word& w) {
  Word bottom = w.concat(w.reversed_dual());
  const size_t total = bottom.size();
  std::vector<std::pair<uint16_t, uint16_t>> arcs;
  for (size_t i = 0; i < total / 2; ++i)
    arcs.push_back(
        {static_cast<uint16_t>(i), static_cast<uint16_t>(total - 1 - i)});
  return Diagram(f, std::move(bottom),
                 f == Flavor::PlainTL ? Word::plain(0) : Word::oriented(""),
                 std::move(arcs));
}

Diagram Diagram::nested_cups(Flavor f, const Word& w) {
  return nested_caps(f, w).flip();
}

Diagram Diagram::permutation(Flavor f, const Word& bottom,
                             const std::vector<uint32_t>& pi) {
  const size_t n = bottom.size();
  if (pi.size() != n) throw std::invalid_argument("permutation size mismatch");
  std::vector<std::pair<uint16_t, uint16_t>> arcs;
  for (size_t i = 0; i < n; ++i)
    arcs.push_back(
        {static_cast<uint16_t>(i), static_cast<uint16_t>(n + pi[i])});
  return Diagram(f, bottom, bottom, std::move(arcs));
}

Letter Diagram::point_letter(uint16_t p) const {
  return is_bottom_point(p) ? bottom_.letter(p)
                            : top_.letter(p - bottom_.size());
}

ArcKind Diagram::arc_kind(size_t idx) const {
  auto [p, q] = arcs_[idx];
  bool pb = is_bottom_point(p), qb = is_bottom_point(q);
  if (pb && qb) return ArcKind::Cap;
  if (!pb && !qb) return ArcKind::Cup;
  return ArcKind::Through;
}

ArcType Diagram::arc_type(size_t idx) const {
  ArcKind k = arc_kind(idx);
  if (k == ArcKind::Through) return ArcType::Through;
  auto [p, q] = arcs_[idx];  // p < q
  Letter left = point_letter(p);
  if (k == ArcKind::Cap)
    return left == Letter::Y ? ArcType::RPlus : ArcType::RMinus;
  return left == Letter::Y ? ArcType::SPlus : ArcType::SMinus;
}

size_t Diagram::cap_count() const {
  size_t c = 0;
  for (size_t i = 0; i < arcs_.size(); ++i) c += arc_kind(i) == ArcKind::Cap;
  return c;
}

size_t Diagram::cup_count() const {
  size_t c = 0;
  for (size_t i = 0; i < arcs_.size(); ++i) c += arc_kind(i) == ArcKind::Cup;
  return c;
}

size_t Diagram::count_type(ArcType t) const {
  size_t c = 0;
  for (size_t i = 0; i < arcs_.size(); ++i) c += arc_type(i) == t;
  return c;
}

Diagram Diagram::tensor(const Diagram& o) const {
  if (flavor_ != o.flavor_)
    throw std::invalid_argument("tensor needs matching diagram flavors");
  const size_t n1 = n_bottom(), m1 = n_top(), n2 = o.n_bottom();
  Word nb = bottom_.concat(o.bottom_), nt = top_.concat(o.top_);
  auto remap_self = [&](uint16_t p) -> uint16_t {
    return is_bottom_point(p) ? p : p + static_cast<uint16_t>(n2);
  };
  auto remap_other = [&](uint16_t p) -> uint16_t {
    return o.is_bottom_point(p)
               ? p + static_cast<uint16_t>(n1)
               : p + static_cast<uint16_t>(n1 + m1);
  };
  std::vector<std::pair<uint16_t, uint16_t>> arcs;
  for (auto [p, q] : arcs_) arcs.push_back({remap_self(p), remap_self(q)});
  for (auto [p, q] : o.arcs_) arcs.push_back({remap_other(p), remap_other(q)});
  return Diagram(flavor_, std::move(nb), std::move(nt), std::move(arcs));
}

Diagram Diagram::flip() const {
  const size_t n = n_bottom(), m = n_top();
  auto remap = [&](uint16_t p) -> uint16_t {
    return is_bottom_point(p) ? p + static_cast<uint16_t>(m)
                              : p - static_cast<uint16_t>(n);
  };
  std::vector<std::pair<uint16_t, uint16_t>> arcs;
  for (auto [p, q] : arcs_) arcs.push_back({remap(p), remap(q)});
  return Diagram(flavor_, top_, bottom_, std::move(arcs));
}

bool Diagram::is_planar() const {
  const size_t n = n_bottom(), m = n_top();
  auto circle = [&](uint16_t p) -> size_t {
    return is_bottom_point(p) ? p : n + (m - 1 - (p - n));
  };
  std::vector<std::pair<size_t, size_t>> cs;
  for (auto [p, q] : arcs_) {
    size_t a = circle(p), b = circle(q);
    if (a > b) std::swap(a, b);
    cs.push_back({a, b});
  }
  for (size_t i = 0; i < cs.size(); ++i)
    for (size_t j = i + 1; j < cs.size(); ++j) {
      auto [a, b] = cs[i];
      auto [c, d] = cs[j];
      bool c_in = a < c && c < b, d_in = a < d && d < b;
      if (c_in != d_in) return false;
    }
  return true;
}

bool Diagram::operator==(const Diagram& o) const {
  return flavor_ == o.flavor_ && bottom_ == o.bottom_ && top_ == o.top_ &&
         arcs_ == o.arcs_;
}

bool Diagram::operator<(const Diagram& o) const {
  if (flavor_ != o.flavor_) return flavor_ < o.flavor_;
  if (!(bottom_ == o.bottom_)) return bottom_ < o.bottom_;
  if (!(top_ == o.top_)) return top_ < o.top_;
  return arcs_ < o.arcs_;
}

std::string Diagram::to_string() const {
  std::ostringstream os;
  os << bottom_.to_string() << "->" << top_.to_string() << "{";
  const size_t n = n_bottom();
  for (size_t i = 0; i < arcs_.size(); ++i) {
    if (i) os << ",";
    auto [p, q] = arcs_[i];
    auto pt = [&](uint16_t x) {
      return is_bottom_point(x) ? "B" + std::to_string(x + 1)
                                : "T" + std::to_string(x - n + 1);
    };
    os << pt(p) << pt(q);
  }
  os << "}";
  return os.str();
}

// ---------------------------------------------------------------------------
// evaluation parameters

EvalParams::EvalParams(Scalar ccw, Scalar cw, Scalar z, Scalar zs)
    : circle_ccw(std::move(ccw)),
      circle_cw(std::move(cw)),
      zig_z(std::move(z)),
      zig_zs(std::move(zs)) {
  if (!same_ring(circle_ccw.ring(), circle_cw.ring()) ||
      !same_ring(circle_ccw.ring(), zig_z.ring()) ||
      !same_ring(circle_ccw.ring(), zig_zs.ring()))
    throw RingMismatch("EvalParams scalars must share one ring");
}

EvalParams EvalParams::tl_standard(const Scalar& delta) {
  Scalar one = Scalar::one(delta.ring());
  return EvalParams(delta, delta, one, one);
}

EvalParams EvalParams::tl_renormalized(const Scalar& delta) {
  Scalar one = Scalar::one(delta.ring());
  Scalar inv = delta.inverse();
  return EvalParams(one, one, inv, inv);
}

EvalParams EvalParams::infinity(const Ring& r) {
  Scalar one = Scalar::one(r), zero = Scalar::zero(r);
  return EvalParams(one, one, zero, zero);
}

EvalParams EvalParams::oriented_standard(const Scalar& d1, const Scalar& d2) {
  Scalar one = Scalar::one(d1.ring());
  return EvalParams(d1, d2, one, one);
}

EvalParams EvalParams::oriented_renormalized(const Scalar& d1,
                                             const Scalar& d2) {
  Scalar one = Scalar::one(d1.ring());
  return EvalParams(one, one, d1.inverse(), d2.inverse());
}

EvalParams EvalParams::lopsided(const Scalar& delta) {
  Scalar one = Scalar::one(delta.ring());
  return EvalParams(one, one, delta.inverse(), Scalar::zero(delta.ring()));
}

EvalParams EvalParams::lopsided_other(const Scalar& delta) {
  Scalar one = Scalar::one(delta.ring());
  return EvalParams(one, one, Scalar::zero(delta.ring()), delta.inverse());
}

EvalParams EvalParams::brauer_standard(const Scalar& t) {
  Scalar one = Scalar::one(t.ring());
  return EvalParams(t, t, one, one);
}

// ---------------------------------------------------------------------------
// diagram vectors

bool Shape::operator==(const Shape& o) const {
  return flavor == o.flavor && bottom == o.bottom && top == o.top;
}

DiagramVector::DiagramVector(Shape shape, Ring ring)
    : shape_(std::move(shape)), ring_(std::move(ring)) {}

DiagramVector DiagramVector::single(const Diagram& d, const Scalar& c) {
  DiagramVector v(Shape{d.flavor(), d.bottom(), d.top()}, c.ring());
  v.add_term(d, c);
  return v;
}

DiagramVector DiagramVector::zero_like(const Diagram& d, const Ring& ring) {
  return DiagramVector(Shape{d.flavor(), d.bottom(), d.top()}, ring);
}

void DiagramVector::add_term(const Diagram& d, const Scalar& c) {
  if (!(Shape{d.flavor(), d.bottom(), d.top()} == shape_))
    throw std::invalid_argument("diagram shape mismatch in vector");
  if (c.is_zero()) return;
  auto it = terms_.find(d);
  if (it == terms_.end()) {
    terms_.emplace(d, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiagramVector DiagramVector::operator+(const DiagramVector& o) const {
  DiagramVector r = *this;
  for (const auto& [d, c] : o.terms_) r.add_term(d, c);
  return r;
}

DiagramVector DiagramVector::operator-(const DiagramVector& o) const {
  DiagramVector r = *this;
  for (const auto& [d, c] : o.terms_) r.add_term(d, -c);
  return r;
}

DiagramVector DiagramVector::scale(const Scalar& c) const {
  DiagramVector r(shape_, ring_);
  if (c.is_zero()) return r;
  for (const auto& [d, x] : terms_) r.add_term(d, x * c);
  return r;
}

bool DiagramVector::operator==(const DiagramVector& o) const {
  return shape_ == o.shape_ && terms_ == o.terms_;
}

Scalar DiagramVector::coefficient(const Diagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? Scalar::zero(ring_) : it->second;
}

std::string DiagramVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*" << d.to_string();
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// composition kernel

namespace {

struct CupTypeCounts {
  size_t s_plus = 0, s_minus = 0;
  size_t total() const { return s_plus + s_minus; }
};

}  // namespace

std::pair<DiagramVector, ComposeStats> compose_with_stats(
    const Diagram& u, const Diagram& v, const EvalParams& params) {
  if (u.flavor() != v.flavor())
    throw std::invalid_argument("compose: diagram flavors differ");
  if (!(v.top() == u.bottom()))
    throw std::invalid_argument("compose: boundary mismatch");
  const Flavor flavor = u.flavor();
  const bool oriented = flavor != Flavor::PlainTL;
  const bool brauer = flavor == Flavor::Brauer;
  if (brauer && !(params.circle_ccw == params.circle_cw &&
                  params.zig_z == params.zig_zs))
    throw std::invalid_argument(
        "walled Brauer composition needs a single circle and straightening "
        "scalar");
  const Ring& ring = params.ring();

  const size_t kb = v.n_bottom();   // result bottom
  const size_t n = v.n_top();       // interface
  const size_t m = u.n_top();       // result top

  // partner tables in each diagram's own point numbering
  auto link_table = [](const Diagram& d) {
    std::vector<uint16_t> link(d.n_bottom() + d.n_top());
    for (auto [p, q] : d.arcs()) {
      link[p] = q;
      link[q] = p;
    }
    return link;
  };
  const std::vector<uint16_t> vlink = link_table(v), ulink = link_table(u);

  // union-node encoding: VB i -> i; MID j -> kb + j; UT k -> kb + n + k
  const size_t VB0 = 0, MID0 = kb, UT0 = kb + n;
  auto is_vb = [&](size_t node) { return node < MID0; };
  auto is_mid = [&](size_t node) { return node >= MID0 && node < UT0; };

  std::vector<uint8_t> mid_visited(n, 0);
  std::vector<std::pair<uint16_t, uint16_t>> result_arcs;
  CupTypeCounts consumed, created;
  size_t consumed_caps = 0;

  auto interface_letter = [&](size_t j) { return v.top().letter(j); };

  // classify a cup of v by its endpoints in v numbering (both >= kb)
  auto consume_vcup = [&](uint16_t p, uint16_t q) {
    if (!oriented) {
      ++consumed.s_minus;
      return;
    }
    uint16_t lo = std::min(p, q);
    Letter left = v.point_letter(lo);
    if (left == Letter::Y)
      ++consumed.s_plus;
    else
      ++consumed.s_minus;
  };

  // walk one step from a union node along the given diagram side.
  // side V uses v's arcs, side U uses u's arcs. Returns the next node.
  enum class Side { V, U };
  auto step = [&](size_t node, Side side) -> size_t {
    if (side == Side::V) {
      uint16_t p = is_vb(node) ? static_cast<uint16_t>(node)
                               : static_cast<uint16_t>(kb + (node - MID0));
      uint16_t q = vlink[p];
      bool p_mid = p >= kb, q_mid = q >= kb;
      if (p_mid && q_mid) consume_vcup(p, q);
      return q_mid ? MID0 + (q - kb) : q;
    }
    uint16_t p = is_mid(node) ? static_cast<uint16_t>(node - MID0)
                              : static_cast<uint16_t>(n + (node - UT0));
    uint16_t q = ulink[p];
    bool p_mid = p < n, q_mid = q < n;
    if (p_mid && q_mid) ++consumed_caps;
    return q_mid ? MID0 + q : UT0 + (q - n);
  };

  // open paths from every external point
  std::vector<uint8_t> external_done(kb + n + m, 0);
  auto run_path = [&](size_t start, Side first_side) {
    size_t node = start;
    Side side = first_side;
    size_t interface_visits = 0;
    while (true) {
      size_t next = step(node, side);
      if (is_mid(next)) {
        mid_visited[next - MID0] = 1;
        ++interface_visits;
        side = side == Side::V ? Side::U : Side::V;
        node = next;
        continue;
      }
      // external end
      external_done[next] = 1;
      auto to_result = [&](size_t nd) -> uint16_t {
        return is_vb(nd) ? static_cast<uint16_t>(nd)
                         : static_cast<uint16_t>(kb + (nd - UT0));
      };
      uint16_t a = to_result(start), b = to_result(next);
      result_arcs.push_back({std::min(a, b), std::max(a, b)});
      // a new top cup appears when both ends are top and the path dipped
      // through the interface
      if (!is_vb(start) && !is_vb(next) && interface_visits > 0) {
        if (!oriented) {
          ++created.s_minus;
        } else {
          uint16_t lo = std::min(a, b);
          Letter left = u.top().letter(lo - kb);
          if (left == Letter::Y)
            ++created.s_plus;
          else
            ++created.s_minus;
        }
      }
      return;
    }
  };

  for (size_t i = 0; i < kb; ++i)
    if (!external_done[VB0 + i]) {
      external_done[VB0 + i] = 1;
      run_path(VB0 + i, Side::V);
    }
  for (size_t k = 0; k < m; ++k)
    if (!external_done[UT0 + k]) {
      external_done[UT0 + k] = 1;
      run_path(UT0 + k, Side::U);
    }

  // closed interface loops
  size_t ccw_loops = 0, cw_loops = 0;
  for (size_t j0 = 0; j0 < n; ++j0) {
    if (mid_visited[j0]) continue;
    size_t leftmost = j0;
    size_t node = MID0 + j0;
    Side side = Side::V;
    while (true) {
      mid_visited[node - MID0] = 1;
      leftmost = std::min(leftmost, node - MID0);
      size_t next = step(node, side);
      side = side == Side::V ? Side::U : Side::V;
      if (next == MID0 + j0 && side == Side::V) break;  // closed up
      node = next;
    }
    if (!oriented || interface_letter(leftmost) == Letter::X)
      ++ccw_loops;
    else
      ++cw_loops;
  }

  Diagram w(flavor, v.bottom(), u.top(), std::move(result_arcs));

  // straightening exponents; nonnegative by the counting contract
  long em, ep;
  if (brauer || !oriented) {
    em = static_cast<long>(consumed.total()) -
         static_cast<long>(created.total()) -
         static_cast<long>(ccw_loops + cw_loops);
    ep = 0;
  } else {
    em = static_cast<long>(consumed.s_minus) -
         static_cast<long>(created.s_minus) - static_cast<long>(ccw_loops);
    ep = static_cast<long>(consumed.s_plus) -
         static_cast<long>(created.s_plus) - static_cast<long>(cw_loops);
  }
  if (em < 0 || ep < 0)
    throw std::logic_error("composition kernel: negative straightening count");

  Scalar scalar = Scalar::one(ring);
  for (size_t i = 0; i < ccw_loops; ++i) scalar = scalar * params.circle_ccw;
  for (size_t i = 0; i < cw_loops; ++i) scalar = scalar * params.circle_cw;
  for (long i = 0; i < em; ++i) scalar = scalar * params.zig_z;
  for (long i = 0; i < ep; ++i) scalar = scalar * params.zig_zs;

  ComposeStats stats;
  stats.loops = ccw_loops + cw_loops;
  stats.ccw_loops = ccw_loops;
  stats.cw_loops = cw_loops;
  size_t karcs = u.cup_cap_count() + v.cup_cap_count() - w.cup_cap_count();
  stats.sigma = karcs / 2;

  DiagramVector out = DiagramVector::zero_like(w, ring);
  if (!scalar.is_zero()) out.add_term(w, scalar);
  return {std::move(out), stats};
}

DiagramVector compose(const Diagram& u, const Diagram& v,
                      const EvalParams& p) {
  return compose_with_stats(u, v, p).first;
}

DiagramVector compose(const DiagramVector& u, const DiagramVector& v,
                      const EvalParams& p) {
  if (!same_ring(u.ring(), p.ring()) || !same_ring(v.ring(), p.ring()))
    throw RingMismatch("compose: coefficient ring differs from params");
  DiagramVector acc(Shape{u.shape().flavor, v.shape().bottom, u.shape().top},
                    p.ring());
  for (const auto& [du, cu] : u.terms())
    for (const auto& [dv, cv] : v.terms()) {
      DiagramVector t = compose(du, dv, p);
      for (const auto& [dw, cw] : t.terms()) acc.add_term(dw, cw * cu * cv);
    }
  return acc;
}

DiagramVector tensor(const DiagramVector& a, const DiagramVector& b) {
  Shape s{a.shape().flavor, a.shape().bottom.concat(b.shape().bottom),
          a.shape().top.concat(b.shape().top)};
  DiagramVector acc(s, a.ring());
  for (const auto& [da, ca] : a.terms())
    for (const auto& [db, cb] : b.terms())
      acc.add_term(da.tensor(db), ca * cb);
  return acc;
}

DiagramVector flip(const DiagramVector& a) {
  Shape s{a.shape().flavor, a.shape().top, a.shape().bottom};
  DiagramVector acc(s, a.ring());
  for (const auto& [d, c] : a.terms()) acc.add_term(d.flip(), c);
  return acc;
}

// ---------------------------------------------------------------------------
// enumeration

namespace {

// all matchings of the index set [0, pts) given a compatibility predicate;
// when planar, indices are circle positions and arcs must not cross
void match_rec(std::vector<int>& partner, size_t pts, bool planar,
               const std::function<bool(size_t, size_t)>& compatible,
               const std::function<void()>& emit) {
  size_t first = pts;
  for (size_t i = 0; i < pts; ++i)
    if (partner[i] < 0) {
      first = i;
      break;
    }
  if (first == pts) {
    emit();
    return;
  }
  for (size_t j = first + 1; j < pts; ++j) {
    if (partner[j] >= 0 || !compatible(first, j)) continue;
    if (planar) {
      // the open points strictly between first and j must pair among
      // themselves
      size_t inside = 0;
      for (size_t k = first + 1; k < j; ++k) inside += partner[k] < 0;
      if (inside % 2 != 0) continue;
      bool crosses = false;
      for (size_t k = first + 1; k < j && !crosses; ++k)
        if (partner[k] >= 0 &&
            (static_cast<size_t>(partner[k]) < first ||
             static_cast<size_t>(partner[k]) > j))
          crosses = true;
      if (crosses) continue;
    }
    partner[first] = static_cast<int>(j);
    partner[j] = static_cast<int>(first);
    match_rec(partner, pts, planar, compatible, emit);
    partner[first] = partner[j] = -1;
  }
}

std::vector<Diagram> enumerate_generic(Flavor f, const Word& bottom,
                                       const Word& top, bool planar) {
  const size_t n = bottom.size(), m = top.size(), pts = n + m;
  std::vector<Diagram> out;
  if (pts % 2 != 0) return out;
  const bool oriented = f != Flavor::PlainTL;
  // circle order: bottom left-to-right then top right-to-left
  auto to_point = [&](size_t c) -> uint16_t {
    return c < n ? static_cast<uint16_t>(c)
                 : static_cast<uint16_t>(n + (m - 1 - (c - n)));
  };
  auto letter_at = [&](size_t c) {
    uint16_t p = to_point(c);
    return p < n ? bottom.letter(p) : top.letter(p - n);
  };
  auto compatible = [&](size_t a, size_t b) {
    if (!oriented) return true;
    bool ab = to_point(a) < n, bb = to_point(b) < n;
    if (ab == bb) return letter_at(a) != letter_at(b);
    return letter_at(a) == letter_at(b);
  };
  std::vector<int> partner(pts, -1);
  match_rec(partner, pts, planar, compatible, [&] {
    std::vector<std::pair<uint16_t, uint16_t>> arcs;
    for (size_t c = 0; c < pts; ++c) {
      size_t d = static_cast<size_t>(partner[c]);
      if (d < c) continue;
      uint16_t p = to_point(c), q = to_point(d);
      arcs.push_back({std::min(p, q), std::max(p, q)});
    }
    out.push_back(Diagram(f, bottom, top, std::move(arcs)));
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Diagram> enumerate_tl_basis(size_t n, size_t m) {
  return enumerate_generic(Flavor::PlainTL, Word::plain(n), Word::plain(m),
                           true);
}

std::vector<Diagram> enumerate_oriented_tl_basis(const Word& bottom,
                                                 const Word& top) {
  return enumerate_generic(Flavor::OrientedTL, bottom, top, true);
}

std::vector<std::pair<Diagram, size_t>> enumerate_matchings(const Word& w) {
  if (w.count(Letter::X) != w.count(Letter::Y))
    throw std::invalid_argument("unbalanced word");
  auto ds = enumerate_generic(Flavor::OrientedTL, w, Word::oriented(""), true);
  std::vector<std::pair<Diagram, size_t>> out;
  for (auto& d : ds) {
    size_t dval = d.count_type(ArcType::RPlus);
    out.push_back({std::move(d), dval});
  }
  return out;
}

std::vector<Diagram> enumerate_brauer_basis(const Word& bottom,
                                            const Word& top) {
  size_t x = bottom.count(Letter::X) + top.count(Letter::Y);
  size_t y = bottom.count(Letter::Y) + top.count(Letter::X);
  if (x != y) throw std::invalid_argument("unbalanced word");
  return enumerate_generic(Flavor::Brauer, bottom, top, false);
}

std::vector<Diagram> enumerate_basis(Flavor f, const Word& bottom,
                                     const Word& top) {
  switch (f) {
    case Flavor::PlainTL:
      return enumerate_tl_basis(bottom.size(), top.size());
    case Flavor::OrientedTL:
      return enumerate_oriented_tl_basis(bottom, top);
    case Flavor::Brauer:
      return enumerate_brauer_basis(bottom, top);
  }
  return {};
}

mpz_class catalan(size_t n) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), 2 * n, n);
  return b / (n + 1);
}

mpz_class factorial(size_t n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

// ---------------------------------------------------------------------------
// canonical JSON

std::string diagram_to_json(const Diagram& d) {
  std::ostringstream os;
  const char* fl = d.flavor() == Flavor::PlainTL
                       ? "tl"
                       : d.flavor() == Flavor::OrientedTL ? "otl" : "brauer";
  auto word = [&](const Word& w) {
    if (!w.oriented_p()) return w.to_string();
    return "\"" + w.to_string() + "\"";
  };
  os << "{\"flavor\":\"" << fl << "\",\"bottom\":" << word(d.bottom())
     << ",\"top\":" << word(d.top()) << ",\"arcs\":[";
  const size_t n = d.n_bottom();
  for (size_t i = 0; i < d.arcs().size(); ++i) {
    if (i) os << ",";
    auto [p, q] = d.arcs()[i];
    auto pt = [&](uint16_t x) {
      return x < n ? "\"B" + std::to_string(x + 1) + "\""
                   : "\"T" + std::to_string(x - n + 1) + "\"";
    };
    os << "[" << pt(p) << "," << pt(q) << "]";
  }
  os << "]}";
  return os.str();
}

Diagram diagram_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::string fl = j.at("flavor").get<std::string>();
  Flavor f = fl == "tl" ? Flavor::PlainTL
                        : fl == "otl" ? Flavor::OrientedTL : Flavor::Brauer;
  auto word = [&](const nlohmann::json& w) {
    if (w.is_number()) return Word::plain(w.get<size_t>());
    return Word::oriented(w.get<std::string>());
  };
  Word bottom = word(j.at("bottom")), top = word(j.at("top"));
  const size_t n = bottom.size();
  std::vector<std::pair<uint16_t, uint16_t>> arcs;
  for (const auto& a : j.at("arcs")) {
    auto pt = [&](const std::string& s) -> uint16_t {
      uint16_t idx = static_cast<uint16_t>(std::stoul(s.substr(1)) - 1);
      return s[0] == 'B' ? idx : static_cast<uint16_t>(n + idx);
    };
    arcs.push_back({pt(a.at(0).get<std::string>()),
                    pt(a.at(1).get<std::string>())});
  }
  return Diagram(f, std::move(bottom), std::move(top), std::move(arcs));
}

}  // namespace planar
