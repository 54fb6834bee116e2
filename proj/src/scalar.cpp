#include "planar/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <mutex>
#include <sstream>

namespace planar {

// ---------------------------------------------------------------------------
// rings

bool RingDesc::operator==(const RingDesc& o) const {
  return kind == o.kind && vars == o.vars && prime == o.prime &&
         minpoly == o.minpoly;
}

int RingDesc::var_index(const std::string& v) const {
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == v) return static_cast<int>(i);
  return -1;
}

static std::string rat_str(const mpq_class& q) {
  return q.get_str();
}

static std::string minpoly_str(const std::vector<mpq_class>& m) {
  std::ostringstream os;
  bool first = true;
  for (size_t k = m.size(); k-- > 0;) {
    if (m[k] == 0) continue;
    mpq_class c = m[k];
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? "-" : "+");
    }
    first = false;
    mpq_class a = abs(c);
    if (a != 1 || k == 0) os << rat_str(a) << (k > 0 ? "*" : "");
    if (k > 0) {
      os << "x";
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  return os.str();
}

std::string RingDesc::name() const {
  switch (kind) {
    case RingKind::Rational:
      return "rational";
    case RingKind::Laurent: {
      std::string s = "laurent:";
      for (size_t i = 0; i < vars.size(); ++i) {
        if (i) s += ",";
        s += vars[i];
      }
      return s;
    }
    case RingKind::FpPoly: {
      std::string s = "fp:" + std::to_string(prime) + "[";
      for (size_t i = 0; i < vars.size(); ++i) {
        if (i) s += ",";
        s += vars[i];
      }
      return s + "]";
    }
    case RingKind::Algebraic:
      return "algebraic:" + minpoly_str(minpoly);
  }
  return "?";
}

Ring intern_ring(RingDesc d) {
  static std::vector<std::unique_ptr<RingDesc>> registry;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  for (const auto& r : registry)
    if (*r == d) return r.get();
  registry.push_back(std::make_unique<RingDesc>(std::move(d)));
  return registry.back().get();
}

Ring ring_rational() {
  static Ring r = [] {
    RingDesc d;
    d.kind = RingKind::Rational;
    return intern_ring(std::move(d));
  }();
  return r;
}

Ring ring_laurent(std::vector<std::string> vars) {
  RingDesc d;
  d.kind = RingKind::Laurent;
  d.vars = std::move(vars);
  if (d.vars.empty()) throw std::invalid_argument("laurent ring needs vars");
  return intern_ring(std::move(d));
}

Ring ring_fp(unsigned prime, std::vector<std::string> vars) {
  if (prime < 2) throw std::invalid_argument("fp ring needs a prime");
  RingDesc d;
  d.kind = RingKind::FpPoly;
  d.prime = prime;
  d.vars = std::move(vars);
  return intern_ring(std::move(d));
}

Ring ring_algebraic(std::vector<mpq_class> minpoly) {
  while (!minpoly.empty() && minpoly.back() == 0) minpoly.pop_back();
  if (minpoly.size() < 2)
    throw std::invalid_argument("algebraic ring needs deg >= 1 minpoly");
  mpq_class lead = minpoly.back();
  for (auto& c : minpoly) c /= lead;  // monic
  RingDesc d;
  d.kind = RingKind::Algebraic;
  d.minpoly = std::move(minpoly);
  return intern_ring(std::move(d));
}

bool same_ring(const Ring& a, const Ring& b) {
  return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------------------
// monomials and polynomials

static int32_t add_exp(int32_t a, int32_t b) {
  int64_t s = static_cast<int64_t>(a) + b;
  if (s > INT32_MAX || s < INT32_MIN)
    throw std::overflow_error("laurent exponent overflow");
  return static_cast<int32_t>(s);
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  for (size_t i = 0; i < e.size(); ++i) r.e[i] = add_exp(r.e[i], o.e[i]);
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r = *this;
  for (size_t i = 0; i < e.size(); ++i) r.e[i] = add_exp(r.e[i], -o.e[i]);
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Poly Poly::constant(size_t nvars, const mpz_class& c) {
  Poly p;
  if (c != 0) p.terms.push_back({Monomial{std::vector<int32_t>(nvars, 0)}, c});
  return p;
}

Poly Poly::variable(size_t nvars, size_t idx, int32_t exp) {
  Monomial m{std::vector<int32_t>(nvars, 0)};
  m.e[idx] = exp;
  Poly p;
  p.terms.push_back({m, 1});
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.terms.reserve(terms.size() + o.terms.size());
  size_t i = 0, j = 0;
  while (i < terms.size() || j < o.terms.size()) {
    if (j == o.terms.size() ||
        (i < terms.size() && terms[i].first < o.terms[j].first)) {
      r.terms.push_back(terms[i++]);
    } else if (i == terms.size() || o.terms[j].first < terms[i].first) {
      r.terms.push_back(o.terms[j++]);
    } else {
      mpz_class c = terms[i].second + o.terms[j].second;
      if (c != 0) r.terms.push_back({terms[i].first, c});
      ++i, ++j;
    }
  }
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms) t.second = -t.second;
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::map<Monomial, mpz_class> acc;
  for (const auto& [ma, ca] : terms)
    for (const auto& [mb, cb] : o.terms) acc[ma * mb] += ca * cb;
  Poly r;
  r.terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) r.terms.push_back({m, c});
  return r;
}

mpz_class Poly::content() const {
  mpz_class g = 0;
  for (const auto& t : terms) {
    mpz_class a = abs(t.second);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly Poly::divexact_const(const mpz_class& c) const {
  if (c == 0) throw std::domain_error("division by zero");
  Poly r = *this;
  for (auto& t : r.terms) {
    mpz_class q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), t.second.get_mpz_t(),
                c.get_mpz_t());
    if (rem != 0) throw std::domain_error("inexact constant division");
    t.second = q;
  }
  return r;
}

// Classical multivariate division keeping only the quotient; the remainder
// must vanish. Lex order on the exponent vectors is the monomial order.
Poly Poly::divexact(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero");
  Poly rem = *this, quot;
  const auto& dl = d.terms.back();  // lex-leading term of divisor
  while (!rem.is_zero()) {
    const auto& rl = rem.terms.back();
    if (!dl.first.divides(rl.first))
      throw std::domain_error("inexact polynomial division");
    mpz_class q, r2;
    mpz_tdiv_qr(q.get_mpz_t(), r2.get_mpz_t(), rl.second.get_mpz_t(),
                dl.second.get_mpz_t());
    if (r2 != 0) throw std::domain_error("inexact polynomial division");
    Poly t;
    t.terms.push_back({rl.first / dl.first, q});
    quot = quot + t;
    rem = rem - t * d;
  }
  return quot;
}

std::vector<int32_t> Poly::min_exponents() const {
  if (terms.empty()) return {};
  std::vector<int32_t> m = terms[0].first.e;
  for (const auto& t : terms)
    for (size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], t.first.e[i]);
  return m;
}

std::vector<int32_t> Poly::max_exponents() const {
  if (terms.empty()) return {};
  std::vector<int32_t> m = terms[0].first.e;
  for (const auto& t : terms)
    for (size_t i = 0; i < m.size(); ++i) m[i] = std::max(m[i], t.first.e[i]);
  return m;
}

Poly Poly::shift(const std::vector<int32_t>& by) const {
  Poly r = *this;
  for (auto& t : r.terms)
    for (size_t i = 0; i < by.size(); ++i)
      t.first.e[i] = add_exp(t.first.e[i], by[i]);
  return r;
}

int32_t Poly::degree_in(size_t var) const {
  int32_t d = 0;
  for (const auto& t : terms) d = std::max(d, t.first.e[var]);
  return d;
}

const mpz_class* Poly::leading_coeff() const {
  return terms.empty() ? nullptr : &terms.back().second;
}

// --- gcd: primitive PRS, recursing on the number of variables -------------

namespace {

// p viewed as univariate in var m: dense coefficient list, coefficients are
// polynomials with exponent m zeroed out.
std::vector<Poly> to_univar(const Poly& p, size_t m) {
  std::vector<Poly> c(static_cast<size_t>(p.degree_in(m)) + 1);
  for (const auto& t : p.terms) {
    Monomial mm = t.first;
    int32_t d = mm.e[m];
    mm.e[m] = 0;
    Poly& dst = c[static_cast<size_t>(d)];
    Poly one;
    one.terms.push_back({mm, t.second});
    dst = dst + one;
  }
  return c;
}

Poly from_univar(const std::vector<Poly>& u, size_t m) {
  Poly r;
  for (size_t d = 0; d < u.size(); ++d) {
    std::vector<int32_t> sh(u[d].is_zero() ? 0 : u[d].terms[0].first.e.size(),
                            0);
    if (u[d].is_zero()) continue;
    sh.assign(u[d].terms[0].first.e.size(), 0);
    sh[m] = static_cast<int32_t>(d);
    r = r + u[d].shift(sh);
  }
  return r;
}

int deg_of(const std::vector<Poly>& u) {
  for (size_t d = u.size(); d-- > 0;)
    if (!u[d].is_zero()) return static_cast<int>(d);
  return -1;
}

// lc(G)^(degF-degG+1) * F  reduced mod G by long division.
std::vector<Poly> pseudo_rem(std::vector<Poly> F, const std::vector<Poly>& G) {
  int dF = deg_of(F), dG = deg_of(G);
  const Poly& lcG = G[static_cast<size_t>(dG)];
  while ((dF = deg_of(F)) >= dG && dF >= 0) {
    Poly lcF = F[static_cast<size_t>(dF)];
    for (auto& c : F) c = c * lcG;
    for (int i = 0; i <= dG; ++i) {
      size_t k = static_cast<size_t>(dF - dG + i);
      F[k] = F[k] - lcF * G[static_cast<size_t>(i)];
    }
  }
  return F;
}

Poly poly_content_rec(const std::vector<Poly>& u) {
  Poly g;
  for (const auto& c : u) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : poly_gcd(g, c);
  }
  return g;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero() || b.is_zero()) {
    Poly r = a.is_zero() ? b : a;
    if (r.leading_coeff() && *r.leading_coeff() < 0) r = -r;
    return r;
  }
  size_t nv = a.nvars();
  int mainvar = -1;
  for (size_t v = nv; v-- > 0;) {
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) {
      mainvar = static_cast<int>(v);
      break;
    }
  }
  if (mainvar < 0) {  // both constant
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.terms[0].second.get_mpz_t(),
            b.terms[0].second.get_mpz_t());
    return Poly::constant(nv, g);
  }
  size_t m = static_cast<size_t>(mainvar);
  auto F = to_univar(a, m), G = to_univar(b, m);
  Poly contF = poly_content_rec(F), contG = poly_content_rec(G);
  for (auto& c : F)
    if (!c.is_zero()) c = c.divexact(contF);
  for (auto& c : G)
    if (!c.is_zero()) c = c.divexact(contG);
  Poly cont = poly_gcd(contF, contG);
  if (deg_of(F) < deg_of(G)) std::swap(F, G);
  while (true) {
    auto R = pseudo_rem(F, G);
    if (deg_of(R) < 0) break;
    Poly cr = poly_content_rec(R);
    for (auto& c : R)
      if (!c.is_zero()) c = c.divexact(cr);
    F = std::move(G);
    G = std::move(R);
  }
  Poly g = from_univar(G, m);
  Poly cg = poly_content_rec(G);
  g = g.divexact(cg);
  g = g * cont;
  if (g.leading_coeff() && *g.leading_coeff() < 0) g = -g;
  return g;
}

// ---------------------------------------------------------------------------
// Laurent fraction canonicalization

Scalar make_laurent(const Ring& r, Poly num, Poly den) {
  if (den.is_zero()) throw std::domain_error("division by zero");
  size_t nv = r->vars.size();
  Scalar s;
  s.ring_ = r;
  if (num.is_zero()) {
    s.v_ = LaurentPayload{Poly::zero(), Poly::constant(nv, 1)};
    return s;
  }
  // absorb the denominator's monomial part, making it a true polynomial
  auto dmin = den.min_exponents();
  std::vector<int32_t> neg(dmin.size());
  for (size_t i = 0; i < dmin.size(); ++i) neg[i] = -dmin[i];
  den = den.shift(neg);
  num = num.shift(neg);
  // split the numerator's monomial part
  auto nmin = num.min_exponents();
  std::vector<int32_t> nneg(nmin.size());
  for (size_t i = 0; i < nmin.size(); ++i) nneg[i] = -nmin[i];
  Poly num0 = num.shift(nneg);
  Poly g = poly_gcd(num0, den);
  bool nontrivial = !(g.terms.size() == 1 && g.terms[0].second == 1 &&
                      g.terms[0].first.e == std::vector<int32_t>(nv, 0));
  if (nontrivial) {
    num0 = num0.divexact(g);
    den = den.divexact(g);
  }
  if (den.leading_coeff() && *den.leading_coeff() < 0) {
    den = -den;
    num0 = -num0;
  }
  s.v_ = LaurentPayload{num0.shift(nmin), std::move(den)};
  return s;
}

// ---------------------------------------------------------------------------
// fp helpers

namespace {

Poly fp_reduce(Poly p, unsigned prime) {
  Poly r;
  for (auto& t : p.terms) {
    mpz_class c;
    mpz_mod(c.get_mpz_t(), t.second.get_mpz_t(),
            mpz_class(prime).get_mpz_t());
    if (c != 0) r.terms.push_back({t.first, c});
  }
  return r;
}

mpz_class fp_inv_const(const mpz_class& a, unsigned prime) {
  mpz_class inv, p(prime);
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
    throw std::domain_error("non-invertible element mod p");
  return inv;
}

// Division with remainder over F_p (field coefficients, lex order); the
// remainder must vanish.
Poly fp_divexact(const Poly& a, const Poly& d, unsigned prime) {
  if (d.is_zero()) throw std::domain_error("division by zero");
  Poly rem = a, quot;
  const auto& dl = d.terms.back();
  mpz_class dlinv = fp_inv_const(dl.second, prime);
  while (!rem.is_zero()) {
    const auto& rl = rem.terms.back();
    if (!dl.first.divides(rl.first))
      throw std::domain_error("inexact division in fp ring");
    Poly t;
    mpz_class c;
    mpz_class prod = rl.second * dlinv;
    mpz_mod(c.get_mpz_t(), prod.get_mpz_t(), mpz_class(prime).get_mpz_t());
    t.terms.push_back({rl.first / dl.first, c});
    quot = quot + t;
    rem = fp_reduce(rem - t * d, prime);
  }
  return quot;
}

}  // namespace

// ---------------------------------------------------------------------------
// algebraic helpers (dense rational polys modulo the minimal polynomial)

namespace {

std::vector<mpq_class> alg_reduce(std::vector<mpq_class> c,
                                  const std::vector<mpq_class>& m) {
  size_t deg = m.size() - 1;
  while (c.size() > deg) {
    mpq_class lead = c.back();
    size_t k = c.size() - 1;
    c.pop_back();
    if (lead == 0) continue;
    // x^k = -sum m[i] x^(k-deg+i)   (m monic)
    for (size_t i = 0; i < deg; ++i) c[k - deg + i] -= lead * m[i];
  }
  c.resize(deg, mpq_class(0));
  return c;
}

std::vector<mpq_class> alg_mul(const std::vector<mpq_class>& a,
                               const std::vector<mpq_class>& b,
                               const std::vector<mpq_class>& m) {
  std::vector<mpq_class> c(a.size() + b.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return alg_reduce(std::move(c), m);
}

int poly_deg(const std::vector<mpq_class>& p) {
  for (size_t i = p.size(); i-- > 0;)
    if (p[i] != 0) return static_cast<int>(i);
  return -1;
}

// extended euclid in Q[x]: returns (g, u) with u*a = g mod m, g constant if
// a invertible mod m
std::pair<std::vector<mpq_class>, std::vector<mpq_class>> alg_egcd(
    std::vector<mpq_class> a, std::vector<mpq_class> b) {
  std::vector<mpq_class> u0{1}, u1{0};
  while (poly_deg(b) >= 0) {
    int da = poly_deg(a), db = poly_deg(b);
    if (da < db) {
      std::swap(a, b);
      std::swap(u0, u1);
      continue;
    }
    mpq_class f = a[static_cast<size_t>(da)] / b[static_cast<size_t>(db)];
    size_t shift = static_cast<size_t>(da - db);
    for (size_t i = 0; i <= static_cast<size_t>(db); ++i)
      a[i + shift] -= f * b[i];
    if (u1.size() + shift > u0.size()) u0.resize(u1.size() + shift, 0);
    for (size_t i = 0; i < u1.size(); ++i) u0[i + shift] -= f * u1[i];
    std::swap(a, b);
    std::swap(u0, u1);
  }
  return {a, u0};
}

}  // namespace

// ---------------------------------------------------------------------------
// Scalar

void Scalar::check_same_ring(const Scalar& o) const {
  if (!same_ring(ring_, o.ring_))
    throw RingMismatch("ring mismatch: " + ring_->name() + " vs " +
                       o.ring_->name());
}

Scalar Scalar::zero(const Ring& r) { return integer(r, 0); }
Scalar Scalar::one(const Ring& r) { return integer(r, 1); }

Scalar Scalar::integer(const Ring& r, long v) {
  return integer(r, mpz_class(v));
}

Scalar Scalar::integer(const Ring& r, const mpz_class& v) {
  Scalar s;
  s.ring_ = r;
  switch (r->kind) {
    case RingKind::Rational:
      s.v_ = mpq_class(v);
      break;
    case RingKind::Laurent:
      s.v_ = LaurentPayload{Poly::constant(r->vars.size(), v),
                            Poly::constant(r->vars.size(), 1)};
      break;
    case RingKind::FpPoly:
      s.v_ = FpPayload{fp_reduce(Poly::constant(r->vars.size(), v), r->prime)};
      break;
    case RingKind::Algebraic: {
      std::vector<mpq_class> c(r->minpoly.size() - 1, mpq_class(0));
      c[0] = mpq_class(v);
      s.v_ = AlgPayload{std::move(c)};
      break;
    }
  }
  return s;
}

Scalar Scalar::rational(const Ring& r, const mpq_class& v0) {
  mpq_class v = v0;
  v.canonicalize();
  switch (r->kind) {
    case RingKind::Rational: {
      Scalar s;
      s.ring_ = r;
      s.v_ = v;
      return s;
    }
    case RingKind::Algebraic: {
      Scalar s;
      s.ring_ = r;
      std::vector<mpq_class> c(r->minpoly.size() - 1, mpq_class(0));
      c[0] = v;
      s.v_ = AlgPayload{std::move(c)};
      return s;
    }
    case RingKind::Laurent:
      return integer(r, v.get_num()) / integer(r, v.get_den());
    case RingKind::FpPoly:
      return integer(r, v.get_num()) / integer(r, v.get_den());
  }
  throw std::logic_error("unreachable");
}

Scalar Scalar::variable(const Ring& r, const std::string& var) {
  int idx = r->var_index(var);
  if (idx < 0) throw std::invalid_argument("ring has no variable " + var);
  Scalar s;
  s.ring_ = r;
  if (r->kind == RingKind::Laurent)
    s.v_ = LaurentPayload{Poly::variable(r->vars.size(), idx),
                          Poly::constant(r->vars.size(), 1)};
  else if (r->kind == RingKind::FpPoly)
    s.v_ = FpPayload{Poly::variable(r->vars.size(), idx)};
  else
    throw std::invalid_argument("variables require laurent or fp ring");
  return s;
}

Scalar Scalar::generator(const Ring& r) {
  if (r->kind != RingKind::Algebraic)
    throw std::invalid_argument("generator requires algebraic ring");
  Scalar s;
  s.ring_ = r;
  std::vector<mpq_class> c(r->minpoly.size() - 1, mpq_class(0));
  if (c.size() >= 2)
    c[1] = 1;
  else
    c = alg_reduce({0, 1}, r->minpoly);
  s.v_ = AlgPayload{std::move(c)};
  return s;
}

bool Scalar::is_zero() const {
  switch (ring_->kind) {
    case RingKind::Rational:
      return rat() == 0;
    case RingKind::Laurent:
      return laurent().num.is_zero();
    case RingKind::FpPoly:
      return fp().p.is_zero();
    case RingKind::Algebraic:
      for (const auto& c : alg().c)
        if (c != 0) return false;
      return true;
  }
  return false;
}

bool Scalar::is_one() const { return *this == one(ring_); }

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_ring(o);
  Scalar s;
  s.ring_ = ring_;
  switch (ring_->kind) {
    case RingKind::Rational:
      s.v_ = mpq_class(rat() + o.rat());
      break;
    case RingKind::Laurent: {
      const auto &a = laurent(), &b = o.laurent();
      return make_laurent(ring_, a.num * b.den + b.num * a.den, a.den * b.den);
    }
    case RingKind::FpPoly:
      s.v_ = FpPayload{fp_reduce(fp().p + o.fp().p, ring_->prime)};
      break;
    case RingKind::Algebraic: {
      AlgPayload p = alg();
      for (size_t i = 0; i < p.c.size(); ++i) p.c[i] += o.alg().c[i];
      s.v_ = std::move(p);
      break;
    }
  }
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s;
  s.ring_ = ring_;
  switch (ring_->kind) {
    case RingKind::Rational:
      s.v_ = mpq_class(-rat());
      break;
    case RingKind::Laurent:
      s.v_ = LaurentPayload{-laurent().num, laurent().den};
      break;
    case RingKind::FpPoly:
      s.v_ = FpPayload{fp_reduce(-fp().p, ring_->prime)};
      break;
    case RingKind::Algebraic: {
      AlgPayload p = alg();
      for (auto& c : p.c) c = -c;
      s.v_ = std::move(p);
      break;
    }
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_ring(o);
  Scalar s;
  s.ring_ = ring_;
  switch (ring_->kind) {
    case RingKind::Rational:
      s.v_ = mpq_class(rat() * o.rat());
      break;
    case RingKind::Laurent: {
      const auto &a = laurent(), &b = o.laurent();
      return make_laurent(ring_, a.num * b.num, a.den * b.den);
    }
    case RingKind::FpPoly:
      s.v_ = FpPayload{fp_reduce(fp().p * o.fp().p, ring_->prime)};
      break;
    case RingKind::Algebraic:
      s.v_ = AlgPayload{alg_mul(alg().c, o.alg().c, ring_->minpoly)};
      break;
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  switch (ring_->kind) {
    case RingKind::Rational: {
      Scalar s;
      s.ring_ = ring_;
      s.v_ = mpq_class(1 / rat());
      return s;
    }
    case RingKind::Laurent:
      return make_laurent(ring_, laurent().den, laurent().num);
    case RingKind::FpPoly: {
      const Poly& p = fp().p;
      if (p.terms.size() != 1 ||
          p.terms[0].first.e != std::vector<int32_t>(ring_->vars.size(), 0))
        throw std::domain_error("non-invertible element in fp ring");
      Scalar s;
      s.ring_ = ring_;
      s.v_ = FpPayload{Poly::constant(ring_->vars.size(),
                                      fp_inv_const(p.terms[0].second,
                                                   ring_->prime))};
      return s;
    }
    case RingKind::Algebraic: {
      std::vector<mpq_class> m(ring_->minpoly.begin(), ring_->minpoly.end());
      auto [g, u] = alg_egcd(alg().c, m);
      int dg = poly_deg(g);
      if (dg != 0)
        throw std::domain_error("non-invertible algebraic element");
      mpq_class c0 = g[0];
      std::vector<mpq_class> inv = alg_reduce(std::move(u), ring_->minpoly);
      for (auto& c : inv) c /= c0;
      Scalar s;
      s.ring_ = ring_;
      s.v_ = AlgPayload{std::move(inv)};
      return s;
    }
  }
  throw std::logic_error("unreachable");
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same_ring(o);
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (ring_->kind == RingKind::FpPoly) {
    Scalar s;
    s.ring_ = ring_;
    s.v_ = FpPayload{fp_divexact(fp().p, o.fp().p, ring_->prime)};
    return s;
  }
  return *this * o.inverse();
}

Scalar Scalar::pow(long e) const {
  if (e == 0) return one(ring_);
  Scalar base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e)
                          : static_cast<unsigned long>(e);
  Scalar acc = one(ring_);
  while (n) {
    if (n & 1) acc = acc * base;
    base = (n >>= 1) ? base * base : base;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!same_ring(ring_, o.ring_)) return false;
  return v_ == o.v_;
}

namespace {

int poly_cmp(const Poly& a, const Poly& b) {
  size_t n = std::min(a.terms.size(), b.terms.size());
  for (size_t i = 0; i < n; ++i) {
    if (a.terms[i].first < b.terms[i].first) return -1;
    if (b.terms[i].first < a.terms[i].first) return 1;
    int c = cmp(a.terms[i].second, b.terms[i].second);
    if (c) return c;
  }
  if (a.terms.size() != b.terms.size())
    return a.terms.size() < b.terms.size() ? -1 : 1;
  return 0;
}

}  // namespace

bool Scalar::operator<(const Scalar& o) const {
  if (!same_ring(ring_, o.ring_)) return ring_->name() < o.ring_->name();
  switch (ring_->kind) {
    case RingKind::Rational:
      return rat() < o.rat();
    case RingKind::Laurent: {
      int c = poly_cmp(laurent().num, o.laurent().num);
      if (c) return c < 0;
      return poly_cmp(laurent().den, o.laurent().den) < 0;
    }
    case RingKind::FpPoly:
      return poly_cmp(fp().p, o.fp().p) < 0;
    case RingKind::Algebraic:
      return alg().c < o.alg().c;
  }
  return false;
}

Scalar Scalar::evaluate(const std::map<std::string, Scalar>& assignment) const {
  if (ring_->kind != RingKind::Laurent)
    throw std::invalid_argument("evaluate requires a laurent scalar");
  if (assignment.empty()) throw std::invalid_argument("empty assignment");
  Ring target = assignment.begin()->second.ring();
  std::vector<Scalar> vals;
  for (const auto& v : ring_->vars) {
    auto it = assignment.find(v);
    if (it == assignment.end())
      throw std::invalid_argument("unassigned variable " + v);
    if (!same_ring(it->second.ring(), target))
      throw RingMismatch("assignment values must share one ring");
    vals.push_back(it->second);
  }
  auto eval_poly = [&](const Poly& p) {
    Scalar acc = Scalar::zero(target);
    for (const auto& [m, c] : p.terms) {
      Scalar term = Scalar::integer(target, c);
      for (size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (vals[i].is_zero() && m.e[i] < 0)
          throw std::domain_error("zero substituted into negative power");
        term = term * vals[i].pow(m.e[i]);
      }
      acc = acc + term;
    }
    return acc;
  };
  Scalar n = eval_poly(laurent().num);
  Scalar d = eval_poly(laurent().den);
  return n / d;
}

// ---------------------------------------------------------------------------
// printing

std::string poly_to_string(const Poly& p, const std::vector<std::string>& vars) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = p.terms.size(); i-- > 0;) {  // lex-descending
    const auto& [m, c] = p.terms[i];
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? "-" : "+");
    }
    bool allzero = true;
    for (int32_t e : m.e) allzero = allzero && e == 0;
    if (a != 1 || allzero) {
      os << a.get_str();
      if (!allzero) os << "*";
    }
    bool firstvar = true;
    for (size_t v = 0; v < m.e.size(); ++v) {
      if (m.e[v] == 0) continue;
      if (!firstvar) os << "*";
      firstvar = false;
      os << vars[v];
      if (m.e[v] != 1) os << "^" << m.e[v];
    }
  }
  return os.str();
}

namespace {

std::string alg_poly_str(const std::vector<mpq_class>& c) {
  std::ostringstream os;
  bool first = true;
  for (size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    if (first) {
      if (c[k] < 0) os << "-";
      first = false;
    } else {
      os << (c[k] < 0 ? "-" : "+");
    }
    mpq_class a = abs(c[k]);
    if (a != 1 || k == 0) {
      os << rat_str(a);
      if (k > 0) os << "*";
    }
    if (k > 0) {
      os << "x";
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

std::string Scalar::to_string() const {
  switch (ring_->kind) {
    case RingKind::Rational:
      return rat_str(rat());
    case RingKind::Laurent: {
      const auto& l = laurent();
      std::string n = poly_to_string(l.num, ring_->vars);
      bool den_one = l.den.terms.size() == 1 && l.den.terms[0].second == 1 &&
                     l.den.terms[0].first.e ==
                         std::vector<int32_t>(ring_->vars.size(), 0);
      if (den_one) return n;
      return "(" + n + ")/(" + poly_to_string(l.den, ring_->vars) + ")";
    }
    case RingKind::FpPoly:
      return poly_to_string(fp().p, ring_->vars);
    case RingKind::Algebraic:
      return alg_poly_str(alg().c);
  }
  return "?";
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct Lexer {
  std::string s;
  size_t i = 0;
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  bool accept(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  mpz_class number() {
    skip();
    size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw std::invalid_argument("expected number in " + s);
    mpz_class v(s.substr(i, j - i));
    i = j;
    return v;
  }
  std::string ident() {
    skip();
    size_t j = i;
    while (j < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
      ++j;
    if (j == i) throw std::invalid_argument("expected identifier in " + s);
    std::string v = s.substr(i, j - i);
    i = j;
    return v;
  }
  long integer_signed() {
    skip();
    bool neg = accept('-');
    if (!neg) accept('+');
    mpz_class v = number();
    if (!v.fits_slong_p()) throw std::overflow_error("exponent too large");
    return neg ? -v.get_si() : v.get_si();
  }
};

class ExprParser {
 public:
  ExprParser(const Ring& r, const std::string& text) : ring_(r) {
    lx_.s = text;
  }
  Scalar run() {
    Scalar v = expr();
    if (!lx_.eof())
      throw std::invalid_argument("trailing input in scalar: " + lx_.s);
    return v;
  }

 private:
  Ring ring_;
  Lexer lx_;

  Scalar expr() {
    Scalar v = lx_.accept('-') ? -term() : term();
    while (true) {
      if (lx_.accept('+'))
        v = v + term();
      else if (lx_.accept('-'))
        v = v - term();
      else
        return v;
    }
  }
  Scalar term() {
    Scalar v = factor();
    while (true) {
      if (lx_.accept('*'))
        v = v * factor();
      else if (lx_.accept('/'))
        v = v / factor();
      else
        return v;
    }
  }
  Scalar factor() {
    Scalar b = base();
    if (lx_.accept('^')) return b.pow(lx_.integer_signed());
    return b;
  }
  Scalar base() {
    if (lx_.accept('(')) {
      Scalar v = expr();
      if (!lx_.accept(')')) throw std::invalid_argument("missing )");
      return v;
    }
    if (lx_.accept('-')) return -base();
    char c = lx_.peek();
    if (std::isdigit(static_cast<unsigned char>(c)))
      return Scalar::integer(ring_, lx_.number());
    std::string id = lx_.ident();
    if (ring_->kind == RingKind::Algebraic && id == "x")
      return Scalar::generator(ring_);
    return Scalar::variable(ring_, id);
  }
};

}  // namespace

Scalar Scalar::parse(const Ring& r, const std::string& expr) {
  return ExprParser(r, expr).run();
}

RingDesc RingDesc::parse(const std::string& text) {
  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (start <= s.size()) {
      size_t p = s.find(sep, start);
      if (p == std::string::npos) {
        if (start < s.size()) out.push_back(s.substr(start));
        break;
      }
      out.push_back(s.substr(start, p - start));
      start = p + 1;
    }
    return out;
  };
  if (text == "rational") {
    RingDesc d;
    d.kind = RingKind::Rational;
    return d;
  }
  if (text.rfind("laurent:", 0) == 0) {
    RingDesc d;
    d.kind = RingKind::Laurent;
    d.vars = split(text.substr(8), ',');
    if (d.vars.empty()) throw std::invalid_argument("laurent ring needs vars");
    return d;
  }
  if (text.rfind("fp:", 0) == 0) {
    size_t br = text.find('[');
    if (br == std::string::npos || text.back() != ']')
      throw std::invalid_argument("fp ring syntax: fp:p[vars]");
    RingDesc d;
    d.kind = RingKind::FpPoly;
    d.prime = static_cast<unsigned>(std::stoul(text.substr(3, br - 3)));
    d.vars = split(text.substr(br + 1, text.size() - br - 2), ',');
    return d;
  }
  if (text.rfind("algebraic:", 0) == 0) {
    // parse the minimal polynomial in x over the rationals
    Ring tmp = ring_laurent({"x"});
    Scalar p = Scalar::parse(tmp, text.substr(10));
    const auto& l = p.laurent();
    if (!(l.den.terms.size() == 1 && l.den.terms[0].second == 1))
      throw std::invalid_argument("minimal polynomial must be integral");
    std::vector<mpq_class> m;
    for (const auto& [mono, c] : l.num.terms) {
      int32_t e = mono.e[0];
      if (e < 0) throw std::invalid_argument("negative power in minpoly");
      if (static_cast<size_t>(e) >= m.size()) m.resize(e + 1, mpq_class(0));
      m[static_cast<size_t>(e)] = mpq_class(c);
    }
    RingDesc d = *ring_algebraic(std::move(m));
    return d;
  }
  throw std::invalid_argument("unknown ring: " + text);
}

Ring parse_ring(const std::string& text) {
  return intern_ring(RingDesc::parse(text));
}

}  // namespace planar
