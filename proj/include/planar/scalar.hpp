// Exact coefficient rings with decidable equality: rationals, multivariate
// Laurent-polynomial fractions, polynomials over a prime field, and algebraic
// numbers presented by a minimal polynomial. Every value is canonical, so
// equality is payload identity. All operations are pure; Scalars are
// immutable values and safe to share across threads.
#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace planar {

struct RingMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class RingKind { Rational, Laurent, FpPoly, Algebraic };

struct RingDesc {
  RingKind kind = RingKind::Rational;
  std::vector<std::string> vars;    // Laurent / FpPoly
  unsigned prime = 0;               // FpPoly
  std::vector<mpq_class> minpoly;   // Algebraic: monic, ascending, size deg+1

  bool operator==(const RingDesc& o) const;
  std::string name() const;
  int var_index(const std::string& v) const;  // -1 if absent
  static RingDesc parse(const std::string& text);
};

// Rings are interned into a permanent registry; handles are plain pointers,
// so Scalar copies stay free of shared-state traffic.
using Ring = const RingDesc*;

Ring intern_ring(RingDesc d);
Ring ring_rational();
Ring ring_laurent(std::vector<std::string> vars);
Ring ring_fp(unsigned prime, std::vector<std::string> vars);
Ring ring_algebraic(std::vector<mpq_class> minpoly);
Ring parse_ring(const std::string& text);
bool same_ring(const Ring& a, const Ring& b);

// Monomial in the ring's variables; Laurent exponents may be negative.
// Exponents are machine integers; overflow throws.
struct Monomial {
  std::vector<int32_t> e;
  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator<(const Monomial& o) const { return e < o.e; }
  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;
  bool divides(const Monomial& o) const;  // this | o (componentwise <=)
};

// Polynomial with mpz coefficients, terms sorted ascending by monomial,
// no zero coefficients. Shared by the Laurent and FpPoly payloads.
class Poly {
 public:
  std::vector<std::pair<Monomial, mpz_class>> terms;

  bool is_zero() const { return terms.empty(); }
  size_t nvars() const { return terms.empty() ? 0 : terms[0].first.e.size(); }
  static Poly zero() { return {}; }
  static Poly constant(size_t nvars, const mpz_class& c);
  static Poly variable(size_t nvars, size_t idx, int32_t exp = 1);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly& o) const { return terms == o.terms; }

  mpz_class content() const;             // gcd of coefficients, >= 0
  Poly divexact_const(const mpz_class& c) const;
  Poly divexact(const Poly& d) const;    // throws if not exact
  std::vector<int32_t> min_exponents() const;
  std::vector<int32_t> max_exponents() const;
  Poly shift(const std::vector<int32_t>& by) const;  // multiply by monomial
  int32_t degree_in(size_t var) const;
  const mpz_class* leading_coeff() const;  // lex-max term, nullptr if zero
};

Poly poly_gcd(const Poly& a, const Poly& b);  // nonneg exponents required

struct LaurentPayload {
  Poly num;  // Laurent exponents allowed
  Poly den;  // true polynomial, primitive, positive leading coeff; 1 if num=0
  bool operator==(const LaurentPayload& o) const {
    return num == o.num && den == o.den;
  }
};

struct FpPayload {  // coefficients reduced into [0, p)
  Poly p;
  bool operator==(const FpPayload& o) const { return p == o.p; }
};

struct AlgPayload {  // representative of degree < deg(minpoly)
  std::vector<mpq_class> c;
  bool operator==(const AlgPayload& o) const { return c == o.c; }
};

class Scalar {
 public:
  Scalar() = default;  // rational 0

  static Scalar zero(const Ring& r);
  static Scalar one(const Ring& r);
  static Scalar integer(const Ring& r, long v);
  static Scalar integer(const Ring& r, const mpz_class& v);
  static Scalar rational(const Ring& r, const mpq_class& v);
  static Scalar variable(const Ring& r, const std::string& var);  // Laurent/Fp
  static Scalar generator(const Ring& r);                         // Algebraic
  static Scalar parse(const Ring& r, const std::string& expr);

  const Ring& ring() const { return ring_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on non-invertible divisor
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;
  Scalar pow(long e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool operator<(const Scalar& o) const;  // arbitrary total order, canonical

  // Substitution homomorphism out of a Laurent ring. Every variable must be
  // assigned; values must share one ring; zero substituted into a negative
  // power throws.
  Scalar evaluate(const std::map<std::string, Scalar>& assignment) const;

  std::string to_string() const;

  const mpq_class& rat() const { return std::get<RatPayloadIdx>(v_); }
  const LaurentPayload& laurent() const { return std::get<LaurentPayload>(v_); }
  const FpPayload& fp() const { return std::get<FpPayload>(v_); }
  const AlgPayload& alg() const { return std::get<AlgPayload>(v_); }

 private:
  static constexpr size_t RatPayloadIdx = 0;
  Ring ring_ = ring_rational();
  std::variant<mpq_class, LaurentPayload, FpPayload, AlgPayload> v_ =
      mpq_class(0);

  void check_same_ring(const Scalar& o) const;
  friend Scalar make_laurent(const Ring& r, Poly num, Poly den);
};

std::string poly_to_string(const Poly& p, const std::vector<std::string>& vars);

}  // namespace planar
