// Planar diagram data types (plain Temperley-Lieb, oriented TL, walled /
// oriented Brauer) and the composition kernel. Evaluation regimes are pairs
// of circle and straightening scalars on the structure constants, never
// basis rescalings: a closed interface loop contributes its chirality's
// circle scalar plus one straightening factor per loop cup beyond the one at
// its leftmost point; an open path contributes one straightening factor per
// interface cup it consumes, with one exemption of matching type when the
// path creates a new cup in the result.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "planar/scalar.hpp"

namespace planar {

enum class Flavor : uint8_t { PlainTL, OrientedTL, Brauer };

// X points up (created left-to-right as X then Y reads "X tensor Y").
enum class Letter : uint8_t { X = 0, Y = 1 };

inline Letter flip_letter(Letter l) {
  return l == Letter::X ? Letter::Y : Letter::X;
}

class Word {
 public:
  static Word plain(size_t n);
  static Word oriented(const std::string& letters);  // e.g. "XYXY"
  static Word oriented(std::vector<Letter> letters);
  static Word power(Letter l, size_t n);  // X^n or Y^n
  static Word xy_block(size_t n, size_t m);  // X^n Y^m

  bool oriented_p() const { return oriented_; }
  size_t size() const { return oriented_ ? letters_.size() : n_; }
  Letter letter(size_t i) const { return letters_.at(i); }
  const std::vector<Letter>& letters() const { return letters_; }
  Word concat(const Word& o) const;
  Word reversed_dual() const;  // reverse order, flip letters
  std::string to_string() const;  // "XYXY" or "4"

  bool operator==(const Word& o) const;
  bool operator<(const Word& o) const;
  // counts of X and Y (oriented only)
  size_t count(Letter l) const;

 private:
  bool oriented_ = false;
  size_t n_ = 0;
  std::vector<Letter> letters_;
};

// Arc kinds after the rectangle embedding. Caps sit on the bottom boundary
// (they evaluate), cups on the top (they create); vertical flip swaps them.
enum class ArcKind : uint8_t { Through, Cap, Cup };
// Oriented arc types: r_plus kills Y(x)X, r_minus kills X(x)Y, s_plus
// creates Y(x)X, s_minus creates X(x)Y.
enum class ArcType : uint8_t { Through, RPlus, RMinus, SPlus, SMinus };

class Diagram {
 public:
  // Points are numbered bottom 0..n-1 then top n..n+m-1; arcs are sorted
  // pairs, the arc list is sorted. Construction validates the matching,
  // orientation compatibility, and (for planar flavors) planarity.
  Diagram(Flavor f, Word bottom, Word top,
          std::vector<std::pair<uint16_t, uint16_t>> arcs);

  static Diagram identity(Flavor f, const Word& w);
  // TL generator e_i (1-based, 1 <= i < n): cap and cup at positions i, i+1
  static Diagram e_generator(size_t n, size_t i);
  // single cap (2 -> 0) / cup (0 -> 2) in plain TL
  static Diagram cap2();
  static Diagram cup2();
  // nested evaluation w (x) dual(w) -> empty, arcs (i, 2n-1-i)
  static Diagram nested_caps(Flavor f, const Word& w);
  static Diagram nested_cups(Flavor f, const Word& w);
  // permutation diagram: bottom i joins top pi(i); oriented flavor requires
  // matching letters
  static Diagram permutation(Flavor f, const Word& bottom,
                             const std::vector<uint32_t>& pi);

  Flavor flavor() const { return flavor_; }
  const Word& bottom() const { return bottom_; }
  const Word& top() const { return top_; }
  const std::vector<std::pair<uint16_t, uint16_t>>& arcs() const {
    return arcs_;
  }

  size_t n_bottom() const { return bottom_.size(); }
  size_t n_top() const { return top_.size(); }
  bool is_bottom_point(uint16_t p) const { return p < bottom_.size(); }
  Letter point_letter(uint16_t p) const;

  ArcKind arc_kind(size_t idx) const;
  ArcType arc_type(size_t idx) const;  // oriented flavors only
  size_t cap_count() const;
  size_t cup_count() const;
  size_t cup_cap_count() const { return cap_count() + cup_count(); }
  size_t count_type(ArcType t) const;

  Diagram tensor(const Diagram& o) const;
  Diagram flip() const;
  bool is_planar() const;

  bool operator==(const Diagram& o) const;
  bool operator<(const Diagram& o) const;
  std::string to_string() const;

 private:
  Flavor flavor_;
  Word bottom_, top_;
  std::vector<std::pair<uint16_t, uint16_t>> arcs_;
};

// Circle and straightening scalars defining a composition kernel. For
// unoriented diagrams only circle_ccw / zig_z are consulted. All four live
// in one ring.
struct EvalParams {
  Scalar circle_ccw, circle_cw, zig_z, zig_zs;

  EvalParams(Scalar ccw, Scalar cw, Scalar z, Scalar zs);
  const Ring& ring() const { return circle_ccw.ring(); }

  // classical TL: circle delta, zig-zag 1
  static EvalParams tl_standard(const Scalar& delta);
  // renormalized: circle 1, zig-zag delta^-1
  static EvalParams tl_renormalized(const Scalar& delta);
  // asymptotic: circle 1, zig-zag 0
  static EvalParams infinity(const Ring& r);
  // oriented two-parameter, classical: circles (d1, d2), zig-zags 1
  static EvalParams oriented_standard(const Scalar& d1, const Scalar& d2);
  // oriented renormalized: circles 1, z = d1^-1, z* = d2^-1
  static EvalParams oriented_renormalized(const Scalar& d1, const Scalar& d2);
  // lopsided (delta, infinity): circles 1, z = delta^-1, z* = 0
  static EvalParams lopsided(const Scalar& delta);
  // (infinity, delta): circles 1, z = 0, z* = delta^-1
  static EvalParams lopsided_other(const Scalar& delta);
  // oriented Brauer OB(t): circle t, zig-zag 1
  static EvalParams brauer_standard(const Scalar& t);
};

struct ComposeStats {
  size_t loops = 0;        // closed interface loops
  size_t sigma = 0;        // straightening events: 2*sigma = k(u)+k(v)-k(w)
  size_t ccw_loops = 0;
  size_t cw_loops = 0;
};

// Shape of a morphism space: common boundary data of a DiagramVector.
struct Shape {
  Flavor flavor;
  Word bottom, top;
  bool operator==(const Shape& o) const;
};

// Formal linear combination of same-shape diagrams with nonzero Scalar
// coefficients, kept in canonical diagram order.
class DiagramVector {
 public:
  DiagramVector(Shape shape, Ring ring);
  static DiagramVector single(const Diagram& d, const Scalar& c);
  static DiagramVector zero_like(const Diagram& d, const Ring& ring);

  const Shape& shape() const { return shape_; }
  const Ring& ring() const { return ring_; }
  const std::map<Diagram, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add_term(const Diagram& d, const Scalar& c);
  DiagramVector operator+(const DiagramVector& o) const;
  DiagramVector operator-(const DiagramVector& o) const;
  DiagramVector scale(const Scalar& c) const;
  bool operator==(const DiagramVector& o) const;

  Scalar coefficient(const Diagram& d) const;
  std::string to_string() const;

 private:
  Shape shape_;
  Ring ring_;
  std::map<Diagram, Scalar> terms_;
};

// u after v (top boundary of v glues to bottom boundary of u).
DiagramVector compose(const Diagram& u, const Diagram& v,
                      const EvalParams& p);
std::pair<DiagramVector, ComposeStats> compose_with_stats(
    const Diagram& u, const Diagram& v, const EvalParams& p);
DiagramVector compose(const DiagramVector& u, const DiagramVector& v,
                      const EvalParams& p);
DiagramVector tensor(const DiagramVector& a, const DiagramVector& b);
DiagramVector flip(const DiagramVector& a);

// Enumeration (deterministically ordered, ascending in diagram order).
std::vector<Diagram> enumerate_tl_basis(size_t n, size_t m);
std::vector<Diagram> enumerate_oriented_tl_basis(const Word& bottom,
                                                 const Word& top);
// planar orientation-compatible matchings of w as a single bottom boundary,
// with D = number of r_plus caps
std::vector<std::pair<Diagram, size_t>> enumerate_matchings(const Word& w);
std::vector<Diagram> enumerate_brauer_basis(const Word& bottom,
                                            const Word& top);
std::vector<Diagram> enumerate_basis(Flavor f, const Word& bottom,
                                     const Word& top);

mpz_class catalan(size_t n);
mpz_class factorial(size_t n);

// Canonical JSON text: the golden-file contract.
std::string diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const std::string& text);

}  // namespace planar
