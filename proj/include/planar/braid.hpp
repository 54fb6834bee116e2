// Braid words, the canonical embedding of S_n into B_n with its unique
// staircase factorization, the coset factorization s^-1 t = u sigma^j v with
// u, v one strand down, and an exact equality oracle through the
// Lawrence-Krammer representation over laurent(q,t).
#pragma once

#include <map>

#include "planar/linalg.hpp"

namespace planar {

struct Permutation {
  std::vector<uint32_t> img;  // img[i] = image of position i (0-based)

  static Permutation identity(size_t n);
  size_t size() const { return img.size(); }
  Permutation inverse() const;
  // (p * q)(x) = p(q(x)): q applied first
  Permutation operator*(const Permutation& o) const;
  bool operator==(const Permutation& o) const { return img == o.img; }
  bool is_identity() const;
  void validate() const;
};

struct BraidWord {
  uint32_t strands = 0;
  // signed 1-based generator indices, listed bottom to top (applied first
  // to last)
  std::vector<int> letters;

  BraidWord inverse() const;
  BraidWord concat(const BraidWord& o) const;  // this first, then o
  // underlying permutation (strand bottom position -> top position)
  Permutation permutation() const;
};

// unique canonical positive word for a permutation: every strand pair
// crosses at most once and the lower-numbered strand passes over
BraidWord permutation_to_braid(const Permutation& w);

// the per-level menu choices of the canonical factorization: entry j-1 is
// the top position f in {0..j} that bottom strand j reaches (f = j: empty
// factor)
std::vector<uint32_t> canonical_factor_choices(const Permutation& w);

struct CosetFactorization {
  BraidWord u;     // letters <= n-2
  int exponent;    // -1, 0, +1
  BraidWord v;     // letters <= n-2
};

// s^-1 t = u sigma_{n-1}^j v in B_n, following the canonical coset peeling
CosetFactorization coset_factorization(const Permutation& s, const Permutation& t);

// exact equality through the Lawrence-Krammer representation
bool braid_equal(const BraidWord& a, const BraidWord& b);

// the representation matrix itself (cached per strand count)
Matrix lk_matrix(const BraidWord& w);

struct PairCrossings {
  size_t count = 0;
  // +1 when the lower-numbered strand passed over, -1 otherwise, per event
  std::vector<int> overs;
};

struct CrossingData {
  Permutation perm;
  std::map<std::pair<uint32_t, uint32_t>, PairCrossings> pairs;
};

CrossingData crossing_data(const BraidWord& w);

}  // namespace planar
