#include "planar/braid.hpp"

#include <algorithm>
#include <mutex>

namespace planar {

Permutation Permutation::identity(size_t n) {
  Permutation p;
  p.img.resize(n);
  for (size_t i = 0; i < n; ++i) p.img[i] = static_cast<uint32_t>(i);
  return p;
}

void Permutation::validate() const {
  std::vector<bool> seen(img.size(), false);
  for (uint32_t v : img) {
    if (v >= img.size() || seen[v])
      throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.img.resize(img.size());
  for (size_t i = 0; i < img.size(); ++i) p.img[img[i]] = static_cast<uint32_t>(i);
  return p;
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (img.size() != o.img.size())
    throw std::invalid_argument("permutation size mismatch");
  Permutation p;
  p.img.resize(img.size());
  for (size_t i = 0; i < img.size(); ++i) p.img[i] = img[o.img[i]];
  return p;
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < img.size(); ++i)
    if (img[i] != i) return false;
  return true;
}

BraidWord BraidWord::inverse() const {
  BraidWord w{strands, {}};
  w.letters.reserve(letters.size());
  for (size_t i = letters.size(); i-- > 0;) w.letters.push_back(-letters[i]);
  return w;
}

BraidWord BraidWord::concat(const BraidWord& o) const {
  if (strands != o.strands)
    throw std::invalid_argument("strand count mismatch");
  BraidWord w = *this;
  w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
  return w;
}

Permutation BraidWord::permutation() const {
  // track which position each strand occupies, bottom to top
  std::vector<uint32_t> pos(strands);
  for (uint32_t i = 0; i < strands; ++i) pos[i] = i;
  std::vector<uint32_t> at(strands);  // at[p] = strand currently at position p
  for (uint32_t i = 0; i < strands; ++i) at[i] = i;
  for (int letter : letters) {
    size_t i = static_cast<size_t>(letter < 0 ? -letter : letter);
    if (i < 1 || i >= strands)
      throw std::invalid_argument("braid generator out of range");
    uint32_t a = at[i - 1], b = at[i];
    std::swap(at[i - 1], at[i]);
    std::swap(pos[a], pos[b]);
  }
  Permutation p;
  p.img = pos;
  return p;
}

// ---------------------------------------------------------------------------
// canonical factorization

std::vector<uint32_t> canonical_factor_choices(const Permutation& w) {
  w.validate();
  const size_t n = w.size();
  std::vector<uint32_t> choices(n >= 1 ? n - 1 : 0);
  // peel the top factor level by level: at level j the strand at bottom
  // position j ends at position f; removing the factor renumbers the rest
  std::vector<uint32_t> img = w.img;
  for (size_t j = n; j-- > 1;) {
    uint32_t f = img[j];
    choices[j - 1] = f;
    // remove strand j and position f: remaining is a permutation of 0..j-1
    std::vector<uint32_t> next(j);
    for (size_t x = 0; x < j; ++x)
      next[x] = img[x] < f ? img[x] : img[x] - 1;
    img = std::move(next);
  }
  return choices;
}

namespace {

// factor word for level j (1-based letters), choice f in {0..j}: the strand
// at bottom position j passes under to position f
std::vector<int> level_word(size_t j, uint32_t f) {
  std::vector<int> w;
  for (size_t i = j; i > f; --i) w.push_back(static_cast<int>(i));
  return w;
}

}  // namespace

BraidWord permutation_to_braid(const Permutation& w) {
  const size_t n = w.size();
  auto choices = canonical_factor_choices(w);
  BraidWord out{static_cast<uint32_t>(n), {}};
  // stored bottom-to-top: w_1 first, then w_2, ..., w_{n-1}
  for (size_t j = 1; j < n; ++j) {
    auto lw = level_word(j, choices[j - 1]);
    out.letters.insert(out.letters.end(), lw.begin(), lw.end());
  }
  return out;
}

CosetFactorization coset_factorization(const Permutation& s, const Permutation& t) {
  if (s.size() != t.size())
    throw std::invalid_argument("permutation size mismatch");
  const size_t n = s.size();
  if (n < 2 || s == t)
    return {BraidWord{static_cast<uint32_t>(n), {}}, 0,
            BraidWord{static_cast<uint32_t>(n), {}}};
  auto cs = canonical_factor_choices(s), ct = canonical_factor_choices(t);

  // the words of the truncated permutations s', t' (top level removed) live
  // one strand down; rebuild them from the remaining choices
  auto truncated_word = [&](const std::vector<uint32_t>& choices) {
    BraidWord w{static_cast<uint32_t>(n), {}};
    for (size_t j = 1; j + 1 < n; ++j) {
      auto lw = level_word(j, choices[j - 1]);
      w.letters.insert(w.letters.end(), lw.begin(), lw.end());
    }
    return w;
  };
  BraidWord sp = truncated_word(cs), tp = truncated_word(ct);
  uint32_t a = cs[n - 2], b = ct[n - 2];

  if (a == b) {
    // the top factors cancel: s^-1 t = s'^-1 t' in B_{n-1}; t' sits at the
    // bottom of the word
    return {tp.concat(sp.inverse()), 0,
            BraidWord{static_cast<uint32_t>(n), {}}};
  }
  // 1-based menu indices: i = a+1, j = b+1
  size_t i = a + 1, j = b + 1;
  BraidWord u{static_cast<uint32_t>(n), {}}, v{static_cast<uint32_t>(n), {}};
  int exponent;
  if (i < j) {
    // sigma_{n-1}^-1 ... sigma_i^-1 sigma_j ... sigma_{n-1}
    //   = [sigma_{j-1} ... sigma_{n-2}] sigma_{n-1}^-1
    //     [sigma_{n-2}^-1 ... sigma_i^-1]
    exponent = -1;
    BraidWord u0{static_cast<uint32_t>(n), {}};
    for (size_t x = n - 2; x >= j - 1 && x >= 1; --x)
      u0.letters.push_back(static_cast<int>(x));
    BraidWord v0{static_cast<uint32_t>(n), {}};
    for (size_t x = i; x <= n - 2; ++x)
      v0.letters.push_back(-static_cast<int>(x));
    u = u0.concat(sp.inverse());
    v = tp.concat(v0);
  } else {
    // the inverse identity: sigma_j ... sigma_{n-2} sigma_{n-1}
    //   sigma_{n-2}^-1 ... sigma_{i-1}^-1
    exponent = +1;
    BraidWord u0{static_cast<uint32_t>(n), {}};
    for (size_t x = n - 2; x >= j && x >= 1; --x)
      u0.letters.push_back(static_cast<int>(x));
    BraidWord v0{static_cast<uint32_t>(n), {}};
    for (size_t x = i - 1; x <= n - 2; ++x)
      v0.letters.push_back(-static_cast<int>(x));
    u = u0.concat(sp.inverse());
    v = tp.concat(v0);
  }
  // stored order is bottom-to-top, so the product u sigma^j v reads
  // v-letters, then sigma, then u-letters
  return {u, exponent, v};
}

// ---------------------------------------------------------------------------
// Lawrence-Krammer representation

namespace {

Ring lk_ring() {
  static Ring r = ring_laurent({"q", "t"});
  return r;
}

size_t lk_dim(size_t n) { return n * (n - 1) / 2; }

size_t lk_index(size_t r, size_t s, size_t n) {
  // 1 <= r < s <= n, row-major over r
  size_t idx = 0;
  for (size_t rr = 1; rr < r; ++rr) idx += n - rr;
  return idx + (s - r - 1);
}

// action of sigma_k on basis vector x_{r,s}
void lk_column(size_t k, size_t r, size_t s, size_t n, Matrix& m,
               size_t col) {
  Ring R = lk_ring();
  Scalar q = Scalar::variable(R, "q"), t = Scalar::variable(R, "t");
  Scalar one = Scalar::one(R);
  auto add = [&](size_t rr, size_t ss, const Scalar& c) {
    m.at(lk_index(rr, ss, n), col) += c;
  };
  if (k < r - 1 || k > s) {
    add(r, s, one);
  } else if (k == r - 1) {
    add(r - 1, s, one);
    add(r, s, one - q);
  } else if (k == r && r < s - 1) {
    add(r, r + 1, t * q * (q - one));
    add(r + 1, s, q);
  } else if (k == r && r == s - 1) {
    add(r, s, t * q * q);
  } else if (r < k && k < s - 1) {
    add(r, s, one);
    add(k, k + 1, t * q.pow(static_cast<long>(k - r)) * (q - one) * (q - one));
  } else if (k == s - 1) {
    add(r, s - 1, one);
    add(s - 1, s, t * q.pow(static_cast<long>(s - r)) * (q - one));
  } else {  // k == s
    add(r, s, one - q);
    add(r, s + 1, q);
  }
}

struct LkCache {
  std::vector<Matrix> pos, neg;  // indexed by generator-1
};

const LkCache& lk_generators(size_t n) {
  static std::map<size_t, LkCache> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Ring R = lk_ring();
  const size_t d = lk_dim(n);
  LkCache c;
  for (size_t k = 1; k < n; ++k) {
    Matrix m(R, d, d);
    for (size_t r = 1; r < n; ++r)
      for (size_t s = r + 1; s <= n; ++s)
        lk_column(k, r, s, n, m, lk_index(r, s, n));
    // exact inverse column by column
    Matrix inv(R, d, d);
    for (size_t col = 0; col < d; ++col) {
      std::vector<Scalar> e(d, Scalar::zero(R));
      e[col] = Scalar::one(R);
      auto x = solve(m, e);
      if (!x) throw std::logic_error("LK generator not invertible");
      for (size_t row = 0; row < d; ++row) inv.at(row, col) = (*x)[row];
    }
    c.pos.push_back(std::move(m));
    c.neg.push_back(std::move(inv));
  }
  return cache.emplace(n, std::move(c)).first->second;
}

}  // namespace

Matrix lk_matrix(const BraidWord& w) {
  const size_t n = w.strands;
  if (n < 2) return Matrix::identity(lk_ring(), lk_dim(n < 2 ? 2 : n));
  const LkCache& gens = lk_generators(n);
  Matrix acc = Matrix::identity(lk_ring(), lk_dim(n));
  for (int letter : w.letters) {
    size_t i = static_cast<size_t>(letter < 0 ? -letter : letter);
    if (i < 1 || i >= n)
      throw std::invalid_argument("braid generator out of range");
    const Matrix& g = letter > 0 ? gens.pos[i - 1] : gens.neg[i - 1];
    acc = g * acc;  // applied first = rightmost
  }
  return acc;
}

bool braid_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands)
    throw std::invalid_argument("strand count mismatch");
  return lk_matrix(a) == lk_matrix(b);
}

CrossingData crossing_data(const BraidWord& w) {
  CrossingData out;
  const size_t n = w.strands;
  std::vector<uint32_t> at(n);
  for (uint32_t i = 0; i < n; ++i) at[i] = i;
  for (int letter : w.letters) {
    size_t i = static_cast<size_t>(letter < 0 ? -letter : letter);
    if (i < 1 || i >= n)
      throw std::invalid_argument("braid generator out of range");
    uint32_t lower = at[i - 1], upper = at[i];  // strands at positions i-1, i
    uint32_t a = std::min(lower, upper), b = std::max(lower, upper);
    auto& pc = out.pairs[{a, b}];
    pc.count += 1;
    // positive letter: the strand at position i-1 passes over
    bool a_over = (letter > 0) == (lower == a);
    pc.overs.push_back(a_over ? +1 : -1);
    std::swap(at[i - 1], at[i]);
  }
  out.perm = w.permutation();
  return out;
}

}  // namespace planar
