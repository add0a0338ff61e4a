#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

// Small-set machinery. Graph node sets live in one 64-bit word (node capacity
// is fixed at 63); vertex/facet index sets of an incidence structure can be
// wider, so those use the dynamic BitVec below.

namespace hansen {

using NodeSet = std::uint64_t;

inline constexpr NodeSet node_bit(int v) { return NodeSet{1} << v; }

inline constexpr bool set_has(NodeSet s, int v) { return (s >> v) & 1u; }

// All nodes 0..n-1. n == 64 would overflow the shift; capacity is 63 anyway.
inline constexpr NodeSet full_node_set(int n) {
  return n == 0 ? 0 : (~NodeSet{0} >> (64 - n));
}

inline int set_size(NodeSet s) { return std::popcount(s); }

template <class F>
inline void for_each_node(NodeSet s, F f) {
  while (s) {
    f(std::countr_zero(s));
    s &= s - 1;
  }
}

inline std::vector<int> set_to_vector(NodeSet s) {
  std::vector<int> out;
  for_each_node(s, [&](int v) { out.push_back(v); });
  return out;
}

inline NodeSet set_from_vector(const std::vector<int>& nodes) {
  NodeSet s = 0;
  for (int v : nodes) s |= node_bit(v);
  return s;
}

// Order on node sets used whenever a canonical representative is needed:
// the set containing the smallest vertex on which the two differ wins.
// For sets of equal size this agrees with comparing sorted vertex lists
// lexicographically.
inline bool set_lex_less(NodeSet a, NodeSet b) {
  if (a == b) return false;
  NodeSet diff = a ^ b;
  return set_has(a, std::countr_zero(diff));
}

inline std::uint64_t pow3(int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= 3;
  return r;
}

// Dynamic bitset keyed by value; used for incidence rows and face vertex/facet
// sets. Comparison treats the whole vector as one big unsigned number (bit i
// has weight 2^i), which matches the fixed-width hex serialization below.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n, bool ones = false)
      : n_(n), w_((n + 63) / 64, ones ? ~std::uint64_t{0} : 0) {
    trim();
  }

  std::size_t size() const { return n_; }
  std::size_t words() const { return w_.size(); }
  std::uint64_t word(std::size_t i) const { return w_[i]; }

  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const {
    return (w_[i >> 6] >> (i & 63)) & 1u;
  }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  BitVec& operator&=(const BitVec& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  BitVec& operator|=(const BitVec& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }

  // out = a & b without allocating (out must already have the right size).
  static void and_into(BitVec& out, const BitVec& a, const BitVec& b) {
    for (std::size_t i = 0; i < out.w_.size(); ++i)
      out.w_[i] = a.w_[i] & b.w_[i];
  }

  bool intersects(const BitVec& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool is_subset_of(const BitVec& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool operator==(const BitVec& o) const {
    return n_ == o.n_ && w_ == o.w_;
  }

  // Numeric order, most significant word first.
  bool operator<(const BitVec& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    for (std::size_t i = w_.size(); i-- > 0;)
      if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
    return false;
  }

  template <class F>
  void for_each_set(F f) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t w = w_[wi];
      while (w) {
        f(wi * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  std::uint64_t hash() const {
    // splitmix-style mixing of the words; used by unordered containers.
    std::uint64_t h = 0x9E3779B97F4A7C15ull * (n_ + 1);
    for (auto w : w_) {
      h ^= w + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
      std::uint64_t z = h;
      z ^= z >> 30;
      z *= 0xBF58476D1CE4E5B9ull;
      z ^= z >> 27;
      h = z;
    }
    return h;
  }

  // Fixed-width lowercase hex, most significant digit first; bit i has
  // weight 2^i, so two BitVecs of equal size compare the same way as their
  // hex strings.
  std::string to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::size_t nhex = (n_ + 3) / 4;
    std::string out(nhex == 0 ? 1 : nhex, '0');
    for (std::size_t i = 0; i < nhex; ++i) {
      std::size_t bit = i * 4;
      unsigned nib = (w_[bit >> 6] >> (bit & 63)) & 0xF;
      out[out.size() - 1 - i] = digits[nib];
    }
    return out;
  }

 private:
  void trim() {
    if (n_ % 64 != 0 && !w_.empty())
      w_.back() &= ~std::uint64_t{0} >> (64 - n_ % 64);
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct BitVecHash {
  std::size_t operator()(const BitVec& b) const {
    return static_cast<std::size_t>(b.hash());
  }
};

}  // namespace hansen
