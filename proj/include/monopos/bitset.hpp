#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace monopos {

using Vertex = int;

inline constexpr std::size_t kWordBits = 64;
inline constexpr int kMaxVertices = 512;
inline constexpr std::size_t kMaxWords = kMaxVertices / kWordBits;

/// Fixed-width bitset of W machine words. Solver kernels are instantiated for
/// W = 1 (graphs of order <= 64) and W = kMaxWords (the multi-word fallback).
template <std::size_t W>
struct Bits {
  std::array<std::uint64_t, W> words{};

  static constexpr int capacity() { return static_cast<int>(W * kWordBits); }

  static Bits prefix(int n) {
    Bits b;
    for (std::size_t i = 0; i < W && n > 0; ++i, n -= 64) {
      b.words[i] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    }
    return b;
  }

  static Bits single(int v) {
    Bits b;
    b.set(v);
    return b;
  }

  bool test(int v) const { return (words[v >> 6] >> (v & 63)) & 1U; }
  void set(int v) { words[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { words[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  bool none() const {
    for (auto w : words) {
      if (w) return false;
    }
    return true;
  }
  bool any() const { return !none(); }

  int count() const {
    int c = 0;
    for (auto w : words) c += std::popcount(w);
    return c;
  }

  /// Smallest member, or -1 when empty.
  int lowest() const {
    for (std::size_t i = 0; i < W; ++i) {
      if (words[i]) return static_cast<int>(i * kWordBits) + std::countr_zero(words[i]);
    }
    return -1;
  }

  /// Largest member, or -1 when empty.
  int highest() const {
    for (std::size_t i = W; i-- > 0;) {
      if (words[i]) return static_cast<int>(i * kWordBits + 63) - std::countl_zero(words[i]);
    }
    return -1;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < W; ++i) {
      auto x = words[i];
      while (x) {
        f(static_cast<int>(i * kWordBits) + std::countr_zero(x));
        x &= x - 1;
      }
    }
  }

  bool intersects(const Bits& o) const {
    for (std::size_t i = 0; i < W; ++i) {
      if (words[i] & o.words[i]) return true;
    }
    return false;
  }

  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < W; ++i) {
      if (words[i] & ~o.words[i]) return false;
    }
    return true;
  }

  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < W; ++i) words[i] &= o.words[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < W; ++i) words[i] |= o.words[i];
    return *this;
  }
  Bits& operator^=(const Bits& o) {
    for (std::size_t i = 0; i < W; ++i) words[i] ^= o.words[i];
    return *this;
  }
  /// this = this \ o
  Bits& remove(const Bits& o) {
    for (std::size_t i = 0; i < W; ++i) words[i] &= ~o.words[i];
    return *this;
  }

  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator^(Bits a, const Bits& b) { return a ^= b; }
  friend Bits minus(Bits a, const Bits& b) { return a.remove(b); }

  friend bool operator==(const Bits&, const Bits&) = default;

  /// Orders sets as the unsigned integers sum(2^v).
  friend std::strong_ordering operator<=>(const Bits& a, const Bits& b) {
    for (std::size_t i = W; i-- > 0;) {
      if (a.words[i] != b.words[i]) return a.words[i] <=> b.words[i];
    }
    return std::strong_ordering::equal;
  }
};

/// Calls f with std::integral_constant<std::size_t, W> for the narrowest word
/// count that holds n vertices.
template <class F>
decltype(auto) with_word_count(int n, F&& f) {
  if (n <= 64) return f(std::integral_constant<std::size_t, 1>{});
  return f(std::integral_constant<std::size_t, kMaxWords>{});
}

/// A subset of the vertices {0..n-1} of a graph of order n.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : n_(n) { assert(n >= 0 && n <= kMaxVertices); }
  VertexSet(int n, std::initializer_list<Vertex> members) : VertexSet(n) {
    for (auto v : members) insert(v);
  }

  static VertexSet full(int n) {
    VertexSet s(n);
    s.bits_ = Bits<kMaxWords>::prefix(n);
    return s;
  }

  template <class Range>
  static VertexSet from_range(int n, const Range& members) {
    VertexSet s(n);
    for (auto v : members) s.insert(static_cast<Vertex>(v));
    return s;
  }

  template <std::size_t W>
  static VertexSet from_bits(int n, const Bits<W>& b) {
    VertexSet s(n);
    for (std::size_t i = 0; i < W && i < kMaxWords; ++i) s.bits_.words[i] = b.words[i];
    return s;
  }

  template <std::size_t W>
  Bits<W> bits() const {
    static_assert(W <= kMaxWords);
    Bits<W> b;
    for (std::size_t i = 0; i < W; ++i) b.words[i] = bits_.words[i];
    return b;
  }

  int universe() const { return n_; }
  bool contains(Vertex v) const { return v >= 0 && v < n_ && bits_.test(v); }
  void insert(Vertex v) {
    assert(v >= 0 && v < n_);
    bits_.set(v);
  }
  void erase(Vertex v) {
    assert(v >= 0 && v < n_);
    bits_.reset(v);
  }
  int size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  Vertex lowest() const { return bits_.lowest(); }
  Vertex highest() const { return bits_.highest(); }

  template <class F>
  void for_each(F&& f) const {
    bits_.for_each(std::forward<F>(f));
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size()));
    bits_.for_each([&](int v) { out.push_back(v); });
    return out;
  }

  bool intersects(const VertexSet& o) const { return bits_.intersects(o.bits_); }
  bool subset_of(const VertexSet& o) const { return bits_.subset_of(o.bits_); }

  VertexSet& operator&=(const VertexSet& o) {
    bits_ &= o.bits_;
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    bits_ |= o.bits_;
    n_ = std::max(n_, o.n_);
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    bits_.remove(o.bits_);
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  /// Complement within {0..n-1}.
  VertexSet complement() const { return full(n_) - *this; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }
  /// Integer order on the membership bit patterns; used for witness tie-breaks.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.bits_ <=> b.bits_;
  }

  const Bits<kMaxWords>& raw() const { return bits_; }

  /// "{0,2,5}"
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    bits_.for_each([&](int v) {
      if (!first) s += ',';
      s += std::to_string(v);
      first = false;
    });
    return s + "}";
  }

 private:
  int n_ = 0;
  Bits<kMaxWords> bits_;
};

}  // namespace monopos
