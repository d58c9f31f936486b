#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace antidim {

using Vertex = std::uint32_t;

/// Library-wide error type. Messages are stable and matched by the CLI tests.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A set of vertices of a graph with `universe()` vertices, stored as a
/// fixed-width bit vector. Iteration is always in ascending vertex order,
/// which is the canonical order used for metric representations.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_(word_count(universe), Word{0}) {}

  VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
      : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  template <class Range>
  static VertexSet from_range(std::size_t universe, const Range& members) {
    VertexSet s(universe);
    for (auto v : members) s.insert(static_cast<Vertex>(v));
    return s;
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  /// Builds a set from the low bits of a mask (universe must be <= 64).
  static VertexSet from_mask(std::size_t universe, Word mask) {
    if (universe > kWordBits) throw Error("mask universe exceeds 64 vertices");
    VertexSet s(universe);
    if (universe > 0) s.words_[0] = mask;
    s.trim();
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  std::size_t size() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }

  bool is_full() const noexcept { return size() == universe_; }

  bool contains(Vertex v) const {
    return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
  }

  void insert(Vertex v) {
    check(v);
    words_[v / kWordBits] |= Word{1} << (v % kWordBits);
  }

  void erase(Vertex v) {
    check(v);
    words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
  }

  bool is_subset_of(const VertexSet& other) const {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const { return full(universe_) - *this; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ &&
           std::equal(a.words_.begin(), a.words_.end(), b.words_.begin());
  }

  /// Lexicographic order of the ascending member sequences.
  friend bool lex_less(const VertexSet& a, const VertexSet& b) {
    auto ma = a.members();
    auto mb = b.members();
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i];
      while (w != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(w));
        f(static_cast<Vertex>(i * kWordBits + bit));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  std::span<const Word> words() const noexcept { return {words_.data(), words_.size()}; }

  std::size_t hash() const noexcept {
    std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
    for (Word w : words_) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
    return h;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for_each([&](Vertex v) {
      if (!first) out += ",";
      out += std::to_string(v);
      first = false;
    });
    return out + "}";
  }

 private:
  static std::size_t word_count(std::size_t universe) {
    return (universe + kWordBits - 1) / kWordBits;
  }
  void check(Vertex v) const {
    if (v >= universe_) throw Error("vertex " + std::to_string(v) + " out of range");
  }
  void same_universe(const VertexSet& o) const {
    if (o.universe_ != universe_) throw Error("vertex sets over different graphs");
  }
  void trim() {
    if (universe_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (Word{1} << (universe_ % kWordBits)) - 1;
  }

  std::size_t universe_ = 0;
  boost::container::small_vector<Word, 2> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

}  // namespace antidim
