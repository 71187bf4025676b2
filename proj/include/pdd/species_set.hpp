#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace pdd {

// A subset of species over a fixed universe 0..n-1, stored as a bitset with a
// cached cardinality.
class SpeciesSet {
 public:
  SpeciesSet() = default;

  explicit SpeciesSet(std::size_t universe)
      : words_((universe + 63) / 64, 0), universe_(universe) {}

  static SpeciesSet of(std::size_t universe, std::initializer_list<int> members) {
    SpeciesSet s(universe);
    for (int m : members) s.insert(m);
    return s;
  }

  std::size_t universe() const { return universe_; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool test(int i) const {
    assert(i >= 0 && static_cast<std::size_t>(i) < universe_);
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  void insert(int i) {
    assert(i >= 0 && static_cast<std::size_t>(i) < universe_);
    std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (!(words_[i >> 6] & bit)) {
      words_[i >> 6] |= bit;
      ++count_;
    }
  }

  void erase(int i) {
    assert(i >= 0 && static_cast<std::size_t>(i) < universe_);
    std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (words_[i >> 6] & bit) {
      words_[i >> 6] &= ~bit;
      --count_;
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        int bit = std::countr_zero(word);
        f(static_cast<int>(w * 64 + bit));
        word &= word - 1;
      }
    }
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(count_);
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  bool is_subset_of(const SpeciesSet& other) const {
    assert(universe_ == other.universe_);
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~other.words_[w]) return false;
    return true;
  }

  friend bool operator==(const SpeciesSet& a, const SpeciesSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  friend bool operator!=(const SpeciesSet& a, const SpeciesSet& b) { return !(a == b); }

  // Order on the sorted member sequences: {a} < {a,b} < {a,c} < {b}.
  static bool lex_less(const SpeciesSet& a, const SpeciesSet& b) {
    assert(a.universe_ == b.universe_);
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
      std::uint64_t diff = a.words_[w] ^ b.words_[w];
      if (diff == 0) continue;
      int bit = std::countr_zero(diff);
      int idx = static_cast<int>(w * 64 + bit);
      // The set not containing idx is a prefix of-or-diverges-above the other:
      // it is smaller iff it has no member beyond idx.
      const SpeciesSet& with = a.test(idx) ? a : b;
      const SpeciesSet& without = a.test(idx) ? b : a;
      return without.has_member_above(idx) ? (&with == &a) : (&without == &a);
    }
    return false;
  }

 private:
  bool has_member_above(int idx) const {
    std::size_t w = static_cast<std::size_t>(idx) >> 6;
    std::uint64_t high = words_[w] & ~((std::uint64_t{2} << (idx & 63)) - 1);
    if (high != 0) return true;
    for (std::size_t i = w + 1; i < words_.size(); ++i)
      if (words_[i] != 0) return true;
    return false;
  }

  std::vector<std::uint64_t> words_;
  std::size_t universe_ = 0;
  std::size_t count_ = 0;
};

}  // namespace pdd
