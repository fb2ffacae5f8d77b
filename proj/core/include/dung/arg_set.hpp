#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dung {

/// Dense argument index into a Framework. Id order is the canonical argument order.
using ArgId = std::uint32_t;

/// Subset of a framework's arguments, stored as a fixed-width bit vector.
///
/// Binary operations require both operands to share the same universe size.
/// The three-way comparison is the canonical extension order: sets compare as
/// unsigned binary numbers where argument 0 is the least significant bit.
class ArgSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  ArgSet() = default;
  explicit ArgSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

  static ArgSet full(std::size_t universe) {
    ArgSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  /// Builds the set whose bits are the low bits of `mask` (universe <= 64).
  static ArgSet from_mask(std::size_t universe, Word mask) {
    ArgSet s(universe);
    if (!s.words_.empty()) s.words_[0] = mask;
    s.trim();
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(ArgId a) const noexcept {
    return (words_[a / kWordBits] >> (a % kWordBits)) & Word{1};
  }
  void insert(ArgId a) noexcept { words_[a / kWordBits] |= Word{1} << (a % kWordBits); }
  void erase(ArgId a) noexcept { words_[a / kWordBits] &= ~(Word{1} << (a % kWordBits)); }
  void clear() noexcept {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const noexcept {
    for (Word w : words_)
      if (w != 0) return false;
    return true;
  }

  ArgSet& operator|=(const ArgSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ArgSet& operator&=(const ArgSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// Set difference.
  ArgSet& operator-=(const ArgSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend ArgSet operator|(ArgSet a, const ArgSet& b) noexcept { return a |= b; }
  friend ArgSet operator&(ArgSet a, const ArgSet& b) noexcept { return a &= b; }
  friend ArgSet operator-(ArgSet a, const ArgSet& b) noexcept { return a -= b; }

  /// Complement relative to the universe.
  ArgSet complement() const {
    ArgSet s = *this;
    for (auto& w : s.words_) w = ~w;
    s.trim();
    return s;
  }

  bool is_subset_of(const ArgSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool is_proper_subset_of(const ArgSet& o) const noexcept { return is_subset_of(o) && *this != o; }
  bool intersects(const ArgSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  friend bool operator==(const ArgSet& a, const ArgSet& b) noexcept {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  friend std::strong_ordering operator<=>(const ArgSet& a, const ArgSet& b) noexcept {
    if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
    for (std::size_t i = a.words_.size(); i-- > 0;)
      if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  /// Calls f(ArgId) for every member in increasing id order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i];
      while (w != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(w));
        f(static_cast<ArgId>(i * kWordBits + bit));
        w &= w - 1;
      }
    }
  }

  std::vector<ArgId> members() const {
    std::vector<ArgId> out;
    out.reserve(count());
    for_each([&](ArgId a) { out.push_back(a); });
    return out;
  }

  std::span<const Word> words() const noexcept { return words_; }

 private:
  static std::size_t word_count(std::size_t universe) noexcept {
    return (universe + kWordBits - 1) / kWordBits;
  }
  void trim() noexcept {
    if (const std::size_t tail = universe_ % kWordBits; tail != 0 && !words_.empty())
      words_.back() &= (Word{1} << tail) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace dung
