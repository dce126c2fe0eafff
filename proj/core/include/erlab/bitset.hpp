#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace erlab {

/// Fixed-width bit row; the adjacency and family-membership carrier.
/// Width is set at construction and every binary operation expects equal widths.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static Bitset full(std::size_t size);
  static Bitset from_indices(std::size_t size, const std::vector<std::size_t>& indices);

  std::size_t size() const noexcept { return size_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  std::uint64_t word(std::size_t i) const noexcept { return words_[i]; }

  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t count() const noexcept;
  bool any() const noexcept;
  bool none() const noexcept { return !any(); }

  /// Lowest set index, or size() when empty.
  std::size_t first() const noexcept;
  /// Lowest set index strictly greater than i, or size().
  std::size_t next(std::size_t i) const noexcept;

  std::size_t intersection_count(const Bitset& other) const noexcept;
  bool intersects(const Bitset& other) const noexcept;
  bool is_subset_of(const Bitset& other) const noexcept;

  Bitset& operator&=(const Bitset& other) noexcept;
  Bitset& operator|=(const Bitset& other) noexcept;
  Bitset& operator^=(const Bitset& other) noexcept;
  /// this &= ~other
  Bitset& subtract(const Bitset& other) noexcept;

  friend Bitset operator&(Bitset a, const Bitset& b) noexcept { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) noexcept { return a |= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) noexcept { return a.subtract(b); }

  std::vector<std::size_t> indices() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const std::size_t i = (w << 6) + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        f(i);
      }
    }
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Lexicographic order of the increasing index sequences of two bitsets.
bool index_lex_less(const Bitset& a, const Bitset& b);

}  // namespace erlab
