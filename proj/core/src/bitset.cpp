#include "erlab/bitset.hpp"

namespace erlab {

Bitset Bitset::full(std::size_t size) {
  Bitset out(size);
  for (auto& w : out.words_) w = ~std::uint64_t{0};
  if (size % 64 != 0 && !out.words_.empty()) {
    out.words_.back() = (std::uint64_t{1} << (size % 64)) - 1;
  }
  return out;
}

Bitset Bitset::from_indices(std::size_t size, const std::vector<std::size_t>& indices) {
  Bitset out(size);
  for (auto i : indices) out.set(i);
  return out;
}

std::size_t Bitset::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Bitset::any() const noexcept {
  for (auto w : words_)
    if (w != 0) return true;
  return false;
}

std::size_t Bitset::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return (w << 6) + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return size_;
}

std::size_t Bitset::next(std::size_t i) const noexcept {
  ++i;
  if (i >= size_) return size_;
  std::size_t w = i >> 6;
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (i & 63));
  while (true) {
    if (bits != 0) return (w << 6) + static_cast<std::size_t>(std::countr_zero(bits));
    if (++w >= words_.size()) return size_;
    bits = words_[w];
  }
}

std::size_t Bitset::intersection_count(const Bitset& other) const noexcept {
  std::size_t c = 0;
  for (std::size_t w = 0; w < words_.size(); ++w)
    c += static_cast<std::size_t>(std::popcount(words_[w] & other.words_[w]));
  return c;
}

bool Bitset::intersects(const Bitset& other) const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((words_[w] & other.words_[w]) != 0) return true;
  return false;
}

bool Bitset::is_subset_of(const Bitset& other) const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  return true;
}

Bitset& Bitset::operator&=(const Bitset& other) noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& other) noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

Bitset& Bitset::operator^=(const Bitset& other) noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

Bitset& Bitset::subtract(const Bitset& other) noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

std::vector<std::size_t> Bitset::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

bool index_lex_less(const Bitset& a, const Bitset& b) {
  std::size_t i = a.first();
  std::size_t j = b.first();
  while (i < a.size() && j < b.size()) {
    if (i != j) return i < j;
    i = a.next(i);
    j = b.next(j);
  }
  return i >= a.size() && j < b.size();
}

}  // namespace erlab
