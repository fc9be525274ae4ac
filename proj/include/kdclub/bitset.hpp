#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace kdclub::bits {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

inline bool test(std::span<const Word> set, std::size_t i) {
  return (set[i / kWordBits] >> (i % kWordBits)) & 1U;
}
inline void set(std::span<Word> set, std::size_t i) { set[i / kWordBits] |= Word{1} << (i % kWordBits); }
inline void reset(std::span<Word> set, std::size_t i) { set[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

inline std::size_t count(std::span<const Word> set) {
  std::size_t total = 0;
  for (Word w : set) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

inline std::size_t count_and(std::span<const Word> a, std::span<const Word> b) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

inline bool intersects(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return true;
  return false;
}

template <class F>
void for_each(std::span<const Word> set, F&& f) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    Word w = set[i];
    while (w) {
      f(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
}

template <class F>
void for_each_and(std::span<const Word> a, std::span<const Word> b, F&& f) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    Word w = a[i] & b[i];
    while (w) {
      f(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
}

}  // namespace kdclub::bits
