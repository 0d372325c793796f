#pragma once

// Small vertex bitsets used by the exponential solvers.

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cblock::detail {

template <std::size_t Words>
class FixedBits {
 public:
  explicit FixedBits(std::size_t = 0) {}

  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (auto w : words_) {
      if (w) return true;
    }
    return false;
  }

  int first() const {
    for (std::size_t i = 0; i < Words; ++i) {
      if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
    }
    return -1;
  }

  FixedBits& operator&=(const FixedBits& o) {
    for (std::size_t i = 0; i < Words; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  FixedBits& operator|=(const FixedBits& o) {
    for (std::size_t i = 0; i < Words; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  FixedBits& subtract(const FixedBits& o) {
    for (std::size_t i = 0; i < Words; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend FixedBits operator&(FixedBits a, const FixedBits& b) { return a &= b; }
  friend FixedBits operator|(FixedBits a, const FixedBits& b) { return a |= b; }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < Words; ++i) {
      for (std::uint64_t w = words_[i]; w; w &= w - 1) f(static_cast<int>(i * 64 + std::countr_zero(w)));
    }
  }

 private:
  std::array<std::uint64_t, Words> words_{};
};

class DynamicBits {
 public:
  explicit DynamicBits(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}

  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (auto w : words_) {
      if (w) return true;
    }
    return false;
  }

  int first() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
    }
    return -1;
  }

  DynamicBits& operator&=(const DynamicBits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  DynamicBits& operator|=(const DynamicBits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  DynamicBits& subtract(const DynamicBits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend DynamicBits operator&(DynamicBits a, const DynamicBits& b) { return a &= b; }
  friend DynamicBits operator|(DynamicBits a, const DynamicBits& b) { return a |= b; }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (std::uint64_t w = words_[i]; w; w &= w - 1) f(static_cast<int>(i * 64 + std::countr_zero(w)));
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

/// Calls `f.template operator()<Bits>()` with the narrowest bitset type that
/// holds `n` vertices.
template <class F>
decltype(auto) with_bits_for(int n, F&& f) {
  if (n <= 64) return f.template operator()<FixedBits<1>>();
  if (n <= 128) return f.template operator()<FixedBits<2>>();
  if (n <= 256) return f.template operator()<FixedBits<4>>();
  if (n <= 1024) return f.template operator()<FixedBits<16>>();
  return f.template operator()<DynamicBits>();
}

}  // namespace cblock::detail
