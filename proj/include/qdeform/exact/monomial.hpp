#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace qdeform::exact {

inline constexpr std::size_t kMaxVars = 24;

/// Exponent vector of a commutative monomial.
///
/// Exponents are 16-bit fields packed four to a 64-bit word, variable 0 in the most
/// significant field. Comparing the words lexicographically is therefore the same as
/// comparing exponent vectors lexicographically, and multiplying monomials is a plain
/// word-wise addition as long as no field overflows.
class Monomial {
 public:
  static constexpr std::size_t kFieldsPerWord = 4;
  static constexpr std::size_t kWords = kMaxVars / kFieldsPerWord;
  static constexpr std::uint32_t kMaxExponent = 0x7fff;

  constexpr Monomial() = default;

  static Monomial variable(std::size_t var, std::uint32_t power = 1) {
    Monomial m;
    m.set_exponent(var, power);
    return m;
  }

  std::uint32_t exponent(std::size_t var) const {
    return static_cast<std::uint32_t>((words_[var / kFieldsPerWord] >> shift(var)) & 0xffffu);
  }

  void set_exponent(std::size_t var, std::uint32_t value);

  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& other) const;

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t w = 0; w < kWords; ++w) {
      // Fields are < 2^15, so a borrow out of any field shows up in its top bit.
      constexpr std::uint64_t kHigh = 0x8000800080008000ull;
      if ((((other.words_[w] | kHigh) - words_[w]) & kHigh) != kHigh) return false;
    }
    return true;
  }

  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const {
    Monomial m;
    m.degree_ = degree_ - divisor.degree_;
    for (std::size_t w = 0; w < kWords; ++w) m.words_[w] = words_[w] - divisor.words_[w];
    return m;
  }

  static Monomial gcd(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b);

  /// Graded lexicographic order: total degree first, then variable 0 dominates.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    for (std::size_t w = 0; w < kWords; ++w) {
      if (auto c = a.words_[w] <=> b.words_[w]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.words_ == b.words_;
  }

  std::size_t hash() const {
    std::size_t h = degree_;
    for (auto w : words_) h = h * 0x9e3779b97f4a7c15ull ^ (w + (h >> 17));
    return h;
  }

 private:
  static constexpr unsigned shift(std::size_t var) {
    return static_cast<unsigned>(16 * (kFieldsPerWord - 1 - var % kFieldsPerWord));
  }

  std::uint32_t degree_ = 0;
  std::array<std::uint64_t, kWords> words_{};
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace qdeform::exact
