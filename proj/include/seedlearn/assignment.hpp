#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace seedlearn {

inline constexpr int kMaxVars = 32;

/// A point of {0,1}^n. Variable x_i lives in bit i-1 of `bits()`.
///
/// Ordering is lexicographic on the bitstring x1 x2 ... xn, which coincides
/// with numeric order of `index()` (x1 is the most significant bit of the
/// index). Truth tables and files use `index()`.
class Assignment {
 public:
  Assignment() = default;
  Assignment(int n, std::uint32_t bits);

  static Assignment from_index(int n, std::uint64_t index);
  /// Parses "x1x2...xn" as a string of '0'/'1'.
  static Assignment from_string(std::string_view text);

  int dimension() const { return n_; }
  std::uint32_t bits() const { return bits_; }
  std::uint64_t index() const;
  int weight() const;

  /// Value of x_var, var in [1, n].
  bool operator[](int var) const { return (bits_ >> (var - 1)) & 1u; }
  Assignment with(int var, bool value) const;

  std::string to_string() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend std::strong_ordering operator<=>(const Assignment& a, const Assignment& b);

 private:
  std::uint32_t bits_ = 0;
  int n_ = 0;
};

/// True iff every coordinate of r equals the same coordinate of x or of y.
bool between(const Assignment& x, const Assignment& y, const Assignment& r);

/// Bitmask with the low n bits set.
constexpr std::uint32_t low_mask(int n) {
  return n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1u);
}

}  // namespace seedlearn
