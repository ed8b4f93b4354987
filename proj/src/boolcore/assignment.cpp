#include "seedlearn/assignment.hpp"

#include <bit>

#include "seedlearn/errors.hpp"

namespace seedlearn {

Assignment::Assignment(int n, std::uint32_t bits) : bits_(bits), n_(n) {
  if (n < 0 || n > kMaxVars) throw ContractViolation("dimension out of range: " + std::to_string(n));
  if ((bits & ~low_mask(n)) != 0) throw ContractViolation("assignment has bits beyond x" + std::to_string(n));
}

Assignment Assignment::from_index(int n, std::uint64_t index) {
  std::uint32_t bits = 0;
  for (int i = 0; i < n; ++i) {
    if ((index >> (n - 1 - i)) & 1u) bits |= std::uint32_t{1} << i;
  }
  return {n, bits};
}

Assignment Assignment::from_string(std::string_view text) {
  if (text.size() > static_cast<std::size_t>(kMaxVars)) throw ContractViolation("bitstring too long");
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits |= std::uint32_t{1} << i;
    } else if (text[i] != '0') {
      throw ContractViolation("bad character in bitstring: " + std::string(text));
    }
  }
  return {static_cast<int>(text.size()), bits};
}

std::uint64_t Assignment::index() const {
  std::uint64_t index = 0;
  for (int i = 0; i < n_; ++i) index = (index << 1) | ((bits_ >> i) & 1u);
  return index;
}

int Assignment::weight() const { return std::popcount(bits_); }

Assignment Assignment::with(int var, bool value) const {
  std::uint32_t bit = std::uint32_t{1} << (var - 1);
  return {n_, value ? (bits_ | bit) : (bits_ & ~bit)};
}

std::string Assignment::to_string() const {
  std::string out(static_cast<std::size_t>(n_), '0');
  for (int i = 0; i < n_; ++i) {
    if ((bits_ >> i) & 1u) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

std::strong_ordering operator<=>(const Assignment& a, const Assignment& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  std::uint32_t diff = a.bits_ ^ b.bits_;
  if (diff == 0) return std::strong_ordering::equal;
  // The lowest differing variable decides.
  std::uint32_t lowest = diff & (~diff + 1u);
  return (a.bits_ & lowest) ? std::strong_ordering::greater : std::strong_ordering::less;
}

bool between(const Assignment& x, const Assignment& y, const Assignment& r) {
  if (x.dimension() != y.dimension() || x.dimension() != r.dimension()) {
    throw ContractViolation("between: dimension mismatch");
  }
  // r_i must match x_i or y_i; it fails only where x_i == y_i != r_i.
  std::uint32_t agree = ~(x.bits() ^ y.bits());
  return (agree & (x.bits() ^ r.bits()) & low_mask(x.dimension())) == 0;
}

}  // namespace seedlearn
