#include "seedlearn/term.hpp"

#include <algorithm>
#include <bit>

#include "seedlearn/errors.hpp"

namespace seedlearn {

namespace {

std::uint32_t var_bit(int var) {
  if (var < 1 || var > kMaxVars) throw ContractViolation("variable index out of range: " + std::to_string(var));
  return std::uint32_t{1} << (var - 1);
}

}  // namespace

Term Term::from_literals(std::span<const Literal> literals) {
  Term t;
  for (const Literal& l : literals) t = t.with(l);
  return t;
}

Term Term::from_literals(std::initializer_list<Literal> literals) {
  return from_literals(std::span<const Literal>(literals.begin(), literals.size()));
}

Term Term::all_literals(int n) { return {low_mask(n), low_mask(n)}; }

Term Term::minterm(const Assignment& a) {
  return {a.bits(), ~a.bits() & low_mask(a.dimension())};
}

int Term::size() const { return std::popcount(pos_) + std::popcount(neg_); }

int Term::max_var() const { return 32 - std::countl_zero(pos_ | neg_); }

bool Term::contains(const Literal& l) const {
  return ((l.negated ? neg_ : pos_) & var_bit(l.var)) != 0;
}

Term Term::with(const Literal& l) const {
  std::uint32_t bit = var_bit(l.var);
  return l.negated ? Term{pos_, neg_ | bit} : Term{pos_ | bit, neg_};
}

Term Term::without(const Literal& l) const {
  std::uint32_t bit = var_bit(l.var);
  return l.negated ? Term{pos_, neg_ & ~bit} : Term{pos_ & ~bit, neg_};
}

std::vector<Literal> Term::literals() const {
  std::vector<Literal> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint32_t rest = pos_ | neg_; rest != 0; rest &= rest - 1) {
    int var = std::countr_zero(rest) + 1;
    std::uint32_t bit = std::uint32_t{1} << (var - 1);
    if (pos_ & bit) out.push_back({var, false});
    if (neg_ & bit) out.push_back({var, true});
  }
  return out;
}

std::string Term::to_string() const {
  if (empty()) return "1";
  std::string out;
  for (const Literal& l : literals()) {
    if (!out.empty()) out += " & ";
    if (l.negated) out += '~';
    out += "x" + std::to_string(l.var);
  }
  return out;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (a == b) return std::strong_ordering::equal;
  auto la = a.literals();
  auto lb = b.literals();
  return std::lexicographical_compare_three_way(la.begin(), la.end(), lb.begin(), lb.end());
}

Term closure(std::span<const Assignment> points, int n) {
  if (points.empty()) return Term::all_literals(n);
  std::uint32_t all_one = low_mask(n);
  std::uint32_t all_zero = low_mask(n);
  for (const Assignment& a : points) {
    if (a.dimension() != n) throw ContractViolation("closure: dimension mismatch");
    all_one &= a.bits();
    all_zero &= ~a.bits();
  }
  return {all_one, all_zero};
}

}  // namespace seedlearn
