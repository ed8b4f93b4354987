#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "seedlearn/assignment.hpp"

namespace seedlearn {

struct Literal {
  int var = 1;  // 1-based
  bool negated = false;

  Literal complement() const { return {var, !negated}; }
  bool satisfied_by(const Assignment& a) const { return a[var] != negated; }
  /// 2*(var-1) + negated: the canonical literal order, positive first.
  int code() const { return 2 * (var - 1) + (negated ? 1 : 0); }

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal& a, const Literal& b) { return a.code() <=> b.code(); }
};

/// A conjunction of literals, stored as two variable masks.
///
/// A term may hold both x_i and ~x_i; it is then unsatisfiable and covers
/// nothing. The empty term covers every assignment.
class Term {
 public:
  Term() = default;
  Term(std::uint32_t positive, std::uint32_t negative) : pos_(positive), neg_(negative) {}

  static Term from_literals(std::span<const Literal> literals);
  static Term from_literals(std::initializer_list<Literal> literals);
  /// Every literal over x1..xn; the unsatisfiable starting point for closures.
  static Term all_literals(int n);
  /// The minterm of `a`.
  static Term minterm(const Assignment& a);

  std::uint32_t positive_mask() const { return pos_; }
  std::uint32_t negative_mask() const { return neg_; }
  std::uint32_t var_mask() const { return pos_ | neg_; }

  bool satisfiable() const { return (pos_ & neg_) == 0; }
  bool empty() const { return (pos_ | neg_) == 0; }
  int size() const;
  /// Highest variable index mentioned, 0 for the empty term.
  int max_var() const;

  bool covers(const Assignment& a) const {
    return (a.bits() & pos_) == pos_ && (a.bits() & neg_) == 0;
  }
  bool contains(const Literal& l) const;
  /// Literal-set inclusion: every literal of `other` is in *this.
  bool includes(const Term& other) const {
    return (other.pos_ & ~pos_) == 0 && (other.neg_ & ~neg_) == 0;
  }

  Term with(const Literal& l) const;
  Term without(const Literal& l) const;
  Term conjoin(const Term& other) const { return {pos_ | other.pos_, neg_ | other.neg_}; }
  /// Drops the literals falsified by `a`.
  Term restricted_to(const Assignment& a) const {
    return {pos_ & a.bits(), neg_ & ~a.bits()};
  }

  /// Literals in canonical order (by variable, positive before negative).
  std::vector<Literal> literals() const;
  /// "x1 & ~x3"; "1" for the empty term.
  std::string to_string() const;

  friend bool operator==(const Term&, const Term&) = default;
  /// By size, then lexicographically by canonical literal sequence.
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  std::uint32_t pos_ = 0;
  std::uint32_t neg_ = 0;
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept {
    return std::hash<std::uint64_t>{}((std::uint64_t{t.positive_mask()} << 32) | t.negative_mask());
  }
};

/// Conjunction of the literals satisfied by every assignment in `points`;
/// the all-literals term when `points` is empty.
Term closure(std::span<const Assignment> points, int n);

}  // namespace seedlearn
