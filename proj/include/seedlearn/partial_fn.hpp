#pragma once

#include <optional>
#include <span>
#include <vector>

#include "seedlearn/assignment.hpp"
#include "seedlearn/dnf.hpp"
#include "seedlearn/term.hpp"
#include "seedlearn/truth_table.hpp"

namespace seedlearn {

/// f : {0,1}^n -> {0,1,*}. Positives and negatives are kept sorted and
/// deduplicated; everything else is undefined.
class PartialFn {
 public:
  PartialFn() = default;
  explicit PartialFn(int n) : n_(n) {}
  /// Throws ContractViolation if a point is labeled both ways or has the
  /// wrong dimension.
  PartialFn(int n, std::vector<Assignment> positives, std::vector<Assignment> negatives);

  static PartialFn from_table(const TruthTable& table);

  int dimension() const { return n_; }
  const std::vector<Assignment>& positives() const { return positives_; }
  const std::vector<Assignment>& negatives() const { return negatives_; }
  bool is_total() const;

  std::optional<bool> value(const Assignment& a) const;

  /// f_T kept in the original coordinates: the defined points covered by t.
  PartialFn project(const Term& t) const;
  /// Same function with the listed positives made undefined.
  PartialFn without_positives(std::span<const Assignment> removed) const;

  bool consistent_with(const Dnf& formula) const;
  bool consistent_with(const Term& monomial) const;

  friend bool operator==(const PartialFn&, const PartialFn&) = default;

 private:
  int n_ = 0;
  std::vector<Assignment> positives_;
  std::vector<Assignment> negatives_;
};

/// closure(f.positives) when no negative satisfies it, otherwise none.
std::optional<Term> monomial_consistency(const PartialFn& f);

}  // namespace seedlearn
