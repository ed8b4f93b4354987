#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "seedlearn/assignment.hpp"
#include "seedlearn/caps.hpp"

namespace seedlearn {

class Dnf;
class Term;
class DecisionTree;

/// 2^n output bits; entry `i` is the value on Assignment::from_index(n, i).
class TruthTable {
 public:
  TruthTable() = default;
  /// All-zero table. Throws ResourceError when n > caps.max_n.
  explicit TruthTable(int n, const Caps& caps = {});

  static TruthTable from_string(std::string_view bits, const Caps& caps = {});

  int dimension() const { return n_; }
  std::uint64_t length() const { return std::uint64_t{1} << n_; }

  bool get(std::uint64_t index) const { return (words_[index >> 6] >> (index & 63)) & 1u; }
  void set(std::uint64_t index, bool value);
  bool at(const Assignment& a) const { return get(a.index()); }

  std::uint64_t count_ones() const;
  std::string to_string() const;

  TruthTable operator~() const;
  TruthTable& operator|=(const TruthTable& other);
  TruthTable& operator^=(const TruthTable& other);

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  void clear_tail();

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// values[index(a)] = formula(a) over all 2^n assignments.
TruthTable truth_table(const Term& t, int n, const Caps& caps = {});
TruthTable truth_table(const Dnf& f, int n, const Caps& caps = {});
TruthTable truth_table(const DecisionTree& tree, int n, const Caps& caps = {});

}  // namespace seedlearn
