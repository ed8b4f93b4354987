#include "seedlearn/truth_table.hpp"

#include <bit>

#include "seedlearn/decision_tree.hpp"
#include "seedlearn/dnf.hpp"
#include "seedlearn/errors.hpp"
#include "seedlearn/term.hpp"

namespace seedlearn {

namespace {

// Variable mask (x_i at bit i-1) to index-space mask (x_1 most significant).
std::uint64_t to_index_mask(std::uint32_t mask, int n) {
  return Assignment(n, mask & low_mask(n)).index();
}

void fill_term(TruthTable& table, const Term& t) {
  if (!t.satisfiable()) return;
  int n = table.dimension();
  std::uint64_t base = to_index_mask(t.positive_mask(), n);
  std::uint64_t free = to_index_mask(~t.var_mask() & low_mask(n), n);
  // Walk every submask of the free variables.
  std::uint64_t sub = 0;
  do {
    table.set(base | sub, true);
    sub = (sub - free) & free;
  } while (sub != 0);
}

}  // namespace

TruthTable::TruthTable(int n, const Caps& caps) : n_(n) {
  if (n < 0) throw ContractViolation("negative dimension");
  if (n > caps.max_n || n > kMaxVars) {
    throw ResourceError("truth table over " + std::to_string(n) + " variables exceeds cap " +
                        std::to_string(caps.max_n));
  }
  words_.assign(static_cast<std::size_t>((length() + 63) / 64), 0);
}

TruthTable TruthTable::from_string(std::string_view bits, const Caps& caps) {
  int n = std::countr_zero(bits.size());
  if (bits.empty() || (std::size_t{1} << n) != bits.size()) {
    throw ContractViolation("truth table length must be a power of two");
  }
  TruthTable t(n, caps);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') throw ContractViolation("bad truth table character");
    t.set(i, bits[i] == '1');
  }
  return t;
}

void TruthTable::set(std::uint64_t index, bool value) {
  std::uint64_t bit = std::uint64_t{1} << (index & 63);
  if (value) {
    words_[index >> 6] |= bit;
  } else {
    words_[index >> 6] &= ~bit;
  }
}

std::uint64_t TruthTable::count_ones() const {
  std::uint64_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

std::string TruthTable::to_string() const {
  std::string out(static_cast<std::size_t>(length()), '0');
  for (std::uint64_t i = 0; i < length(); ++i) {
    if (get(i)) out[i] = '1';
  }
  return out;
}

void TruthTable::clear_tail() {
  if (length() < 64) words_.front() &= (std::uint64_t{1} << length()) - 1;
}

TruthTable TruthTable::operator~() const {
  TruthTable out = *this;
  for (auto& w : out.words_) w = ~w;
  out.clear_tail();
  return out;
}

TruthTable& TruthTable::operator|=(const TruthTable& other) {
  if (other.n_ != n_) throw ContractViolation("truth table dimension mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

TruthTable& TruthTable::operator^=(const TruthTable& other) {
  if (other.n_ != n_) throw ContractViolation("truth table dimension mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

TruthTable truth_table(const Term& t, int n, const Caps& caps) {
  if (t.max_var() > n) throw ContractViolation("term mentions variables beyond n");
  TruthTable table(n, caps);
  fill_term(table, t);
  return table;
}

TruthTable truth_table(const Dnf& f, int n, const Caps& caps) {
  if (f.dimension() > n) throw ContractViolation("formula dimension exceeds n");
  TruthTable table(n, caps);
  for (const Term& t : f.terms()) fill_term(table, t);
  return table;
}

TruthTable truth_table(const DecisionTree& tree, int n, const Caps& caps) {
  if (tree.max_var() > n) throw ContractViolation("tree tests variables beyond n");
  TruthTable table(n, caps);
  for (std::uint64_t i = 0; i < table.length(); ++i) {
    table.set(i, tree.eval(Assignment::from_index(n, i)));
  }
  return table;
}

}  // namespace seedlearn
