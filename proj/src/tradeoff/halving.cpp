#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "seedlearn/errors.hpp"
#include "seedlearn/tradeoff.hpp"

namespace seedlearn {

FiniteClass::FiniteClass(int n, std::vector<Dnf> formulas, const Caps& caps) : n_(n), formulas_(std::move(formulas)) {
  if (formulas_.size() > caps.max_class) throw ResourceError("finite class exceeds cap");
  tables_.reserve(formulas_.size());
  for (const Dnf& f : formulas_) tables_.push_back(truth_table(f, n_, caps));
}

FiniteClass FiniteClass::from(const MonotoneClass& m, const Caps& caps) {
  std::vector<Dnf> formulas;
  formulas.reserve(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) formulas.push_back(m.formula(i));
  return {m.n, std::move(formulas), caps};
}

VersionSpace::VersionSpace(const FiniteClass& universe) : universe_(&universe) {
  remaining_.resize(universe.size());
  for (std::size_t i = 0; i < remaining_.size(); ++i) remaining_[i] = i;
}

std::size_t VersionSpace::apply(const Dnf& query, const Assignment& a, bool label) {
  std::size_t before = remaining_.size();
  std::erase_if(remaining_, [&](std::size_t i) { return universe_->table(i).at(a) != label; });
  if (remaining_.empty()) throw ProtocolError("counterexample " + a.to_string() + " is inconsistent with every candidate");
  history_.push_back({query, a, label, before, remaining_.size()});
  return before - remaining_.size();
}

std::vector<std::uint64_t> VersionSpace::ones_per_point() const {
  const std::uint64_t len = std::uint64_t{1} << universe_->dimension();
  std::vector<std::uint64_t> ones(len, 0);
  for (std::size_t i : remaining_) {
    const TruthTable& t = universe_->table(i);
    for (std::uint64_t x = 0; x < len; ++x) ones[x] += t.get(x);
  }
  return ones;
}

std::optional<Assignment> fingerprint_counterexample(const VersionSpace& space, const Dnf& h) {
  const int n = space.universe().dimension();
  TruthTable ht = truth_table(h, n);
  std::vector<std::uint64_t> ones = space.ones_per_point();
  const std::uint64_t total = space.size();
  std::uint64_t best = 0;
  std::uint64_t best_index = 0;
  for (std::uint64_t x = 0; x < ones.size(); ++x) {
    std::uint64_t disagree = ht.get(x) ? total - ones[x] : ones[x];
    if (disagree > best) {
      best = disagree;
      best_index = x;
    }
  }
  if (best == 0) return std::nullopt;
  return Assignment::from_index(n, best_index);
}

std::optional<LabeledExample> FingerprintTeacher::answer(const Dnf& hypothesis) {
  std::optional<Assignment> a = fingerprint_counterexample(space_, hypothesis);
  if (!a) return std::nullopt;
  bool label = !hypothesis.eval(*a);
  space_.apply(hypothesis, *a, label);
  return LabeledExample{*a, label};
}

Dnf maj_to_dnf(std::span<const Dnf> fs) {
  if (fs.empty()) throw ContractViolation("maj_to_dnf needs at least one formula");
  const int n = fs.front().dimension();
  for (const Dnf& f : fs) {
    if (f.dimension() != n) throw ContractViolation("maj_to_dnf: dimension mismatch");
  }
  const int t = static_cast<int>(fs.size());
  const int need = (t + 1) / 2;  // at least t/2 ones

  Dnf out(n);
  std::unordered_set<Term, TermHash> seen;
  std::vector<int> slots(static_cast<std::size_t>(need));
  for (int i = 0; i < need; ++i) slots[static_cast<std::size_t>(i)] = i;
  for (;;) {
    // Distribute: one term from each chosen slot.
    std::vector<Term> products{Term{}};
    for (int slot : slots) {
      std::vector<Term> next;
      for (const Term& p : products) {
        for (const Term& term : fs[static_cast<std::size_t>(slot)].terms()) {
          Term joined = p.conjoin(term);
          if (joined.satisfiable()) next.push_back(joined);
        }
      }
      products = std::move(next);
      if (products.empty()) break;
    }
    for (const Term& p : products) {
      if (seen.insert(p).second) out.add_term(p);
    }
    int i = need - 1;
    while (i >= 0 && slots[static_cast<std::size_t>(i)] == t - need + i) --i;
    if (i < 0) break;
    ++slots[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < need; ++j) slots[static_cast<std::size_t>(j)] = slots[static_cast<std::size_t>(j) - 1] + 1;
  }
  return out;
}

int default_t_sample(int n, int k) {
  if (n < 2 || k < 1) return 1;
  return std::max(1, static_cast<int>(std::ceil(3.0 * n / (k * std::log2(static_cast<double>(n))))));
}

HalvingResult halving_learn(const FiniteClass& universe, Teacher& teacher, const HalvingOptions& options, Rng& rng) {
  if (universe.size() == 0) throw ContractViolation("halving_learn needs a nonempty class");
  if (options.k < 1) throw ContractViolation("halving_learn needs k >= 1");
  const int n = universe.dimension();
  const int t_sample = options.t_sample > 0 ? options.t_sample : default_t_sample(n, options.k);
  const double n_pow_k = std::pow(static_cast<double>(n), options.k);

  VersionSpace con(universe);
  HalvingResult result;
  for (;;) {
    const std::size_t before = con.size();
    ShrinkRecord record;
    record.before = before;
    Dnf h(n);
    std::vector<std::uint64_t> ones = con.ones_per_point();
    auto in_z = [&](std::uint64_t x) {
      std::uint64_t minority = std::min<std::uint64_t>(ones[x], before - ones[x]);
      return static_cast<double>(minority) < static_cast<double>(before) / n_pow_k;
    };

    if (before == 1) {
      h = universe.formula(con.remaining().front());
    } else {
      auto full_majority = [&](std::uint64_t x) { return 2 * ones[x] >= before; };
      bool found = false;
      std::vector<Dnf> picks;
      while (!found && record.retries < options.max_retries) {
        ++record.retries;
        picks.clear();
        std::vector<std::size_t> chosen;
        for (int i = 0; i < t_sample; ++i) chosen.push_back(con.remaining()[uniform_int(rng, before)]);
        found = true;
        for (std::uint64_t x = 0; x < ones.size() && found; ++x) {
          if (!in_z(x)) continue;
          int votes = 0;
          for (std::size_t c : chosen) votes += universe.table(c).get(x);
          found = (2 * votes >= t_sample) == full_majority(x);
        }
        if (found) {
          for (std::size_t c : chosen) picks.push_back(universe.formula(c));
        }
      }
      if (found) {
        h = maj_to_dnf(picks);
      } else {
        // Majority of the whole version space, written out by minterms.
        record.fallback = true;
        for (std::uint64_t x = 0; x < ones.size(); ++x) {
          if (full_majority(x)) h.add_term(Term::minterm(Assignment::from_index(n, x)));
        }
      }
    }

    record.hyp_terms = h.size();
    std::optional<LabeledExample> answer = teacher.answer(h);
    if (!answer) {
      record.after = before;
      result.log.push_back(record);
      result.hypothesis = h;
      result.final_con = before;
      return result;
    }
    if (answer->label == h.eval(answer->point)) throw ProtocolError("teacher answer is not a counterexample");
    record.counterexample = answer->point;
    record.in_z = in_z(answer->point.index());
    con.apply(h, answer->point, answer->label);
    record.after = con.size();
    result.log.push_back(record);
    if (record.after >= before) throw InternalError("a counterexample failed to shrink the version space");
  }
}

}  // namespace seedlearn
