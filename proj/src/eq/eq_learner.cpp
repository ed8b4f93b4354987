#include "seedlearn/eq_learner.hpp"

#include <algorithm>
#include <unordered_set>

#include "seedlearn/errors.hpp"
#include "seedlearn/seeds.hpp"
#include "seedlearn/term_enum.hpp"

namespace seedlearn {

EqState::EqState(int n, long s, const Caps& caps) : n_(n), s_(s) {
  if (n < 1 || s < 1) throw ContractViolation("EqState needs n >= 1 and s >= 1");
  q_ = seed_bound(n, s);
  std::uint64_t count = count_terms(n, q_);
  if (count > caps.max_class) {
    throw ResourceError("|Q| = " + std::to_string(count) + " exceeds cap " + std::to_string(caps.max_class));
  }
  seeds_ = enumerate_terms(n, q_);
  index_.reserve(seeds_.size());
  for (std::uint32_t i = 0; i < seeds_.size(); ++i) index_.emplace(seeds_[i], i);
}

std::uint32_t EqState::seed_index(const Term& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) throw ContractViolation(t.to_string() + " is not a potential seed");
  return it->second;
}

bool EqState::is_live(std::uint64_t level, std::uint32_t seed) const {
  auto it = removed_.find(level);
  return it == removed_.end() || !it->second.contains(seed);
}

Term EqState::pair_term(std::uint64_t level, std::uint32_t seed) const {
  auto it = modified_.find({level, seed});
  return it == modified_.end() ? Term::all_literals(n_) : it->second;
}

std::optional<EqState::Update> EqState::apply_counterexample(const Assignment& e, bool is_positive) {
  if (e.dimension() != n_) throw ContractViolation("counterexample dimension mismatch");
  Update update;
  update.positive = is_positive;

  if (!is_positive) {
    for (auto it = modified_.begin(); it != modified_.end();) {
      if (it->second.satisfiable() && it->second.covers(e)) {
        removed_[it->first.level].insert(it->first.seed);
        ++removed_count_;
        update.removed.push_back(it->first);
        it = modified_.erase(it);
      } else {
        ++it;
      }
    }
    return update;
  }

  std::vector<std::uint32_t> covering;
  for (const Term& t : terms_covering(e, q_)) covering.push_back(seed_index(t));

  // Levels without removals keep every pair live, and the empty seed covers
  // everything, so only levels that lost pairs need checking.
  std::uint64_t level = 1;
  for (; level <= levels(); ++level) {
    auto it = removed_.find(level);
    if (it == removed_.end()) break;
    bool any_live = std::any_of(covering.begin(), covering.end(),
                                [&](std::uint32_t seed) { return !it->second.contains(seed); });
    if (any_live) break;
  }
  if (level > levels()) return std::nullopt;

  update.level = level;
  for (std::uint32_t seed : covering) {
    if (!is_live(level, seed)) continue;
    auto [it, inserted] = modified_.try_emplace({level, seed}, Term::all_literals(n_));
    it->second = it->second.restricted_to(e);
    update.touched.push_back(seed);
  }
  return update;
}

Dnf EqState::hypothesis() const {
  Dnf h(n_);
  std::unordered_set<Term, TermHash> seen;
  for (const auto& [key, term] : modified_) {
    if (term.satisfiable() && seen.insert(term).second) h.add_term(term);
  }
  return h;
}

std::uint64_t eq_query_ceiling(int n, std::uint64_t q_count) {
  unsigned __int128 sq = static_cast<unsigned __int128>(q_count) * q_count;
  unsigned __int128 total = sq * (2 * static_cast<unsigned>(n) + 1) + 1;
  return total > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(total);
}

EqResult learn_eq(Teacher& teacher, int n, long s, EqOptions options, const Caps& caps) {
  EqResult result;
  long guess = options.auto_s ? 1 : s;
  std::uint64_t query_index = 0;
  for (;;) {
    EqState state(n, guess, caps);
    const std::uint64_t ceiling = eq_query_ceiling(n, state.levels());
    std::uint64_t asked = 0;
    Dnf h(n);
    bool restart = false;
    while (!restart) {
      if (++asked > ceiling) throw InternalError("query ceiling exceeded");
      QueryRecord record{++query_index, h.size(), std::nullopt, false, guess};
      std::optional<LabeledExample> answer = teacher.answer(h);
      if (!answer) {
        result.log.push_back(record);
        result.hypothesis = h;
        result.s_used = guess;
        return result;
      }
      if (answer->label == h.eval(answer->point)) {
        throw ProtocolError("teacher returned " + answer->point.to_string() + ", which is not a counterexample");
      }
      record.counterexample = answer->point;
      record.label = answer->label;
      result.log.push_back(record);

      if (!state.apply_counterexample(answer->point, answer->label)) {
        if (!options.auto_s) {
          throw InternalError("positive counterexample " + answer->point.to_string() +
                              " found no level; the target has more than s terms");
        }
        guess *= 2;
        ++result.restarts;
        restart = true;
        continue;
      }
      h = state.hypothesis();
    }
  }
}

}  // namespace seedlearn
