#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "seedlearn/caps.hpp"
#include "seedlearn/dnf.hpp"
#include "seedlearn/teacher.hpp"

namespace seedlearn {

/// State of the proper equivalence-query learner.
///
/// Conceptually there are |Q| levels H_1..H_|Q|, each holding one pair
/// (T, T') per potential seed T (every term of size <= q). T' starts as the
/// all-literals term, which is unsatisfiable and therefore invisible to both
/// hypotheses and negative counterexamples, so only pairs that have been
/// touched are stored. Levels are 1-based, seed indices 0-based into seeds().
class EqState {
 public:
  struct Key {
    std::uint64_t level;
    std::uint32_t seed;
    friend auto operator<=>(const Key&, const Key&) = default;
  };

  struct Update {
    bool positive = false;
    std::uint64_t level = 0;        // level updated by a positive counterexample
    std::vector<std::uint32_t> touched;  // seeds updated at that level
    std::vector<Key> removed;       // pairs dropped by a negative counterexample
  };

  EqState(int n, long s, const Caps& caps = {});

  int dimension() const { return n_; }
  long s() const { return s_; }
  int q() const { return q_; }
  std::uint64_t levels() const { return seeds_.size(); }
  const std::vector<Term>& seeds() const { return seeds_; }
  std::uint32_t seed_index(const Term& t) const;

  /// Positive: at the lowest level with a live pair whose T covers e, delete
  /// the literals falsified by e from T' of every such pair. Negative: drop
  /// every live pair whose satisfiable T' covers e, at every level.
  /// Returns none for a positive that finds no level (s was too small).
  std::optional<Update> apply_counterexample(const Assignment& e, bool is_positive);

  /// OR of the distinct satisfiable T' over live pairs, ordered by
  /// (level, seed index).
  Dnf hypothesis() const;

  bool is_live(std::uint64_t level, std::uint32_t seed) const;
  /// Current T' of a live pair (the all-literals term if untouched).
  Term pair_term(std::uint64_t level, std::uint32_t seed) const;
  const std::map<Key, Term>& modified() const { return modified_; }
  std::size_t removed_count() const { return removed_count_; }

 private:
  int n_;
  long s_;
  int q_;
  std::vector<Term> seeds_;
  std::unordered_map<Term, std::uint32_t, TermHash> index_;
  std::map<Key, Term> modified_;
  std::map<std::uint64_t, std::set<std::uint32_t>> removed_;
  std::size_t removed_count_ = 0;
};

struct QueryRecord {
  std::uint64_t query_index = 0;  // 1-based
  int hyp_terms = 0;
  std::optional<Assignment> counterexample;  // none on the final "yes"
  bool label = false;
  long s = 0;
};

struct EqOptions {
  bool auto_s = false;  // start at s = 1 and double on failure
};

struct EqResult {
  Dnf hypothesis;
  std::vector<QueryRecord> log;
  long s_used = 0;
  int restarts = 0;
};

/// 2n|Q|^2 + |Q|^2 + 1, saturating at UINT64_MAX.
std::uint64_t eq_query_ceiling(int n, std::uint64_t q_count);

/// Runs the learner against `teacher` until it answers yes. With
/// options.auto_s the size guess starts at 1 and doubles whenever a positive
/// counterexample finds no level. Throws ProtocolError if the teacher's label
/// agrees with the hypothesis, InternalError if the query ceiling is hit.
EqResult learn_eq(Teacher& teacher, int n, long s, EqOptions options = {}, const Caps& caps = {});

}  // namespace seedlearn
