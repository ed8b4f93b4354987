#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "seedlearn/caps.hpp"
#include "seedlearn/dnf.hpp"
#include "seedlearn/random.hpp"
#include "seedlearn/teacher.hpp"
#include "seedlearn/truth_table.hpp"

namespace seedlearn {

using Rational = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Monotone target classes

/// All monotone DNFs over x1..xn with exactly t distinct terms of exactly s
/// distinct variables, in lexicographic order of their term-index
/// combinations (terms themselves ordered by variable combination).
struct MonotoneClass {
  int n = 0;
  int t = 0;
  int s = 0;
  std::vector<std::uint32_t> terms;                  // the C(n,s) term masks
  std::vector<std::vector<std::uint32_t>> formulas;  // indices into terms

  std::size_t size() const { return formulas.size(); }
  bool eval(std::size_t formula, const Assignment& a) const;
  Dnf formula(std::size_t i) const;
};

/// C(C(n,s), t) formulas; ResourceError beyond caps.max_class.
MonotoneClass enumerate_M(int n, int t, int s, const Caps& caps = {});

/// Exact binomial coefficient.
boost::multiprecision::cpp_int binomial(std::int64_t n, std::int64_t k);

// ---------------------------------------------------------------------------
// Sparse positive or dense negative assignment

struct PositiveSparse {
  Assignment y;
};
struct NegativeDense {
  Assignment z;
  std::vector<int> hitting_set;  // V: the variables z sets to 0
};
using Dichotomy = std::variant<PositiveSparse, NegativeDense>;

/// Greedy hitting set: repeatedly takes the variable occurring unnegated in
/// the most remaining terms (lowest index on ties) and drops the terms it
/// hits. Throws ContractViolation if some term has no unnegated variable.
std::vector<int> greedy_hitting_set(const Dnf& f);

/// For f with at least one satisfiable term and r >= 1, returns either a
/// positive y with |y| <= r sqrt(n) or a negative z that is all ones off a
/// nonempty hitting set V.
Dichotomy sparse_or_dense(const Dnf& f, double r);

/// Checks the returned value against the dichotomy's guarantees, using the
/// non-strict lower bound |z| >= n - sqrt(n) ln T / r - 1.
bool dichotomy_holds(const Dnf& f, double r, const Dichotomy& d);

/// 1 + floor(log_b T) with b = 1 / (1 - r / sqrt(n)).
int hitting_set_bound(int n, int terms, double r);

// ---------------------------------------------------------------------------
// Fraction of M(n,t,s) that is 0 on a point

struct Fact1Result {
  Rational bound;  // (1 - (max(0, |z| - s) / n)^s)^t
  Rational exact;  // fraction of M(n,t,s) with phi(z) = 0
  bool ok = false; // exact <= bound
};

/// ContractViolation when t > C(n,s) - C(|z|,s).
Fact1Result fact1_check(int n, int t, int s, const Assignment& z, const Caps& caps = {});

// ---------------------------------------------------------------------------
// Version spaces over a finite class

/// A fixed, explicitly tabulated list of candidate targets.
class FiniteClass {
 public:
  FiniteClass(int n, std::vector<Dnf> formulas, const Caps& caps = {});
  static FiniteClass from(const MonotoneClass& m, const Caps& caps = {});

  int dimension() const { return n_; }
  std::size_t size() const { return formulas_.size(); }
  const Dnf& formula(std::size_t i) const { return formulas_[i]; }
  const TruthTable& table(std::size_t i) const { return tables_[i]; }

 private:
  int n_;
  std::vector<Dnf> formulas_;
  std::vector<TruthTable> tables_;
};

struct Elimination {
  Dnf query;
  Assignment counterexample;
  bool label = false;
  std::size_t before = 0;
  std::size_t after = 0;
};

/// Members of a FiniteClass consistent with every counterexample so far.
class VersionSpace {
 public:
  explicit VersionSpace(const FiniteClass& universe);

  const FiniteClass& universe() const { return *universe_; }
  const std::vector<std::size_t>& remaining() const { return remaining_; }
  const std::vector<Elimination>& history() const { return history_; }
  std::size_t size() const { return remaining_.size(); }

  /// Keeps the members labeling `a` with `label`. ProtocolError if none do.
  std::size_t apply(const Dnf& query, const Assignment& a, bool label);
  /// Number of remaining members that output 1 on index i.
  std::vector<std::uint64_t> ones_per_point() const;

 private:
  const FiniteClass* universe_;
  std::vector<std::size_t> remaining_;
  std::vector<Elimination> history_;
};

/// The assignment on which the most remaining members disagree with h
/// (smallest such point on ties), i.e. the counterexample eliminating the
/// fewest members. None when h agrees with every member everywhere.
std::optional<Assignment> fingerprint_counterexample(const VersionSpace& space, const Dnf& h);

/// Adversary that answers each query with fingerprint_counterexample over
/// its own copy of the version space.
class FingerprintTeacher : public Teacher {
 public:
  explicit FingerprintTeacher(const FiniteClass& universe) : space_(universe) {}
  std::optional<LabeledExample> answer(const Dnf& hypothesis) override;
  const VersionSpace& space() const { return space_; }

 private:
  VersionSpace space_;
};

// ---------------------------------------------------------------------------
// Majority votes and the halving learner

/// DNF for Maj(f_1..f_t) (1 iff at least t/2 inputs are 1): one product per
/// ceil(t/2)-subset of slots, distributed into terms. Contradictory and
/// repeated terms are dropped. ContractViolation on an empty list.
Dnf maj_to_dnf(std::span<const Dnf> fs);

struct HalvingOptions {
  int k = 1;               // Z = {a : N_{a,min} < N / n^k}
  int t_sample = 0;        // 0 means ceil(3n / (k log2 n)), at least 1
  std::uint64_t max_retries = 10'000;
};

struct ShrinkRecord {
  std::size_t before = 0;
  std::size_t after = 0;
  bool in_z = false;          // counterexample was in Z
  std::uint64_t retries = 0;  // samples drawn before one agreed on Z
  bool fallback = false;      // exact majority used instead of a sample
  int hyp_terms = 0;
  std::optional<Assignment> counterexample;  // none on the final yes
};

struct HalvingResult {
  Dnf hypothesis;
  std::vector<ShrinkRecord> log;
  std::size_t final_con = 0;
};

int default_t_sample(int n, int k);

/// Each query is the majority of t_sample members drawn from the current
/// version space, redrawn until it agrees with the majority of the whole
/// version space on Z. Stops on "yes".
HalvingResult halving_learn(const FiniteClass& universe, Teacher& teacher, const HalvingOptions& options, Rng& rng);

}  // namespace seedlearn
