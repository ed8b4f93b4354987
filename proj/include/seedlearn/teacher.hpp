#pragma once

#include <optional>

#include "seedlearn/dnf.hpp"
#include "seedlearn/random.hpp"
#include "seedlearn/truth_table.hpp"

namespace seedlearn {

struct LabeledExample {
  Assignment point;
  bool label = false;
};

/// Answers equivalence queries: none means "yes", otherwise a point where
/// the hypothesis and the target disagree, with the target's label.
class Teacher {
 public:
  virtual ~Teacher() = default;
  virtual std::optional<LabeledExample> answer(const Dnf& hypothesis) = 0;
};

/// Honest teacher returning the lexicographically smallest counterexample.
class LexTeacher : public Teacher {
 public:
  explicit LexTeacher(TruthTable target, Caps caps = {}) : target_(std::move(target)), caps_(caps) {}
  std::optional<LabeledExample> answer(const Dnf& hypothesis) override;

 private:
  TruthTable target_;
  Caps caps_;
};

/// Honest teacher returning a uniformly random counterexample.
class RandomTeacher : public Teacher {
 public:
  RandomTeacher(TruthTable target, std::uint64_t seed, Caps caps = {})
      : target_(std::move(target)), rng_(seed), caps_(caps) {}
  std::optional<LabeledExample> answer(const Dnf& hypothesis) override;

 private:
  TruthTable target_;
  Rng rng_;
  Caps caps_;
};

}  // namespace seedlearn
