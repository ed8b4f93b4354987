#include "seedlearn/teacher.hpp"

#include "seedlearn/errors.hpp"

namespace seedlearn {

namespace {

TruthTable disagreement(const Dnf& h, const TruthTable& target, const Caps& caps) {
  if (h.dimension() != target.dimension()) throw ProtocolError("hypothesis dimension does not match the target");
  TruthTable diff = truth_table(h, target.dimension(), caps);
  diff ^= target;
  return diff;
}

}  // namespace

std::optional<LabeledExample> LexTeacher::answer(const Dnf& hypothesis) {
  TruthTable diff = disagreement(hypothesis, target_, caps_);
  for (std::uint64_t i = 0; i < diff.length(); ++i) {
    if (diff.get(i)) return LabeledExample{Assignment::from_index(target_.dimension(), i), target_.get(i)};
  }
  return std::nullopt;
}

std::optional<LabeledExample> RandomTeacher::answer(const Dnf& hypothesis) {
  TruthTable diff = disagreement(hypothesis, target_, caps_);
  std::uint64_t count = diff.count_ones();
  if (count == 0) return std::nullopt;
  std::uint64_t pick = uniform_int(rng_, count);
  for (std::uint64_t i = 0; i < diff.length(); ++i) {
    if (diff.get(i) && pick-- == 0) return LabeledExample{Assignment::from_index(target_.dimension(), i), target_.get(i)};
  }
  throw InternalError("random teacher lost its counterexample");
}

}  // namespace seedlearn
