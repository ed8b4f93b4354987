#include "seedlearn/partial_fn.hpp"

#include <algorithm>

#include "seedlearn/errors.hpp"

namespace seedlearn {

namespace {

void normalize(std::vector<Assignment>& points, int n) {
  for (const Assignment& a : points) {
    if (a.dimension() != n) throw ContractViolation("partial function: point " + a.to_string() + " has wrong dimension");
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

bool contains(const std::vector<Assignment>& sorted, const Assignment& a) {
  return std::binary_search(sorted.begin(), sorted.end(), a);
}

}  // namespace

PartialFn::PartialFn(int n, std::vector<Assignment> positives, std::vector<Assignment> negatives)
    : n_(n), positives_(std::move(positives)), negatives_(std::move(negatives)) {
  normalize(positives_, n_);
  normalize(negatives_, n_);
  std::vector<Assignment> both;
  std::set_intersection(positives_.begin(), positives_.end(), negatives_.begin(), negatives_.end(),
                        std::back_inserter(both));
  if (!both.empty()) throw ContractViolation("point " + both.front().to_string() + " is labeled both 0 and 1");
}

PartialFn PartialFn::from_table(const TruthTable& table) {
  int n = table.dimension();
  std::vector<Assignment> pos;
  std::vector<Assignment> neg;
  for (std::uint64_t i = 0; i < table.length(); ++i) {
    (table.get(i) ? pos : neg).push_back(Assignment::from_index(n, i));
  }
  PartialFn f(n);
  f.positives_ = std::move(pos);  // index order is already lexicographic
  f.negatives_ = std::move(neg);
  return f;
}

bool PartialFn::is_total() const {
  return n_ < 64 && positives_.size() + negatives_.size() == (std::uint64_t{1} << n_);
}

std::optional<bool> PartialFn::value(const Assignment& a) const {
  if (contains(positives_, a)) return true;
  if (contains(negatives_, a)) return false;
  return std::nullopt;
}

PartialFn PartialFn::project(const Term& t) const {
  PartialFn out(n_);
  std::copy_if(positives_.begin(), positives_.end(), std::back_inserter(out.positives_),
               [&](const Assignment& a) { return t.covers(a); });
  std::copy_if(negatives_.begin(), negatives_.end(), std::back_inserter(out.negatives_),
               [&](const Assignment& a) { return t.covers(a); });
  return out;
}

PartialFn PartialFn::without_positives(std::span<const Assignment> removed) const {
  std::vector<Assignment> drop(removed.begin(), removed.end());
  std::sort(drop.begin(), drop.end());
  PartialFn out(n_);
  std::set_difference(positives_.begin(), positives_.end(), drop.begin(), drop.end(),
                      std::back_inserter(out.positives_));
  out.negatives_ = negatives_;
  return out;
}

bool PartialFn::consistent_with(const Dnf& formula) const {
  return std::all_of(positives_.begin(), positives_.end(), [&](const Assignment& a) { return formula.eval(a); }) &&
         std::none_of(negatives_.begin(), negatives_.end(), [&](const Assignment& a) { return formula.eval(a); });
}

bool PartialFn::consistent_with(const Term& monomial) const {
  return std::all_of(positives_.begin(), positives_.end(), [&](const Assignment& a) { return monomial.covers(a); }) &&
         std::none_of(negatives_.begin(), negatives_.end(), [&](const Assignment& a) { return monomial.covers(a); });
}

std::optional<Term> monomial_consistency(const PartialFn& f) {
  Term candidate = closure(f.positives(), f.dimension());
  for (const Assignment& z : f.negatives()) {
    if (candidate.covers(z)) return std::nullopt;
  }
  return candidate;
}

}  // namespace seedlearn
