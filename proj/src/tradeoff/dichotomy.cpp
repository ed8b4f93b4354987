#include <algorithm>
#include <bit>
#include <cmath>

#include "seedlearn/errors.hpp"
#include "seedlearn/tradeoff.hpp"

namespace seedlearn {

namespace {

std::vector<Term> satisfiable_terms(const Dnf& f) {
  std::vector<Term> out;
  for (const Term& t : f.terms()) {
    if (t.satisfiable() && std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  }
  return out;
}

constexpr double kSlack = 1e-9;

}  // namespace

std::vector<int> greedy_hitting_set(const Dnf& f) {
  std::vector<Term> open = satisfiable_terms(f);
  std::vector<int> chosen;
  while (!open.empty()) {
    int best = 0;
    int best_count = 0;
    for (int v = 1; v <= f.dimension(); ++v) {
      std::uint32_t bit = std::uint32_t{1} << (v - 1);
      int count = static_cast<int>(
          std::count_if(open.begin(), open.end(), [&](const Term& t) { return (t.positive_mask() & bit) != 0; }));
      if (count > best_count) {
        best = v;
        best_count = count;
      }
    }
    if (best == 0) throw ContractViolation("a term has no unnegated variable to hit");
    chosen.push_back(best);
    std::uint32_t bit = std::uint32_t{1} << (best - 1);
    std::erase_if(open, [&](const Term& t) { return (t.positive_mask() & bit) != 0; });
  }
  return chosen;
}

int hitting_set_bound(int n, int terms, double r) {
  double alpha = r / std::sqrt(static_cast<double>(n));
  if (!(alpha > 0 && alpha < 1)) throw ContractViolation("hitting_set_bound needs 0 < r/sqrt(n) < 1");
  double b = 1.0 / (1.0 - alpha);
  return 1 + static_cast<int>(std::floor(std::log(static_cast<double>(terms)) / std::log(b) + kSlack));
}

Dichotomy sparse_or_dense(const Dnf& f, double r) {
  if (r < 1) throw ContractViolation("sparse_or_dense needs r >= 1");
  std::vector<Term> terms = satisfiable_terms(f);
  if (terms.empty()) throw ContractViolation("sparse_or_dense needs a satisfiable term");
  const int n = f.dimension();
  const double limit = r * std::sqrt(static_cast<double>(n));

  if (r >= std::sqrt(static_cast<double>(n))) return PositiveSparse{Assignment(n, terms.front().positive_mask())};
  for (const Term& t : terms) {
    if (std::popcount(t.positive_mask()) < limit) return PositiveSparse{Assignment(n, t.positive_mask())};
  }
  std::vector<int> v = greedy_hitting_set(Dnf(n, terms));
  std::uint32_t bits = low_mask(n);
  for (int var : v) bits &= ~(std::uint32_t{1} << (var - 1));
  std::sort(v.begin(), v.end());
  return NegativeDense{Assignment(n, bits), v};
}

bool dichotomy_holds(const Dnf& f, double r, const Dichotomy& d) {
  const int n = f.dimension();
  const double root = std::sqrt(static_cast<double>(n));
  if (const auto* p = std::get_if<PositiveSparse>(&d)) {
    return f.eval(p->y) && p->y.weight() <= r * root + kSlack;
  }
  const auto& neg = std::get<NegativeDense>(d);
  std::vector<Term> terms = satisfiable_terms(f);
  const auto big_t = static_cast<double>(terms.size());
  if (f.eval(neg.z) || neg.z.weight() >= n || neg.hitting_set.empty()) return false;
  std::uint32_t expect = low_mask(n);
  for (int var : neg.hitting_set) expect &= ~(std::uint32_t{1} << (var - 1));
  if (neg.z.bits() != expect) return false;
  if (neg.z.weight() < n - root * std::log(big_t) / r - 1 - kSlack) return false;
  if (r < root && static_cast<int>(neg.hitting_set.size()) > hitting_set_bound(n, static_cast<int>(terms.size()), r)) {
    return false;
  }
  return true;
}

}  // namespace seedlearn
