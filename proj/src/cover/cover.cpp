#include "seedlearn/cover.hpp"

#include <algorithm>
#include <cmath>

#include "seedlearn/errors.hpp"
#include "seedlearn/random.hpp"
#include "seedlearn/seeds.hpp"
#include "seedlearn/term_enum.hpp"
#include "seedlearn/truth_table.hpp"

namespace seedlearn {

CoverResult cover_sample_with_bound(const PartialFn& sample, int q) {
  const int n = sample.dimension();
  CoverResult result;
  result.hypothesis = Dnf(n);
  std::vector<Assignment> remaining = sample.positives();
  const auto& negatives = sample.negatives();

  std::vector<Term> candidates = enumerate_terms(n, q);
  std::vector<char> retired(candidates.size(), 0);
  std::size_t live = candidates.size();
  std::vector<Assignment> hit;

  while (live > 0 && !remaining.empty()) {
    ++result.scans;
    bool progress = false;
    for (std::size_t i = 0; i < candidates.size() && !remaining.empty(); ++i) {
      if (retired[i]) continue;
      const Term& t = candidates[i];
      hit.clear();
      std::copy_if(remaining.begin(), remaining.end(), std::back_inserter(hit),
                   [&](const Assignment& a) { return t.covers(a); });
      if (hit.empty()) continue;
      Term added = closure(hit, n);
      bool clean = std::none_of(negatives.begin(), negatives.end(), [&](const Assignment& z) { return added.covers(z); });
      if (!clean) continue;
      std::erase_if(remaining, [&](const Assignment& a) { return t.covers(a); });
      result.hypothesis.add_term(added);
      result.seeds_used.emplace_back(t, added);
      retired[i] = 1;
      --live;
      progress = true;
    }
    if (!progress) break;
  }
  result.leftover_positives = std::move(remaining);
  return result;
}

CoverResult cover_sample(const PartialFn& sample, long s) {
  if (s < 1) throw ContractViolation("cover_sample needs s >= 1");
  int n = sample.dimension();
  return cover_sample_with_bound(sample, n == 0 ? 0 : seed_bound(n, s));
}

ExampleSource uniform_source(const Dnf& target) {
  return [target](Rng& rng) {
    int n = target.dimension();
    Assignment a(n, static_cast<std::uint32_t>(rng()) & low_mask(n));
    return std::pair{a, target.eval(a)};
  };
}

ExampleSource product_source(const Dnf& target, std::vector<double> p) {
  if (static_cast<int>(p.size()) != target.dimension()) throw ContractViolation("product_source: need one bias per variable");
  return [target, p = std::move(p)](Rng& rng) {
    std::uint32_t bits = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (uniform_real(rng) < p[i]) bits |= std::uint32_t{1} << i;
    }
    Assignment a(target.dimension(), bits);
    return std::pair{a, target.eval(a)};
  };
}

std::uint64_t pac_sample_size(int n, long s, double eps, double delta) {
  if (!(eps > 0 && eps < 1 && delta > 0 && delta < 1)) throw ContractViolation("need 0 < eps, delta < 1");
  int q = n == 0 ? 0 : seed_bound(n, s);
  double classes = static_cast<double>(count_terms(n, q)) * n * std::log(3.0);
  return static_cast<std::uint64_t>(std::ceil((classes + std::log(1.0 / delta)) / eps));
}

PacResult pac_learn(const ExampleSource& source, int n, long s, double eps, double delta, Rng& rng, const Caps& caps) {
  PacResult out;
  out.m = pac_sample_size(n, s, eps, delta);
  if (out.m > caps.max_samples) {
    throw ResourceError("PAC sample size " + std::to_string(out.m) + " exceeds cap " + std::to_string(caps.max_samples));
  }
  std::vector<Assignment> pos;
  std::vector<Assignment> neg;
  for (std::uint64_t i = 0; i < out.m; ++i) {
    auto [a, label] = source(rng);
    if (a.dimension() != n) throw ContractViolation("example source produced the wrong dimension");
    (label ? pos : neg).push_back(a);
  }
  out.cover = cover_sample(PartialFn(n, std::move(pos), std::move(neg)), s);
  if (out.cover.success()) out.hypothesis = out.cover.hypothesis;
  return out;
}

double exact_error(const Dnf& h, const Dnf& target, const std::vector<double>& p, const Caps& caps) {
  int n = target.dimension();
  TruthTable diff = truth_table(h, n, caps);
  diff ^= truth_table(target, n, caps);
  if (p.empty()) return static_cast<double>(diff.count_ones()) / static_cast<double>(diff.length());
  double err = 0;
  for (std::uint64_t i = 0; i < diff.length(); ++i) {
    if (!diff.get(i)) continue;
    Assignment a = Assignment::from_index(n, i);
    double w = 1;
    for (int v = 1; v <= n; ++v) w *= a[v] ? p[static_cast<std::size_t>(v - 1)] : 1 - p[static_cast<std::size_t>(v - 1)];
    err += w;
  }
  return err;
}

}  // namespace seedlearn
