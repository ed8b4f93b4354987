#include "seedlearn/min_dnf.hpp"

#include <algorithm>
#include <bit>

#include "seedlearn/errors.hpp"

namespace seedlearn {

namespace {

using Bits = std::vector<std::uint64_t>;

bool any(const Bits& b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

int popcount(const Bits& b) {
  int c = 0;
  for (std::uint64_t w : b) c += std::popcount(w);
  return c;
}

class CoverSearch {
 public:
  CoverSearch(std::size_t elements, std::vector<Bits> sets) : sets_(std::move(sets)), by_element_(elements) {
    for (std::size_t s = 0; s < sets_.size(); ++s) {
      for (std::size_t e = 0; e < elements; ++e) {
        if ((sets_[s][e >> 6] >> (e & 63)) & 1u) by_element_[e].push_back(s);
      }
      max_cover_ = std::max(max_cover_, popcount(sets_[s]));
    }
    // Larger sets first inside each branch.
    for (auto& options : by_element_) {
      std::stable_sort(options.begin(), options.end(),
                       [&](std::size_t a, std::size_t b) { return popcount(sets_[a]) > popcount(sets_[b]); });
    }
  }

  bool solve(const Bits& uncovered, int depth, std::vector<std::size_t>& chosen) const {
    if (!any(uncovered)) return true;
    if (depth == 0 || popcount(uncovered) > depth * max_cover_) return false;
    // Branch on the uncovered element with the fewest covering sets.
    std::size_t best = 0;
    std::size_t best_options = SIZE_MAX;
    for (std::size_t w = 0; w < uncovered.size(); ++w) {
      for (std::uint64_t rest = uncovered[w]; rest != 0; rest &= rest - 1) {
        std::size_t e = w * 64 + static_cast<std::size_t>(std::countr_zero(rest));
        if (by_element_[e].size() < best_options) {
          best = e;
          best_options = by_element_[e].size();
        }
      }
    }
    for (std::size_t s : by_element_[best]) {
      Bits next = uncovered;
      for (std::size_t w = 0; w < next.size(); ++w) next[w] &= ~sets_[s][w];
      chosen.push_back(s);
      if (solve(next, depth - 1, chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }

 private:
  std::vector<Bits> sets_;
  std::vector<std::vector<std::size_t>> by_element_;
  int max_cover_ = 0;
};

}  // namespace

std::vector<Term> prime_implicants(const PartialFn& f, const Caps& caps) {
  const int n = f.dimension();
  if (n > caps.max_exact_n) {
    throw ResourceError("exhaustive implicant search over " + std::to_string(n) + " variables exceeds cap " +
                        std::to_string(caps.max_exact_n));
  }
  // Labels by variable bits: 0 undefined, 1 positive, 2 negative.
  std::vector<std::uint8_t> label(std::size_t{1} << n, 0);
  for (const Assignment& a : f.positives()) label[a.bits()] = 1;
  for (const Assignment& a : f.negatives()) label[a.bits()] = 2;

  // Ternary index: digit of x_i (weight 3^(i-1)) is 0 for ~x_i, 1 for x_i, 2 for free.
  std::vector<std::size_t> weight(static_cast<std::size_t>(n) + 1, 1);
  for (int i = 1; i <= n; ++i) weight[static_cast<std::size_t>(i)] = weight[static_cast<std::size_t>(i) - 1] * 3;
  const std::size_t total = weight[static_cast<std::size_t>(n)];
  std::vector<std::uint8_t> covers_pos(total, 0);
  std::vector<std::uint8_t> covers_neg(total, 0);
  std::vector<int> digit(static_cast<std::size_t>(n), 0);

  for (std::size_t t = 0; t < total; ++t) {
    if (t > 0) {
      for (std::size_t i = 0; i < digit.size(); ++i) {
        if (++digit[i] < 3) break;
        digit[i] = 0;
      }
    }
    auto free_it = std::find(digit.begin(), digit.end(), 2);
    if (free_it == digit.end()) {
      std::uint32_t bits = 0;
      for (int i = 0; i < n; ++i) {
        if (digit[static_cast<std::size_t>(i)] == 1) bits |= std::uint32_t{1} << i;
      }
      covers_pos[t] = label[bits] == 1;
      covers_neg[t] = label[bits] == 2;
    } else {
      std::size_t w = weight[static_cast<std::size_t>(free_it - digit.begin())];
      covers_pos[t] = covers_pos[t - 2 * w] | covers_pos[t - w];
      covers_neg[t] = covers_neg[t - 2 * w] | covers_neg[t - w];
    }
  }

  std::vector<Term> primes;
  std::fill(digit.begin(), digit.end(), 0);
  for (std::size_t t = 0; t < total; ++t) {
    if (t > 0) {
      for (std::size_t i = 0; i < digit.size(); ++i) {
        if (++digit[i] < 3) break;
        digit[i] = 0;
      }
    }
    if (covers_neg[t] || !covers_pos[t]) continue;
    bool prime = true;
    std::uint32_t pos = 0;
    std::uint32_t neg = 0;
    for (int i = 0; i < n && prime; ++i) {
      int d = digit[static_cast<std::size_t>(i)];
      if (d == 2) continue;
      (d == 1 ? pos : neg) |= std::uint32_t{1} << i;
      if (!covers_neg[t + static_cast<std::size_t>(2 - d) * weight[static_cast<std::size_t>(i)]]) prime = false;
    }
    if (prime) primes.emplace_back(pos, neg);
  }
  std::sort(primes.begin(), primes.end());
  return primes;
}

std::optional<Dnf> exact_min_dnf(const PartialFn& f, std::optional<int> budget, const Caps& caps) {
  const int n = f.dimension();
  if (budget && *budget < 0) return std::nullopt;
  std::vector<Term> primes = prime_implicants(f, caps);
  const auto& pos = f.positives();
  if (pos.empty()) return Dnf(n);

  const std::size_t words = (pos.size() + 63) / 64;
  std::vector<Bits> coverage;
  coverage.reserve(primes.size());
  for (const Term& p : primes) {
    Bits b(words, 0);
    for (std::size_t e = 0; e < pos.size(); ++e) {
      if (p.covers(pos[e])) b[e >> 6] |= std::uint64_t{1} << (e & 63);
    }
    coverage.push_back(std::move(b));
  }
  Bits all(words, 0);
  for (std::size_t e = 0; e < pos.size(); ++e) all[e >> 6] |= std::uint64_t{1} << (e & 63);

  CoverSearch search(pos.size(), std::move(coverage));
  int limit = static_cast<int>(pos.size());
  if (budget) limit = std::min(limit, *budget);
  for (int k = 1; k <= limit; ++k) {
    std::vector<std::size_t> chosen;
    if (search.solve(all, k, chosen)) {
      std::vector<Term> terms;
      for (std::size_t s : chosen) terms.push_back(primes[s]);
      return Dnf(n, std::move(terms)).canonical();
    }
  }
  return std::nullopt;
}

}  // namespace seedlearn
