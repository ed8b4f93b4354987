#include "seedlearn/random.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

#include "seedlearn/errors.hpp"

namespace seedlearn {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + (stream + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t uniform_int(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw ContractViolation("uniform_int: empty range");
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

double uniform_real(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Dnf random_dnf(int n, int terms, int min_size, int max_size, Rng& rng) {
  if (min_size < 0 || max_size > n || min_size > max_size) throw ContractViolation("random_dnf: bad term size range");
  Dnf f(n);
  std::vector<int> vars(static_cast<std::size_t>(n));
  std::iota(vars.begin(), vars.end(), 1);
  int attempts = 0;
  while (f.size() < terms) {
    if (++attempts > 1000 * (terms + 1)) throw ContractViolation("random_dnf: cannot find enough distinct terms");
    int size = min_size + static_cast<int>(uniform_int(rng, static_cast<std::uint64_t>(max_size - min_size + 1)));
    // Partial Fisher-Yates for the variables.
    for (int i = 0; i < size; ++i) {
      auto j = static_cast<std::size_t>(i) + uniform_int(rng, static_cast<std::uint64_t>(n - i));
      std::swap(vars[static_cast<std::size_t>(i)], vars[j]);
    }
    Term t;
    for (int i = 0; i < size; ++i) t = t.with({vars[static_cast<std::size_t>(i)], uniform_int(rng, 2) == 1});
    if (std::find(f.terms().begin(), f.terms().end(), t) == f.terms().end()) f.add_term(t);
  }
  return f;
}

DecisionTree random_tree(int n, int max_depth, double leaf_prob, Rng& rng) {
  std::function<DecisionTree(std::vector<int>, int)> grow = [&](std::vector<int> unused, int depth) {
    bool stop = unused.empty() || depth >= max_depth || (depth > 0 && uniform_real(rng) < leaf_prob);
    if (stop) return DecisionTree::leaf(uniform_int(rng, 2) == 1);
    auto pick = uniform_int(rng, unused.size());
    int var = unused[pick];
    unused.erase(unused.begin() + static_cast<std::ptrdiff_t>(pick));
    DecisionTree c0 = grow(unused, depth + 1);
    DecisionTree c1 = grow(unused, depth + 1);
    return DecisionTree::node(var, c0, c1);
  };
  std::vector<int> vars(static_cast<std::size_t>(n));
  std::iota(vars.begin(), vars.end(), 1);
  return grow(vars, 0);
}

PartialFn random_partial(int n, double p_pos, double p_neg, Rng& rng) {
  std::vector<Assignment> pos;
  std::vector<Assignment> neg;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
    double u = uniform_real(rng);
    if (u < p_pos) {
      pos.push_back(Assignment::from_index(n, i));
    } else if (u < p_pos + p_neg) {
      neg.push_back(Assignment::from_index(n, i));
    }
  }
  return {n, std::move(pos), std::move(neg)};
}

}  // namespace seedlearn
