#pragma once

#include <cstdint>
#include <random>

#include "seedlearn/decision_tree.hpp"
#include "seedlearn/dnf.hpp"
#include "seedlearn/partial_fn.hpp"

namespace seedlearn {

using Rng = std::mt19937_64;

/// splitmix64 finalizer; stream k of base seed b is seeded with
/// derive_seed(b, k).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

/// Uniform in [0, bound), by rejection so results do not depend on the
/// standard library's distribution implementations.
std::uint64_t uniform_int(Rng& rng, std::uint64_t bound);
/// Uniform in [0, 1) from the top 53 bits.
double uniform_real(Rng& rng);

/// `terms` distinct satisfiable terms, each with a size drawn uniformly from
/// [min_size, max_size] over distinct random variables.
Dnf random_dnf(int n, int terms, int min_size, int max_size, Rng& rng);

/// Random tree of depth <= max_depth. Each node below the root becomes a leaf
/// with probability leaf_prob; leaves get uniform labels.
DecisionTree random_tree(int n, int max_depth, double leaf_prob, Rng& rng);

/// Each point is independently positive / negative / undefined with
/// probabilities (p_pos, p_neg, rest).
PartialFn random_partial(int n, double p_pos, double p_neg, Rng& rng);

}  // namespace seedlearn
