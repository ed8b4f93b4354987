#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "seedlearn/caps.hpp"
#include "seedlearn/dnf.hpp"
#include "seedlearn/partial_fn.hpp"
#include "seedlearn/random.hpp"

namespace seedlearn {

struct CoverResult {
  Dnf hypothesis;
  std::vector<std::pair<Term, Term>> seeds_used;  // (seed T, added term T')
  std::vector<Assignment> leftover_positives;     // empty on success
  int scans = 0;                                  // passes over the candidate seeds

  bool success() const { return leftover_positives.empty(); }
};

/// Seed covering over every term of size <= q. Each pass scans the remaining
/// candidates in canonical order; a candidate that is a seed of the residual
/// sample contributes the closure T' of the positives it covers, those
/// positives are removed, and the candidate is retired. Stops when no
/// positives remain, the candidates run out, or a full pass finds nothing.
CoverResult cover_sample_with_bound(const PartialFn& sample, int q);

/// cover_sample_with_bound with q = seed_bound(n, s).
CoverResult cover_sample(const PartialFn& sample, long s);

/// Draws one labeled example.
using ExampleSource = std::function<std::pair<Assignment, bool>(Rng&)>;

/// Uniform over {0,1}^n, labeled by target.
ExampleSource uniform_source(const Dnf& target);
/// Independent bits with Pr[x_i = 1] = p[i-1], labeled by target.
ExampleSource product_source(const Dnf& target, std::vector<double> p);

/// ceil((1/eps) (N_q n ln 3 + ln(1/delta))), N_q = count_terms(n, seed_bound(n, s)).
std::uint64_t pac_sample_size(int n, long s, double eps, double delta);

struct PacResult {
  std::uint64_t m = 0;
  std::optional<Dnf> hypothesis;  // none when covering failed
  CoverResult cover;
};

PacResult pac_learn(const ExampleSource& source, int n, long s, double eps, double delta, Rng& rng,
                    const Caps& caps = {});

/// Pr_D[h != target] computed over all 2^n points; p empty means uniform.
double exact_error(const Dnf& h, const Dnf& target, const std::vector<double>& p = {}, const Caps& caps = {});

}  // namespace seedlearn
