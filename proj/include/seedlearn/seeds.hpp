#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seedlearn/decision_tree.hpp"
#include "seedlearn/dnf.hpp"
#include "seedlearn/partial_fn.hpp"

namespace seedlearn {

/// A seed T of f together with a positive it covers and a monomial that is
/// consistent with f on the defined points T covers. `residual` always
/// includes T's literals.
struct Seed {
  Term term;
  Assignment witness;
  Term residual;

  friend bool operator==(const Seed&, const Seed&) = default;
};

/// ceil(2 sqrt(n ln s)) clamped to [0, n].
int seed_bound(int n, long s);

/// Seed test: T must cover a positive of f and the closure of the covered
/// positives must exclude every negative. The witness is the smallest covered
/// positive and the residual is that closure.
std::optional<Seed> is_seed(const PartialFn& f, const Term& t);

/// First term of size <= q, in canonical enumeration order, that is a seed.
std::optional<Seed> find_seed_enumerate(const PartialFn& f, int q);

/// Working state of the constructive seed procedure.
struct SeedProcState {
  Term q;    // literals forcing terms of phi to 0
  Term r;    // literals shared by every positive of f_Q
  Dnf phi;   // the consistent formula, with q and r substituted in

  enum class Step { kOutput, kCommonLiteral, kEliminate };
  struct TraceEntry {
    Step step;
    Literal literal;  // unused for kOutput
    int terms_left;
  };
  std::vector<TraceEntry> trace;
};

/// Builds a seed from a DNF phi consistent with f:
///   1. if some term P of phi has at most sqrt(n ln s) literals, output Q u P;
///   2a. else if a literal outside Q u R is satisfied by every positive of
///       f_Q, add it to R and delete it from phi;
///   2b. else take the literal l occurring in the most terms, add ~l to Q,
///       drop the terms containing l, delete ~l elsewhere, and drop terms
///       that no longer cover a positive of f_{Q u R}.
/// s is size(phi). Ties go to the lowest variable, positive literal first.
/// The returned residual is Q u P u R.
///
/// Throws ContractViolation when f has no positive or phi is inconsistent.
Seed find_seed_lemma2(const PartialFn& f, const Dnf& phi, SeedProcState* state_out = nullptr);

/// Seed read off a decision tree: picks a 1-leaf whose path crosses at most
/// floor(log2 s1) key nodes (internal nodes with no 0-leaf child). The seed
/// is the key-node literals of the path, the residual the whole path.
/// Subtrees computing constant 0 are collapsed first.
Seed dtree_seed(const DecisionTree& tree, int n);

/// Number of key nodes on the root path of each leaf, indexed by node id
/// (-1 for internal nodes).
std::vector<int> key_depths(const DecisionTree& tree);

}  // namespace seedlearn
