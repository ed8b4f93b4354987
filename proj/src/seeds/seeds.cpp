#include "seedlearn/seeds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "seedlearn/errors.hpp"
#include "seedlearn/term_enum.hpp"

namespace seedlearn {

namespace {

std::vector<Assignment> covered(const std::vector<Assignment>& points, const Term& t) {
  std::vector<Assignment> out;
  std::copy_if(points.begin(), points.end(), std::back_inserter(out), [&](const Assignment& a) { return t.covers(a); });
  return out;
}

bool covers_any(const std::vector<Assignment>& points, const Term& t) {
  return std::any_of(points.begin(), points.end(), [&](const Assignment& a) { return t.covers(a); });
}

Seed make_seed(const PartialFn& f, const Term& t, const Term& residual) {
  for (const Assignment& a : f.positives()) {
    if (t.covers(a)) return {t, a, residual};
  }
  throw InternalError("seed " + t.to_string() + " covers no positive");
}

}  // namespace

int seed_bound(int n, long s) {
  if (n < 1 || s < 1) throw ContractViolation("seed_bound needs n >= 1 and s >= 1");
  if (s == 1) return 0;
  double raw = 2.0 * std::sqrt(static_cast<double>(n) * std::log(static_cast<double>(s)));
  // Guard against 2.0000000001 style rounding on exact integers.
  double rounded = std::round(raw);
  long bound = std::abs(raw - rounded) < 1e-9 ? static_cast<long>(rounded) : static_cast<long>(std::ceil(raw));
  return static_cast<int>(std::clamp<long>(bound, 0, n));
}

std::optional<Seed> is_seed(const PartialFn& f, const Term& t) {
  if (!t.satisfiable()) throw ContractViolation("is_seed: term is contradictory");
  std::vector<Assignment> hit = covered(f.positives(), t);
  if (hit.empty()) return std::nullopt;
  Term residual = closure(hit, f.dimension());
  if (covers_any(f.negatives(), residual)) return std::nullopt;
  return Seed{t, hit.front(), residual};
}

std::optional<Seed> find_seed_enumerate(const PartialFn& f, int q) {
  std::optional<Seed> found;
  for_each_term(f.dimension(), q, [&](const Term& t) {
    found = is_seed(f, t);
    return !found.has_value();
  });
  return found;
}

Seed find_seed_lemma2(const PartialFn& f, const Dnf& phi, SeedProcState* state_out) {
  const int n = f.dimension();
  if (f.positives().empty()) throw ContractViolation("seed procedure needs a positive example");
  if (phi.dimension() != n) throw ContractViolation("seed procedure: formula dimension mismatch");
  if (!f.consistent_with(phi)) throw ContractViolation("seed procedure: formula is inconsistent with f");

  const long s = phi.size();
  const double threshold = std::sqrt(static_cast<double>(n) * std::log(static_cast<double>(s)));

  SeedProcState state;
  state.phi = Dnf(n);
  for (const Term& t : phi.terms()) {
    if (covers_any(f.positives(), t)) state.phi.add_term(t);
  }

  auto finish = [&](const Seed& seed) {
    if (state_out) *state_out = std::move(state);
    return seed;
  };

  // Each pass fixes one more variable, so n + 1 passes always reach step 1.
  for (int pass = 0; pass <= n + 1; ++pass) {
    const auto& terms = state.phi.terms();
    auto small = std::find_if(terms.begin(), terms.end(),
                              [&](const Term& t) { return static_cast<double>(t.size()) <= threshold + 1e-12; });
    if (small != terms.end()) {
      Term seed_term = state.q.conjoin(*small);
      state.trace.push_back({SeedProcState::Step::kOutput, {}, state.phi.size()});
      return finish(make_seed(f, seed_term, seed_term.conjoin(state.r)));
    }

    Term qr = state.q.conjoin(state.r);
    std::vector<Assignment> pos_q = covered(f.positives(), state.q);
    if (pos_q.empty()) throw InternalError("seed procedure: no positive satisfies Q");
    Term common = closure(pos_q, n);
    std::optional<Literal> shared;
    for (const Literal& l : common.literals()) {
      if (!qr.contains(l)) {
        shared = l;
        break;
      }
    }

    std::vector<Term> next;
    if (shared) {
      state.r = state.r.with(*shared);
      for (const Term& t : terms) {
        if (t.contains(shared->complement())) throw InternalError("complement of a shared literal survives in phi");
        next.push_back(t.without(*shared));
      }
      state.phi = Dnf(n, std::move(next));
      state.trace.push_back({SeedProcState::Step::kCommonLiteral, *shared, state.phi.size()});
      continue;
    }

    // Most frequent literal; canonical literal order breaks ties.
    std::vector<int> count(static_cast<std::size_t>(2 * n), 0);
    for (const Term& t : terms) {
      for (const Literal& l : t.literals()) ++count[static_cast<std::size_t>(l.code())];
    }
    auto best = std::max_element(count.begin(), count.end());
    if (*best == 0) throw InternalError("seed procedure: every term is empty but none was output");
    int code = static_cast<int>(best - count.begin());
    Literal l{code / 2 + 1, code % 2 == 1};

    state.q = state.q.with(l.complement());
    Term qr_next = state.q.conjoin(state.r);
    std::vector<Assignment> pos_qr = covered(f.positives(), qr_next);
    for (const Term& t : terms) {
      if (t.contains(l)) continue;
      Term kept = t.without(l.complement());
      if (covers_any(pos_qr, kept)) next.push_back(kept);
    }
    state.phi = Dnf(n, std::move(next));
    state.trace.push_back({SeedProcState::Step::kEliminate, l, state.phi.size()});
    if (state.phi.size() == 0) throw InternalError("seed procedure emptied phi");
  }
  throw InternalError("seed procedure did not terminate within n iterations");
}

std::vector<int> key_depths(const DecisionTree& tree) {
  const auto& nodes = tree.nodes();
  std::vector<int> depth(nodes.size(), -1);
  auto zero_leaf = [&](int id) {
    const auto& node = nodes[static_cast<std::size_t>(id)];
    return node.is_leaf() && !node.label;
  };
  std::vector<std::pair<int, int>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [id, keys] = stack.back();
    stack.pop_back();
    const auto& node = nodes[static_cast<std::size_t>(id)];
    if (node.is_leaf()) {
      depth[static_cast<std::size_t>(id)] = keys;
      continue;
    }
    int here = keys + ((!zero_leaf(node.child0) && !zero_leaf(node.child1)) ? 1 : 0);
    stack.emplace_back(node.child0, here);
    stack.emplace_back(node.child1, here);
  }
  return depth;
}

Seed dtree_seed(const DecisionTree& input, int n) {
  if (input.max_var() > n) throw ContractViolation("dtree_seed: tree tests variables beyond n");
  DecisionTree tree = input.collapse_zero_subtrees();
  const int s1 = tree.s1();
  if (s1 == 0) throw ContractViolation("dtree_seed: tree has no 1-leaf");
  const int limit = std::bit_width(static_cast<unsigned>(s1)) - 1;  // floor(log2 s1)

  // Shallowest qualifying 1-leaf; DFS with the 0-child first gives leftmost ties.
  const auto& nodes = tree.nodes();
  std::vector<int> keys = key_depths(tree);
  int chosen = -1;
  int chosen_len = 0;
  std::vector<std::pair<int, int>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [id, len] = stack.back();
    stack.pop_back();
    const auto& node = nodes[static_cast<std::size_t>(id)];
    if (node.is_leaf()) {
      if (node.label && keys[static_cast<std::size_t>(id)] <= limit && (chosen < 0 || len < chosen_len)) {
        chosen = id;
        chosen_len = len;
      }
      continue;
    }
    stack.emplace_back(node.child1, len + 1);
    stack.emplace_back(node.child0, len + 1);
  }
  if (chosen < 0) throw InternalError("no 1-leaf within the key-depth bound");

  // Walk the path again, splitting literals by whether their node is key.
  Term seed;
  Term path;
  int id = 0;
  for (const Literal& l : tree.path_literals(chosen)) {
    const auto& node = nodes[static_cast<std::size_t>(id)];
    auto zero_leaf = [&](int c) {
      return nodes[static_cast<std::size_t>(c)].is_leaf() && !nodes[static_cast<std::size_t>(c)].label;
    };
    if (!zero_leaf(node.child0) && !zero_leaf(node.child1)) seed = seed.with(l);
    path = path.with(l);
    id = l.negated ? node.child0 : node.child1;
  }
  Assignment witness(n, path.positive_mask());
  return {seed, witness, path};
}

}  // namespace seedlearn
