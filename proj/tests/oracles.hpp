#pragma once

// Brute-force reference implementations for the tests. These only use the
// value types (Assignment, Term, Dnf, PartialFn) and never call the
// algorithms they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "seedlearn/assignment.hpp"
#include "seedlearn/dnf.hpp"
#include "seedlearn/partial_fn.hpp"
#include "seedlearn/term.hpp"

namespace oracle {

using seedlearn::Assignment;
using seedlearn::Dnf;
using seedlearn::PartialFn;
using seedlearn::Term;

// Every satisfiable term over x1..xn, via base-3 digits (0 absent, 1 positive,
// 2 negated).
inline std::vector<Term> all_terms(int n) {
  std::vector<Term> out;
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint32_t pos = 0, neg = 0;
    std::uint64_t c = code;
    for (int v = 0; v < n; ++v, c /= 3) {
      if (c % 3 == 1) pos |= 1u << v;
      if (c % 3 == 2) neg |= 1u << v;
    }
    out.emplace_back(pos, neg);
  }
  return out;
}

inline bool term_true(const Term& t, const Assignment& a) {
  for (int v = 1; v <= a.dimension(); ++v) {
    bool p = (t.positive_mask() >> (v - 1)) & 1u;
    bool q = (t.negative_mask() >> (v - 1)) & 1u;
    if (p && !a[v]) return false;
    if (q && a[v]) return false;
  }
  return true;
}

inline bool monomial_fits(const PartialFn& f, const Term& t) {
  for (const Assignment& a : f.positives()) {
    if (!term_true(t, a)) return false;
  }
  for (const Assignment& a : f.negatives()) {
    if (term_true(t, a)) return false;
  }
  return true;
}

// All monomials consistent with f, out of the 3^n candidates. Without
// positives the unsatisfiable monomial (constant 0) also qualifies.
inline std::vector<Term> consistent_monomials(const PartialFn& f) {
  std::vector<Term> out;
  if (f.positives().empty()) {
    std::uint32_t all = (f.dimension() >= 32) ? ~0u : ((1u << f.dimension()) - 1u);
    out.emplace_back(all, all);
  }
  for (const Term& t : all_terms(f.dimension())) {
    if (monomial_fits(f, t)) out.push_back(t);
  }
  return out;
}

// Smallest number of terms in a DNF consistent with f, searching subsets of
// implicants in order of size. none if it exceeds max_k.
inline std::optional<int> min_dnf_size(const PartialFn& f, int max_k) {
  if (f.positives().empty()) return 0;
  std::vector<std::vector<bool>> covers;
  for (const Term& t : all_terms(f.dimension())) {
    bool ok = true;
    for (const Assignment& a : f.negatives()) ok = ok && !term_true(t, a);
    if (!ok) continue;
    std::vector<bool> row;
    bool any = false;
    for (const Assignment& a : f.positives()) {
      row.push_back(term_true(t, a));
      any = any || row.back();
    }
    if (any) covers.push_back(row);
  }
  const std::size_t m = f.positives().size();
  for (int k = 1; k <= max_k; ++k) {
    std::vector<std::size_t> pick;
    std::function<bool(std::size_t, std::vector<bool>&)> go = [&](std::size_t from, std::vector<bool>& hit) {
      if (static_cast<int>(pick.size()) == k) {
        return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
      }
      for (std::size_t i = from; i < covers.size(); ++i) {
        std::vector<bool> next = hit;
        for (std::size_t j = 0; j < m; ++j) next[j] = next[j] || covers[i][j];
        pick.push_back(i);
        bool done = go(i + 1, next);
        pick.pop_back();
        if (done) return true;
      }
      return false;
    };
    std::vector<bool> hit(m, false);
    if (go(0, hit)) return k;
  }
  return std::nullopt;
}

// Seed test written out directly: T covers a positive, and the
// literals shared by all covered positives exclude every covered negative.
inline bool is_seed(const PartialFn& f, const Term& t) {
  std::vector<Assignment> covered;
  for (const Assignment& a : f.positives()) {
    if (term_true(t, a)) covered.push_back(a);
  }
  if (covered.empty()) return false;
  const int n = f.dimension();
  std::uint32_t pos = 0, neg = 0;
  for (int v = 1; v <= n; ++v) {
    bool all1 = true, all0 = true;
    for (const Assignment& a : covered) {
      all1 = all1 && a[v];
      all0 = all0 && !a[v];
    }
    if (all1) pos |= 1u << (v - 1);
    if (all0) neg |= 1u << (v - 1);
  }
  Term m(pos, neg);
  for (const Assignment& a : f.negatives()) {
    if (term_true(t, a) && term_true(m, a)) return false;
  }
  return true;
}

// Smallest seed size over all terms, or -1 when nothing is a seed.
inline int min_seed_size(const PartialFn& f) {
  int best = -1;
  for (const Term& t : all_terms(f.dimension())) {
    if (is_seed(f, t) && (best < 0 || t.size() < best)) best = t.size();
  }
  return best;
}

inline bool dnf_true(const Dnf& f, const Assignment& a) {
  for (const Term& t : f.terms()) {
    if (term_true(t, a)) return true;
  }
  return false;
}

// Table as a plain vector, indexed with x1 as the most significant bit.
inline std::vector<bool> table(const Dnf& f, int n) {
  std::vector<bool> out(std::size_t{1} << n);
  for (std::uint32_t i = 0; i < out.size(); ++i) {
    std::uint32_t bits = 0;
    for (int v = 1; v <= n; ++v) bits |= ((i >> (n - v)) & 1u) << (v - 1);
    out[i] = dnf_true(f, Assignment(n, bits));
  }
  return out;
}

inline PartialFn total(const Dnf& f, int n) {
  std::vector<Assignment> pos, neg;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    Assignment a(n, bits);
    (dnf_true(f, a) ? pos : neg).push_back(a);
  }
  return PartialFn(n, pos, neg);
}

inline PartialFn parity(int n) {
  std::vector<Assignment> pos, neg;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    Assignment a(n, bits);
    (a.weight() % 2 ? pos : neg).push_back(a);
  }
  return PartialFn(n, pos, neg);
}

// Literals shared by every point (closure), independent of the library.
inline Term shared_literals(const std::vector<Assignment>& pts, int n) {
  std::uint32_t pos = 0, neg = 0;
  for (int v = 1; v <= n; ++v) {
    bool all1 = true, all0 = true;
    for (const Assignment& a : pts) {
      all1 = all1 && a[v];
      all0 = all0 && !a[v];
    }
    if (all1) pos |= 1u << (v - 1);
    if (all0) neg |= 1u << (v - 1);
  }
  return Term(pos, neg);
}

// Binomial coefficient as a double, fine for the small arguments used here.
inline double choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
