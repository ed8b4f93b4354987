#include "seedlearn/term_enum.hpp"

#include "seedlearn/errors.hpp"

namespace seedlearn {

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// Emits all terms of exactly `size` literals, lexicographic by literal code.
// Literal codes are increasing and each code's variable exceeds the last one.
bool emit_size(int n, int size, int next_var, Term current, int remaining,
               const std::function<bool(const Term&)>& visit) {
  if (remaining == 0) return visit(current);
  for (int var = next_var; var <= n - remaining + 1; ++var) {
    for (bool negated : {false, true}) {
      if (!emit_size(n, size, var + 1, current.with({var, negated}), remaining - 1, visit)) return false;
    }
  }
  return true;
}

bool emit_covering(const Assignment& a, int next_var, Term current, int remaining,
                   const std::function<bool(const Term&)>& visit) {
  if (remaining == 0) return visit(current);
  int n = a.dimension();
  for (int var = next_var; var <= n - remaining + 1; ++var) {
    if (!emit_covering(a, var + 1, current.with({var, !a[var]}), remaining - 1, visit)) return false;
  }
  return true;
}

}  // namespace

std::uint64_t count_terms(int n, int max_size) {
  std::uint64_t total = 0;
  for (int i = 0; i <= max_size; ++i) total += binomial(n, i) << i;
  return total;
}

void for_each_term(int n, int max_size, const std::function<bool(const Term&)>& visit) {
  if (max_size < 0 || max_size > n) throw ContractViolation("enumerate_terms: need 0 <= max_size <= n");
  for (int size = 0; size <= max_size; ++size) {
    if (!emit_size(n, size, 1, Term{}, size, visit)) return;
  }
}

std::vector<Term> enumerate_terms(int n, int max_size) {
  std::vector<Term> out;
  out.reserve(static_cast<std::size_t>(count_terms(n, max_size)));
  for_each_term(n, max_size, [&](const Term& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

std::vector<Term> terms_covering(const Assignment& a, int max_size) {
  std::vector<Term> out;
  int limit = std::min(max_size, a.dimension());
  for (int size = 0; size <= limit; ++size) {
    emit_covering(a, 1, Term{}, size, [&](const Term& t) {
      out.push_back(t);
      return true;
    });
  }
  return out;
}

}  // namespace seedlearn
