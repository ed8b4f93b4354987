#include <bit>

#include "seedlearn/errors.hpp"
#include "seedlearn/tradeoff.hpp"

namespace seedlearn {

namespace {

// Lexicographic k-subsets of {0..n-1}; stops when visit returns false.
template <typename Visit>
void for_each_combination(int n, int k, Visit&& visit) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    visit(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j) - 1] + 1;
  }
}

}  // namespace

boost::multiprecision::cpp_int binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  boost::multiprecision::cpp_int r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

bool MonotoneClass::eval(std::size_t formula, const Assignment& a) const {
  for (std::uint32_t t : formulas[formula]) {
    if ((a.bits() & terms[t]) == terms[t]) return true;
  }
  return false;
}

Dnf MonotoneClass::formula(std::size_t i) const {
  Dnf f(n);
  for (std::uint32_t t : formulas[i]) f.add_term(Term(terms[t], 0));
  return f;
}

MonotoneClass enumerate_M(int n, int t, int s, const Caps& caps) {
  if (n < 1 || n > kMaxVars || t < 0 || s < 0) throw ContractViolation("enumerate_M: bad parameters");
  MonotoneClass m{n, t, s, {}, {}};
  auto count = binomial(binomial(n, s).convert_to<std::int64_t>(), t);
  if (count > caps.max_class) {
    throw ResourceError("M(" + std::to_string(n) + "," + std::to_string(t) + "," + std::to_string(s) + ") has " +
                        count.str() + " formulas, over cap " + std::to_string(caps.max_class));
  }
  for_each_combination(n, s, [&](const std::vector<int>& vars) {
    std::uint32_t mask = 0;
    for (int v : vars) mask |= std::uint32_t{1} << v;
    m.terms.push_back(mask);
  });
  m.formulas.reserve(count.convert_to<std::size_t>());
  for_each_combination(static_cast<int>(m.terms.size()), t, [&](const std::vector<int>& picks) {
    m.formulas.emplace_back(picks.begin(), picks.end());
  });
  return m;
}

namespace {

Rational power(Rational b, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

Fact1Result fact1_check(int n, int t, int s, const Assignment& z, const Caps& caps) {
  if (z.dimension() != n) throw ContractViolation("fact1_check: z has the wrong dimension");
  const int w = z.weight();
  auto room = binomial(n, s) - binomial(w, s);
  if (t < 1 || room < t) {
    throw ContractViolation("fact1_check: stipulation t <= C(n,s) - C(|z|,s) fails (t=" + std::to_string(t) +
                            ", C(n,s)-C(|z|,s)=" + room.str() + ")");
  }
  Fact1Result out;
  Rational base(std::max(0, w - s), n);
  Rational miss = 1 - power(base, s);
  out.bound = power(miss, t);

  MonotoneClass m = enumerate_M(n, t, s, caps);
  std::uint64_t zero = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m.eval(i, z)) ++zero;
  }
  out.exact = Rational(zero, m.size());
  out.ok = out.exact <= out.bound;
  return out;
}

}  // namespace seedlearn
