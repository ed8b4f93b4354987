#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "seedlearn/term.hpp"

namespace seedlearn {

/// Sum_{i<=max_size} C(n,i) 2^i: satisfiable terms of size at most max_size.
std::uint64_t count_terms(int n, int max_size);

/// Visits every satisfiable term of size <= max_size exactly once, ordered by
/// size and then lexicographically by literal sequence (variable order,
/// positive before negative). Stops early when `visit` returns false.
void for_each_term(int n, int max_size, const std::function<bool(const Term&)>& visit);

std::vector<Term> enumerate_terms(int n, int max_size);

/// Sub-terms of minterm(a) with at most max_size literals, in the same order.
std::vector<Term> terms_covering(const Assignment& a, int max_size);

}  // namespace seedlearn
