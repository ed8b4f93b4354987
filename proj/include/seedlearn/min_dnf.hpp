#pragma once

#include <optional>

#include "seedlearn/caps.hpp"
#include "seedlearn/dnf.hpp"
#include "seedlearn/partial_fn.hpp"

namespace seedlearn {

/// Prime implicants of f that cover at least one positive, in canonical term
/// order. Exhaustive over 3^n terms; ResourceError when n > caps.max_exact_n.
std::vector<Term> prime_implicants(const PartialFn& f, const Caps& caps = {});

/// A smallest DNF consistent with f (term count = ds(f)), or none when a
/// budget is given and ds(f) exceeds it. Exact set cover over the positives
/// using prime implicants.
std::optional<Dnf> exact_min_dnf(const PartialFn& f, std::optional<int> budget = std::nullopt,
                                 const Caps& caps = {});

}  // namespace seedlearn
