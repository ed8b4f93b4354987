#pragma once

#include <cstddef>
#include <cstdint>

namespace seedlearn {

// Size limits for exhaustive work. All must be positive.
struct Caps {
  int max_n = 20;                         // widest truth table materialized
  int max_exact_n = 10;                   // exact_min_dnf / ternary scans
  std::uint64_t max_class = 1'000'000;    // enumerated formula classes, |Q|
  std::uint64_t max_retries = 10'000;     // sample-and-retry loops
  std::uint64_t max_samples = 50'000'000; // PAC sample size
};

}  // namespace seedlearn
