#pragma once

#include <variant>
#include <vector>

#include "seedlearn/caps.hpp"
#include "seedlearn/dnf.hpp"
#include "seedlearn/partial_fn.hpp"
#include "seedlearn/truth_table.hpp"

namespace seedlearn {

/// Why a term T is not a seed of the stuck residual: positives of the
/// residual covered by T, plus a negative covered by T that matches one of
/// those positives in every coordinate. With two positives this is the
/// classic 3-point certificate (the negative lies between them).
struct NonSeedWitness {
  Term term;
  std::vector<Assignment> positives;
  Assignment negative;
};

struct Certificate {
  std::vector<std::pair<Assignment, bool>> points;  // sorted, labels from f
  std::vector<NonSeedWitness> provenance;

  PartialFn as_partial(int n) const;
};

struct CertifyResult {
  int q = 0;
  std::variant<Dnf, Certificate> outcome;  // cover or certificate
  PartialFn residual;                      // the stuck residual when certified

  bool covered() const { return std::holds_alternative<Dnf>(outcome); }
};

/// Seed covering of the full table with seeds of size <= seed_bound(n, s).
/// A completed cover witnesses ds(f) <= its size. If covering gets stuck on
/// residual f', every term T of size <= q that covers a positive of f' has
/// a non-monomial projection f'_T; the union of one witness per such T is a
/// certificate that ds(f) > s. Witnesses are lexicographically smallest
/// (pos1, pos2, neg) triples; when no triple exists, the smallest qualifying
/// negative with a greedy positive cover of its coordinates is used.
CertifyResult certify(const TruthTable& f, long s, const Caps& caps = {});

/// True iff no DNF with at most s terms agrees with f on the certificate's
/// points.
bool verify_certificate(const TruthTable& f, const Certificate& cert, long s, const Caps& caps = {});

/// Checks that a witness really shows term's projection is not monomial.
bool witness_holds(const NonSeedWitness& w, const PartialFn& f);

}  // namespace seedlearn
