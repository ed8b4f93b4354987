#include "seedlearn/certs.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "seedlearn/cover.hpp"
#include "seedlearn/errors.hpp"
#include "seedlearn/min_dnf.hpp"
#include "seedlearn/seeds.hpp"
#include "seedlearn/term_enum.hpp"

namespace seedlearn {

namespace {

// Coordinates where z agrees with a.
std::uint32_t agreement(const Assignment& a, const Assignment& z) {
  return ~(a.bits() ^ z.bits()) & low_mask(z.dimension());
}

std::optional<NonSeedWitness> smallest_triple(const Term& t, const std::vector<Assignment>& pos,
                                              const std::vector<Assignment>& candidates) {
  for (std::size_t i = 0; i < pos.size(); ++i) {
    for (std::size_t j = i + 1; j < pos.size(); ++j) {
      for (const Assignment& z : candidates) {
        if (between(pos[i], pos[j], z)) return NonSeedWitness{t, {pos[i], pos[j]}, z};
      }
    }
  }
  return std::nullopt;
}

NonSeedWitness greedy_witness(const Term& t, const std::vector<Assignment>& pos, const Assignment& z) {
  const std::uint32_t all = low_mask(z.dimension());
  std::uint32_t matched = 0;
  std::vector<Assignment> chosen;
  while (matched != all) {
    const Assignment* best = nullptr;
    int best_gain = 0;
    for (const Assignment& p : pos) {
      int gain = std::popcount(agreement(p, z) & ~matched);
      if (gain > best_gain) {
        best = &p;
        best_gain = gain;
      }
    }
    if (!best) throw InternalError("negative is not covered by the closure of the positives");
    matched |= agreement(*best, z);
    chosen.push_back(*best);
  }
  std::sort(chosen.begin(), chosen.end());
  return {t, chosen, z};
}

}  // namespace

PartialFn Certificate::as_partial(int n) const {
  std::vector<Assignment> pos;
  std::vector<Assignment> neg;
  for (const auto& [a, label] : points) (label ? pos : neg).push_back(a);
  return {n, std::move(pos), std::move(neg)};
}

bool witness_holds(const NonSeedWitness& w, const PartialFn& f) {
  if (w.positives.empty() || !w.term.covers(w.negative) || f.value(w.negative) != false) return false;
  std::uint32_t matched = 0;
  for (const Assignment& p : w.positives) {
    if (!w.term.covers(p) || f.value(p) != true) return false;
    matched |= agreement(p, w.negative);
  }
  return matched == low_mask(w.negative.dimension());
}

CertifyResult certify(const TruthTable& table, long s, const Caps& caps) {
  if (s < 1) throw ContractViolation("certify needs s >= 1");
  const int n = table.dimension();
  if (n > caps.max_exact_n) throw ResourceError("certify over " + std::to_string(n) + " variables exceeds cap");
  PartialFn f = PartialFn::from_table(table);
  CertifyResult result;
  result.q = n == 0 ? 0 : seed_bound(n, s);

  CoverResult cover = cover_sample_with_bound(f, result.q);
  if (cover.success()) {
    result.outcome = cover.hypothesis;
    return result;
  }

  result.residual = PartialFn(n, cover.leftover_positives, f.negatives());
  const PartialFn& stuck = result.residual;
  Certificate cert;
  std::map<Assignment, bool> points;
  for_each_term(n, result.q, [&](const Term& t) {
    std::vector<Assignment> pos;
    std::copy_if(stuck.positives().begin(), stuck.positives().end(), std::back_inserter(pos),
                 [&](const Assignment& a) { return t.covers(a); });
    if (pos.empty()) return true;
    Term c = closure(pos, n);
    std::vector<Assignment> candidates;
    std::copy_if(stuck.negatives().begin(), stuck.negatives().end(), std::back_inserter(candidates),
                 [&](const Assignment& z) { return c.covers(z); });
    if (candidates.empty()) throw InternalError("covering stuck but " + t.to_string() + " is a seed");
    std::optional<NonSeedWitness> w = smallest_triple(t, pos, candidates);
    if (!w) w = greedy_witness(t, pos, candidates.front());
    for (const Assignment& p : w->positives) points.emplace(p, true);
    points.emplace(w->negative, false);
    cert.provenance.push_back(std::move(*w));
    return true;
  });
  cert.points.assign(points.begin(), points.end());
  result.outcome = std::move(cert);
  return result;
}

bool verify_certificate(const TruthTable& f, const Certificate& cert, long s, const Caps& caps) {
  const int n = f.dimension();
  std::vector<Assignment> pos;
  std::vector<Assignment> neg;
  for (const auto& [a, label] : cert.points) {
    if (a.dimension() != n) throw ContractViolation("certificate point has the wrong dimension");
    (f.at(a) ? pos : neg).push_back(a);
  }
  PartialFn restricted(n, std::move(pos), std::move(neg));
  return !exact_min_dnf(restricted, static_cast<int>(std::min<long>(s, 1L << 30)), caps).has_value();
}

}  // namespace seedlearn
