// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "oracles.hpp"
#include "seedlearn/certs.hpp"
#include "seedlearn/cover.hpp"
#include "seedlearn/eq_learner.hpp"
#include "seedlearn/min_dnf.hpp"
#include "seedlearn/random.hpp"
#include "seedlearn/seeds.hpp"
#include "seedlearn/term_enum.hpp"
#include "seedlearn/tradeoff.hpp"

using namespace seedlearn;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int id, const char* name, const std::function<Verdict()>& body) {
  auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!v.pass) ++failures;
  std::printf("[%s] %2d %s: %s (%.1fs)\n", v.pass ? "PASS" : "FAIL", id, name, v.detail.c_str(), secs);
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

PartialFn table_of(const Dnf& f) { return PartialFn::from_table(truth_table(f, f.dimension())); }

TruthTable parity_table(int n) {
  TruthTable t(n);
  for (std::uint64_t i = 0; i < t.length(); ++i) t.set(i, std::popcount(i) % 2 == 1);
  return t;
}

bool seed_agrees(const PartialFn& f, const Seed& s) {
  if (!s.term.covers(s.witness) || f.value(s.witness) != std::optional<bool>(true)) return false;
  for (const Assignment& a : f.positives()) {
    if (s.term.covers(a) && !s.residual.covers(a)) return false;
  }
  for (const Assignment& a : f.negatives()) {
    if (s.term.covers(a) && s.residual.covers(a)) return false;
  }
  return true;
}

// Shared between criteria 1 and 13.
struct EqRun {
  int n;
  long s;
  std::uint64_t queries;
  std::uint64_t ceiling;
};
std::vector<EqRun> eq_runs;

Verdict eq_exactness() {
  Rng rng(derive_seed(1, 1));
  int exact = 0, runs = 0;
  for (int i = 0; i < 200; ++i) {
    int n = 4 + static_cast<int>(uniform_int(rng, 7));
    int s = 1 + static_cast<int>(uniform_int(rng, 4));
    Dnf target = random_dnf(n, s, 1, n, rng);
    TruthTable tt = truth_table(target, n);
    std::unique_ptr<Teacher> teacher;
    if (i % 2 == 0) {
      teacher = std::make_unique<LexTeacher>(tt);
    } else {
      teacher = std::make_unique<RandomTeacher>(tt, derive_seed(2, static_cast<std::uint64_t>(i)));
    }
    EqResult r = learn_eq(*teacher, n, s);
    ++runs;
    // Hypotheses are Dnf values by construction; the final one must match.
    if (truth_table(r.hypothesis, n) == tt) ++exact;
    eq_runs.push_back({n, s, r.log.size(), eq_query_ceiling(n, count_terms(n, seed_bound(n, s)))});
  }
  return {exact == runs, fmt("%d/%d targets learned exactly, all hypotheses proper DNFs", exact, runs)};
}

Verdict hand_trace() {
  Dnf x1(3);
  x1.add_term(Term(0b001, 0));
  LexTeacher t(truth_table(x1, 3));
  EqResult r = learn_eq(t, 3, 1);
  std::string seq;
  for (const auto& q : r.log) seq += (q.counterexample ? q.counterexample->to_string() : std::string("yes")) + " ";
  bool ok = r.log.size() == 4 && seq == "100 101 110 yes ";
  return {ok, fmt("%zu queries, answers %s", r.log.size(), seq.c_str())};
}

Verdict seed_bound_check() {
  Rng rng(derive_seed(1, 3));
  int checked = 0, bad = 0;
  while (checked < 500) {
    int n = 3 + static_cast<int>(uniform_int(rng, 5));
    int s = 1 + static_cast<int>(uniform_int(rng, 4));
    PartialFn f = table_of(random_dnf(n, s, 1, n, rng));
    if (f.positives().empty()) continue;
    Dnf phi = *exact_min_dnf(f);
    Seed seed = find_seed_lemma2(f, phi);
    auto again = is_seed(f, seed.term);
    bool ok = again && oracle::is_seed(f, seed.term) && seed_agrees(f, seed) &&
              seed.term.size() <= static_cast<int>(std::ceil(2 * std::sqrt(n * std::log(phi.size())) - 1e-9));
    if (!ok) ++bad;
    ++checked;
  }
  return {bad == 0, fmt("%d minimal formulas, %d violations", checked, bad)};
}

Verdict tightness() {
  std::string detail;
  bool ok = true;
  for (int k : {2, 3}) {
    int n = k * k;
    Dnf f(n);
    for (int b = 0; b < k; ++b) {
      Term t;
      for (int i = 1; i <= k; ++i) t = t.with({b * k + i, false});
      f.add_term(t);
    }
    PartialFn table = table_of(f);
    int best = -1;
    for_each_term(n, n, [&](const Term& t) {
      if (is_seed(table, t)) {
        best = t.size();
        return false;  // sizes are visited in increasing order
      }
      return true;
    });
    ok = ok && best == k - 1;
    detail += fmt("n=%d min seed %d; ", n, best);
  }
  return {ok, detail};
}

Verdict covering() {
  Rng rng(derive_seed(1, 5));
  int runs = 0, bad = 0;
  for (int i = 0; i < 150; ++i) {
    int n = 3 + static_cast<int>(uniform_int(rng, 8));
    int s = 1 + static_cast<int>(uniform_int(rng, 4));
    Dnf f = random_dnf(n, s, 1, n, rng);
    PartialFn table = table_of(f);
    CoverResult r = cover_sample(table, s);
    std::set<std::pair<std::uint32_t, std::uint32_t>> used;
    bool distinct = true;
    for (const auto& [seed, added] : r.seeds_used) distinct = distinct && used.insert({seed.positive_mask(), seed.negative_mask()}).second;
    if (!r.success() || !table.consistent_with(r.hypothesis) || !distinct) ++bad;
    ++runs;
  }
  bool parity_fails = !cover_sample(PartialFn::from_table(parity_table(4)), 1).success();
  return {bad == 0 && parity_fails,
          fmt("%d random tables, %d failures; parity_4 at s=1 %s", runs, bad, parity_fails ? "fails" : "covered")};
}

Verdict trees() {
  Rng rng(derive_seed(1, 6));
  int runs = 0, bad = 0;
  while (runs < 300) {
    int n = 3 + static_cast<int>(uniform_int(rng, 8));
    DecisionTree t = random_tree(n, std::min(n, 6), 0.3, rng);
    int s1 = t.collapse_zero_subtrees().s1();
    if (s1 == 0 || s1 > 16) continue;
    int bound = std::bit_width(static_cast<unsigned>(s1)) - 1;
    TruthTable tt = truth_table(t, n);
    PartialFn f = PartialFn::from_table(tt);
    Seed seed = dtree_seed(t, n);
    CoverResult c = cover_sample_with_bound(f, bound);
    bool ok = seed.term.size() <= bound && is_seed(f, seed.term) && seed_agrees(f, seed) && c.success() &&
              truth_table(c.hypothesis, n) == tt;
    if (!ok) ++bad;
    ++runs;
  }
  return {bad == 0, fmt("%d trees with s1 <= 16, %d violations", runs, bad)};
}

Verdict certificates() {
  std::string detail;
  bool ok = true;
  for (auto [n, s] : {std::pair{4, 1L}, {6, 1L}, {8, 2L}}) {
    TruthTable t = parity_table(n);
    CertifyResult r = certify(t, s);
    if (r.covered()) {
      ok = false;
      detail += fmt("(%d,%ld) covered; ", n, s);
      continue;
    }
    const auto& cert = std::get<Certificate>(r.outcome);
    bool verified = verify_certificate(t, cert, s);
    std::uint64_t limit = 3 * count_terms(n, r.q);
    ok = ok && verified && cert.points.size() <= limit;
    detail += fmt("(%d,%ld): |A|=%zu <= %llu, verified=%s; ", n, s, cert.points.size(),
                  static_cast<unsigned long long>(limit), verified ? "yes" : "no");
  }
  return {ok, detail};
}

Verdict monomial_oracle() {
  Rng rng(derive_seed(1, 8));
  int agree = 0;
  for (int i = 0; i < 1000; ++i) {
    int n = 1 + static_cast<int>(uniform_int(rng, 8));
    double p = 0.05 + 0.4 * uniform_real(rng);
    PartialFn f = random_partial(n, p, p * uniform_real(rng), rng);
    auto got = monomial_consistency(f);
    auto all = oracle::consistent_monomials(f);
    bool same = got.has_value() == !all.empty() && (!got || std::find(all.begin(), all.end(), *got) != all.end());
    agree += same;
  }
  return {agree == 1000, fmt("%d/1000 agree with the 3^n scan", agree)};
}

Verdict fact1_sweep() {
  int cases = 0, bad = 0;
  for (int n = 1; n <= 6; ++n) {
    for (int s = 1; s <= std::min(3, n); ++s) {
      for (int t = 1; t <= 4; ++t) {
        for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
          Assignment z(n, bits);
          if (binomial(n, s) - binomial(z.weight(), s) < t) continue;
          auto r = fact1_check(n, t, s, z);
          ++cases;
          bad += !r.ok;
        }
      }
    }
  }
  auto spot = fact1_check(4, 2, 2, Assignment::from_string("1110"));
  bool spot_ok = spot.exact == Rational(1, 5) && spot.bound == Rational(225, 256);
  return {bad == 0 && spot_ok, fmt("%d (n,t,s,z) cases, %d violations; (4,2,2,1110) exact %s bound %s", cases, bad,
                                   spot.exact.str().c_str(), spot.bound.str().c_str())};
}

Verdict dichotomy() {
  Rng rng(derive_seed(1, 10));
  int bad = 0, dense = 0;
  for (int i = 0; i < 1000; ++i) {
    int n = 2 + static_cast<int>(uniform_int(rng, 11));
    int terms = 1 + static_cast<int>(uniform_int(rng, std::min(10, 2 * n)));
    int lo = 1 + static_cast<int>(uniform_int(rng, n));
    Dnf f = random_dnf(n, terms, lo, n, rng);
    double r = 1 + 3 * uniform_real(rng);
    Dichotomy d = sparse_or_dense(f, r);
    bool ok = dichotomy_holds(f, r, d);
    if (const auto* nd = std::get_if<NegativeDense>(&d)) {
      ++dense;
      ok = ok && static_cast<int>(nd->hitting_set.size()) <= hitting_set_bound(n, f.size(), r);
    }
    bad += !ok;
  }
  return {bad == 0, fmt("1000 formulas (%d dense cases), %d violations", dense, bad)};
}

Verdict majority() {
  Rng rng(derive_seed(1, 11));
  int bad = 0;
  for (int i = 0; i < 200; ++i) {
    int n = 3 + static_cast<int>(uniform_int(rng, 4));
    int t = i % 2 ? 3 : 5;
    std::vector<Dnf> fs;
    int max_size = 0;
    for (int j = 0; j < t; ++j) {
      fs.push_back(random_dnf(n, 1 + static_cast<int>(uniform_int(rng, 2)), 1, 3, rng));
      max_size = std::max(max_size, fs.back().size());
    }
    Dnf m = maj_to_dnf(fs);
    bool ok = m.size() <= std::pow(2.0, t) * std::pow(max_size, t);
    for (std::uint32_t b = 0; b < (1u << n) && ok; ++b) {
      Assignment a(n, b);
      int votes = 0;
      for (const Dnf& f : fs) votes += oracle::dnf_true(f, a);
      ok = oracle::dnf_true(m, a) == (2 * votes >= t);
    }
    bad += !ok;
  }
  return {bad == 0, fmt("200 expansions, %d mismatches", bad)};
}

Verdict halving() {
  FiniteClass u = FiniteClass::from(enumerate_M(4, 2, 2));
  int runs = 0, bad = 0, queries = 0;
  double worst = 0;
  for (int k : {1, 2}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      FingerprintTeacher teacher(u);
      Rng rng(derive_seed(12, seed));
      HalvingOptions opt;
      opt.k = k;
      HalvingResult r = halving_learn(u, teacher, opt, rng);
      const double nk = std::pow(4.0, k);
      bool ok = !r.log.back().counterexample;
      for (const ShrinkRecord& rec : r.log) {
        if (!rec.counterexample) continue;
        ++queries;
        double ratio = static_cast<double>(rec.after) / static_cast<double>(rec.before);
        worst = std::max(worst, ratio * nk / (nk - 1));
        ok = ok && rec.after * nk <= rec.before * (nk - 1);
      }
      TruthTable h = truth_table(r.hypothesis, 4);
      for (std::size_t i : teacher.space().remaining()) ok = ok && u.table(i) == h;
      ++runs;
      bad += !ok;
    }
  }
  return {bad == 0, fmt("%d runs, %d shrinking queries, max ratio / (1 - 1/n^k) = %.3f, %d failures", runs, queries,
                        worst, bad)};
}

Verdict ceiling() {
  int over = 0;
  std::uint64_t most = 0;
  for (const EqRun& r : eq_runs) {
    over += r.queries > r.ceiling;
    most = std::max(most, r.queries);
  }
  return {!eq_runs.empty() && over == 0,
          fmt("%zu runs, max %llu queries, %d over 2n|Q|^2+|Q|^2+1", eq_runs.size(),
              static_cast<unsigned long long>(most), over)};
}

}  // namespace

int main() {
  report(1, "EQ exactness", eq_exactness);
  report(2, "Hand-traced EQ run", hand_trace);
  report(3, "Seed size bound", seed_bound_check);
  report(4, "Seed size tightness", tightness);
  report(5, "Covering correctness", covering);
  report(6, "Decision-tree seeds", trees);
  report(7, "Certificates", certificates);
  report(8, "Monomial-consistency oracle", monomial_oracle);
  report(9, "Zero-fraction exact sweep", fact1_sweep);
  report(10, "Sparse-or-dense dichotomy", dichotomy);
  report(11, "Majority to DNF", majority);
  report(12, "Halving shrink factor", halving);
  report(13, "EQ query ceiling", ceiling);
  std::printf("%d of 13 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
