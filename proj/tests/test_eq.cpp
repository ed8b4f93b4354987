#include <gtest/gtest.h>

#include "oracles.hpp"
#include "seedlearn/eq_learner.hpp"
#include "seedlearn/errors.hpp"
#include "seedlearn/seeds.hpp"
#include "seedlearn/term_enum.hpp"

using namespace seedlearn;

namespace {

Dnf single(int n, Term t) {
  Dnf f(n);
  f.add_term(t);
  return f;
}

// f^(1) = f; each later function drops the positives of the previous one
// that are covered by some seed of size <= q. Stops once no positive is left.
std::vector<PartialFn> ghost_sequence(const PartialFn& f, int q) {
  std::vector<PartialFn> seq{f};
  while (!seq.back().positives().empty()) {
    const PartialFn& cur = seq.back();
    std::vector<Assignment> drop;
    for (const Term& t : oracle::all_terms(f.dimension())) {
      if (t.size() > q || !oracle::is_seed(cur, t)) continue;
      for (const Assignment& a : cur.positives()) {
        if (oracle::term_true(t, a)) drop.push_back(a);
      }
    }
    std::sort(drop.begin(), drop.end());
    drop.erase(std::unique(drop.begin(), drop.end()), drop.end());
    seq.push_back(cur.without_positives(drop));
  }
  return seq;
}

// Feeds lex-smallest counterexamples by hand so the state can be inspected
// between queries.
class Teachers : public Teacher {
 public:
  explicit Teachers(const Dnf& target) : table_(truth_table(target, target.dimension())) {}
  std::optional<LabeledExample> answer(const Dnf& h) override {
    ++asked;
    return LexTeacher(table_).answer(h);
  }
  int asked = 0;

 private:
  TruthTable table_;
};

}  // namespace

TEST(EqState, HandTrace) {
  EqState st(3, 1);
  ASSERT_EQ(st.levels(), 1u);
  EXPECT_EQ(st.hypothesis().size(), 0);

  auto u = st.apply_counterexample(Assignment::from_string("100"), true);
  ASSERT_TRUE(u);
  EXPECT_EQ(u->level, 1u);
  EXPECT_EQ(st.pair_term(1, 0), Term(0b001, 0b110));
  EXPECT_EQ(st.hypothesis().terms(), std::vector<Term>{Term(0b001, 0b110)});

  st.apply_counterexample(Assignment::from_string("101"), true);
  EXPECT_EQ(st.pair_term(1, 0), Term(0b001, 0b010));
  EXPECT_EQ(st.hypothesis().to_string(), "x1 & ~x2");
}

TEST(EqState, NegativesSkipDefaultPairs) {
  EqState st(3, 2);
  auto u = st.apply_counterexample(Assignment::from_string("000"), false);
  ASSERT_TRUE(u);
  EXPECT_TRUE(u->removed.empty());
  EXPECT_EQ(st.removed_count(), 0u);

  st.apply_counterexample(Assignment::from_string("110"), true);
  auto v = st.apply_counterexample(Assignment::from_string("110"), false);
  EXPECT_FALSE(v->removed.empty());
  EXPECT_EQ(st.hypothesis().size(), 0);
}

TEST(EqState, DuplicateTermsAppearOnce) {
  // Every seed covering e at level 1 gets the same T'.
  EqState st(3, 2);
  auto u = st.apply_counterexample(Assignment::from_string("011"), true);
  EXPECT_GT(u->touched.size(), 1u);
  EXPECT_EQ(st.hypothesis().size(), 1);
}

TEST(LearnEq, TargetX1) {
  Dnf x1 = single(3, Term(0b001, 0));
  LexTeacher t(truth_table(x1, 3));
  EqResult r = learn_eq(t, 3, 1);
  ASSERT_EQ(r.log.size(), 4u);
  EXPECT_EQ(r.log[0].counterexample->to_string(), "100");
  EXPECT_EQ(r.log[1].counterexample->to_string(), "101");
  EXPECT_EQ(r.log[2].counterexample->to_string(), "110");
  EXPECT_FALSE(r.log[3].counterexample);
  EXPECT_EQ(truth_table(r.hypothesis, 3), truth_table(x1, 3));
}

TEST(LearnEq, ConstantZero) {
  LexTeacher t(TruthTable(4));
  EqResult r = learn_eq(t, 4, 2);
  EXPECT_EQ(r.log.size(), 1u);
  EXPECT_EQ(r.hypothesis.size(), 0);
}

TEST(LearnEq, RandomTargetsBothTeachers) {
  Rng rng(1234);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4 + static_cast<int>(uniform_int(rng, 4));
    int s = 1 + static_cast<int>(uniform_int(rng, 3));
    Dnf target = random_dnf(n, s, 1, n, rng);
    TruthTable tt = truth_table(target, n);
    std::unique_ptr<Teacher> teacher;
    if (trial % 2) {
      teacher = std::make_unique<LexTeacher>(tt);
    } else {
      teacher = std::make_unique<RandomTeacher>(tt, derive_seed(7, static_cast<std::uint64_t>(trial)));
    }
    EqResult r = learn_eq(*teacher, n, s);
    EXPECT_EQ(truth_table(r.hypothesis, n), tt) << trial;
    EXPECT_LE(r.log.size(), eq_query_ceiling(n, count_terms(n, seed_bound(n, s))));
  }
}

TEST(LearnEq, AutoSDoubles) {
  Rng rng(5);
  Dnf target = random_dnf(5, 4, 2, 3, rng);
  LexTeacher t(truth_table(target, 5));
  EqResult r = learn_eq(t, 5, 1, EqOptions{true});
  EXPECT_EQ(truth_table(r.hypothesis, 5), truth_table(target, 5));
  EXPECT_GE(r.s_used, 1);
  EXPECT_EQ(r.log.back().s, r.s_used);
}

TEST(LearnEq, TooSmallSWithoutAutoIsInternal) {
  // Parity needs every minterm; with s = 1 only the empty seed exists.
  TruthTable par = TruthTable::from_string("0110");
  LexTeacher t(par);
  EXPECT_THROW(learn_eq(t, 2, 1), InternalError);
}

TEST(LearnEq, LyingTeacherIsProtocolError) {
  class Liar : public Teacher {
   public:
    std::optional<LabeledExample> answer(const Dnf& h) override {
      Assignment a = Assignment::from_string("000");
      return LabeledExample{a, h.eval(a)};
    }
  } liar;
  EXPECT_THROW(learn_eq(liar, 3, 1), ProtocolError);
}

TEST(EqState, CapOnSeeds) {
  Caps caps;
  caps.max_class = 10;
  EXPECT_THROW(EqState(6, 3, caps), ResourceError);
}

TEST(EqCeiling, Saturates) {
  EXPECT_EQ(eq_query_ceiling(3, 1), 8u);
  EXPECT_EQ(eq_query_ceiling(10, std::uint64_t{1} << 40), UINT64_MAX);
}

// Invariants from the correctness argument, checked after every update on
// tiny instances: positives keep satisfying h; at every level i, each seed T
// of f^(i) keeps a live pair whose T' contains T and every literal shared by
// the positives of f^(i) under T; negatives only remove non-seeds.
TEST(EqInvariants, GhostSequence) {
  Rng rng(606);
  for (int trial = 0; trial < 24; ++trial) {
    int n = 3 + static_cast<int>(uniform_int(rng, 3));
    int s = 1 + static_cast<int>(uniform_int(rng, 2));
    Dnf target = random_dnf(n, s, 1, n, rng);
    TruthTable tt = truth_table(target, n);
    PartialFn f = PartialFn::from_table(tt);
    EqState st(n, s);
    auto ghosts = ghost_sequence(f, st.q());
    LexTeacher teacher(tt);
    std::vector<Assignment> positives;
    Dnf h(n);
    for (int step = 0; step < 5000; ++step) {
      auto ans = teacher.answer(h);
      if (!ans) break;
      auto u = st.apply_counterexample(ans->point, ans->label);
      ASSERT_TRUE(u);
      if (ans->label) positives.push_back(ans->point);
      h = st.hypothesis();
      for (const Assignment& p : positives) ASSERT_TRUE(h.eval(p));

      for (const auto& key : u->removed) {
        if (key.level <= ghosts.size()) {
          EXPECT_FALSE(oracle::is_seed(ghosts[key.level - 1], st.seeds()[key.seed]));
        }
      }
      for (std::size_t i = 1; i <= ghosts.size(); ++i) {
        const PartialFn& g = ghosts[i - 1];
        for (std::uint32_t idx = 0; idx < st.seeds().size(); ++idx) {
          const Term& t = st.seeds()[idx];
          if (!oracle::is_seed(g, t)) continue;
          ASSERT_TRUE(st.is_live(i, idx)) << "level " << i << " seed " << t.to_string();
          std::vector<Assignment> a_ti;
          for (const Assignment& p : g.positives()) {
            if (oracle::term_true(t, p)) a_ti.push_back(p);
          }
          Term need = oracle::shared_literals(a_ti, n).conjoin(t);
          ASSERT_TRUE(st.pair_term(i, idx).includes(need)) << "level " << i << " seed " << t.to_string();
        }
      }
    }
    EXPECT_EQ(truth_table(h, n), tt);
  }
}
