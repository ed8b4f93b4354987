#include <gtest/gtest.h>

#include "seedlearn/codec.hpp"
#include "seedlearn/errors.hpp"
#include "seedlearn/random.hpp"

using namespace seedlearn;

TEST(Codec, DnfLines) {
  Dnf f = codec::parse_dnf("dnf n=3\n1 -3\n# comment\n\n2\n");
  ASSERT_EQ(f.size(), 2);
  EXPECT_EQ(f.terms()[0].to_string(), "x1 & ~x3");
  EXPECT_EQ(f.terms()[1].to_string(), "x2");
  EXPECT_EQ(codec::parse_dnf("dnf n=2\n0\n").terms()[0], Term{});
  EXPECT_EQ(codec::parse_dnf("dnf n=2\n").size(), 0);
  EXPECT_EQ(codec::serialize(codec::parse_dnf("dnf n=3\n-3 1\n")), "dnf n=3\n1 -3\n");
}

TEST(Codec, SampleLines) {
  PartialFn f = codec::parse_sample("sample n=3\n101 1\n000 0\n101 1\n");
  ASSERT_EQ(f.positives().size(), 1u);
  EXPECT_EQ(f.positives()[0].to_string(), "101");
  EXPECT_EQ(f.negatives().size(), 1u);
  EXPECT_EQ(codec::serialize_sample(f), "sample n=3\n000 0\n101 1\n");
}

TEST(Codec, TruthTableAndTree) {
  TruthTable t = codec::parse_tt("tt n=2\n0110\n");
  EXPECT_EQ(t.to_string(), "0110");
  EXPECT_EQ(codec::serialize(t), "tt n=2\n0110\n");
  DecisionTree tree = codec::parse_dtree("dtree n=3\nx1 0\n x3 0 1\n");
  EXPECT_EQ(tree.to_string(), "x1 0 x3 0 1");
  EXPECT_EQ(codec::serialize(tree, 3), "dtree n=3\nx1 0 x3 0 1\n");
  EXPECT_EQ(codec::parse_dimension("# c\ndtree n=3\n1\n"), 3);
}

TEST(Codec, ErrorsCarryLineNumbers) {
  auto line_of = [](auto fn) -> std::size_t {
    try {
      fn();
    } catch (const ParseError& e) {
      return e.line();
    }
    return 999;
  };
  EXPECT_EQ(line_of([] { codec::parse_dnf("dnf n=3\n1 4\n"); }), 2u);
  EXPECT_EQ(line_of([] { codec::parse_dnf("dnf n=3\n1 x\n"); }), 2u);
  EXPECT_EQ(line_of([] { codec::parse_dnf("dnf n=3\n\n1 0\n"); }), 3u);
  EXPECT_EQ(line_of([] { codec::parse_dnf("dnx n=3\n"); }), 1u);
  EXPECT_EQ(line_of([] { codec::parse_sample("sample n=2\n01 1\n01 0\n"); }), 3u);
  EXPECT_EQ(line_of([] { codec::parse_sample("sample n=2\n011 1\n"); }), 2u);
  EXPECT_EQ(line_of([] { codec::parse_sample("sample n=2\n01 2\n"); }), 2u);
  EXPECT_EQ(line_of([] { codec::parse_tt("tt n=2\n011\n"); }), 2u);
  EXPECT_EQ(line_of([] { codec::parse_dtree("dtree n=2\nx3 0 1\n"); }), 2u);
  EXPECT_EQ(line_of([] { codec::parse_dtree("dtree n=2\nx1 x1 0 1 0\n"); }), 2u);
  EXPECT_THROW(codec::parse_any("blob n=1\n"), ParseError);
}

TEST(Codec, RandomRoundTrips) {
  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(uniform_int(rng, 8));
    Dnf f = random_dnf(n, static_cast<int>(uniform_int(rng, std::min(4, 2 * n))), 1, std::min(n, 3), rng);
    EXPECT_EQ(codec::parse_dnf(codec::serialize(f)).canonical(), f.canonical());

    PartialFn s = random_partial(n, 0.3, 0.3, rng);
    EXPECT_EQ(codec::parse_sample(codec::serialize_sample(s)), s);

    TruthTable t = truth_table(f, n);
    EXPECT_EQ(codec::parse_tt(codec::serialize(t)), t);

    DecisionTree tree = random_tree(n, std::min(n, 4), 0.3, rng);
    EXPECT_EQ(codec::parse_dtree(codec::serialize(tree, n)), tree);
  }
}
