#include <gtest/gtest.h>

#include "oracles.hpp"
#include "seedlearn/certs.hpp"
#include "seedlearn/errors.hpp"
#include "seedlearn/random.hpp"
#include "seedlearn/seeds.hpp"
#include "seedlearn/term_enum.hpp"
#include "seedlearn/truth_table.hpp"

using namespace seedlearn;

namespace {

TruthTable parity_table(int n) {
  TruthTable t(n);
  for (std::uint64_t i = 0; i < t.length(); ++i) t.set(i, std::popcount(i) % 2 == 1);
  return t;
}

}  // namespace

TEST(Certify, ParityFourAtSizeOne) {
  CertifyResult r = certify(parity_table(4), 1);
  ASSERT_FALSE(r.covered());
  EXPECT_EQ(r.q, 0);
  const auto& cert = std::get<Certificate>(r.outcome);
  ASSERT_EQ(cert.provenance.size(), 1u);
  const NonSeedWitness& w = cert.provenance[0];
  EXPECT_TRUE(w.term.empty());
  ASSERT_EQ(w.positives.size(), 2u);
  EXPECT_EQ(w.positives[0].to_string(), "0001");
  EXPECT_EQ(w.positives[1].to_string(), "0010");
  EXPECT_EQ(w.negative.to_string(), "0000");
  ASSERT_EQ(cert.points.size(), 3u);
  EXPECT_TRUE(verify_certificate(parity_table(4), cert, 1));
}

TEST(Certify, CoversWhenPossible) {
  TruthTable orr = TruthTable::from_string("0111");
  CertifyResult r = certify(orr, 2);
  ASSERT_TRUE(r.covered());
  EXPECT_EQ(truth_table(std::get<Dnf>(r.outcome), 2), orr);

  CertifyResult z = certify(TruthTable(3), 1);
  ASSERT_TRUE(z.covered());
  EXPECT_EQ(std::get<Dnf>(z.outcome).size(), 0);
}

TEST(VerifyCertificate, VacuousAndWeak) {
  Certificate empty;
  EXPECT_FALSE(verify_certificate(parity_table(3), empty, 0));

  TruthTable x1(4);
  for (std::uint64_t i = 8; i < 16; ++i) x1.set(i, true);
  Certificate one;
  one.points = {{Assignment::from_string("1000"), true}};
  EXPECT_FALSE(verify_certificate(x1, one, 1));
}

TEST(Certify, ParityCertificatesHold) {
  for (auto [n, s] : {std::pair{4, 1L}, {6, 1L}, {8, 2L}}) {
    TruthTable t = parity_table(n);
    CertifyResult r = certify(t, s);
    ASSERT_FALSE(r.covered()) << n;
    const auto& cert = std::get<Certificate>(r.outcome);
    EXPECT_TRUE(verify_certificate(t, cert, s)) << n;
    EXPECT_LE(cert.points.size(), 3 * count_terms(n, r.q));
    EXPECT_FALSE(find_seed_enumerate(r.residual, r.q));
    for (const auto& [a, label] : cert.points) EXPECT_EQ(label, t.at(a));
    for (const NonSeedWitness& w : cert.provenance) {
      EXPECT_TRUE(witness_holds(w, r.residual));
      if (w.positives.size() == 2) EXPECT_TRUE(between(w.positives[0], w.positives[1], w.negative));
    }
  }
}

TEST(Certify, RandomFunctionsGiveOneOrTheOther) {
  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + static_cast<int>(uniform_int(rng, 3));
    TruthTable t(n);
    for (std::uint64_t i = 0; i < t.length(); ++i) t.set(i, uniform_int(rng, 2));
    long s = 1 + static_cast<long>(uniform_int(rng, 2));
    CertifyResult r = certify(t, s);
    if (r.covered()) {
      EXPECT_EQ(truth_table(std::get<Dnf>(r.outcome), n), t);
    } else {
      const auto& cert = std::get<Certificate>(r.outcome);
      EXPECT_TRUE(verify_certificate(t, cert, s));
      PartialFn restricted = cert.as_partial(n);
      auto ds = oracle::min_dnf_size(restricted, static_cast<int>(s));
      EXPECT_FALSE(ds.has_value());
    }
  }
}

TEST(Witness, MoreThanTwoPositives) {
  // No negative lies between two of these positives, yet 000 lies in their
  // closure; the witness needs all three.
  auto A = [](const char* b) { return Assignment::from_string(b); };
  PartialFn f(3, {A("110"), A("101"), A("011")}, {A("000")});
  NonSeedWitness w{Term{}, {A("011"), A("101"), A("110")}, A("000")};
  EXPECT_TRUE(witness_holds(w, f));
  NonSeedWitness two{Term{}, {A("011"), A("101")}, A("000")};
  EXPECT_FALSE(witness_holds(two, f));
}

TEST(Certify, Caps) {
  Caps caps;
  caps.max_exact_n = 4;
  EXPECT_THROW(certify(parity_table(5), 1, caps), ResourceError);
}
