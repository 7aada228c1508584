#include <gtest/gtest.h>

#include <random>

#include "ordinal/compare.hpp"
#include "ordinal/error.hpp"
#include "ordinal/mlseq.hpp"
#include "ordinal/oracle.hpp"

using namespace ordinal;

namespace {

Atom LE(const Name& a, const Name& b) { return Atom{a, Rel::Le, b}; }
Atom LT(const Name& a, const Name& b) { return Atom{a, Rel::Lt, b}; }

oracle::GenParams small() { return oracle::GenParams{3, 3, 0.0, 0}; }

std::vector<std::uint8_t> bits(std::uint64_t len, std::uint64_t ones_from) {
  std::vector<std::uint8_t> v(len, 0);
  for (std::uint64_t i = ones_from; i < len; ++i) v[i] = 1;
  return v;
}

}  // namespace

TEST(SequentTest, SetSemantics) {
  Sequent s{LE(und(1), und(2)), LE(und(1), und(2)), LT(und(0), und(1))};
  EXPECT_EQ(s.size(), 2u);
  EXPECT_TRUE(s.contains(LT(und(0), und(1))));
  EXPECT_TRUE(Sequent{LE(und(1), und(2))}.subset_of(s));
  EXPECT_FALSE(s.subset_of(Sequent{LE(und(1), und(2))}));
  EXPECT_EQ(s.with(LE(und(1), und(2))), s);
}

TEST(MlProve, ReflexiveAndSuccessor) {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 100; ++i) {
    Name a = oracle::gen_name(small(), rng);
    EXPECT_TRUE(ml_derivable({LE(a, a)})) << to_string(a);
    EXPECT_TRUE(ml_derivable({LT(a, suc(a))})) << to_string(a);
    EXPECT_FALSE(ml_derivable({LT(a, a)})) << to_string(a);
  }
}

TEST(MlProve, ExcludedMiddlePair) {
  std::mt19937_64 rng(62);
  for (int i = 0; i < 100; ++i) {
    Name a = oracle::gen_name(small(), rng), b = oracle::gen_name(small(), rng);
    auto c = ml_prove({LT(a, b), LE(b, a)});
    ASSERT_TRUE(c.has_value());
    EXPECT_TRUE(ml_verify(*c, VerifyPolicy::exhaustive()).ok);
  }
}

TEST(MlProve, SingleAtomsMatchFinitaryOrder) {
  std::mt19937_64 rng(63);
  for (int i = 0; i < 300; ++i) {
    Name a = oracle::gen_name(small(), rng), b = oracle::gen_name(small(), rng);
    Order o = cmp_finitary(a, b);
    EXPECT_EQ(ml_derivable({LT(a, b)}), o == Order::Lt);
    EXPECT_EQ(ml_derivable({LE(a, b)}), o != Order::Gt);
  }
}

TEST(MlProve, CertificatesVerifyExhaustively) {
  std::mt19937_64 rng(64);
  for (int i = 0; i < 100; ++i) {
    Name a = oracle::gen_name(small(), rng), b = oracle::gen_name(small(), rng);
    Sequent s{LE(a, b), LT(b, a)};
    auto c = ml_prove(s);
    ASSERT_TRUE(c);
    EXPECT_EQ((*c)->conclusion, s);
    auto r = ml_verify(*c, VerifyPolicy::exhaustive());
    EXPECT_TRUE(r.ok) << r.error;
  }
}

TEST(MlProve, RejectsInfinitary) {
  EXPECT_THROW(ml_prove({LE(omega(), omega())}), InvalidArgument);
}

TEST(MlProve, EmptySequentUnderivable) { EXPECT_FALSE(ml_derivable(Sequent{})); }

TEST(MlRules, LocalChecks) {
  Name two = und(2);
  // 1 < 2 by R1 on the only subordinal of 2: premise 1 <= 1.
  auto p = ml_prove({LE(und(1), und(1))});
  ASSERT_TRUE(p);
  MlCert ok = ml_r1({LT(und(1), two)}, LT(und(1), two), 0, *p);
  EXPECT_TRUE(ml_verify(ok, VerifyPolicy::exhaustive()).ok);
  EXPECT_THROW(ml_r1({LT(und(1), two)}, LT(und(1), two), 1, *p), KernelError);
  EXPECT_THROW(ml_r1({LT(und(1), two)}, LE(und(1), two), 0, *p), KernelError);
  EXPECT_THROW(ml_r2({LE(two, two)}, LE(two, two), std::vector<MlCert>{}), KernelError);
}

TEST(MlRules, TamperedPrincipalFailsVerification) {
  auto c = ml_prove({LT(und(1), und(3))});
  ASSERT_TRUE(c);
  auto forged = std::make_shared<MlCertificate>(**c);
  forged->principal = LT(und(1), und(2));
  forged->conclusion = Sequent{LT(und(1), und(2))};
  auto r = ml_verify(forged, VerifyPolicy::exhaustive());
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.error_path, "root");
}

TEST(MlRules, TamperedPremiseFailsVerification) {
  auto c = ml_prove({LE(und(2), und(2))});
  ASSERT_TRUE(c);
  ASSERT_FALSE((*c)->premises.empty());
  auto forged = std::make_shared<MlCertificate>(**c);
  auto bad = std::make_shared<MlCertificate>(*forged->premises[0]);
  bad->conclusion = Sequent{LT(und(5), und(1))};
  forged->premises[0] = bad;
  EXPECT_FALSE(ml_verify(forged, VerifyPolicy::exhaustive()).ok);
}

TEST(LpoDivergence, CertificateVerifiesAndEngineUnknown) {
  for (std::uint64_t len = 1; len <= 8; ++len) {
    for (std::uint64_t k = 0; k <= len; ++k) {
      auto prefix = bits(len, k);
      std::vector<std::uint64_t> samples{0, 1, len, len + 1, len + 8};
      BitSeq c = BitSeq::const_last(prefix);
      BitSeq o = BitSeq::opaque_last(prefix);
      for (const BitSeq& u : {c, o}) {
        auto r = ml_verify(ml_lpo_cert(u), VerifyPolicy::spot_check(samples));
        EXPECT_TRUE(r.ok) << len << "/" << k << ": " << r.error;
      }
      LpoNames n = eps_lpo(o);
      EXPECT_TRUE(lt(n.eps, {n.eps_prime}, Fuel{64, 512}).is_unknown());
      LpoNames d = eps_lpo(c);
      EXPECT_TRUE(lt(d.eps, {d.eps_prime}).is_true());
    }
  }
}

TEST(LpoDivergence, ExhaustiveRefusesInfinitary) {
  auto r = ml_verify(ml_lpo_cert(BitSeq::const_last({0, 1})), VerifyPolicy::exhaustive());
  EXPECT_FALSE(r.ok);
}
