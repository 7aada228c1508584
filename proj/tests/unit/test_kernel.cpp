#include <gtest/gtest.h>

#include <random>

#include "ordinal/arith.hpp"
#include "ordinal/compare.hpp"
#include "ordinal/error.hpp"
#include "ordinal/kernel.hpp"
#include "ordinal/oracle.hpp"

using namespace ordinal;

namespace {

const VerifyPolicy kSpot = VerifyPolicy::spot_check({0, 1, 4, 9});

Cert proved(Rel r, const Name& a, const Name& b) {
  auto c = prove(Judgment(r, a, {b}));
  if (!c) ADD_FAILURE() << "no certificate: " << to_string(a) << " vs " << to_string(b);
  return c ? *c : nullptr;
}

}  // namespace

TEST(Kernel, ReflexivityOnFinitaryExhaustive) {
  std::mt19937_64 rng(31);
  oracle::GenParams p{4, 3, 0.0, 0};
  for (int i = 0; i < 100; ++i) {
    Name a = oracle::gen_name(p, rng);
    auto r = verify(refl(a), VerifyPolicy::exhaustive());
    EXPECT_TRUE(r.ok) << r.error;
  }
}

TEST(Kernel, ReflexivityOnOmegaSpotCheck) {
  Cert c = refl(omega());
  EXPECT_TRUE(c->infinitary());
  EXPECT_TRUE(verify(c, kSpot).ok);
  EXPECT_FALSE(verify(c, VerifyPolicy::exhaustive()).ok);
}

TEST(Kernel, ZeroRules) {
  EXPECT_TRUE(verify(zero_le({zero()}), VerifyPolicy::exhaustive()).ok);
  EXPECT_TRUE(verify(zero_lt({und(1)}), VerifyPolicy::exhaustive()).ok);
  EXPECT_THROW(zero_lt({zero()}), KernelError);
}

TEST(Kernel, SubordinalBelowParent) {
  EXPECT_TRUE(verify(subordinal_lt(omega(), 7), kSpot).ok);
  EXPECT_TRUE(verify(subordinal_lt(und(3), 0), VerifyPolicy::exhaustive()).ok);
}

TEST(Kernel, LtIntroRejectsBadWitness) {
  // 3 < [2] must not be derivable by any witness.
  EXPECT_THROW(lt_intro(und(3), {und(2)}, 0, refl(und(3))), KernelError);
}

TEST(Kernel, TransitivityChecksMiddleTerm) {
  Cert p = proved(Rel::Le, und(1), und(2));
  Cert q = proved(Rel::Le, und(3), und(4));
  EXPECT_THROW(trans_le_le(p, q), KernelError);
  Cert r = proved(Rel::Le, und(2), und(5));
  EXPECT_TRUE(verify(trans_le_le(p, r), VerifyPolicy::exhaustive()).ok);
}

TEST(Kernel, CertifyMatchesEngineOnFinitary) {
  std::mt19937_64 rng(32);
  oracle::GenParams p{3, 3, 0.0, 0};
  for (int i = 0; i < 100; ++i) {
    Name a = oracle::gen_name(p, rng), b = oracle::gen_name(p, rng);
    for (Rel r : {Rel::Le, Rel::Lt}) {
      Judgment j(r, a, {b});
      auto c = certify(j, Fuel::unbounded());
      EXPECT_EQ(c.has_value(), decide(j, Fuel::unbounded()).is_true());
      if (c) EXPECT_TRUE(verify(*c, VerifyPolicy::exhaustive()).ok);
    }
  }
}

TEST(Kernel, OnePlusOmegaEqualsOmega) {
  Name a = add(und(1), omega());
  Cert up = proved(Rel::Le, a, omega());
  Cert down = proved(Rel::Le, omega(), a);
  EXPECT_TRUE(verify(up, kSpot).ok);
  EXPECT_TRUE(verify(down, kSpot).ok);
  EXPECT_FALSE(le(a, {omega()}).is_false());
  EXPECT_FALSE(le(omega(), {a}).is_false());
}

TEST(Kernel, OmegaBelowOmegaPlusOmega) {
  Name ww = add(omega(), omega());
  Cert c = proved(Rel::Lt, omega(), ww);
  EXPECT_TRUE(verify(c, kSpot).ok);
  EXPECT_FALSE(lt(omega(), {ww}).is_false());
  EXPECT_FALSE(prove(Judgment(Rel::Le, ww, {omega()})).has_value());
}

TEST(Kernel, OmegaTimesTwoEqualsOmegaPlusOmega) {
  Name a = mul(omega(), und(2)), b = add(omega(), omega());
  EXPECT_TRUE(verify(proved(Rel::Le, a, b), kSpot).ok);
  EXPECT_TRUE(verify(proved(Rel::Le, b, a), kSpot).ok);
  EXPECT_FALSE(le(a, {b}).is_false());
  EXPECT_FALSE(le(b, {a}).is_false());
}

TEST(Kernel, SpotCheckReportsSamples) {
  auto r = verify(refl(omega()), VerifyPolicy::spot_check({0, 2, 5}));
  ASSERT_TRUE(r.ok);
  ASSERT_FALSE(r.sampled.empty());
  EXPECT_EQ(r.sampled.front().indices, (std::vector<std::uint64_t>{0, 2, 5}));
}

TEST(Kernel, SpotCheckCatchesBadSampledPremise) {
  // Claims omega <= [5]: the generator lies about premises beyond 5.
  CertGenerator gen = [](std::uint64_t i) -> Cert {
    return i < 5 ? subordinal_lt(und(5), i) : subordinal_lt(und(5), 4);
  };
  Cert bad = le_intro(omega(), {und(5)}, gen);
  auto r = verify(bad, VerifyPolicy::spot_check({0, 9}));
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.error_path.empty());
}

TEST(Kernel, IncompatiblePair) {
  Cert p = proved(Rel::Le, und(2), und(3));
  Cert q = proved(Rel::Lt, und(2), und(3));
  EXPECT_FALSE(incompatible(p, q).flagged);
  Cert r = proved(Rel::Le, und(1), und(1));
  Cert s = refl(und(1));
  EXPECT_FALSE(incompatible(r, s).flagged);
}

TEST(Kernel, SerializeFinitary) {
  std::string text = serialize(refl(und(2)));
  EXPECT_NE(text.find("#0"), std::string::npos);
  EXPECT_THROW(serialize(refl(omega())), KernelError);
}

TEST(Kernel, SupRules) {
  Cert a = proved(Rel::Lt, und(2), und(4));
  Cert b = proved(Rel::Lt, und(3), und(4));
  Cert s = sup_lt(a, b);
  EXPECT_TRUE(verify(s, VerifyPolicy::exhaustive()).ok);
  EXPECT_TRUE(same(s->conclusion.lhs, sup_finite({und(2), und(3)})));
}

TEST(Kernel, SucRules) {
  Cert p = proved(Rel::Le, und(2), und(2));
  Cert q = lt_suc_of_le(p);
  EXPECT_TRUE(verify(q, VerifyPolicy::exhaustive()).ok);
  EXPECT_TRUE(verify(le_of_lt_suc(q), VerifyPolicy::exhaustive()).ok);
}
