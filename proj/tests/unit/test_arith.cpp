#include <gtest/gtest.h>

#include <random>

#include "ordinal/arith.hpp"
#include "ordinal/compare.hpp"
#include "ordinal/error.hpp"
#include "ordinal/oracle.hpp"

using namespace ordinal;

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

bool EQ(const Name& a, const Name& b) { return eq(a, b, Fuel::unbounded()).is_true(); }

}  // namespace

TEST(Arith, SmallValues) {
  EXPECT_EQ(oracle::val(add(und(2), und(3))), 5u);
  EXPECT_EQ(oracle::val(mul(und(2), und(3))), 6u);
  EXPECT_EQ(oracle::val(pow(und(2), und(3))), 8u);
  EXPECT_EQ(oracle::val(pow(zero(), zero())), 1u);
  EXPECT_TRUE(mul(und(4), zero()).is_zero());
}

TEST(Arith, AddZeroIsSameNode) {
  Name a = suc_list({und(2), und(1)});
  EXPECT_TRUE(same(add(a, zero()), a));
  EXPECT_TRUE(same(add(omega(), zero()), omega()));
}

TEST(Arith, ValuationHomomorphism) {
  std::mt19937_64 rng(41);
  oracle::GenParams p{3, 3, 0.0, 0};
  for (int i = 0; i < 200; ++i) {
    Name a = oracle::gen_name(p, rng), b = oracle::gen_name(p, rng);
    auto va = oracle::val(a), vb = oracle::val(b);
    EXPECT_EQ(oracle::val(add(a, b)), va + vb);
    EXPECT_EQ(oracle::val(mul(a, b)), va * vb);
    EXPECT_EQ(oracle::val(pow(a, b)), ipow(va, vb));
  }
}

TEST(Arith, LawBattery) {
  oracle::BatteryOptions o;
  o.seed = 5;
  o.cases = 60;
  o.max_depth = 3;
  auto r = oracle::arith_battery(o);
  const auto* f = r.first_failure();
  EXPECT_TRUE(r.ok()) << (f ? std::string(f->name) + ": " + f->counterexample : "");
}

TEST(Arith, OmegaShapes) {
  EXPECT_EQ(add(omega(), omega()).index(), Index::nat());
  EXPECT_TRUE(lt(omega(), {add(omega(), und(1))}).is_true());
  EXPECT_TRUE(le(add(omega(), und(3)), {und(10)}).is_false());
}

TEST(Arith, PowOmegaUnknownAgainstOmega) {
  // w^2 vs w: the engine must not claim le.
  Name w2 = pow(omega(), und(2));
  EXPECT_FALSE(le(w2, {omega()}, Fuel{16, 128}).is_true());
}

TEST(Arith, AckermannBase) {
  Name a = und(2), b = und(3);
  EXPECT_TRUE(EQ(acko(a, b, zero()), add(a, b)));
  EXPECT_TRUE(EQ(acko(a, zero(), und(2)), a));
}

TEST(Arith, Eps0IsLabelledConstant) {
  Name e = eps0();
  EXPECT_TRUE(same(e, eps0()));
  ASSERT_NE(e.label(), nullptr);
  EXPECT_EQ(*e.label(), "eps0");
  EXPECT_TRUE(same(e, acko(omega(), omega(), und(1))));
  EXPECT_FALSE(e.is_finitary());
}

TEST(SeqSum, FinitePartialSums) {
  LinearIndexOrder ord{Index::fin(3)};
  Family f = Family::of({und(1), und(2), und(3)});
  EXPECT_TRUE(seq_sum(ord, f, std::uint64_t{0}).is_zero());
  EXPECT_EQ(oracle::val(seq_sum(ord, f, std::uint64_t{2})), 3u);
  EXPECT_EQ(oracle::val(seq_sum(ord, f, Top{})), 6u);
}

TEST(SeqSum, TopOnNatRejected) {
  LinearIndexOrder ord{Index::nat()};
  Family f = Family::over_nat([](std::uint64_t n) { return und(n); });
  EXPECT_THROW(seq_sum(ord, f, Top{}), InvalidArgument);
}
