#include <gtest/gtest.h>

#include <random>

#include "ordinal/arith.hpp"
#include "ordinal/compare.hpp"
#include "ordinal/error.hpp"
#include "ordinal/names.hpp"
#include "ordinal/oracle.hpp"

using namespace ordinal;

namespace {

oracle::GenParams small() { return oracle::GenParams{4, 3, 0.0, 0}; }

}  // namespace

TEST(TriBoolTest, KleeneTables) {
  auto T = TriBool::yes(), F = TriBool::no(), U = TriBool::unknown();
  EXPECT_EQ(T && U, U);
  EXPECT_EQ(F && U, F);
  EXPECT_EQ(T || U, T);
  EXPECT_EQ(F || U, U);
  EXPECT_EQ(!U, U);
  EXPECT_EQ(!T, F);
}

TEST(Engine, MatchesNaiveOracleOnRandomPairs) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    Name a = oracle::gen_name(small(), rng), b = oracle::gen_name(small(), rng);
    std::vector<Name> bs{b};
    EXPECT_EQ(le(a, bs, Fuel::unbounded()).is_true(), oracle::naive_le(a, bs));
    EXPECT_EQ(lt(a, bs, Fuel::unbounded()).is_true(), oracle::naive_lt(a, bs));
  }
}

TEST(Engine, MatchesNaiveOracleOnLists) {
  std::mt19937_64 rng(22);
  oracle::GenParams p{3, 3, 0.0, 0};
  for (int i = 0; i < 200; ++i) {
    Name a = oracle::gen_name(p, rng);
    std::vector<Name> bs{oracle::gen_name(p, rng), oracle::gen_name(p, rng), oracle::gen_name(p, rng)};
    EXPECT_EQ(le(a, bs, Fuel::unbounded()).is_true(), oracle::naive_le(a, bs));
    EXPECT_EQ(lt(a, bs, Fuel::unbounded()).is_true(), oracle::naive_lt(a, bs));
  }
}

TEST(Engine, FinitaryMatchesValues) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    Name a = oracle::gen_name(small(), rng), b = oracle::gen_name(small(), rng);
    auto va = oracle::val(a), vb = oracle::val(b);
    EXPECT_EQ(le(a, {b}).is_true(), va <= vb);
    EXPECT_EQ(lt(a, {b}).is_true(), va < vb);
    Order expect = va < vb ? Order::Lt : va == vb ? Order::Eq : Order::Gt;
    EXPECT_EQ(cmp_finitary(a, b), expect);
  }
}

TEST(Engine, FinitaryNeverUnknownAtDefaultFuel) {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 300; ++i) {
    Name a = oracle::gen_name(small(), rng), b = oracle::gen_name(small(), rng);
    EXPECT_TRUE(le(a, {b}).is_definite());
    EXPECT_TRUE(lt(a, {b}).is_definite());
  }
}

TEST(Engine, EmptyRhsRejected) {
  EXPECT_THROW(le(zero(), std::span<const Name>{}), InvalidArgument);
  EXPECT_THROW(lt(und(1), std::span<const Name>{}), InvalidArgument);
}

TEST(Engine, ZeroRhsMembersOnly) {
  EXPECT_TRUE(lt(zero(), {zero(), zero()}).is_false());
  EXPECT_TRUE(lt(zero(), {zero(), und(1)}).is_true());
}

TEST(Engine, RhsOrderIrrelevant) {
  std::mt19937_64 rng(25);
  for (int i = 0; i < 100; ++i) {
    Name a = oracle::gen_name(small(), rng), b = oracle::gen_name(small(), rng),
         c = oracle::gen_name(small(), rng);
    EXPECT_EQ(lt(a, {b, c}), lt(a, {c, b}));
    EXPECT_EQ(le(a, {b, c}), le(a, {c, b, b}));
  }
}

TEST(Engine, OmegaSelfComparisons) {
  EXPECT_TRUE(le(omega(), {omega()}).is_true());
  EXPECT_TRUE(lt(omega(), {omega()}).is_unknown());
}

TEST(Engine, DefiniteVerdictsStableUnderMoreFuel) {
  Name w = omega();
  std::vector<std::pair<Name, Name>> cases = {
      {und(5), w}, {w, w}, {w, add(w, w)}, {und(1), add(und(1), w)}, {w, und(7)}};
  for (auto& [a, b] : cases) {
    TriBool small_le = le(a, {b}, Fuel{8, 64});
    TriBool big_le = le(a, {b}, Fuel{256, 512});
    if (small_le.is_definite()) {
      EXPECT_EQ(small_le, big_le) << to_string(a) << " <= " << to_string(b);
    }
    TriBool small_lt = lt(a, {b}, Fuel{8, 64});
    TriBool big_lt = lt(a, {b}, Fuel{256, 512});
    if (small_lt.is_definite()) EXPECT_EQ(small_lt, big_lt);
  }
}

TEST(Engine, UnknownCarriesReason) {
  TriBool r = lt(omega(), {omega()}, Fuel{4, 64});
  ASSERT_TRUE(r.is_unknown());
  EXPECT_NE(r.reasons(), 0);
}

TEST(Engine, DepthGuardGivesUnknown) {
  TriBool r = le(und(40), {und(40)}, Fuel{64, 5});
  EXPECT_TRUE(r.is_unknown() || r.is_true());
  Name a = suc_list({und(30), und(29)});
  EXPECT_TRUE(lt(a, {und(31)}, Fuel{64, 3}).is_unknown());
}

TEST(Engine, EvaluatorReuse) {
  Evaluator ev(Fuel{64, 512});
  std::vector<Name> rhs{und(4)};
  EXPECT_TRUE(ev.lt(und(3), rhs).is_true());
  EXPECT_TRUE(ev.le(und(5), rhs).is_false());
  EXPECT_TRUE(ev.decide(Judgment(Rel::Le, und(4), {und(4)})).is_true());
}

TEST(Selection, PrefixAndLimit) {
  std::vector<Name> bs{und(2), und(3)};
  EXPECT_EQ(prefix_selection(bs, 1).size(), 2u);
  EXPECT_TRUE(selection_covers(bs, selection_limit(bs, 64)));
  std::vector<Name> inf{omega()};
  EXPECT_FALSE(selection_covers(inf, selection_limit(inf, 64)));
}

TEST(Eq, DistinctButEqual) {
  Name a = suc_list({und(2), und(1)});
  EXPECT_FALSE(same(a, und(3)));
  EXPECT_TRUE(eq(a, und(3)).is_true());
}

TEST(Memo, ClearResetsStats) {
  (void)le(und(6), {und(7)});
  clear_memo();
  EXPECT_EQ(memo_stats().entries, 0u);
}
