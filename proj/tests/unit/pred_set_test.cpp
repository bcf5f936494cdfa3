#include "scalc/pred_set.hpp"

#include "support.hpp"

using namespace scalc;
using scalc::test::expect_error;

namespace {

std::set<std::size_t> members(const PredSet& p) {
  auto m = p.members();
  return {m.begin(), m.end()};
}

}  // namespace

TEST(PredSet, OperationsMatchStdSet) {
  std::minstd_rand g(7);
  for (std::size_t n : {1u, 5u, 63u, 64u, 65u, 130u}) {
    for (int t = 0; t < 20; ++t) {
      const PredSet a = test::any_predset(n, g), b = test::any_predset(n, g);
      std::set<std::size_t> sa = members(a), sb = members(b), all;
      for (std::size_t k = 0; k < n; ++k) all.insert(k);
      std::set<std::size_t> inter, uni, comp, impl;
      for (auto k : all) {
        if (sa.count(k) && sb.count(k)) inter.insert(k);
        if (sa.count(k) || sb.count(k)) uni.insert(k);
        if (!sa.count(k)) comp.insert(k);
        if (!sa.count(k) || sb.count(k)) impl.insert(k);
      }
      EXPECT_EQ(members(a & b), inter);
      EXPECT_EQ(members(a | b), uni);
      EXPECT_EQ(members(~a), comp);
      EXPECT_EQ(members(a.implies(b)), impl);
      EXPECT_EQ(a.count(), sa.size());
      EXPECT_EQ(a.subset_of(b), std::includes(sb.begin(), sb.end(), sa.begin(), sa.end()));
      EXPECT_EQ((~a).count(), n - sa.size());
    }
  }
}

TEST(PredSet, FullAndEmpty) {
  EXPECT_TRUE(PredSet::full(70).is_full());
  EXPECT_TRUE(PredSet::none(70).empty());
  EXPECT_EQ(~PredSet::full(70), PredSet::none(70));
  EXPECT_TRUE(PredSet(0).empty());
  EXPECT_TRUE(PredSet(0).is_full());
}

TEST(PredSet, MismatchedSizes) {
  expect_error(ErrorKind::SpaceMismatch, [] { (void)(PredSet(3) & PredSet(4)); });
  expect_error(ErrorKind::SpaceMismatch, [] { (void)PredSet(3).subset_of(PredSet(4)); });
}
