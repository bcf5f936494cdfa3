#include "scalc/relation.hpp"

#include "support.hpp"

using namespace scalc;

TEST(Relation, FromPairsSortsAndDedups) {
  const Relation r = Relation::from_pairs(3, {{2, 1}, {0, 2}, {0, 0}, {0, 2}});
  EXPECT_EQ(r.pair_count(), 3u);
  EXPECT_EQ(r.pairs(), (std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {0, 2}, {2, 1}}));
  EXPECT_TRUE(r.contains(0, 2));
  EXPECT_FALSE(r.contains(1, 1));
  EXPECT_FALSE(r.has_successor(1));
}

TEST(Relation, Constants) {
  EXPECT_EQ(Relation::identity(3).pairs(),
            (std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {1, 1}, {2, 2}}));
  EXPECT_EQ(Relation::full(4).pair_count(), 16u);
  EXPECT_EQ(Relation(5).pair_count(), 0u);
}

TEST(Relation, BuilderRejectsWrongRowCount) {
  RelationBuilder b(2);
  std::vector<StateIndex> row{1, 0, 1};
  b.add_row(row);
  test::expect_error(ErrorKind::SpaceMismatch, [&] { (void)std::move(b).finish(); });
}

TEST(Relation, ContainsAgreesWithPairs) {
  std::minstd_rand g(11);
  for (int t = 0; t < 50; ++t) {
    const Relation r = test::any_relation(6, g);
    const auto ps = test::pair_set(r);
    for (std::size_t x = 0; x < 6; ++x) {
      for (std::size_t y = 0; y < 6; ++y) EXPECT_EQ(r.contains(x, y), ps.count({x, y}) == 1);
    }
  }
}
