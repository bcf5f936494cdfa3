#include "scalc/state_space.hpp"

#include "support.hpp"

using namespace scalc;
using scalc::test::expect_error;
using scalc::test::universe;

TEST(StateSpace, SizeIsProductOfDomains) {
  EXPECT_EQ(StateSpace(universe({{"a", {5, 10, 100}}})).size(), 3u);
  VarUniverse u;
  u.add("i", Domain::range("int", 0, 7));
  u.add("n", Domain::range("int", 0, 7));
  u.add("f", Domain::range("int", 0, 31));
  EXPECT_EQ(StateSpace(u).size(), 8u * 8u * 32u);
  EXPECT_EQ(StateSpace(VarUniverse{}).size(), 1u);
  EXPECT_TRUE(StateSpace(VarUniverse{}).index_to_state(0).values.empty());
}

TEST(StateSpace, RowMajorLastVariableFastest) {
  const StateSpace s(universe({{"a", {5, 10}}, {"b", {0, 1}}}));
  EXPECT_EQ(s.index_to_state(0).values, (std::vector<Value>{5, 0}));
  EXPECT_EQ(s.index_to_state(1).values, (std::vector<Value>{5, 1}));
  EXPECT_EQ(s.index_to_state(3).values, (std::vector<Value>{10, 1}));
  EXPECT_EQ(s.state_to_index(State{{10, 1}}), 3u);
  EXPECT_EQ(StateSpace(universe({{"a", {5, 10}}})).state_to_index(State{{5}}), 0u);
}

TEST(StateSpace, RoundTripAgainstMixedRadixOracle) {
  const StateSpace s(universe({{"a", {-3, 0, 4}}, {"b", {0, 1}}, {"c", {2, 5, 8, 9}}}));
  ASSERT_EQ(s.size(), 24u);
  for (std::size_t k = 0; k < s.size(); ++k) {
    const std::size_t ia = k / 8, ib = (k / 4) % 2, ic = k % 4;
    const std::vector<Value> expect{std::vector<Value>{-3, 0, 4}[ia], static_cast<Value>(ib),
                                    std::vector<Value>{2, 5, 8, 9}[ic]};
    EXPECT_EQ(s.index_to_state(k).values, expect);
    EXPECT_EQ(s.state_to_index(s.index_to_state(k)), k);
  }
}

TEST(StateSpace, Errors) {
  const StateSpace s(universe({{"a", {5, 10}}}));
  expect_error(ErrorKind::ValueNotInDomain, [&] { s.state_to_index(State{{7}}); });
  expect_error(ErrorKind::IndexOutOfRange, [&] { s.index_to_state(2); });
  expect_error(ErrorKind::EmptyDomain, [] { Domain("d", {}); });
  expect_error(ErrorKind::InvalidDomain, [] { Domain("d", {3, 3}); });
  expect_error(ErrorKind::InvalidDomain, [] { Domain("d", {4, 1}); });
  expect_error(ErrorKind::UnknownVariable, [&] { s.universe().index_of("zz"); });
  VarUniverse big;
  big.add("a", Domain::integer());
  big.add("b", Domain::integer());
  big.add("c", Domain::integer());
  big.add("d", Domain::integer());
  expect_error(ErrorKind::SpaceTooLarge, [&] { build_space(big); });
  expect_error(ErrorKind::SpaceTooLarge, [&] { build_space(universe({{"a", {1, 2, 3}}}), 2); });
  expect_error(ErrorKind::EmptyDomain, [] { StateSpace::abstract(0); });
}

TEST(StateSpace, DefaultIntegerDomain) {
  const Domain d = Domain::integer();
  EXPECT_EQ(d.size(), 256u);
  EXPECT_EQ(d.min(), -128);
  EXPECT_EQ(d.max(), 127);
  EXPECT_EQ(Domain::boolean().size(), 2u);
}

TEST(StateSpace, SparseDomainPositions) {
  const Domain d("d", {-5, 2, 40});
  EXPECT_EQ(d.position(2), 1u);
  EXPECT_FALSE(d.position(3).has_value());
  EXPECT_FALSE(d.position(41).has_value());
}
