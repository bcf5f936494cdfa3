#include "scalc/hoare.hpp"

#include <json.hpp>

#include "scalc/semantics.hpp"
#include "support.hpp"

using namespace scalc;

namespace {

StateSpace fact_space() {
  VarUniverse u;
  u.add("i", Domain::range("int", 0, 7));
  u.add("n", Domain::range("int", 0, 7));
  u.add("f", Domain::range("int", 0, 31));
  return StateSpace(u);
}

StateSpace a_space() {
  VarUniverse u;
  u.add("a", Domain::integer());
  return StateSpace(u);
}

const std::vector<std::string> kFact{"i", "n", "f"};
constexpr const char* kFirst = "int a=5; if (a > 0) a=10; else a=100;";
constexpr const char* kLoop = "while (i <= n) { f*=i; i++; }";

// The formulas evaluated literally, state by state.
bool tcf(const PredSet& p, const Relation& s, const PredSet& q) {
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (!p.test(x)) continue;
    bool some = false, all = true;
    for (std::size_t z = 0; z < s.size(); ++z) {
      if (!s.contains(x, z)) continue;
      some = true;
      all = all && q.test(z);
    }
    if (!some || !all) return false;
  }
  return true;
}

bool pcf(const PredSet& p, const Relation& s, const PredSet& q) {
  for (std::size_t x = 0; x < s.size(); ++x) {
    for (std::size_t z = 0; z < s.size(); ++z) {
      if (p.test(x) && s.contains(x, z) && !q.test(z)) return false;
    }
  }
  return true;
}

// Counterexample fails the formula it claims to refute.
void expect_sound(Mode mode, const PredSet& p, const Relation& s, const PredSet& q, const Counterexample& c) {
  ASSERT_TRUE(p.test(c.initial));
  switch (c.kind) {
    case Counterexample::Kind::NoSuccessor:
      EXPECT_EQ(mode, Mode::Total);
      EXPECT_FALSE(s.has_successor(c.initial));
      EXPECT_FALSE(c.witness_final.has_value());
      break;
    case Counterexample::Kind::BadSuccessor:
    case Counterexample::Kind::PartialViolation:
      ASSERT_TRUE(c.witness_final.has_value());
      EXPECT_TRUE(s.contains(c.initial, *c.witness_final));
      EXPECT_FALSE(q.test(*c.witness_final));
      EXPECT_EQ(c.kind == Counterexample::Kind::PartialViolation, mode == Mode::Partial);
      break;
  }
}

}  // namespace

TEST(Hoare, FirstExample) {
  const StateSpace s = a_space();
  const Report ok = verify(parse_program(kFirst), PredExpr::truth(), parse_pred("a == 10"), Mode::Total, s);
  EXPECT_TRUE(ok.verdict.holds);
  EXPECT_FALSE(ok.verdict.counterexample.has_value());
  EXPECT_EQ(ok.wp_size, 256u);

  const Report bad = verify(parse_program(kFirst), PredExpr::truth(), parse_pred("a == 100"), Mode::Total, s);
  ASSERT_FALSE(bad.verdict.holds);
  EXPECT_EQ(bad.verdict.counterexample->kind, Counterexample::Kind::BadSuccessor);
  EXPECT_EQ(s.value_at(*bad.verdict.counterexample->witness_final, 0), 10);
  EXPECT_EQ(bad.verdict.counterexample->initial, 0u);
}

TEST(Hoare, FactorialExample) {
  const StateSpace s = fact_space();
  const Stmt loop = parse_program(kLoop, kFact);
  EXPECT_TRUE(verify(loop, parse_pred("i == 2 && n == 4 && f == 1"), parse_pred("f == 24"), Mode::Total, s).verdict.holds);

  const Report weak = verify(loop, PredExpr::truth(), parse_pred("f == 24"), Mode::Total, s);
  ASSERT_FALSE(weak.verdict.holds);
  // Oracle: the first initial state, in index order, that fails the literal formula.
  const Relation r = denote(loop, s);
  const PredSet q = pred_to_set(parse_pred("f == 24"), s);
  std::size_t first = s.size();
  for (std::size_t x = 0; x < s.size() && first == s.size(); ++x) {
    PredSet single(s.size());
    single.set(x, true);
    if (!tcf(single, r, q)) first = x;
  }
  EXPECT_EQ(weak.verdict.counterexample->initial, first);
  expect_sound(Mode::Total, PredSet::full(s.size()), r, q, *weak.verdict.counterexample);
}

TEST(Hoare, DivergentLoopSplitsTotalAndPartial) {
  VarUniverse u;
  u.add("i", Domain::range("int", 0, 7));
  const StateSpace s(u);
  const Stmt loop = parse_program("while (i >= 0) i = i + 1;", std::vector<std::string>{"i"});
  const Report total = verify(loop, parse_pred("i == 0"), PredExpr::falsity(), Mode::Total, s);
  ASSERT_FALSE(total.verdict.holds);
  EXPECT_EQ(total.verdict.counterexample->kind, Counterexample::Kind::NoSuccessor);
  EXPECT_TRUE(verify(loop, parse_pred("i == 0"), PredExpr::falsity(), Mode::Partial, s).verdict.holds);
}

TEST(Hoare, PartialViolationOnNop) {
  VarUniverse u;
  u.add("a", Domain("a", {5, 10}));
  const StateSpace s(u);
  const Report r = verify(Stmt::nop(), parse_pred("a == 5"), parse_pred("a == 10"), Mode::Partial, s);
  ASSERT_FALSE(r.verdict.holds);
  EXPECT_EQ(r.verdict.counterexample->kind, Counterexample::Kind::PartialViolation);
  EXPECT_EQ(s.value_at(*r.verdict.counterexample->witness_final, 0), 5);
}

TEST(Hoare, WpExamples) {
  std::minstd_rand g(12);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + g() % 8;
    const Relation r = test::any_relation(n, g);
    const PredSet q = test::any_predset(n, g);
    EXPECT_TRUE(wp(r, PredSet::none(n)).empty());
    EXPECT_EQ(wp(Relation::identity(n), q), q);
  }
  const StateSpace s = a_space();
  EXPECT_TRUE(wp(denote(parse_program(kFirst), s), pred_to_set(parse_pred("a == 10"), s)).is_full());
}

TEST(Hoare, AgreesWithLiteralFormulas) {
  std::minstd_rand g(21);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t n = 1 + g() % 6;
    const PredSet p = test::any_predset(n, g), q = test::any_predset(n, g);
    const Relation r = test::any_relation(n, g, g() % 2 ? 20 : 50);
    const Verdict vt = check_total(p, r, q), vp = check_partial(p, r, q);
    ASSERT_EQ(vt.holds, tcf(p, r, q));
    ASSERT_EQ(vp.holds, pcf(p, r, q));
    EXPECT_EQ(vt.holds, !vt.counterexample.has_value());
    EXPECT_EQ(vp.holds, !vp.counterexample.has_value());
    if (vt.holds) EXPECT_TRUE(vp.holds);
    if (!vt.holds) expect_sound(Mode::Total, p, r, q, *vt.counterexample);
    if (!vp.holds) expect_sound(Mode::Partial, p, r, q, *vp.counterexample);
    EXPECT_EQ(vt.holds, p.subset_of(wp(r, q)));
    EXPECT_EQ(check_total(p, r, PredSet::none(n)).holds, p.empty());
  }
}

TEST(Hoare, CounterexampleIsMinimal) {
  std::minstd_rand g(31);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 2 + g() % 6;
    const PredSet p = test::any_predset(n, g), q = test::any_predset(n, g);
    const Relation r = test::any_relation(n, g, 40);
    const Verdict v = check_total(p, r, q);
    if (v.holds) continue;
    for (std::size_t x = 0; x < v.counterexample->initial; ++x) {
      PredSet single(n);
      single.set(x, p.test(x));
      EXPECT_TRUE(tcf(single, r, q));
    }
    if (auto z = v.counterexample->witness_final) {
      for (auto y : r.successors(v.counterexample->initial)) {
        if (y < *z) EXPECT_TRUE(q.test(y));
      }
    }
  }
}

TEST(Hoare, SpaceMismatch) {
  test::expect_error(ErrorKind::SpaceMismatch, [] { check_total(PredSet(2), Relation(3), PredSet(3)); });
  test::expect_error(ErrorKind::SpaceMismatch, [] { check_partial(PredSet(3), Relation(3), PredSet(2)); });
  test::expect_error(ErrorKind::SpaceMismatch, [] { wp(Relation(3), PredSet(2)); });
}

TEST(Hoare, ReportJsonShape) {
  const StateSpace s = a_space();
  const Report bad = verify(parse_program(kFirst), PredExpr::truth(), parse_pred("a == 100"), Mode::Total, s);
  const auto j = nlohmann::json::parse(report_to_json(bad, s));
  EXPECT_EQ(j["mode"], "total");
  EXPECT_EQ(j["holds"], false);
  EXPECT_EQ(j["counterexample"]["kind"], "BadSuccessor");
  EXPECT_EQ(j["counterexample"]["initial"]["a"], -128);
  EXPECT_EQ(j["counterexample"]["final"]["a"], 10);
  EXPECT_TRUE(j["stats"].contains("states_checked"));
  EXPECT_TRUE(j["stats"].contains("pairs_checked"));
  EXPECT_FALSE(j["stats"].contains("wall_ms"));
  EXPECT_TRUE(nlohmann::json::parse(report_to_json(bad, s, true))["stats"].contains("wall_ms"));

  const Report ok = verify(parse_program(kFirst), PredExpr::truth(), parse_pred("a == 10"), Mode::Total, s);
  EXPECT_TRUE(nlohmann::json::parse(report_to_json(ok, s))["counterexample"].is_null());
  EXPECT_EQ(report_to_json(ok, s), report_to_json(ok, s));
}

TEST(Hoare, ParseMode) {
  EXPECT_EQ(parse_mode("total"), Mode::Total);
  EXPECT_EQ(parse_mode("partial"), Mode::Partial);
  test::expect_error(ErrorKind::UsageError, [] { parse_mode("strict"); });
}
