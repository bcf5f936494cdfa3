#include "scalc/sformula.hpp"

#include <map>

#include "support.hpp"

using namespace scalc;
using scalc::test::expect_error;

namespace {

// Structural recursion straight from the truth definitions.
bool naive(const SFormula& f, const Env& env, std::size_t n, std::map<std::string, std::size_t>& a) {
  using K = SFormula::Kind;
  switch (f.kind) {
    case K::PredApp: {
      if (!env.count(f.symbol)) return f.symbol == "tau";
      return std::get<PredSet>(env.at(f.symbol)).test(a.at(f.vars[0]));
    }
    case K::RelApp: return std::get<Relation>(env.at(f.symbol)).contains(a.at(f.vars[0]), a.at(f.vars[1]));
    case K::Not: return !naive(f.args[0], env, n, a);
    case K::And: return naive(f.args[0], env, n, a) && naive(f.args[1], env, n, a);
    case K::Or: return naive(f.args[0], env, n, a) || naive(f.args[1], env, n, a);
    case K::Implies: return !naive(f.args[0], env, n, a) || naive(f.args[1], env, n, a);
    case K::Iff: return naive(f.args[0], env, n, a) == naive(f.args[1], env, n, a);
    case K::Forall:
    case K::Exists: {
      const bool universal = f.kind == K::Forall;
      auto saved = a.find(f.vars[0]) == a.end() ? std::optional<std::size_t>() : a.at(f.vars[0]);
      bool result = universal;
      for (std::size_t s = 0; s < n; ++s) {
        a[f.vars[0]] = s;
        if (naive(f.args[0], env, n, a) != universal) {
          result = !universal;
          break;
        }
      }
      if (saved) {
        a[f.vars[0]] = *saved;
      } else {
        a.erase(f.vars[0]);
      }
      return result;
    }
  }
  return false;
}

const char* kVars[] = {"x", "y", "z"};

SFormula gen(std::minstd_rand& g, int depth) {
  if (depth == 0 || g() % 4 == 0) {
    switch (g() % 4) {
      case 0: return SFormula::pred("P", kVars[g() % 3]);
      case 1: return SFormula::pred(g() % 2 ? "tau" : "phi", kVars[g() % 3]);
      case 2: return SFormula::rel("S", kVars[g() % 3], kVars[g() % 3]);
      default: return SFormula::rel("T", kVars[g() % 3], kVars[g() % 3]);
    }
  }
  switch (g() % 7) {
    case 0: return SFormula::negate(gen(g, depth - 1));
    case 1: return SFormula::conj(gen(g, depth - 1), gen(g, depth - 1));
    case 2: return SFormula::disj(gen(g, depth - 1), gen(g, depth - 1));
    case 3: return SFormula::implies(gen(g, depth - 1), gen(g, depth - 1));
    case 4: return SFormula::iff(gen(g, depth - 1), gen(g, depth - 1));
    case 5: return SFormula::forall(kVars[g() % 3], gen(g, depth - 1));
    default: return SFormula::exists(kVars[g() % 3], gen(g, depth - 1));
  }
}

}  // namespace

TEST(SFormula, Examples) {
  std::minstd_rand g(3);
  Env env;
  env.emplace("P", test::any_predset(4, g));
  env.emplace("S", Relation::identity(4));
  EXPECT_TRUE(eval_sformula(parse_sformula("forall x. P(x) -> P(x)"), env, 4));
  EXPECT_TRUE(eval_sformula(parse_sformula("forall x. exists y. S(x,y)"), env, 4));
  EXPECT_TRUE(eval_sformula(parse_sformula("forall x. tau(x) & !phi(x)"), env, 4));
  EXPECT_FALSE(eval_sformula(parse_sformula("exists x. phi(x)"), env, 4));
}

TEST(SFormula, QuantifierSwapHoldsOnRandomRelations) {
  const SFormula t2 = parse_sformula("(exists x. forall y. S(x,y)) -> (forall y. exists x. S(x,y))");
  std::minstd_rand g(17);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int t = 0; t < 500; ++t) {
      Env env;
      env.emplace("S", test::any_relation(n, g));
      ASSERT_TRUE(eval_sformula(t2, env, n));
    }
  }
}

TEST(SFormula, AgreesWithNaiveEvaluator) {
  std::minstd_rand g(5);
  int checked = 0;
  while (checked < 1000) {
    const SFormula f = universal_closure(gen(g, 5));
    const std::size_t n = 1 + g() % 4;
    Env env;
    env.emplace("P", test::any_predset(n, g));
    env.emplace("S", test::any_relation(n, g));
    env.emplace("T", test::any_relation(n, g));
    std::map<std::string, std::size_t> a;
    ASSERT_EQ(eval_sformula(f, env, n), naive(f, env, n, a)) << to_string(f);
    ++checked;
  }
}

TEST(SFormula, ParsePrintRoundTrip) {
  std::minstd_rand g(8);
  for (int t = 0; t < 300; ++t) {
    const SFormula f = gen(g, 5);
    ASSERT_EQ(parse_sformula(to_string(f)), f) << to_string(f);
  }
  EXPECT_EQ(parse_sformula("forall x, y. S(x,y) -> [P(x) | !P(y)]"),
            SFormula::forall("x", SFormula::forall("y", SFormula::implies(
                                                           SFormula::rel("S", "x", "y"),
                                                           SFormula::disj(SFormula::pred("P", "x"),
                                                                          SFormula::negate(SFormula::pred("P", "y")))))));
}

TEST(SFormula, FreeVariablesAndClosure) {
  const SFormula f = parse_sformula("S(y,x) & forall z. P(z) & Q(w)");
  EXPECT_EQ(free_vars(f), (std::vector<std::string>{"w", "x", "y"}));
  EXPECT_TRUE(free_vars(universal_closure(f)).empty());
}

TEST(SFormula, Errors) {
  Env env;
  env.emplace("P", PredSet(3));
  env.emplace("S", Relation(3));
  expect_error(ErrorKind::UnboundSymbol, [&] { eval_sformula(parse_sformula("forall x. Q(x)"), env, 3); });
  expect_error(ErrorKind::ArityMismatch, [&] { eval_sformula(parse_sformula("forall x. S(x)"), env, 3); });
  expect_error(ErrorKind::ArityMismatch, [&] { eval_sformula(parse_sformula("forall x. P(x,x)"), env, 3); });
  expect_error(ErrorKind::UnboundStateVariable, [&] { eval_sformula(parse_sformula("P(x)"), env, 3); });
  expect_error(ErrorKind::SpaceMismatch, [&] { eval_sformula(parse_sformula("forall x. P(x)"), env, 4); });
  expect_error(ErrorKind::SyntaxError, [] { parse_sformula("forall . P(x)"); });
}

TEST(SFormula, TauAndPhiCanBeRebound) {
  Env env;
  env.emplace("tau", PredSet(2));
  EXPECT_FALSE(eval_sformula(parse_sformula("exists x. tau(x)"), env, 2));
}
