#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "scalc/pred_set.hpp"
#include "scalc/relation.hpp"
#include "scalc/state_space.hpp"

namespace scalc {

/// First-order formula over state variables, built from unary predicate
/// symbols, binary relation symbols, connectives and state quantifiers.
struct SFormula {
  enum class Kind { PredApp, RelApp, Not, And, Or, Implies, Iff, Forall, Exists };

  Kind kind = Kind::PredApp;
  std::string symbol;              // PredApp, RelApp
  std::vector<std::string> vars;   // application arguments, or the bound variable
  std::vector<SFormula> args;

  static SFormula pred(std::string symbol, std::string var);
  static SFormula rel(std::string symbol, std::string from, std::string to);
  static SFormula negate(SFormula f);
  static SFormula conj(SFormula f, SFormula g);
  static SFormula disj(SFormula f, SFormula g);
  static SFormula implies(SFormula f, SFormula g);
  static SFormula iff(SFormula f, SFormula g);
  static SFormula forall(std::string var, SFormula body);
  static SFormula exists(std::string var, SFormula body);

  friend bool operator==(const SFormula&, const SFormula&) = default;
};

using Binding = std::variant<PredSet, Relation>;
using Env = std::map<std::string, Binding, std::less<>>;

/// Text form: `forall x. F`, `exists x, y. F`, `!F`, `F & G`, `F | G`,
/// `F -> G`, `F <-> G`, `P(x)`, `S(x,y)`, brackets `( )` or `[ ]`.
/// Precedence ! > & > | > -> > <->; quantifier bodies extend to the right.
SFormula parse_sformula(std::string_view text);
std::string to_string(const SFormula& f);

/// Free state variables in sorted order.
std::vector<std::string> free_vars(const SFormula& f);

/// Wraps `f` in universal quantifiers over its free variables.
SFormula universal_closure(const SFormula& f);

/// Decides a closed formula on a finite model with `size` states; every
/// quantifier ranges over all states. The symbols `tau` and `phi` denote the
/// constant true and false predicates unless `env` rebinds them.
/// Throws UnboundSymbol, ArityMismatch, UnboundStateVariable, SpaceMismatch.
bool eval_sformula(const SFormula& f, const Env& env, std::size_t size);
bool eval_sformula(const SFormula& f, const Env& env, const StateSpace& space);

/// A formula compiled against fixed symbol names; binding lookups and
/// variable resolution happen once, so repeated evaluation under
/// different environments is cheap.
class CompiledFormula {
 public:
  explicit CompiledFormula(const SFormula& f);
  bool eval(const Env& env, std::size_t size) const;

 private:
  struct Node {
    SFormula::Kind kind;
    std::size_t symbol = 0;  // index into symbols_
    std::size_t a = 0;       // variable slots, or child indices
    std::size_t b = 0;
  };
  std::size_t compile(const SFormula& f, std::vector<std::string>& scope);

  std::vector<Node> nodes_;
  std::vector<std::string> symbols_;
  std::vector<std::size_t> symbol_arity_;
  std::size_t slots_ = 0;
  std::size_t root_ = 0;
};

}  // namespace scalc
