#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scalc/error.hpp"
#include "scalc/pred_set.hpp"
#include "scalc/state_space.hpp"

namespace scalc {

/// Integer expression over program variables.
struct ArithExpr {
  enum class Kind { Const, Var, Add, Sub, Mul, Neg };

  Kind kind = Kind::Const;
  Value value = 0;
  std::string var;
  std::vector<ArithExpr> args;
  SourceSpan span{};
  // Universe position of `var`, filled in by resolve().
  std::size_t slot = static_cast<std::size_t>(-1);

  static ArithExpr constant(Value v);
  static ArithExpr variable(std::string name);
  static ArithExpr add(ArithExpr lhs, ArithExpr rhs);
  static ArithExpr sub(ArithExpr lhs, ArithExpr rhs);
  static ArithExpr mul(ArithExpr lhs, ArithExpr rhs);
  static ArithExpr neg(ArithExpr operand);
};

/// Structural equality; spans and slots are ignored.
bool operator==(const ArithExpr& a, const ArithExpr& b);

enum class CmpOp { Eq, Ne, Lt, Le, Gt, Ge };

/// Boolean expression over program variables: the interpreted form of an
/// S-predicate.
struct PredExpr {
  enum class Kind { True, False, Cmp, Not, And, Or, Implies, Iff, InDomain };

  Kind kind = Kind::True;
  CmpOp op = CmpOp::Eq;
  std::vector<ArithExpr> terms;  // Cmp operands
  std::vector<PredExpr> args;    // connective operands
  std::string var;               // InDomain
  SourceSpan span{};
  std::size_t slot = static_cast<std::size_t>(-1);

  static PredExpr truth() { return PredExpr{}; }
  static PredExpr falsity();
  static PredExpr cmp(CmpOp op, ArithExpr lhs, ArithExpr rhs);
  static PredExpr negate(PredExpr p);
  static PredExpr conj(PredExpr p, PredExpr q);
  static PredExpr disj(PredExpr p, PredExpr q);
  static PredExpr implies(PredExpr p, PredExpr q);
  static PredExpr iff(PredExpr p, PredExpr q);
  static PredExpr in_domain(std::string var);
};

bool operator==(const PredExpr& a, const PredExpr& b);

/// Copies of the expressions with every variable bound to its universe
/// slot. Throws UnknownVariable.
ArithExpr resolve(const ArithExpr& e, const VarUniverse& universe);
PredExpr resolve(const PredExpr& p, const VarUniverse& universe);

/// Exact 64-bit evaluation; nullopt when an intermediate result overflows.
/// Throws UnknownVariable.
std::optional<Value> eval_arith(const ArithExpr& e, const VarUniverse& universe,
                                const State& s);

/// Comparisons with an undefined operand are false.
bool eval_pred(const PredExpr& p, const VarUniverse& universe, const State& s);

/// Evaluation of already-resolved expressions against state `k` of `space`.
std::optional<Value> eval_arith_at(const ArithExpr& resolved, const StateSpace& space,
                                   std::size_t k);
bool eval_pred_at(const PredExpr& resolved, const StateSpace& space, std::size_t k);

/// Extension of `p` over `space`: bit k is set iff p holds in state k.
PredSet pred_to_set(const PredExpr& p, const StateSpace& space);

/// Variables referenced by the expression, in first-occurrence order.
void collect_vars(const ArithExpr& e, std::vector<std::string>& out);
void collect_vars(const PredExpr& p, std::vector<std::string>& out);

/// Concrete syntax accepted by parse_arith/parse_pred.
std::string to_string(const ArithExpr& e);
std::string to_string(const PredExpr& p);
std::string_view to_string(CmpOp op);

}  // namespace scalc
