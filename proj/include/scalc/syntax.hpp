#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scalc/error.hpp"
#include "scalc/expr.hpp"

namespace scalc {

/// Statement of the mini-language. Sequences are binary and right-nested.
struct Stmt {
  enum class Kind { Nop, Decl, Assign, Seq, IfThenElse, IfThen, While };

  Kind kind = Kind::Nop;
  std::string var;        // Decl, Assign
  std::string type_name;  // Decl: "int" or "bool"
  ArithExpr expr;         // Assign
  PredExpr cond;          // IfThenElse, IfThen, While
  std::vector<Stmt> body; // Seq: {first, second}; If*: {then[, else]}; While: {body}
  SourceSpan span{};

  static Stmt nop();
  static Stmt decl(std::string var, std::string type_name);
  static Stmt assign(std::string var, ArithExpr e);
  static Stmt seq(Stmt first, Stmt second);
  static Stmt if_then_else(PredExpr cond, Stmt then_branch, Stmt else_branch);
  static Stmt if_then(PredExpr cond, Stmt then_branch);
  static Stmt while_loop(PredExpr cond, Stmt body);
};

/// Structural equality ignoring spans.
bool operator==(const Stmt& a, const Stmt& b);

/// Parses a whole program. Variables must be declared before use, either in
/// the program text or by appearing in `prelude`.
Stmt parse_program(std::string_view text, std::span<const std::string> prelude = {});

/// Predicate and arithmetic syntax, shared with spec files.
PredExpr parse_pred(std::string_view text);
ArithExpr parse_arith(std::string_view text);

/// Source text that parses back to a structurally identical statement.
std::string pretty_print(const Stmt& s);

struct Declaration {
  std::string var;
  std::string type_name;
};

/// Declarations in program order, first occurrence of each variable only.
std::vector<Declaration> collect_declarations(const Stmt& s);

/// Every variable the statement mentions, first-occurrence order.
std::vector<std::string> collect_vars(const Stmt& s);

bool contains_while(const Stmt& s);

}  // namespace scalc
