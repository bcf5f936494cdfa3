#include <algorithm>
#include <functional>
#include <limits>
#include <set>

#include "lexer.hpp"
#include "scalc/syntax.hpp"

namespace scalc {

using detail::Tok;
using detail::TokenStream;

namespace {

const std::set<std::string, std::less<>> kReserved = {
    "int", "bool", "if", "else", "while", "true", "false", "in_domain"};

using VarCheck = std::function<void(const std::string&, const SourceSpan&)>;

class ExprParser {
 public:
  ExprParser(TokenStream& ts, VarCheck check) : ts_(ts), check_(std::move(check)) {}

  ArithExpr arith() {
    ArithExpr lhs = term();
    while (ts_.is("+") || ts_.is("-")) {
      const bool plus = ts_.next().text == "+";
      ArithExpr rhs = term();
      lhs = plus ? ArithExpr::add(std::move(lhs), std::move(rhs))
                 : ArithExpr::sub(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  PredExpr pred() {
    PredExpr lhs = implication();
    while (ts_.accept("<->")) lhs = PredExpr::iff(std::move(lhs), implication());
    return lhs;
  }

 private:
  ArithExpr term() {
    ArithExpr lhs = unary();
    while (ts_.accept("*")) lhs = ArithExpr::mul(std::move(lhs), unary());
    return lhs;
  }

  ArithExpr unary() {
    const SourceSpan span = ts_.peek().span;
    if (ts_.accept("-")) {
      if (ts_.peek().kind == Tok::Int) {
        ArithExpr e = ArithExpr::constant(literal(/*negative=*/true));
        e.span = span;
        return e;
      }
      ArithExpr e = ArithExpr::neg(unary());
      e.span = span;
      return e;
    }
    return primary();
  }

  ArithExpr primary() {
    const detail::Token& t = ts_.peek();
    const SourceSpan span = t.span;
    if (t.kind == Tok::Int) {
      ArithExpr e = ArithExpr::constant(literal(false));
      e.span = span;
      return e;
    }
    if (t.kind == Tok::Ident && !kReserved.contains(t.text)) {
      std::string name = ts_.next().text;
      if (check_) check_(name, span);
      ArithExpr e = ArithExpr::variable(std::move(name));
      e.span = span;
      return e;
    }
    if (ts_.accept("(")) {
      ArithExpr e = arith();
      ts_.expect(")");
      return e;
    }
    ts_.fail("expected an arithmetic expression");
  }

  Value literal(bool negative) {
    const detail::Token& t = ts_.next();
    constexpr auto kMax = static_cast<unsigned long long>(std::numeric_limits<Value>::max());
    unsigned long long v = 0;
    bool too_big = t.text.size() > 19;
    if (!too_big) {
      v = std::stoull(t.text);
      too_big = v > kMax + (negative ? 1 : 0);
    }
    if (too_big) {
      throw Error(ErrorKind::SyntaxError, "integer literal " + t.text + " out of range", t.span);
    }
    if (negative) {
      return v == kMax + 1 ? std::numeric_limits<Value>::min() : -static_cast<Value>(v);
    }
    return static_cast<Value>(v);
  }

  PredExpr implication() {
    PredExpr lhs = disjunction();
    if (ts_.accept("->")) return PredExpr::implies(std::move(lhs), implication());
    return lhs;
  }

  PredExpr disjunction() {
    PredExpr lhs = conjunction();
    while (ts_.accept("||")) lhs = PredExpr::disj(std::move(lhs), conjunction());
    return lhs;
  }

  PredExpr conjunction() {
    PredExpr lhs = atom();
    while (ts_.accept("&&")) lhs = PredExpr::conj(std::move(lhs), atom());
    return lhs;
  }

  PredExpr atom() {
    const SourceSpan span = ts_.peek().span;
    PredExpr out;
    if (ts_.accept("!")) {
      out = PredExpr::negate(atom());
    } else if (ts_.is_keyword("true")) {
      ts_.next();
      out = PredExpr::truth();
    } else if (ts_.is_keyword("false")) {
      ts_.next();
      out = PredExpr::falsity();
    } else if (ts_.is_keyword("in_domain")) {
      ts_.next();
      ts_.expect("(");
      const SourceSpan var_span = ts_.peek().span;
      std::string name = ts_.expect_ident("a variable name");
      if (check_) check_(name, var_span);
      ts_.expect(")");
      out = PredExpr::in_domain(std::move(name));
    } else if (ts_.is("(")) {
      out = parenthesized();
    } else {
      out = comparison();
    }
    out.span = span;
    return out;
  }

  // '(' opens either an arithmetic operand of a comparison or a nested
  // predicate; try the comparison first and fall back.
  PredExpr parenthesized() {
    const std::size_t mark = ts_.mark();
    std::optional<Error> first;
    try {
      return comparison();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SyntaxError) throw;
      first = e;
    }
    ts_.reset(mark);
    try {
      ts_.expect("(");
      PredExpr p = pred();
      ts_.expect(")");
      return p;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SyntaxError) throw;
      const auto far = [](const Error& err) { return err.span() ? err.span()->start : 0; };
      throw far(*first) > far(e) ? *first : e;
    }
  }

  PredExpr comparison() {
    ArithExpr lhs = arith();
    static const std::pair<std::string_view, CmpOp> kOps[] = {
        {"==", CmpOp::Eq}, {"!=", CmpOp::Ne}, {"<=", CmpOp::Le},
        {">=", CmpOp::Ge}, {"<", CmpOp::Lt},  {">", CmpOp::Gt}};
    for (const auto& [text, op] : kOps) {
      if (ts_.accept(text)) return PredExpr::cmp(op, std::move(lhs), arith());
    }
    ts_.fail("expected a comparison operator");
  }

  TokenStream& ts_;
  VarCheck check_;
};

class ProgramParser {
 public:
  ProgramParser(std::string_view text, std::span<const std::string> prelude)
      : ts_(detail::tokenize(text)),
        declared_(prelude.begin(), prelude.end()),
        expr_(ts_, [this](const std::string& name, const SourceSpan& span) {
          require_declared(name, span);
        }) {}

  Stmt program() {
    std::vector<Stmt> stmts;
    while (!ts_.at_end()) stmts.push_back(statement());
    return fold(std::move(stmts));
  }

 private:
  static Stmt fold(std::vector<Stmt> stmts) {
    if (stmts.empty()) return Stmt::nop();
    Stmt acc = std::move(stmts.back());
    for (std::size_t k = stmts.size() - 1; k-- > 0;) {
      SourceSpan span = stmts[k].span;
      span.end = acc.span.end;
      acc = Stmt::seq(std::move(stmts[k]), std::move(acc));
      acc.span = span;
    }
    return acc;
  }

  void require_declared(const std::string& name, const SourceSpan& span) const {
    if (!declared_.contains(name)) {
      throw Error(ErrorKind::UndeclaredVariable,
                  "variable '" + name + "' used before declaration", span);
    }
  }

  Stmt statement() {
    const SourceSpan start = ts_.peek().span;
    Stmt s = statement_body();
    s.span.start = start.start;
    s.span.line = start.line;
    s.span.column = start.column;
    return s;
  }

  Stmt statement_body() {
    if (ts_.accept(";")) return Stmt::nop();
    if (ts_.accept("{")) {
      std::vector<Stmt> stmts;
      while (!ts_.is("}")) {
        if (ts_.at_end()) ts_.fail("expected '}'");
        stmts.push_back(statement());
      }
      const SourceSpan close = ts_.next().span;
      Stmt s = fold(std::move(stmts));
      s.span.end = close.end;
      return s;
    }
    if (ts_.is_keyword("int") || ts_.is_keyword("bool")) return declaration();
    if (ts_.is_keyword("if")) return conditional();
    if (ts_.is_keyword("while")) {
      ts_.next();
      ts_.expect("(");
      PredExpr cond = expr_.pred();
      ts_.expect(")");
      return Stmt::while_loop(std::move(cond), statement());
    }
    if (ts_.peek().kind == Tok::Ident && !kReserved.contains(ts_.peek().text)) {
      return assignment();
    }
    ts_.fail("expected a statement");
  }

  Stmt declaration() {
    std::string type = ts_.next().text;
    const detail::Token name_tok = ts_.peek();
    std::string name = ts_.expect_ident("a variable name");
    if (kReserved.contains(name)) {
      throw Error(ErrorKind::SyntaxError, "'" + name + "' is a reserved word", name_tok.span);
    }
    declared_.insert(name);
    Stmt decl = Stmt::decl(name, type);
    decl.span = name_tok.span;
    if (ts_.accept("=")) {
      ArithExpr init = expr_.arith();
      const SourceSpan end = ts_.expect(";").span;
      Stmt assign = Stmt::assign(std::move(name), std::move(init));
      assign.span = name_tok.span;
      assign.span.end = end.end;
      Stmt s = Stmt::seq(std::move(decl), std::move(assign));
      s.span.end = end.end;
      return s;
    }
    decl.span.end = ts_.expect(";").span.end;
    return decl;
  }

  Stmt conditional() {
    ts_.next();
    ts_.expect("(");
    PredExpr cond = expr_.pred();
    ts_.expect(")");
    Stmt then_branch = statement();
    if (ts_.is_keyword("else")) {
      ts_.next();
      Stmt else_branch = statement();
      return Stmt::if_then_else(std::move(cond), std::move(then_branch), std::move(else_branch));
    }
    return Stmt::if_then(std::move(cond), std::move(then_branch));
  }

  Stmt assignment() {
    const detail::Token name_tok = ts_.next();
    const std::string& name = name_tok.text;
    require_declared(name, name_tok.span);
    ArithExpr self = ArithExpr::variable(name);
    self.span = name_tok.span;
    ArithExpr value;
    if (ts_.accept("=")) {
      value = expr_.arith();
    } else if (ts_.accept("*=")) {
      value = ArithExpr::mul(self, expr_.arith());
    } else if (ts_.accept("+=")) {
      value = ArithExpr::add(self, expr_.arith());
    } else if (ts_.accept("-=")) {
      value = ArithExpr::sub(self, expr_.arith());
    } else if (ts_.accept("++")) {
      value = ArithExpr::add(self, ArithExpr::constant(1));
    } else if (ts_.accept("--")) {
      value = ArithExpr::sub(self, ArithExpr::constant(1));
    } else {
      ts_.fail("expected an assignment operator");
    }
    Stmt s = Stmt::assign(name, std::move(value));
    s.span.end = ts_.expect(";").span.end;
    return s;
  }

  TokenStream ts_;
  std::set<std::string, std::less<>> declared_;
  ExprParser expr_;
};

void indent_to(std::string& out, int depth) { out.append(static_cast<std::size_t>(depth) * 2, ' '); }

void print_stmt(const Stmt& s, int depth, std::string& out);

void print_block(const Stmt& s, int depth, std::string& out) {
  out += "{\n";
  print_stmt(s, depth + 1, out);
  out += "\n";
  indent_to(out, depth);
  out += "}";
}

void print_stmt(const Stmt& s, int depth, std::string& out) {
  using K = Stmt::Kind;
  switch (s.kind) {
    case K::Nop:
      indent_to(out, depth);
      out += ";";
      return;
    case K::Decl:
      indent_to(out, depth);
      out += s.type_name + " " + s.var + ";";
      return;
    case K::Assign:
      indent_to(out, depth);
      out += s.var + " = " + to_string(s.expr) + ";";
      return;
    case K::Seq:
      if (s.body[0].kind == K::Seq) {
        // Sequences nest to the right when parsed, so a left-nested one
        // needs its own block.
        indent_to(out, depth);
        print_block(s.body[0], depth, out);
      } else {
        print_stmt(s.body[0], depth, out);
      }
      out += "\n";
      print_stmt(s.body[1], depth, out);
      return;
    case K::IfThenElse:
    case K::IfThen:
      indent_to(out, depth);
      out += "if (" + to_string(s.cond) + ") ";
      print_block(s.body[0], depth, out);
      if (s.kind == K::IfThenElse) {
        out += " else ";
        print_block(s.body[1], depth, out);
      }
      return;
    case K::While:
      indent_to(out, depth);
      out += "while (" + to_string(s.cond) + ") ";
      print_block(s.body[0], depth, out);
      return;
  }
}

void gather(const Stmt& s, std::vector<Declaration>& decls, std::vector<std::string>& vars) {
  auto note = [&](const std::string& v) {
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  };
  switch (s.kind) {
    case Stmt::Kind::Decl:
      if (std::none_of(decls.begin(), decls.end(),
                       [&](const Declaration& d) { return d.var == s.var; })) {
        decls.push_back({s.var, s.type_name});
      }
      note(s.var);
      break;
    case Stmt::Kind::Assign:
      note(s.var);
      collect_vars(s.expr, vars);
      break;
    case Stmt::Kind::IfThenElse:
    case Stmt::Kind::IfThen:
    case Stmt::Kind::While:
      collect_vars(s.cond, vars);
      break;
    default:
      break;
  }
  for (const auto& b : s.body) gather(b, decls, vars);
}

}  // namespace

Stmt Stmt::nop() { return Stmt{}; }

Stmt Stmt::decl(std::string var, std::string type_name) {
  Stmt s;
  s.kind = Kind::Decl;
  s.var = std::move(var);
  s.type_name = std::move(type_name);
  return s;
}

Stmt Stmt::assign(std::string var, ArithExpr e) {
  Stmt s;
  s.kind = Kind::Assign;
  s.var = std::move(var);
  s.expr = std::move(e);
  return s;
}

Stmt Stmt::seq(Stmt first, Stmt second) {
  Stmt s;
  s.kind = Kind::Seq;
  s.body.push_back(std::move(first));
  s.body.push_back(std::move(second));
  return s;
}

Stmt Stmt::if_then_else(PredExpr cond, Stmt then_branch, Stmt else_branch) {
  Stmt s;
  s.kind = Kind::IfThenElse;
  s.cond = std::move(cond);
  s.body.push_back(std::move(then_branch));
  s.body.push_back(std::move(else_branch));
  return s;
}

Stmt Stmt::if_then(PredExpr cond, Stmt then_branch) {
  Stmt s;
  s.kind = Kind::IfThen;
  s.cond = std::move(cond);
  s.body.push_back(std::move(then_branch));
  return s;
}

Stmt Stmt::while_loop(PredExpr cond, Stmt body) {
  Stmt s;
  s.kind = Kind::While;
  s.cond = std::move(cond);
  s.body.push_back(std::move(body));
  return s;
}

bool operator==(const Stmt& a, const Stmt& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Stmt::Kind::Nop: return true;
    case Stmt::Kind::Decl: return a.var == b.var && a.type_name == b.type_name;
    case Stmt::Kind::Assign: return a.var == b.var && a.expr == b.expr;
    case Stmt::Kind::Seq: return a.body == b.body;
    default: return a.cond == b.cond && a.body == b.body;
  }
}

Stmt parse_program(std::string_view text, std::span<const std::string> prelude) {
  return ProgramParser(text, prelude).program();
}

PredExpr parse_pred(std::string_view text) {
  TokenStream ts(detail::tokenize(text));
  ExprParser p(ts, nullptr);
  PredExpr out = p.pred();
  if (!ts.at_end()) ts.fail("unexpected trailing input");
  return out;
}

ArithExpr parse_arith(std::string_view text) {
  TokenStream ts(detail::tokenize(text));
  ExprParser p(ts, nullptr);
  ArithExpr out = p.arith();
  if (!ts.at_end()) ts.fail("unexpected trailing input");
  return out;
}

std::string pretty_print(const Stmt& s) {
  std::string out;
  print_stmt(s, 0, out);
  return out;
}

std::vector<Declaration> collect_declarations(const Stmt& s) {
  std::vector<Declaration> decls;
  std::vector<std::string> vars;
  gather(s, decls, vars);
  return decls;
}

std::vector<std::string> collect_vars(const Stmt& s) {
  std::vector<Declaration> decls;
  std::vector<std::string> vars;
  gather(s, decls, vars);
  return vars;
}

bool contains_while(const Stmt& s) {
  if (s.kind == Stmt::Kind::While) return true;
  return std::any_of(s.body.begin(), s.body.end(), [](const Stmt& b) { return contains_while(b); });
}

}  // namespace scalc
