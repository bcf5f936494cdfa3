#include "scalc/expr.hpp"

#include <algorithm>
#include <limits>

namespace scalc {

ArithExpr ArithExpr::constant(Value v) {
  ArithExpr e;
  e.kind = Kind::Const;
  e.value = v;
  return e;
}

ArithExpr ArithExpr::variable(std::string name) {
  ArithExpr e;
  e.kind = Kind::Var;
  e.var = std::move(name);
  return e;
}

namespace {

ArithExpr binary(ArithExpr::Kind kind, ArithExpr lhs, ArithExpr rhs) {
  ArithExpr e;
  e.kind = kind;
  e.args.push_back(std::move(lhs));
  e.args.push_back(std::move(rhs));
  return e;
}

PredExpr connective(PredExpr::Kind kind, std::vector<PredExpr> args) {
  PredExpr p;
  p.kind = kind;
  p.args = std::move(args);
  return p;
}

}  // namespace

ArithExpr ArithExpr::add(ArithExpr l, ArithExpr r) { return binary(Kind::Add, std::move(l), std::move(r)); }
ArithExpr ArithExpr::sub(ArithExpr l, ArithExpr r) { return binary(Kind::Sub, std::move(l), std::move(r)); }
ArithExpr ArithExpr::mul(ArithExpr l, ArithExpr r) { return binary(Kind::Mul, std::move(l), std::move(r)); }

ArithExpr ArithExpr::neg(ArithExpr operand) {
  ArithExpr e;
  e.kind = Kind::Neg;
  e.args.push_back(std::move(operand));
  return e;
}

bool operator==(const ArithExpr& a, const ArithExpr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ArithExpr::Kind::Const: return a.value == b.value;
    case ArithExpr::Kind::Var: return a.var == b.var;
    default: return a.args == b.args;
  }
}

PredExpr PredExpr::falsity() {
  PredExpr p;
  p.kind = Kind::False;
  return p;
}

PredExpr PredExpr::cmp(CmpOp op, ArithExpr lhs, ArithExpr rhs) {
  PredExpr p;
  p.kind = Kind::Cmp;
  p.op = op;
  p.terms.push_back(std::move(lhs));
  p.terms.push_back(std::move(rhs));
  return p;
}

PredExpr PredExpr::negate(PredExpr q) { return connective(Kind::Not, {std::move(q)}); }
PredExpr PredExpr::conj(PredExpr p, PredExpr q) { return connective(Kind::And, {std::move(p), std::move(q)}); }
PredExpr PredExpr::disj(PredExpr p, PredExpr q) { return connective(Kind::Or, {std::move(p), std::move(q)}); }
PredExpr PredExpr::implies(PredExpr p, PredExpr q) { return connective(Kind::Implies, {std::move(p), std::move(q)}); }
PredExpr PredExpr::iff(PredExpr p, PredExpr q) { return connective(Kind::Iff, {std::move(p), std::move(q)}); }

PredExpr PredExpr::in_domain(std::string var) {
  PredExpr p;
  p.kind = Kind::InDomain;
  p.var = std::move(var);
  return p;
}

bool operator==(const PredExpr& a, const PredExpr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case PredExpr::Kind::True:
    case PredExpr::Kind::False: return true;
    case PredExpr::Kind::Cmp: return a.op == b.op && a.terms == b.terms;
    case PredExpr::Kind::InDomain: return a.var == b.var;
    default: return a.args == b.args;
  }
}

ArithExpr resolve(const ArithExpr& e, const VarUniverse& universe) {
  ArithExpr out = e;
  if (out.kind == ArithExpr::Kind::Var) {
    auto k = universe.find(out.var);
    if (!k) {
      throw Error(ErrorKind::UnknownVariable, "unknown variable '" + out.var + "'",
                  out.span);
    }
    out.slot = *k;
  }
  for (auto& a : out.args) a = resolve(a, universe);
  return out;
}

PredExpr resolve(const PredExpr& p, const VarUniverse& universe) {
  PredExpr out = p;
  if (out.kind == PredExpr::Kind::InDomain) {
    auto k = universe.find(out.var);
    if (!k) {
      throw Error(ErrorKind::UnknownVariable, "unknown variable '" + out.var + "'",
                  out.span);
    }
    out.slot = *k;
  }
  for (auto& t : out.terms) t = resolve(t, universe);
  for (auto& a : out.args) a = resolve(a, universe);
  return out;
}

namespace {

template <class Get>
std::optional<Value> eval_resolved(const ArithExpr& e, const Get& get) {
  using K = ArithExpr::Kind;
  switch (e.kind) {
    case K::Const: return e.value;
    case K::Var: return get(e.slot);
    case K::Neg: {
      auto v = eval_resolved(e.args[0], get);
      if (!v || *v == std::numeric_limits<Value>::min()) return std::nullopt;
      return -*v;
    }
    default: break;
  }
  auto l = eval_resolved(e.args[0], get);
  if (!l) return std::nullopt;
  auto r = eval_resolved(e.args[1], get);
  if (!r) return std::nullopt;
  Value out = 0;
  bool overflow = false;
  switch (e.kind) {
    case K::Add: overflow = __builtin_add_overflow(*l, *r, &out); break;
    case K::Sub: overflow = __builtin_sub_overflow(*l, *r, &out); break;
    case K::Mul: overflow = __builtin_mul_overflow(*l, *r, &out); break;
    default: break;
  }
  if (overflow) return std::nullopt;
  return out;
}

bool compare(CmpOp op, Value l, Value r) {
  switch (op) {
    case CmpOp::Eq: return l == r;
    case CmpOp::Ne: return l != r;
    case CmpOp::Lt: return l < r;
    case CmpOp::Le: return l <= r;
    case CmpOp::Gt: return l > r;
    case CmpOp::Ge: return l >= r;
  }
  return false;
}

template <class Get, class InDomain>
bool eval_pred_resolved(const PredExpr& p, const Get& get, const InDomain& in_domain) {
  using K = PredExpr::Kind;
  switch (p.kind) {
    case K::True: return true;
    case K::False: return false;
    case K::Cmp: {
      auto l = eval_resolved(p.terms[0], get);
      auto r = eval_resolved(p.terms[1], get);
      return l && r && compare(p.op, *l, *r);
    }
    case K::InDomain: return in_domain(p.slot);
    case K::Not: return !eval_pred_resolved(p.args[0], get, in_domain);
    case K::And:
      return eval_pred_resolved(p.args[0], get, in_domain) &&
             eval_pred_resolved(p.args[1], get, in_domain);
    case K::Or:
      return eval_pred_resolved(p.args[0], get, in_domain) ||
             eval_pred_resolved(p.args[1], get, in_domain);
    case K::Implies:
      return !eval_pred_resolved(p.args[0], get, in_domain) ||
             eval_pred_resolved(p.args[1], get, in_domain);
    case K::Iff:
      return eval_pred_resolved(p.args[0], get, in_domain) ==
             eval_pred_resolved(p.args[1], get, in_domain);
  }
  return false;
}

}  // namespace

std::optional<Value> eval_arith(const ArithExpr& e, const VarUniverse& universe,
                                const State& s) {
  auto r = resolve(e, universe);
  return eval_resolved(r, [&](std::size_t slot) { return s.values.at(slot); });
}

bool eval_pred(const PredExpr& p, const VarUniverse& universe, const State& s) {
  auto r = resolve(p, universe);
  return eval_pred_resolved(
      r, [&](std::size_t slot) { return s.values.at(slot); },
      [&](std::size_t slot) { return universe[slot].domain.contains(s.values.at(slot)); });
}

std::optional<Value> eval_arith_at(const ArithExpr& resolved, const StateSpace& space,
                                   std::size_t k) {
  return eval_resolved(resolved, [&](std::size_t slot) { return space.value_at(k, slot); });
}

bool eval_pred_at(const PredExpr& resolved, const StateSpace& space, std::size_t k) {
  // States of the space only hold domain values, so membership is constant.
  return eval_pred_resolved(
      resolved, [&](std::size_t slot) { return space.value_at(k, slot); },
      [](std::size_t) { return true; });
}

PredSet pred_to_set(const PredExpr& p, const StateSpace& space) {
  const PredExpr r = resolve(p, space.universe());
  PredSet out(space.size());
  for (std::size_t k = 0; k < space.size(); ++k) {
    if (eval_pred_at(r, space, k)) out.set(k);
  }
  return out;
}

void collect_vars(const ArithExpr& e, std::vector<std::string>& out) {
  if (e.kind == ArithExpr::Kind::Var &&
      std::find(out.begin(), out.end(), e.var) == out.end()) {
    out.push_back(e.var);
  }
  for (const auto& a : e.args) collect_vars(a, out);
}

void collect_vars(const PredExpr& p, std::vector<std::string>& out) {
  if (p.kind == PredExpr::Kind::InDomain &&
      std::find(out.begin(), out.end(), p.var) == out.end()) {
    out.push_back(p.var);
  }
  for (const auto& t : p.terms) collect_vars(t, out);
  for (const auto& a : p.args) collect_vars(a, out);
}

std::string_view to_string(CmpOp op) {
  switch (op) {
    case CmpOp::Eq: return "==";
    case CmpOp::Ne: return "!=";
    case CmpOp::Lt: return "<";
    case CmpOp::Le: return "<=";
    case CmpOp::Gt: return ">";
    case CmpOp::Ge: return ">=";
  }
  return "?";
}

namespace {

// Binding strength used by the printers; higher binds tighter.
int arith_prec(const ArithExpr& e) {
  switch (e.kind) {
    case ArithExpr::Kind::Add:
    case ArithExpr::Kind::Sub: return 1;
    case ArithExpr::Kind::Mul: return 2;
    case ArithExpr::Kind::Neg: return 3;
    case ArithExpr::Kind::Const: return e.value < 0 ? 3 : 4;
    case ArithExpr::Kind::Var: return 4;
  }
  return 4;
}

std::string paren_if(bool cond, std::string s) {
  return cond ? "(" + s + ")" : s;
}

int pred_prec(const PredExpr& p) {
  switch (p.kind) {
    case PredExpr::Kind::Iff: return 1;
    case PredExpr::Kind::Implies: return 2;
    case PredExpr::Kind::Or: return 3;
    case PredExpr::Kind::And: return 4;
    case PredExpr::Kind::Cmp: return 5;
    default: return 6;
  }
}

}  // namespace

std::string to_string(const ArithExpr& e) {
  using K = ArithExpr::Kind;
  switch (e.kind) {
    case K::Const: return std::to_string(e.value);
    case K::Var: return e.var;
    case K::Neg: {
      const auto& a = e.args[0];
      // "-5" would re-parse as a negative literal, so keep the negation visible.
      const bool wrap = arith_prec(a) < 4 || a.kind == K::Const;
      return "-" + paren_if(wrap, to_string(a));
    }
    default: break;
  }
  const int prec = arith_prec(e);
  const char* op = e.kind == K::Add ? " + " : e.kind == K::Sub ? " - " : " * ";
  return paren_if(arith_prec(e.args[0]) < prec, to_string(e.args[0])) + op +
         paren_if(arith_prec(e.args[1]) <= prec, to_string(e.args[1]));
}

std::string to_string(const PredExpr& p) {
  using K = PredExpr::Kind;
  switch (p.kind) {
    case K::True: return "true";
    case K::False: return "false";
    case K::InDomain: return "in_domain(" + p.var + ")";
    case K::Cmp:
      return to_string(p.terms[0]) + " " + std::string(to_string(p.op)) + " " +
             to_string(p.terms[1]);
    case K::Not: return "!" + paren_if(pred_prec(p.args[0]) < 6, to_string(p.args[0]));
    default: break;
  }
  const int prec = pred_prec(p);
  const char* op = p.kind == K::And       ? " && "
                   : p.kind == K::Or      ? " || "
                   : p.kind == K::Implies ? " -> "
                                          : " <-> ";
  // `->` associates to the right, the others to the left.
  const bool right_assoc = p.kind == K::Implies;
  const bool wrap_l = right_assoc ? pred_prec(p.args[0]) <= prec : pred_prec(p.args[0]) < prec;
  const bool wrap_r = right_assoc ? pred_prec(p.args[1]) < prec : pred_prec(p.args[1]) <= prec;
  return paren_if(wrap_l, to_string(p.args[0])) + op + paren_if(wrap_r, to_string(p.args[1]));
}

}  // namespace scalc
