#include "scalc/sformula.hpp"

#include <algorithm>
#include <set>

#include "lexer.hpp"
#include "scalc/error.hpp"

namespace scalc {

using detail::Tok;
using detail::TokenStream;

namespace {

SFormula node(SFormula::Kind kind, std::vector<SFormula> args) {
  SFormula f;
  f.kind = kind;
  f.args = std::move(args);
  return f;
}

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : ts_(detail::tokenize(text)) {}

  SFormula parse() {
    SFormula f = iff();
    if (!ts_.at_end()) ts_.fail("unexpected trailing input");
    return f;
  }

 private:
  SFormula iff() {
    SFormula lhs = implication();
    while (ts_.accept("<->")) lhs = SFormula::iff(std::move(lhs), implication());
    return lhs;
  }

  SFormula implication() {
    SFormula lhs = disjunction();
    if (ts_.accept("->")) return SFormula::implies(std::move(lhs), implication());
    return lhs;
  }

  SFormula disjunction() {
    SFormula lhs = conjunction();
    while (ts_.accept("|") || ts_.accept("||")) lhs = SFormula::disj(std::move(lhs), conjunction());
    return lhs;
  }

  SFormula conjunction() {
    SFormula lhs = unary();
    while (ts_.accept("&") || ts_.accept("&&")) lhs = SFormula::conj(std::move(lhs), unary());
    return lhs;
  }

  SFormula unary() {
    if (ts_.accept("!") || ts_.accept("~")) return SFormula::negate(unary());
    if (ts_.is_keyword("forall") || ts_.is_keyword("exists")) {
      const bool universal = ts_.next().text == "forall";
      std::vector<std::string> vars{ts_.expect_ident("a state variable")};
      while (ts_.accept(",")) vars.push_back(ts_.expect_ident("a state variable"));
      ts_.expect(".");
      SFormula body = iff();
      for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
        body = universal ? SFormula::forall(*it, std::move(body))
                         : SFormula::exists(*it, std::move(body));
      }
      return body;
    }
    if (ts_.accept("(")) {
      SFormula f = iff();
      ts_.expect(")");
      return f;
    }
    if (ts_.accept("[")) {
      SFormula f = iff();
      ts_.expect("]");
      return f;
    }
    std::string symbol = ts_.expect_ident("a predicate or relation symbol");
    ts_.expect("(");
    std::string first = ts_.expect_ident("a state variable");
    if (ts_.accept(",")) {
      std::string second = ts_.expect_ident("a state variable");
      ts_.expect(")");
      return SFormula::rel(std::move(symbol), std::move(first), std::move(second));
    }
    ts_.expect(")");
    return SFormula::pred(std::move(symbol), std::move(first));
  }

  TokenStream ts_;
};

void gather_free(const SFormula& f, std::vector<std::string>& bound, std::set<std::string>& out) {
  switch (f.kind) {
    case SFormula::Kind::PredApp:
    case SFormula::Kind::RelApp:
      for (const auto& v : f.vars) {
        if (std::find(bound.begin(), bound.end(), v) == bound.end()) out.insert(v);
      }
      return;
    case SFormula::Kind::Forall:
    case SFormula::Kind::Exists:
      bound.push_back(f.vars[0]);
      gather_free(f.args[0], bound, out);
      bound.pop_back();
      return;
    default:
      for (const auto& a : f.args) gather_free(a, bound, out);
  }
}

}  // namespace

SFormula SFormula::pred(std::string symbol, std::string var) {
  SFormula f;
  f.kind = Kind::PredApp;
  f.symbol = std::move(symbol);
  f.vars = {std::move(var)};
  return f;
}

SFormula SFormula::rel(std::string symbol, std::string from, std::string to) {
  SFormula f;
  f.kind = Kind::RelApp;
  f.symbol = std::move(symbol);
  f.vars = {std::move(from), std::move(to)};
  return f;
}

SFormula SFormula::negate(SFormula f) { return node(Kind::Not, {std::move(f)}); }
SFormula SFormula::conj(SFormula f, SFormula g) { return node(Kind::And, {std::move(f), std::move(g)}); }
SFormula SFormula::disj(SFormula f, SFormula g) { return node(Kind::Or, {std::move(f), std::move(g)}); }
SFormula SFormula::implies(SFormula f, SFormula g) { return node(Kind::Implies, {std::move(f), std::move(g)}); }
SFormula SFormula::iff(SFormula f, SFormula g) { return node(Kind::Iff, {std::move(f), std::move(g)}); }

SFormula SFormula::forall(std::string var, SFormula body) {
  SFormula f = node(Kind::Forall, {std::move(body)});
  f.vars = {std::move(var)};
  return f;
}

SFormula SFormula::exists(std::string var, SFormula body) {
  SFormula f = node(Kind::Exists, {std::move(body)});
  f.vars = {std::move(var)};
  return f;
}

SFormula parse_sformula(std::string_view text) { return FormulaParser(text).parse(); }

std::string to_string(const SFormula& f) {
  using K = SFormula::Kind;
  switch (f.kind) {
    case K::PredApp: return f.symbol + "(" + f.vars[0] + ")";
    case K::RelApp: return f.symbol + "(" + f.vars[0] + "," + f.vars[1] + ")";
    case K::Not: return "!" + to_string(f.args[0]);
    case K::Forall: return "(forall " + f.vars[0] + ". " + to_string(f.args[0]) + ")";
    case K::Exists: return "(exists " + f.vars[0] + ". " + to_string(f.args[0]) + ")";
    default: break;
  }
  const char* op = f.kind == K::And ? " & " : f.kind == K::Or ? " | " : f.kind == K::Implies ? " -> " : " <-> ";
  return "(" + to_string(f.args[0]) + op + to_string(f.args[1]) + ")";
}

std::vector<std::string> free_vars(const SFormula& f) {
  std::vector<std::string> bound;
  std::set<std::string> out;
  gather_free(f, bound, out);
  return {out.begin(), out.end()};
}

SFormula universal_closure(const SFormula& f) {
  SFormula out = f;
  auto vars = free_vars(f);
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) out = SFormula::forall(*it, std::move(out));
  return out;
}

CompiledFormula::CompiledFormula(const SFormula& f) {
  std::vector<std::string> scope;
  root_ = compile(f, scope);
}

std::size_t CompiledFormula::compile(const SFormula& f, std::vector<std::string>& scope) {
  using K = SFormula::Kind;
  auto slot_of = [&](const std::string& v) -> std::size_t {
    for (std::size_t k = scope.size(); k-- > 0;) {
      if (scope[k] == v) return k;
    }
    throw Error(ErrorKind::UnboundStateVariable,
                "state variable '" + v + "' is not bound by a quantifier");
  };
  Node n{f.kind};
  switch (f.kind) {
    case K::PredApp:
    case K::RelApp: {
      const std::size_t arity = f.vars.size();
      auto it = std::find(symbols_.begin(), symbols_.end(), f.symbol);
      if (it == symbols_.end()) {
        symbols_.push_back(f.symbol);
        symbol_arity_.push_back(arity);
        n.symbol = symbols_.size() - 1;
      } else {
        n.symbol = static_cast<std::size_t>(it - symbols_.begin());
        if (symbol_arity_[n.symbol] != arity) {
          throw Error(ErrorKind::ArityMismatch,
                      "symbol '" + f.symbol + "' used with different arities");
        }
      }
      n.a = slot_of(f.vars[0]);
      if (arity == 2) n.b = slot_of(f.vars[1]);
      break;
    }
    case K::Forall:
    case K::Exists:
      scope.push_back(f.vars[0]);
      n.a = scope.size() - 1;
      slots_ = std::max(slots_, scope.size());
      n.b = compile(f.args[0], scope);
      scope.pop_back();
      break;
    case K::Not:
      n.a = compile(f.args[0], scope);
      break;
    default:
      n.a = compile(f.args[0], scope);
      n.b = compile(f.args[1], scope);
  }
  nodes_.push_back(n);
  return nodes_.size() - 1;
}

namespace {

struct Resolved {
  const PredSet* pred = nullptr;
  const Relation* rel = nullptr;
  int constant = -1;
};

}  // namespace

bool CompiledFormula::eval(const Env& env, std::size_t size) const {
  std::vector<Resolved> resolved(symbols_.size());
  for (std::size_t k = 0; k < symbols_.size(); ++k) {
    const std::string& name = symbols_[k];
    const std::size_t arity = symbol_arity_[k];
    auto it = env.find(name);
    if (it == env.end()) {
      if (arity == 1 && (name == "tau" || name == "phi")) {
        resolved[k].constant = name == "tau" ? 1 : 0;
        continue;
      }
      throw Error(ErrorKind::UnboundSymbol, "symbol '" + name + "' is not bound");
    }
    if (const auto* p = std::get_if<PredSet>(&it->second)) {
      if (arity != 1) {
        throw Error(ErrorKind::ArityMismatch, "'" + name + "' is a predicate but used as a relation");
      }
      if (p->size() != size) {
        throw Error(ErrorKind::SpaceMismatch, "binding for '" + name + "' has the wrong size");
      }
      resolved[k].pred = p;
    } else {
      const auto& r = std::get<Relation>(it->second);
      if (arity != 2) {
        throw Error(ErrorKind::ArityMismatch, "'" + name + "' is a relation but used as a predicate");
      }
      if (r.size() != size) {
        throw Error(ErrorKind::SpaceMismatch, "binding for '" + name + "' has the wrong size");
      }
      resolved[k].rel = &r;
    }
  }

  std::vector<std::size_t> assign(slots_, 0);
  using K = SFormula::Kind;
  auto go = [&](auto&& self, std::size_t idx) -> bool {
    const Node& n = nodes_[idx];
    switch (n.kind) {
      case K::PredApp: {
        const Resolved& r = resolved[n.symbol];
        if (r.constant >= 0) return r.constant == 1;
        return r.pred->test(assign[n.a]);
      }
      case K::RelApp: return resolved[n.symbol].rel->contains(assign[n.a], assign[n.b]);
      case K::Not: return !self(self, n.a);
      case K::And: return self(self, n.a) && self(self, n.b);
      case K::Or: return self(self, n.a) || self(self, n.b);
      case K::Implies: return !self(self, n.a) || self(self, n.b);
      case K::Iff: return self(self, n.a) == self(self, n.b);
      case K::Forall:
        for (std::size_t s = 0; s < size; ++s) {
          assign[n.a] = s;
          if (!self(self, n.b)) return false;
        }
        return true;
      case K::Exists:
        for (std::size_t s = 0; s < size; ++s) {
          assign[n.a] = s;
          if (self(self, n.b)) return true;
        }
        return false;
    }
    return false;
  };
  return go(go, root_);
}

bool eval_sformula(const SFormula& f, const Env& env, std::size_t size) {
  return CompiledFormula(f).eval(env, size);
}

bool eval_sformula(const SFormula& f, const Env& env, const StateSpace& space) {
  return eval_sformula(f, env, space.size());
}

}  // namespace scalc
