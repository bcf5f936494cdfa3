#include "scalc/export.hpp"

#include <cstdio>
#include <map>

#include "scalc/error.hpp"
#include "scalc/laws.hpp"

namespace scalc {

std::string VCDocument::text() const {
  std::string out;
  for (const auto& c : comments) out += "; " + c + "\n";
  out += "(set-logic " + logic + ")\n";
  for (const auto& d : declarations) out += d + "\n";
  out += "(assert " + assertion + ")\n";
  out += "(check-sat)\n";
  return out;
}

namespace {

std::string smt_int(Value v) {
  if (v >= 0) return std::to_string(v);
  const auto mag = static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(v);
  return "(- " + std::to_string(mag) + ")";
}

bool has_vars(const ArithExpr& e) {
  if (e.kind == ArithExpr::Kind::Var) return true;
  for (const auto& a : e.args) {
    if (has_vars(a)) return true;
  }
  return false;
}

bool nonlinear(const ArithExpr& e) {
  if (e.kind == ArithExpr::Kind::Mul && has_vars(e.args[0]) && has_vars(e.args[1])) return true;
  for (const auto& a : e.args) {
    if (nonlinear(a)) return true;
  }
  return false;
}

bool nonlinear(const PredExpr& p) {
  for (const auto& t : p.terms) {
    if (nonlinear(t)) return true;
  }
  for (const auto& a : p.args) {
    if (nonlinear(a)) return true;
  }
  return false;
}

bool nonlinear(const Stmt& s) {
  if (s.kind == Stmt::Kind::Assign && nonlinear(s.expr)) return true;
  if ((s.kind == Stmt::Kind::IfThenElse || s.kind == Stmt::Kind::IfThen || s.kind == Stmt::Kind::While) &&
      nonlinear(s.cond)) {
    return true;
  }
  for (const auto& b : s.body) {
    if (nonlinear(b)) return true;
  }
  return false;
}

bool has_decl(const Stmt& s) {
  if (s.kind == Stmt::Kind::Decl) return true;
  for (const auto& b : s.body) {
    if (has_decl(b)) return true;
  }
  return false;
}

std::string quoted(const std::string& var, std::size_t version) {
  return "|" + var + "@" + std::to_string(version) + "|";
}

std::string conj(const std::string& a, const std::string& b) {
  if (a == "true") return b;
  if (b == "true") return a;
  return "(and " + a + " " + b + ")";
}

using Versions = std::map<std::string, std::string, std::less<>>;

class Encoder {
 public:
  Encoder(const VarUniverse& universe, std::size_t unroll) : unroll_(unroll) {
    for (const auto& v : universe.vars()) {
      const bool is_bool = v.domain.name() == "bool";
      current_[v.name] = fresh(v.name, is_bool);
      boolean_[v.name] = is_bool;
    }
  }

  const Versions& initial() const { return current_; }

  std::string term(const ArithExpr& e, const Versions& st) const {
    switch (e.kind) {
      case ArithExpr::Kind::Const: return smt_int(e.value);
      case ArithExpr::Kind::Var: return lookup(st, e.var);
      case ArithExpr::Kind::Add: return "(+ " + term(e.args[0], st) + " " + term(e.args[1], st) + ")";
      case ArithExpr::Kind::Sub: return "(- " + term(e.args[0], st) + " " + term(e.args[1], st) + ")";
      case ArithExpr::Kind::Mul: return "(* " + term(e.args[0], st) + " " + term(e.args[1], st) + ")";
      case ArithExpr::Kind::Neg: return "(- " + term(e.args[0], st) + ")";
    }
    return "0";
  }

  std::string formula(const PredExpr& p, const Versions& st) const {
    using K = PredExpr::Kind;
    switch (p.kind) {
      case K::True: return "true";
      case K::False: return "false";
      case K::Cmp: {
        const std::string a = term(p.terms[0], st), b = term(p.terms[1], st);
        switch (p.op) {
          case CmpOp::Eq: return "(= " + a + " " + b + ")";
          case CmpOp::Ne: return "(distinct " + a + " " + b + ")";
          case CmpOp::Lt: return "(< " + a + " " + b + ")";
          case CmpOp::Le: return "(<= " + a + " " + b + ")";
          case CmpOp::Gt: return "(> " + a + " " + b + ")";
          case CmpOp::Ge: return "(>= " + a + " " + b + ")";
        }
        return "true";
      }
      case K::Not: return "(not " + formula(p.args[0], st) + ")";
      case K::And: return "(and " + formula(p.args[0], st) + " " + formula(p.args[1], st) + ")";
      case K::Or: return "(or " + formula(p.args[0], st) + " " + formula(p.args[1], st) + ")";
      case K::Implies: return "(=> " + formula(p.args[0], st) + " " + formula(p.args[1], st) + ")";
      case K::Iff: return "(= " + formula(p.args[0], st) + " " + formula(p.args[1], st) + ")";
      case K::InDomain: {
        const std::string v = lookup(st, p.var);
        auto it = boolean_.find(p.var);
        if (it != boolean_.end() && it->second) return "(and (<= 0 " + v + ") (<= " + v + " 1))";
        return "true";
      }
    }
    return "true";
  }

  // Returns the condition under which the statement reaches an exit.
  std::string encode(const Stmt& s, Versions& st) {
    switch (s.kind) {
      case Stmt::Kind::Nop: return "true";
      case Stmt::Kind::Decl: {
        const bool is_bool = s.type_name == "bool";
        boolean_[s.var] = is_bool;
        st[s.var] = fresh(s.var, is_bool);
        return "true";
      }
      case Stmt::Kind::Assign: {
        const std::string rhs = term(s.expr, st);
        const std::string v = fresh(s.var, false);
        defs_.push_back("(= " + v + " " + rhs + ")");
        st[s.var] = v;
        return "true";
      }
      case Stmt::Kind::Seq: {
        const std::string a = encode(s.body[0], st);
        const std::string b = encode(s.body[1], st);
        return conj(a, b);
      }
      case Stmt::Kind::IfThenElse:
      case Stmt::Kind::IfThen: {
        const std::string c = formula(s.cond, st);
        Versions then_st = st, else_st = st;
        const std::string ok1 = encode(s.body[0], then_st);
        const std::string ok2 = s.body.size() > 1 ? encode(s.body[1], else_st) : "true";
        merge(c, then_st, else_st, st);
        if (ok1 == "true" && ok2 == "true") return "true";
        return "(ite " + c + " " + ok1 + " " + ok2 + ")";
      }
      case Stmt::Kind::While: return unrolled(s, st, unroll_);
    }
    return "true";
  }

  const std::vector<std::string>& declarations() const { return decls_; }
  const std::vector<std::string>& definitions() const { return defs_; }

 private:
  std::string unrolled(const Stmt& loop, Versions& st, std::size_t k) {
    const std::string c = formula(loop.cond, st);
    if (k == 0) return "(not " + c + ")";
    Versions then_st = st;
    const std::string ok_body = encode(loop.body[0], then_st);
    const std::string ok_rest = unrolled(loop, then_st, k - 1);
    merge(c, then_st, st, st);
    return "(ite " + c + " " + conj(ok_body, ok_rest) + " true)";
  }

  void merge(const std::string& c, const Versions& a, const Versions& b, Versions& out) {
    Versions merged = b;
    for (const auto& [var, va] : a) {
      auto it = b.find(var);
      if (it == b.end()) {
        // Declared only in the taken branch; the other branch never reads it.
        merged[var] = va;
      } else if (it->second != va) {
        const std::string v = fresh(var, false);
        defs_.push_back("(= " + v + " (ite " + c + " " + va + " " + it->second + "))");
        merged[var] = v;
      }
    }
    out = std::move(merged);
  }

  std::string lookup(const Versions& st, const std::string& var) const {
    auto it = st.find(var);
    if (it == st.end()) throw Error(ErrorKind::UnknownVariable, "variable '" + var + "' is not declared");
    return it->second;
  }

  std::string fresh(const std::string& var, bool is_bool) {
    const std::string name = quoted(var, next_[var]++);
    decls_.push_back("(declare-const " + name + " Int)");
    if (is_bool) defs_.push_back("(and (<= 0 " + name + ") (<= " + name + " 1))");
    return name;
  }

  std::size_t unroll_;
  Versions current_;
  std::map<std::string, bool, std::less<>> boolean_;
  std::map<std::string, std::size_t, std::less<>> next_;
  std::vector<std::string> decls_;
  std::vector<std::string> defs_;
};

}  // namespace

VCDocument export_vc(const Stmt& program, const PredExpr& pre, const PredExpr& post,
                     const VarUniverse& universe, const ExportOptions& options) {
  const bool loops = contains_while(program);
  if (loops && options.unroll == 0 && !options.allow_partial_unroll) {
    throw Error(ErrorKind::UnsupportedForExport,
                "program contains a while loop; pass an unroll bound or allow partial unrolling");
  }
  Encoder enc(universe, options.unroll);
  const Versions initial = enc.initial();
  const std::string p = enc.formula(pre, initial);
  Versions st = initial;
  const std::string ok = enc.encode(program, st);
  const std::string q = enc.formula(post, st);

  std::vector<std::string> conjuncts = enc.definitions();
  conjuncts.push_back(p);
  if (options.mode == Mode::Total) {
    conjuncts.push_back(ok == "true" ? "(not " + q + ")" : "(or (not " + ok + ") (not " + q + "))");
  } else {
    if (ok != "true") conjuncts.push_back(ok);
    conjuncts.push_back("(not " + q + ")");
  }

  VCDocument doc;
  doc.logic = nonlinear(program) || nonlinear(pre) || nonlinear(post) ? "QF_NIA" : "QF_LIA";
  char hash[32];
  std::snprintf(hash, sizeof hash, "%016llx",
                static_cast<unsigned long long>(fnv1a64(pretty_print(program))));
  doc.comments = {
      "scalc verification condition",
      std::string("mode: ") + std::string(to_string(options.mode)),
      std::string("program-fnv1a64: ") + hash,
      "unroll: " + std::to_string(options.unroll),
      "integers are unbounded: finite-domain overflow and out-of-domain results are not modeled",
  };
  if (loops) doc.comments.push_back("only executions within the unroll bound are covered");
  if (options.mode == Mode::Total && loops && has_decl(program)) {
    doc.comments.push_back("havoc with loops: termination is demanded for every havoc choice");
  }
  doc.comments.push_back("unsat means the correctness formula holds");
  doc.declarations = enc.declarations();
  std::string a = "(and";
  for (const auto& c : conjuncts) a += "\n  " + c;
  doc.assertion = a + ")";
  return doc;
}

}  // namespace scalc
