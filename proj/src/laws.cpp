#include "scalc/laws.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <random>

#include "scalc/error.hpp"
#include "scalc/hoare.hpp"

namespace scalc {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view text) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

PredSet random_predset(std::size_t size, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  PredSet out(size);
  std::uint64_t word = 0;
  for (std::size_t k = 0; k < size; ++k) {
    if (k % 64 == 0) word = gen();
    out.set(k, (word >> (k % 64)) & 1U);
  }
  return out;
}

Relation random_relation(std::size_t size, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  RelationBuilder b(size);
  std::vector<StateIndex> row;
  std::uint64_t word = 0;
  std::size_t bit = 0;
  for (std::size_t x = 0; x < size; ++x) {
    row.clear();
    for (std::size_t y = 0; y < size; ++y, ++bit) {
      if (bit % 64 == 0) word = gen();
      if ((word >> (bit % 64)) & 1U) row.push_back(static_cast<StateIndex>(y));
    }
    b.add_sorted_row(row);
  }
  return std::move(b).finish();
}

std::string_view to_string(LawKind kind) {
  switch (kind) {
    case LawKind::Theorem: return "theorem";
    case LawKind::Diagnostic: return "diagnostic";
    case LawKind::NegativeControl: return "negative-control";
  }
  return "unknown";
}

namespace {

// ---- formula text builders; '#' marks the state variable of a predicate ----

std::string at(std::string_view pred, std::string_view var) {
  std::string out;
  for (char c : pred) {
    if (c == '#') {
      out += var;
    } else {
      out += c;
    }
  }
  return out;
}

std::string tcf(std::string_view p, std::string_view s, std::string_view q) {
  const std::string S(s);
  return "(forall x. (" + at(p, "x") + ") -> ((exists y. " + S + "(x,y)) & (forall z. " + S +
         "(x,z) -> (" + at(q, "z") + "))))";
}

std::string pcf(std::string_view p, std::string_view s, std::string_view q) {
  const std::string S(s);
  return "(forall x. ((" + at(p, "x") + ") & (exists y. " + S + "(x,y))) -> (forall z. " + S +
         "(x,z) -> (" + at(q, "z") + ")))";
}

std::string all(std::string_view body) { return "(forall x. " + at(body, "x") + ")"; }

// ---- set-level helpers ----

const PredSet& P(const Env& env, std::string_view name) {
  return std::get<PredSet>(env.find(name)->second);
}
const Relation& R(const Env& env, std::string_view name) {
  return std::get<Relation>(env.find(name)->second);
}
bool H(const PredSet& p, const Relation& s, const PredSet& q) { return check_total(p, s, q).holds; }
bool implies(bool a, bool b) { return !a || b; }

struct LawDef {
  LawInfo info;
  std::string formula;  // closed template; schemas use canonical relation atoms
  std::function<void(Env&)> derive;
  std::function<bool(const Env&)> direct;
  // Schemas only.
  std::string schema_text;  // with {F}, {G}, {H}, {K} slots
  std::vector<std::string> slots;
  bool slots_avoid_x = false;
};

std::vector<LawSymbol> preds_and_s(std::initializer_list<const char*> preds) {
  std::vector<LawSymbol> out;
  for (const char* p : preds) out.push_back({p, 1});
  out.push_back({"S", 2});
  return out;
}

void add_wp(Env& env, const std::string& name, const PredSet& q) {
  env.insert_or_assign(name, wp(R(env, "S"), q));
}

std::vector<LawDef> make_triple_laws() {
  std::vector<LawDef> v;
  auto law = [&](std::string id, LawKind kind, std::string statement, std::vector<LawSymbol> syms,
                 std::string formula, std::function<bool(const Env&)> direct,
                 std::function<void(Env&)> derive = nullptr) {
    LawDef d;
    d.info = LawInfo{std::move(id), kind, false, std::move(statement), std::move(syms)};
    d.formula = std::move(formula);
    d.direct = std::move(direct);
    d.derive = std::move(derive);
    v.push_back(std::move(d));
  };
  const auto T = LawKind::Theorem;

  law("thm3.1a", T, "forall x(P(x) => R(x)) & {R}S{Q} => {P}S{Q}", preds_and_s({"P", "Q", "R"}),
      "(" + all("P(#) -> R(#)") + " & " + tcf("R(#)", "S", "Q(#)") + ") -> " + tcf("P(#)", "S", "Q(#)"),
      [](const Env& e) {
        return implies(P(e, "P").subset_of(P(e, "R")) && H(P(e, "R"), R(e, "S"), P(e, "Q")),
                       H(P(e, "P"), R(e, "S"), P(e, "Q")));
      });
  law("thm3.1b", T, "{P}S{R} & forall x(R(x) => Q(x)) => {P}S{Q}", preds_and_s({"P", "Q", "R"}),
      "(" + tcf("P(#)", "S", "R(#)") + " & " + all("R(#) -> Q(#)") + ") -> " + tcf("P(#)", "S", "Q(#)"),
      [](const Env& e) {
        return implies(H(P(e, "P"), R(e, "S"), P(e, "R")) && P(e, "R").subset_of(P(e, "Q")),
                       H(P(e, "P"), R(e, "S"), P(e, "Q")));
      });
  law("thm3.1c", T, "forall x(U(x) => P(x)) & forall x(Q(x) => V(x)) & {P}S{Q} => {U}S{V}",
      preds_and_s({"P", "Q", "U", "V"}),
      "(" + all("U(#) -> P(#)") + " & " + all("Q(#) -> V(#)") + " & " + tcf("P(#)", "S", "Q(#)") +
          ") -> " + tcf("U(#)", "S", "V(#)"),
      [](const Env& e) {
        return implies(P(e, "U").subset_of(P(e, "P")) && P(e, "Q").subset_of(P(e, "V")) &&
                           H(P(e, "P"), R(e, "S"), P(e, "Q")),
                       H(P(e, "U"), R(e, "S"), P(e, "V")));
      });
  law("thm3.2a", T, "{P}S{Q} & {R}S{W} => {P | R}S{Q | W}", preds_and_s({"P", "Q", "R", "W"}),
      "(" + tcf("P(#)", "S", "Q(#)") + " & " + tcf("R(#)", "S", "W(#)") + ") -> " +
          tcf("P(#) | R(#)", "S", "Q(#) | W(#)"),
      [](const Env& e) {
        const auto& s = R(e, "S");
        return implies(H(P(e, "P"), s, P(e, "Q")) && H(P(e, "R"), s, P(e, "W")),
                       H(P(e, "P") | P(e, "R"), s, P(e, "Q") | P(e, "W")));
      });
  law("thm3.2b", T, "{P}S{Q} & {R}S{W} => {P & R}S{Q & W}", preds_and_s({"P", "Q", "R", "W"}),
      "(" + tcf("P(#)", "S", "Q(#)") + " & " + tcf("R(#)", "S", "W(#)") + ") -> " +
          tcf("P(#) & R(#)", "S", "Q(#) & W(#)"),
      [](const Env& e) {
        const auto& s = R(e, "S");
        return implies(H(P(e, "P"), s, P(e, "Q")) && H(P(e, "R"), s, P(e, "W")),
                       H(P(e, "P") & P(e, "R"), s, P(e, "Q") & P(e, "W")));
      });
  law("cor3.1", T, "{P}S{Q} & {!P}S{W} => {tau}S{Q | W}", preds_and_s({"P", "Q", "W"}),
      "(" + tcf("P(#)", "S", "Q(#)") + " & " + tcf("!P(#)", "S", "W(#)") + ") -> " +
          tcf("tau(#)", "S", "Q(#) | W(#)"),
      [](const Env& e) {
        const auto& s = R(e, "S");
        return implies(H(P(e, "P"), s, P(e, "Q")) && H(~P(e, "P"), s, P(e, "W")),
                       H(PredSet::full(s.size()), s, P(e, "Q") | P(e, "W")));
      });
  law("thm3.3", T, "{P}S{Q} | {R}S{W} => {P & R}S{Q | W}", preds_and_s({"P", "Q", "R", "W"}),
      "(" + tcf("P(#)", "S", "Q(#)") + " | " + tcf("R(#)", "S", "W(#)") + ") -> " +
          tcf("P(#) & R(#)", "S", "Q(#) | W(#)"),
      [](const Env& e) {
        const auto& s = R(e, "S");
        return implies(H(P(e, "P"), s, P(e, "Q")) || H(P(e, "R"), s, P(e, "W")),
                       H(P(e, "P") & P(e, "R"), s, P(e, "Q") | P(e, "W")));
      });
  law("thm3.4a", T, "{P | R}S{Q} <=> {P}S{Q} & {R}S{Q}", preds_and_s({"P", "Q", "R"}),
      tcf("P(#) | R(#)", "S", "Q(#)") + " <-> (" + tcf("P(#)", "S", "Q(#)") + " & " +
          tcf("R(#)", "S", "Q(#)") + ")",
      [](const Env& e) {
        const auto& s = R(e, "S");
        return H(P(e, "P") | P(e, "R"), s, P(e, "Q")) ==
               (H(P(e, "P"), s, P(e, "Q")) && H(P(e, "R"), s, P(e, "Q")));
      });
  law("thm3.4b", T, "{P}S{Q & R} <=> {P}S{Q} & {P}S{R}", preds_and_s({"P", "Q", "R"}),
      tcf("P(#)", "S", "Q(#) & R(#)") + " <-> (" + tcf("P(#)", "S", "Q(#)") + " & " +
          tcf("P(#)", "S", "R(#)") + ")",
      [](const Env& e) {
        const auto& s = R(e, "S");
        return H(P(e, "P"), s, P(e, "Q") & P(e, "R")) ==
               (H(P(e, "P"), s, P(e, "Q")) && H(P(e, "P"), s, P(e, "R")));
      });
  law("thm3.4c", T, "{P | U}S{Q & W} <=> {P}S{Q} & {U}S{W} & {P}S{W} & {U}S{Q}",
      preds_and_s({"P", "Q", "U", "W"}),
      tcf("P(#) | U(#)", "S", "Q(#) & W(#)") + " <-> (" + tcf("P(#)", "S", "Q(#)") + " & " +
          tcf("U(#)", "S", "W(#)") + " & " + tcf("P(#)", "S", "W(#)") + " & " +
          tcf("U(#)", "S", "Q(#)") + ")",
      [](const Env& e) {
        const auto& s = R(e, "S");
        const auto &p = P(e, "P"), &u = P(e, "U"), &q = P(e, "Q"), &w = P(e, "W");
        return H(p | u, s, q & w) == (H(p, s, q) && H(u, s, w) && H(p, s, w) && H(u, s, q));
      });
  law("thm3.4d", T, "{P}S{Q} | {P}S{W} => {P}S{Q | W}", preds_and_s({"P", "Q", "W"}),
      "(" + tcf("P(#)", "S", "Q(#)") + " | " + tcf("P(#)", "S", "W(#)") + ") -> " +
          tcf("P(#)", "S", "Q(#) | W(#)"),
      [](const Env& e) {
        const auto& s = R(e, "S");
        return implies(H(P(e, "P"), s, P(e, "Q")) || H(P(e, "P"), s, P(e, "W")),
                       H(P(e, "P"), s, P(e, "Q") | P(e, "W")));
      });
  law("thm3.5", T, "{P}S{phi} <=> forall x !P(x)", preds_and_s({"P"}),
      tcf("P(#)", "S", "phi(#)") + " <-> " + all("!P(#)"),
      [](const Env& e) {
        const auto& s = R(e, "S");
        return H(P(e, "P"), s, PredSet::none(s.size())) == P(e, "P").empty();
      });
  law("thm3.6a", T, "{P}S{Q} & {R}S{!Q} => forall x !(P(x) & R(x))", preds_and_s({"P", "Q", "R"}),
      "(" + tcf("P(#)", "S", "Q(#)") + " & " + tcf("R(#)", "S", "!Q(#)") + ") -> " +
          all("!(P(#) & R(#))"),
      [](const Env& e) {
        const auto& s = R(e, "S");
        return implies(H(P(e, "P"), s, P(e, "Q")) && H(P(e, "R"), s, ~P(e, "Q")),
                       (P(e, "P") & P(e, "R")).empty());
      });
  law("thm3.6b", T, "{P}S{Q} & {P}S{!Q} <=> forall x !P(x)", preds_and_s({"P", "Q"}),
      "(" + tcf("P(#)", "S", "Q(#)") + " & " + tcf("P(#)", "S", "!Q(#)") + ") <-> " + all("!P(#)"),
      [](const Env& e) {
        const auto& s = R(e, "S");
        return (H(P(e, "P"), s, P(e, "Q")) && H(P(e, "P"), s, ~P(e, "Q"))) == P(e, "P").empty();
      });
  law("thm3.6c", T, "({P}S{!Q} => !{P}S{Q}) <=> exists x P(x)", preds_and_s({"P", "Q"}),
      "(" + tcf("P(#)", "S", "!Q(#)") + " -> !" + tcf("P(#)", "S", "Q(#)") +
          ") <-> (exists x. P(x))",
      [](const Env& e) {
        const auto& s = R(e, "S");
        return implies(H(P(e, "P"), s, ~P(e, "Q")), !H(P(e, "P"), s, P(e, "Q"))) ==
               !P(e, "P").empty();
      });
  auto d36 = [](const Env& e) {
    const auto& s = R(e, "S");
    bool total = true;
    for (std::size_t x = 0; x < s.size(); ++x) total = total && s.has_successor(x);
    bool into_q = true;
    for (auto [x, z] : s.pairs()) into_q = into_q && P(e, "Q").test(z);
    return (H(P(e, "P"), s, P(e, "Q")) && H(~P(e, "P"), s, P(e, "Q"))) == (total && into_q);
  };
  law("thm3.6d", T, "{P}S{Q} & {!P}S{Q} <=> forall x exists y S(x,y) & forall x,z(S(x,z) => Q(z))",
      preds_and_s({"P", "Q"}),
      "(" + tcf("P(#)", "S", "Q(#)") + " & " + tcf("!P(#)", "S", "Q(#)") +
          ") <-> ((forall x. exists y. S(x,y)) & (forall x. forall z. S(x,z) -> Q(z)))",
      d36);
  law("thm3.6e", T, "exists x,z(S(x,z) & !Q(z)) => ({!P}S{Q} => !{P}S{Q})", preds_and_s({"P", "Q"}),
      "(exists x. exists z. S(x,z) & !Q(z)) -> (" + tcf("!P(#)", "S", "Q(#)") + " -> !" +
          tcf("P(#)", "S", "Q(#)") + ")",
      [](const Env& e) {
        const auto& s = R(e, "S");
        bool escape = false;
        for (auto [x, z] : s.pairs()) escape = escape || !P(e, "Q").test(z);
        return implies(escape, implies(H(~P(e, "P"), s, P(e, "Q")), !H(P(e, "P"), s, P(e, "Q"))));
      });
  law("cor3.2", T, "{P}S{Q} & {P}S{!Q} <=> (P <=> phi)", preds_and_s({"P", "Q"}),
      "(" + tcf("P(#)", "S", "Q(#)") + " & " + tcf("P(#)", "S", "!Q(#)") + ") <-> " +
          all("P(#) <-> phi(#)"),
      [](const Env& e) {
        const auto& s = R(e, "S");
        return (H(P(e, "P"), s, P(e, "Q")) && H(P(e, "P"), s, ~P(e, "Q"))) ==
               (P(e, "P") == PredSet::none(s.size()));
      });
  law("cor3.3", T, "({P}S{!Q} => !{P}S{Q}) <=> !(P <=> phi)", preds_and_s({"P", "Q"}),
      "(" + tcf("P(#)", "S", "!Q(#)") + " -> !" + tcf("P(#)", "S", "Q(#)") + ") <-> !" +
          all("P(#) <-> phi(#)"),
      [](const Env& e) {
        const auto& s = R(e, "S");
        return implies(H(P(e, "P"), s, ~P(e, "Q")), !H(P(e, "P"), s, P(e, "Q"))) ==
               (P(e, "P") != PredSet::none(s.size()));
      });

  // Weakest precondition laws. wp symbols are derived from S and the
  // postconditions; the template route checks them against the first-order
  // triple, the direct route against check_total and set algebra.
  auto wp_q = [](Env& e) { add_wp(e, "wpQ", P(e, "Q")); };
  auto wp_qr = [](Env& e) {
    add_wp(e, "wpQ", P(e, "Q"));
    add_wp(e, "wpR", P(e, "R"));
    add_wp(e, "wpQandR", P(e, "Q") & P(e, "R"));
    add_wp(e, "wpQorR", P(e, "Q") | P(e, "R"));
  };
  law("def5.1-wp1", T, "{wp(S,Q)}S{Q}", preds_and_s({"Q"}), tcf("wpQ(#)", "S", "Q(#)"),
      [](const Env& e) { return H(P(e, "wpQ"), R(e, "S"), P(e, "Q")); }, wp_q);
  law("def5.1-wp2", T, "{P}S{Q} => forall x(P(x) => wp(S,Q)(x))", preds_and_s({"P", "Q"}),
      tcf("P(#)", "S", "Q(#)") + " -> " + all("P(#) -> wpQ(#)"),
      [](const Env& e) {
        return implies(H(P(e, "P"), R(e, "S"), P(e, "Q")), P(e, "P").subset_of(P(e, "wpQ")));
      },
      wp_q);
  law("thm5.2", T, "wp(S,phi) <=> phi", preds_and_s({}), all("wpPhi(#) <-> phi(#)"),
      [](const Env& e) { return P(e, "wpPhi").empty(); },
      [](Env& e) { add_wp(e, "wpPhi", PredSet::none(R(e, "S").size())); });
  law("thm5.3", T, "forall x(Q(x) => R(x)) => forall x(wp(S,Q)(x) => wp(S,R)(x))",
      preds_and_s({"Q", "R"}), all("Q(#) -> R(#)") + " -> " + all("wpQ(#) -> wpR(#)"),
      [](const Env& e) {
        return implies(P(e, "Q").subset_of(P(e, "R")), P(e, "wpQ").subset_of(P(e, "wpR")));
      },
      wp_qr);
  law("thm5.4", T, "wp(S,Q) & wp(S,R) <=> wp(S,Q & R)", preds_and_s({"Q", "R"}),
      all("(wpQ(#) & wpR(#)) <-> wpQandR(#)"),
      [](const Env& e) { return (P(e, "wpQ") & P(e, "wpR")) == P(e, "wpQandR"); }, wp_qr);
  law("thm5.5", T, "wp(S,Q) | wp(S,R) => wp(S,Q | R)", preds_and_s({"Q", "R"}),
      all("(wpQ(#) | wpR(#)) -> wpQorR(#)"),
      [](const Env& e) { return (P(e, "wpQ") | P(e, "wpR")).subset_of(P(e, "wpQorR")); }, wp_qr);
  law("thm5.6", T, "!(wp(S,Q) & wp(S,!Q))", preds_and_s({"Q"}), all("!(wpQ(#) & wpNotQ(#))"),
      [](const Env& e) { return (P(e, "wpQ") & P(e, "wpNotQ")).empty(); },
      [](Env& e) {
        add_wp(e, "wpQ", P(e, "Q"));
        add_wp(e, "wpNotQ", ~P(e, "Q"));
      });
  law("thm5.7", T, "{P}S{Q} <=> forall x(P(x) => wp(S,Q)(x))", preds_and_s({"P", "Q"}),
      tcf("P(#)", "S", "Q(#)") + " <-> " + all("P(#) -> wpQ(#)"),
      [](const Env& e) {
        return H(P(e, "P"), R(e, "S"), P(e, "Q")) == P(e, "P").subset_of(P(e, "wpQ"));
      },
      wp_q);

  // Readings that are expected to fail on some binding.
  const auto D = LawKind::Diagnostic;
  law("thm3.6d-printed", D, "{P}S{Q} & {!P}S{Q} <=> forall x exists y S(x,y) & forall x,z(S(x,z) => Q(x))",
      preds_and_s({"P", "Q"}),
      "(" + tcf("P(#)", "S", "Q(#)") + " & " + tcf("!P(#)", "S", "Q(#)") +
          ") <-> ((forall x. exists y. S(x,y)) & (forall x. forall z. S(x,z) -> Q(x)))",
      [](const Env& e) {
        const auto& s = R(e, "S");
        bool total = true;
        for (std::size_t x = 0; x < s.size(); ++x) total = total && s.has_successor(x);
        bool from_q = true;
        for (auto [x, z] : s.pairs()) from_q = from_q && P(e, "Q").test(x);
        return (H(P(e, "P"), s, P(e, "Q")) && H(~P(e, "P"), s, P(e, "Q"))) == (total && from_q);
      });
  law("thm3.6e-converse", D, "({!P}S{Q} => !{P}S{Q}) => exists x,z(S(x,z) & !Q(z))",
      preds_and_s({"P", "Q"}),
      "(" + tcf("!P(#)", "S", "Q(#)") + " -> !" + tcf("P(#)", "S", "Q(#)") +
          ") -> (exists x. exists z. S(x,z) & !Q(z))",
      [](const Env& e) {
        const auto& s = R(e, "S");
        bool escape = false;
        for (auto [x, z] : s.pairs()) escape = escape || !P(e, "Q").test(z);
        return implies(implies(H(~P(e, "P"), s, P(e, "Q")), !H(P(e, "P"), s, P(e, "Q"))), escape);
      });

  const auto N = LawKind::NegativeControl;
  law("negative-control-1", N, "{P}S{Q} | {R}S{W} => {P | R}S{Q | W}", preds_and_s({"P", "Q", "R", "W"}),
      "(" + tcf("P(#)", "S", "Q(#)") + " | " + tcf("R(#)", "S", "W(#)") + ") -> " +
          tcf("P(#) | R(#)", "S", "Q(#) | W(#)"),
      [](const Env& e) {
        const auto& s = R(e, "S");
        return implies(H(P(e, "P"), s, P(e, "Q")) || H(P(e, "R"), s, P(e, "W")),
                       H(P(e, "P") | P(e, "R"), s, P(e, "Q") | P(e, "W")));
      });
  law("negative-control-2", N, "wp(S,Q | R) => wp(S,Q) | wp(S,R)", preds_and_s({"Q", "R"}),
      all("wpQorR(#) -> (wpQ(#) | wpR(#))"),
      [](const Env& e) { return P(e, "wpQorR").subset_of(P(e, "wpQ") | P(e, "wpR")); }, wp_qr);
  law("negative-control-3", N, "partial {P}S{phi} <=> forall x !P(x)", preds_and_s({"P"}),
      pcf("P(#)", "S", "phi(#)") + " <-> " + all("!P(#)"),
      [](const Env& e) {
        const auto& s = R(e, "S");
        return check_partial(P(e, "P"), s, PredSet::none(s.size())).holds == P(e, "P").empty();
      });
  return v;
}

struct SchemaText {
  const char* id;
  LawKind kind;
  const char* text;
};

// Metavariables in braces; each stands for an arbitrary formula.
constexpr SchemaText kSchemas[] = {
    {"t1", LawKind::Theorem, "(forall x. forall y. {F}) <-> (forall y. forall x. {F})"},
    {"t2", LawKind::Theorem, "(exists x. forall y. {F}) -> (forall y. exists x. {F})"},
    {"t3", LawKind::Theorem, "(forall x. {F}) <-> {F}"},
    {"t4", LawKind::Theorem, "(forall x. {F} & {G}) <-> ((forall x. {F}) & (forall x. {G}))"},
    {"t5", LawKind::Theorem, "((forall x. {F}) | (forall x. {G})) -> (forall x. {F} | {G})"},
    {"t6", LawKind::Theorem, "!(forall x. {F}) <-> (exists x. !{F})"},
    {"t7", LawKind::Theorem, "(forall x. {F}) <-> (forall x. {F} <-> tau(x))"},
    {"t8", LawKind::Theorem, "(forall x. tau(x) -> {F}) <-> (forall x. {F})"},
    {"t9", LawKind::Theorem, "(forall x. !{F}) <-> (forall x. {F} <-> phi(x))"},
    {"t10", LawKind::Theorem, "forall x. {F} <-> {F} & {F}"},
    {"t11", LawKind::Theorem, "forall x. {F} -> {F} | {G}"},
    {"t12", LawKind::Theorem, "(forall x. !{F} | !{G}) <-> (forall x. !({F} & {G}))"},
    {"t13", LawKind::Theorem, "(forall x. !{F} & !{G}) <-> (forall x. !({F} | {G}))"},
    {"t14", LawKind::Theorem, "(forall x. {F} -> {G}) -> ((forall x. {F}) -> (forall x. {G}))"},
    {"t15", LawKind::Theorem, "(forall x. {F} -> {G}) <-> (forall x. !{F} | {G})"},
    {"t16", LawKind::Theorem, "(forall x. ({F} -> {H}) & ({H} -> {G})) -> (forall x. {F} -> {G})"},
    {"t17", LawKind::Theorem,
     "(forall x. ({F} -> {G}) & ({H} -> {K})) -> (forall x. ({F} | {H}) -> ({G} | {K}))"},
    {"t18", LawKind::Theorem,
     "(forall x. ({F} -> {G}) & ({H} -> {K})) -> (forall x. ({F} & {H}) -> ({G} & {K}))"},
    {"t19", LawKind::Theorem, "(forall x. ({F} -> {G}) & ({F} -> {H})) <-> (forall x. {F} -> {G} & {H})"},
    {"t20", LawKind::Theorem, "(forall x. ({F} -> {G}) | ({F} -> {H})) <-> (forall x. {F} -> {G} | {H})"},
    {"t21", LawKind::Theorem, "(forall x. ({F} -> {H}) & ({G} -> {H})) <-> (forall x. {F} | {G} -> {H})"},
    {"t22", LawKind::Theorem,
     "(forall x. ({F} -> {G}) | ({H} -> {K})) -> (forall x. ({F} & {H}) -> ({G} | {K}))"},
    {"t11-printed", LawKind::Diagnostic, "forall x. {F} <-> {F} | {G}"},
    {"t20-printed", LawKind::Diagnostic,
     "(forall x. ({F} -> {G}) & ({F} -> {H})) <-> (forall x. {F} -> {G} | {H})"},
};

std::string substitute(std::string_view text, const std::function<std::string(char)>& slot) {
  std::string out;
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text[k] == '{' && k + 2 < text.size() && text[k + 2] == '}') {
      out += "(" + slot(text[k + 1]) + ")";
      k += 2;
    } else {
      out += text[k];
    }
  }
  return out;
}

LawDef make_schema(const SchemaText& s) {
  LawDef d;
  d.info.id = s.id;
  d.info.kind = s.kind;
  d.info.schema = true;
  d.schema_text = s.text;
  d.slots_avoid_x = std::string_view(s.id) == "t3";
  const std::string_view t(s.text);
  for (std::size_t k = 0; k + 2 < t.size(); ++k) {
    if (t[k] == '{' && t[k + 2] == '}') {
      std::string name(1, t[k + 1]);
      if (std::find(d.slots.begin(), d.slots.end(), name) == d.slots.end()) d.slots.push_back(name);
    }
  }
  std::sort(d.slots.begin(), d.slots.end());
  for (const auto& name : d.slots) d.info.symbols.push_back({name, 2});
  const char* args = d.slots_avoid_x ? "(y,w)" : "(x,y)";
  d.info.statement = substitute(t, [](char c) { return std::string(1, c); });
  d.formula = to_string(universal_closure(
      parse_sformula(substitute(t, [&](char c) { return std::string(1, c) + args; }))));
  return d;
}

const std::vector<LawDef>& registry() {
  static const std::vector<LawDef> laws = [] {
    std::vector<LawDef> out = make_triple_laws();
    std::vector<LawDef> schemas;
    for (const auto& s : kSchemas) schemas.push_back(make_schema(s));
    // Theorem schemas go after the theorem triple laws, ahead of diagnostics.
    auto first_non_theorem = std::find_if(out.begin(), out.end(), [](const LawDef& d) {
      return d.info.kind != LawKind::Theorem;
    });
    std::vector<LawDef> merged(std::make_move_iterator(out.begin()), std::make_move_iterator(first_non_theorem));
    for (auto& s : schemas) {
      if (s.info.kind == LawKind::Theorem) merged.push_back(s);
    }
    for (auto& s : schemas) {
      if (s.info.kind != LawKind::Theorem) merged.push_back(s);
    }
    for (auto it = first_non_theorem; it != out.end(); ++it) merged.push_back(std::move(*it));
    return merged;
  }();
  return laws;
}

const LawDef& find_law(std::string_view id) {
  std::string lower(id);
  for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (const auto& d : registry()) {
    if (d.info.id == lower) return d;
  }
  throw Error(ErrorKind::UnknownLaw, "no law named '" + std::string(id) + "'");
}

// ---- binding generation ----

std::size_t symbol_bits(const LawSymbol& s, std::size_t n) { return s.arity == 1 ? n : n * n; }

Binding binding_from_bits(const LawSymbol& s, std::size_t n, std::uint64_t bits) {
  if (s.arity == 1) {
    PredSet p(n);
    for (std::size_t k = 0; k < n; ++k) p.set(k, (bits >> k) & 1U);
    return p;
  }
  RelationBuilder b(n);
  std::vector<StateIndex> row;
  for (std::size_t x = 0; x < n; ++x) {
    row.clear();
    for (std::size_t y = 0; y < n; ++y) {
      if ((bits >> (x * n + y)) & 1U) row.push_back(static_cast<StateIndex>(y));
    }
    b.add_sorted_row(row);
  }
  return std::move(b).finish();
}

Binding boundary_binding(const LawSymbol& s, std::size_t n, std::size_t choice) {
  if (s.arity == 1) return choice == 0 ? PredSet::none(n) : PredSet::full(n);
  switch (choice) {
    case 0: return Relation(n);
    case 1: return Relation::full(n);
    default: return Relation::identity(n);
  }
}

// Random compound formulas over a fixed pool of atoms, for schema slots.
const std::vector<LawSymbol> kShapePool = {{"p1", 1}, {"p2", 1}, {"r1", 2}, {"r2", 2}};

std::string random_shape(std::mt19937_64& g, int depth, const char* const vars[2]) {
  if (depth == 0 || g() % 3 == 0) {
    const auto& atom = kShapePool[g() % kShapePool.size()];
    std::string out = atom.name + "(" + vars[g() % 2];
    if (atom.arity == 2) out += std::string(",") + vars[g() % 2];
    return out + ")";
  }
  static const char* const ops[] = {" & ", " | ", " -> ", " <-> "};
  const auto op = g() % 5;
  if (op == 4) return "!(" + random_shape(g, depth - 1, vars) + ")";
  return "(" + random_shape(g, depth - 1, vars) + ")" + ops[op] + "(" + random_shape(g, depth - 1, vars) +
         ")";
}

class Runner {
 public:
  Runner(const LawDef& law, const LawOptions& opts) : law_(law), opts_(opts), compiled_(parse_sformula(law.formula)) {
    result_.law = law.info.id;
  }

  LawResult run() {
    for (std::size_t n : opts_.sizes) run_size(n);
    std::sort(result_.violations.begin(), result_.violations.end(), [](const auto& a, const auto& b) {
      return std::tie(a.seed, a.space_size) < std::tie(b.seed, b.space_size);
    });
    return std::move(result_);
  }

 private:
  void run_size(std::size_t n) {
    std::size_t total_bits = 0;
    for (const auto& s : law_.info.symbols) total_bits += symbol_bits(s, n);
    const std::size_t cap = opts_.exhaustive_only ? 20 : 16;
    const bool exhaustive = total_bits <= cap;
    if (opts_.exhaustive_only && !exhaustive) {
      throw Error(ErrorKind::UsageError, "law '" + law_.info.id + "' has 2^" + std::to_string(total_bits) +
                                             " bindings at size " + std::to_string(n) +
                                             ", too many to enumerate");
    }
    if (exhaustive) {
      const std::uint64_t count = std::uint64_t{1} << total_bits;
      for (std::uint64_t c = 0; c < count; ++c) {
        Env env;
        std::size_t offset = 0;
        for (const auto& s : law_.info.symbols) {
          const std::size_t b = symbol_bits(s, n);
          const std::uint64_t mask = b >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << b) - 1;
          env.emplace(s.name, binding_from_bits(s, n, (c >> offset) & mask));
          offset += b;
        }
        evaluate(n, c, std::move(env));
      }
    }
    if (opts_.exhaustive_only) return;

    // Boundary bindings: the full product of per-symbol choices.
    std::vector<std::size_t> radix;
    for (const auto& s : law_.info.symbols) radix.push_back(s.arity == 1 ? 2 : 3);
    std::vector<std::size_t> digit(radix.size(), 0);
    for (std::uint64_t c = 0;; ++c) {
      Env env;
      for (std::size_t k = 0; k < radix.size(); ++k) {
        env.emplace(law_.info.symbols[k].name, boundary_binding(law_.info.symbols[k], n, digit[k]));
      }
      evaluate(n, c, std::move(env));
      std::size_t k = 0;
      while (k < digit.size() && ++digit[k] == radix[k]) digit[k++] = 0;
      if (k == digit.size()) break;
    }

    const std::uint64_t law_seed = splitmix64(opts_.seed ^ fnv1a64(law_.info.id));
    const std::uint64_t size_seed = splitmix64(law_seed ^ n);
    for (std::size_t t = 0; t < opts_.trials; ++t) {
      const std::uint64_t seed = splitmix64(size_seed ^ t);
      // Schemas spend every other trial on random compound slot shapes.
      if (law_.info.schema && t % 2 == 1) {
        shape_trial(n, seed);
        continue;
      }
      Env env;
      for (std::size_t k = 0; k < law_.info.symbols.size(); ++k) {
        const auto& s = law_.info.symbols[k];
        const std::uint64_t sym_seed = splitmix64(seed ^ (k + 1));
        if (s.arity == 1) {
          env.emplace(s.name, random_predset(n, sym_seed));
        } else {
          env.emplace(s.name, random_relation(n, sym_seed));
        }
      }
      evaluate(n, seed, std::move(env));
    }
  }

  void shape_trial(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 g(seed);
    static const char* const xy[2] = {"x", "y"};
    static const char* const yw[2] = {"y", "w"};
    const char* const* vars = law_.slots_avoid_x ? yw : xy;
    std::map<char, std::string> shapes;
    for (const auto& s : law_.slots) shapes[s[0]] = random_shape(g, 2, vars);
    const std::string text = to_string(
        universal_closure(parse_sformula(substitute(law_.schema_text, [&](char c) { return shapes.at(c); }))));
    Env env;
    for (std::size_t k = 0; k < kShapePool.size(); ++k) {
      const auto& s = kShapePool[k];
      const std::uint64_t sym_seed = splitmix64(seed ^ (k + 1));
      if (s.arity == 1) {
        env.emplace(s.name, random_predset(n, sym_seed));
      } else {
        env.emplace(s.name, random_relation(n, sym_seed));
      }
    }
    ++result_.trials;
    if (!CompiledFormula(parse_sformula(text)).eval(env, n)) record(n, seed, std::move(env), text);
  }

  void evaluate(std::size_t n, std::uint64_t seed, Env env) {
    if (law_.derive) law_.derive(env);
    ++result_.trials;
    bool ok = compiled_.eval(env, n);
    if (ok && law_.direct) ok = law_.direct(env);
    if (!ok) record(n, seed, std::move(env), law_.formula);
  }

  void record(std::size_t n, std::uint64_t seed, Env env, const std::string& formula) {
    ++result_.violation_count;
    if (result_.violations.size() < opts_.max_recorded) {
      result_.violations.push_back(LawInstance{law_.info.id, n, std::move(env), seed, formula});
    }
  }

  const LawDef& law_;
  const LawOptions& opts_;
  CompiledFormula compiled_;
  LawResult result_;
};

}  // namespace

const std::vector<LawInfo>& list_laws() {
  static const std::vector<LawInfo> infos = [] {
    std::vector<LawInfo> out;
    for (const auto& d : registry()) out.push_back(d.info);
    return out;
  }();
  return infos;
}

LawResult check_law(std::string_view id, const LawOptions& options) {
  return Runner(find_law(id), options).run();
}

LawResult check_law(std::string_view id, std::size_t trials, const std::vector<std::size_t>& sizes) {
  LawOptions o;
  o.trials = trials;
  o.sizes = sizes;
  return check_law(id, o);
}

LawResult check_t_schema(std::string_view id, const LawOptions& options) {
  const LawDef& d = find_law(id);
  if (!d.info.schema) throw Error(ErrorKind::UnknownLaw, "'" + std::string(id) + "' is not a first-order schema");
  return Runner(d, options).run();
}

}  // namespace scalc
