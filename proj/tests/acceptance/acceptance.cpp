// Runs each acceptance criterion and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "scalc/cli.hpp"
#include "scalc/hoare.hpp"
#include "scalc/laws.hpp"
#include "scalc/semantics.hpp"
#include "scalc/spec_file.hpp"

using namespace scalc;

namespace {

using Clock = std::chrono::steady_clock;

std::string spec(const char* name) { return std::string(SCALC_SPECS_DIR) + "/" + name; }

struct Outcome {
  bool pass = true;
  std::string detail;
};

Report verify_spec(const std::string& path, std::optional<Mode> mode = std::nullopt) {
  ProblemOverrides o;
  o.mode = mode;
  const Problem p = build_problem(load_spec_file(path), o);
  return verify(p.program, p.pre, p.post, p.mode, build_space(p.universe, p.max_states));
}

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

Outcome golden(const char* file, double limit) {
  const auto t = Clock::now();
  const Report r = verify_spec(spec(file));
  const double s = seconds_since(t);
  std::ostringstream d;
  d << "holds=" << r.verdict.holds << " states=" << r.space_size << " time=" << s << "s";
  return {r.verdict.holds && s < limit, d.str()};
}

Outcome mutation() {
  std::ostringstream d;
  bool pass = true;
  {
    const Problem p = build_problem(load_spec_file(spec("ex41_bad.spec")));
    const StateSpace space = build_space(p.universe);
    const Report r = verify(p.program, p.pre, p.post, p.mode, space);
    const auto& c = r.verdict.counterexample;
    const bool ok = !r.verdict.holds && c && c->kind == Counterexample::Kind::BadSuccessor && c->witness_final &&
                    space.value_at(*c->witness_final, space.universe().index_of("a")) == 10;
    d << "post a==100: " << (ok ? "BadSuccessor to a=10" : "unexpected verdict");
    pass = pass && ok;
  }
  {
    const Report r = verify_spec(spec("ex42_weak.spec"));
    const bool ok = !r.verdict.holds && r.verdict.counterexample.has_value();
    d << "; pre true: " << (ok ? std::string(to_string(r.verdict.counterexample->kind)) : "no counterexample");
    pass = pass && ok;
  }
  return {pass, d.str()};
}

Outcome law_suite() {
  const auto t = Clock::now();
  LawOptions o;
  o.sizes = {1, 2, 3, 4};
  o.trials = 200;
  std::size_t theorems = 0, controls = 0, trials = 0;
  std::string failures;
  for (const auto& l : list_laws()) {
    if (l.kind == LawKind::Diagnostic) continue;
    const LawResult r = check_law(l.id, o);
    trials += r.trials;
    if (l.kind == LawKind::Theorem) {
      ++theorems;
      if (r.violation_count != 0) failures += " " + l.id;
      // At size 2 the binding space must be enumerated in full.
      LawOptions ex;
      ex.sizes = {2};
      ex.exhaustive_only = true;
      const LawResult e = check_law(l.id, ex);
      trials += e.trials;
      if (e.violation_count != 0) failures += " " + l.id + "@2";
    } else {
      ++controls;
      if (r.violation_count == 0) failures += " " + l.id + "(undetected)";
    }
  }
  const double s = seconds_since(t);
  std::ostringstream d;
  d << theorems << " laws, " << controls << " negative controls, " << trials << " trials, " << s << "s";
  if (!failures.empty()) d << ", failing:" << failures;
  return {failures.empty() && s < 60.0, d.str()};
}

Outcome wp_oracle() {
  std::size_t failures = 0;
  for (std::uint64_t k = 0; k < 500; ++k) {
    const std::uint64_t seed = splitmix64(0xacce97 + k);
    const std::size_t n = 1 + seed % 5;
    const Relation s = random_relation(n, splitmix64(seed ^ 1));
    const PredSet q = random_predset(n, splitmix64(seed ^ 2));
    const PredSet w = wp(s, q);
    if (!check_total(w, s, q).holds) ++failures;
    for (std::uint64_t j = 0; j < 50; ++j) {
      const PredSet p = random_predset(n, splitmix64(seed ^ (100 + j)));
      const bool holds = check_total(p, s, q).holds;
      if (holds && !p.subset_of(w)) ++failures;
      if (holds != p.subset_of(w)) ++failures;
    }
  }
  return {failures == 0, "500 instances x 50 preconditions, failures=" + std::to_string(failures)};
}

Outcome while_fixpoint() {
  std::size_t failures = 0;
  for (std::uint64_t k = 0; k < 200; ++k) {
    const std::uint64_t seed = splitmix64(0xf1c5 + k);
    const std::size_t n = 1 + seed % 16;
    const PredSet b = random_predset(n, splitmix64(seed ^ 1));
    // Sparse bodies give long chains; dense ones give wide fan-out.
    Relation body = random_relation(n, splitmix64(seed ^ 2));
    if (k % 2 == 0) {
      const Relation mask = random_relation(n, splitmix64(seed ^ 3));
      std::vector<std::pair<std::size_t, std::size_t>> sparse;
      for (auto [x, y] : body.pairs()) {
        if (mask.contains(x, y) && random_relation(n, splitmix64(seed ^ 4)).contains(x, y)) sparse.emplace_back(x, y);
      }
      body = Relation::from_pairs(n, sparse);
    }
    const Relation w = denote_while(b, body);
    std::vector<std::pair<std::size_t, std::size_t>> exits;
    for (std::size_t x = 0; x < n; ++x) {
      if (!b.test(x)) exits.emplace_back(x, x);
    }
    const Relation unrolled = denote_ite(b, denote_seq(body, w), Relation::from_pairs(n, exits));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (w.contains(x, y) != unrolled.contains(x, y)) ++failures;
      }
    }
  }
  return {failures == 0, "200 trials, |A|<=16, pair mismatches=" + std::to_string(failures)};
}

Outcome divergence() {
  const Report total = verify_spec(spec("diverge.spec"), Mode::Total);
  const Report partial = verify_spec(spec("diverge.spec"), Mode::Partial);
  const bool ok = !total.verdict.holds && total.verdict.counterexample &&
                  total.verdict.counterexample->kind == Counterexample::Kind::NoSuccessor && partial.verdict.holds;
  return {ok, std::string("total: ") + (total.verdict.holds ? "holds" : "fails") +
                  (total.verdict.counterexample ? std::string(" ") + std::string(to_string(total.verdict.counterexample->kind)) : "") +
                  ", partial: " + (partial.verdict.holds ? "holds" : "fails")};
}

Outcome determinism() {
  const std::vector<std::vector<std::string>> commands = {
      {"verify", spec("ex41.spec")},
      {"verify", spec("ex41_bad.spec")},
      {"verify", spec("ex42_weak.spec")},
      {"verify", "--mode", "partial", spec("diverge.spec")},
      {"wp", spec("ex42.spec")},
      {"laws", "--law", "thm3.4c", "--law", "t22", "--law", "negative-control-1", "--seed", "17"},
      {"export-smt", spec("ex42.spec"), "--unroll", "3"},
      {"dump-relation", spec("ex42.spec")},
  };
  std::size_t differing = 0;
  for (const auto& c : commands) {
    std::ostringstream a, b, ea, eb;
    const int ca = run_cli(c, a, ea), cb = run_cli(c, b, eb);
    if (a.str() != b.str() || ca != cb || a.str().empty()) ++differing;
  }
  return {differing == 0, std::to_string(commands.size()) + " commands run twice, differing=" + std::to_string(differing)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 first example totally correct under 1s", [] { return golden("ex41.spec", 1.0); }},
      {"2 factorial example totally correct under 5s", [] { return golden("ex42.spec", 5.0); }},
      {"3 mutations are detected", mutation},
      {"4 law suite", law_suite},
      {"5 wp oracle equivalence", wp_oracle},
      {"6 while equals its unrolling", while_fixpoint},
      {"7 non-termination splits total and partial", divergence},
      {"8 byte-identical output", determinism},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << name << "  (" << o.detail << ")\n";
    failed += o.pass ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
