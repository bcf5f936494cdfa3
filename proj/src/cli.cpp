#include "scalc/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>

#include "scalc/error.hpp"
#include "scalc/export.hpp"
#include "scalc/hoare.hpp"
#include "scalc/laws.hpp"
#include "scalc/semantics.hpp"
#include "scalc/spec_file.hpp"

namespace scalc {

namespace {

struct Globals {
  std::string mode;
  std::uint64_t seed = 0;
  std::size_t trials = 200;
  std::uint64_t max_states = 0;
  std::size_t unroll = 0;
  bool json = false;
  bool unroll_given = false;
};

struct Loaded {
  Problem problem;
  StateSpace space;
};

ProblemOverrides overrides_from(const Globals& g) {
  ProblemOverrides o;
  if (!g.mode.empty()) o.mode = parse_mode(g.mode);
  if (g.max_states != 0) o.max_states = g.max_states;
  if (g.unroll_given) o.unroll = g.unroll;
  return o;
}

Problem load_problem(const std::string& path, const Globals& g) {
  return build_problem(load_spec_file(path), overrides_from(g));
}

Loaded load_space(const std::string& path, const Globals& g) {
  Problem pb = load_problem(path, g);
  StateSpace space = build_space(pb.universe, pb.max_states);
  return Loaded{std::move(pb), std::move(space)};
}

nlohmann::ordered_json state_json(const StateSpace& space, std::size_t k) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (std::size_t v = 0; v < space.universe().size(); ++v) {
    out[space.universe()[v].name] = space.value_at(k, v);
  }
  return out;
}

int cmd_verify(const std::string& path, const Globals& g, bool timing, std::ostream& out) {
  const Loaded l = load_space(path, g);
  const Report r = verify(l.problem.program, l.problem.pre, l.problem.post, l.problem.mode, l.space);
  out << report_to_json(r, l.space, timing) << "\n";
  return r.verdict.holds ? 0 : 1;
}

int cmd_wp(const std::string& path, const Globals& g, std::size_t limit, std::ostream& out) {
  const Loaded l = load_space(path, g);
  const PredSet w = wp(denote(l.problem.program, l.space), pred_to_set(l.problem.post, l.space));
  nlohmann::ordered_json j;
  j["post"] = to_string(l.problem.post);
  j["space_size"] = l.space.size();
  j["count"] = w.count();
  nlohmann::ordered_json states = nlohmann::ordered_json::array();
  std::size_t shown = 0;
  for (std::size_t k = 0; k < w.size() && shown < limit; ++k) {
    if (!w.test(k)) continue;
    states.push_back(state_json(l.space, k));
    ++shown;
  }
  j["states"] = std::move(states);
  j["truncated"] = shown < w.count();
  out << j.dump() << "\n";
  return 0;
}

int cmd_dump(const std::string& path, const Globals& g, std::ostream& out) {
  const Loaded l = load_space(path, g);
  const Relation rel = denote(l.problem.program, l.space);
  if (!g.json) {
    for (const auto& [x, y] : rel.pairs()) out << "(" << x << "," << y << ")\n";
    return 0;
  }
  nlohmann::ordered_json j;
  nlohmann::ordered_json vars = nlohmann::ordered_json::array();
  for (const auto& v : l.space.universe().vars()) vars.push_back(v.name);
  j["vars"] = std::move(vars);
  j["size"] = rel.size();
  j["pair_count"] = rel.pair_count();
  nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
  for (const auto& [x, y] : rel.pairs()) pairs.push_back({x, y});
  j["pairs"] = std::move(pairs);
  out << j.dump() << "\n";
  return 0;
}

int cmd_export(const std::string& path, const Globals& g, bool allow_partial, const std::string& output,
               std::ostream& out) {
  const Problem pb = load_problem(path, g);
  ExportOptions o;
  o.mode = pb.mode;
  o.unroll = pb.unroll;
  o.allow_partial_unroll = allow_partial;
  const std::string text = export_vc(pb.program, pb.pre, pb.post, pb.universe, o).text();
  if (output.empty() || output == "-") {
    out << text;
    return 0;
  }
  std::ofstream f(output, std::ios::binary);
  if (!f) throw Error(ErrorKind::UsageError, "cannot write '" + output + "'");
  f << text;
  return 0;
}

int cmd_laws(const std::vector<std::string>& ids, bool all, bool exhaustive, bool list,
             const std::vector<std::size_t>& sizes, const Globals& g, std::ostream& out, std::ostream& err) {
  if (list) {
    for (const auto& l : list_laws()) {
      nlohmann::ordered_json j;
      j["law"] = l.id;
      j["kind"] = std::string(to_string(l.kind));
      j["statement"] = l.statement;
      out << j.dump() << "\n";
    }
    return 0;
  }
  std::vector<std::string> selected = ids;
  if (selected.empty()) {
    for (const auto& l : list_laws()) {
      if (all || l.kind == LawKind::Theorem) selected.push_back(l.id);
    }
  }
  LawOptions o;
  o.trials = g.trials;
  o.seed = g.seed;
  o.exhaustive_only = exhaustive;
  if (!sizes.empty()) o.sizes = sizes;
  // Validate every id before running anything.
  for (const auto& id : selected) {
    bool known = false;
    for (const auto& l : list_laws()) known = known || l.id == id;
    if (!known) throw Error(ErrorKind::UnknownLaw, "no law named '" + id + "'");
  }
  bool any = false;
  for (const auto& id : selected) {
    const LawResult r = check_law(id, o);
    nlohmann::ordered_json j;
    j["law"] = r.law;
    j["trials"] = r.trials;
    j["violations"] = r.violation_count;
    out << j.dump() << "\n";
    if (r.violation_count > 0) {
      any = true;
      const auto& v = r.violations.front();
      err << r.law << ": " << r.violation_count << " violation(s); first at size " << v.space_size
          << ", seed " << v.seed << "\n";
    }
  }
  return any ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-model verifier for correctness formulas of small imperative programs", "scalc"};
  app.require_subcommand(1);

  Globals g;
  app.add_option("--mode", g.mode, "total or partial")->check(CLI::IsMember({"total", "partial"}));
  app.add_option("--seed", g.seed, "seed for randomized law trials");
  app.add_option("--trials", g.trials, "random trials per space size");
  app.add_option("--max-states", g.max_states, "state space limit (also SCALC_MAX_STATES)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", g.json, "JSON output for dump-relation; other commands always emit JSON, export-smt emits SMT-LIB");
  auto* unroll_opt = app.add_option("--unroll", g.unroll, "loop unrolling bound for export-smt");

  std::string spec;
  bool timing = false;
  auto* verify_cmd = app.add_subcommand("verify", "check the triple of a spec file")->fallthrough();
  verify_cmd->add_option("spec", spec, "spec file")->required();
  verify_cmd->add_flag("--timing", timing, "include wall time in the report");

  std::size_t limit = 16;
  auto* wp_cmd = app.add_subcommand("wp", "weakest precondition of the program and postcondition")->fallthrough();
  wp_cmd->add_option("spec", spec, "spec file")->required();
  wp_cmd->add_option("--limit", limit, "number of states listed");

  std::vector<std::string> law_ids;
  std::vector<std::size_t> sizes;
  bool all = false, exhaustive = false, list = false;
  auto* laws_cmd = app.add_subcommand("laws", "check the registered laws on finite models")->fallthrough();
  laws_cmd->add_option("--law", law_ids, "law id, repeatable");
  laws_cmd->add_option("--size", sizes, "space size, repeatable")->check(CLI::PositiveNumber);
  laws_cmd->add_flag("--all", all, "include diagnostic readings and negative controls");
  laws_cmd->add_flag("--exhaustive", exhaustive, "enumerate every binding and nothing else");
  laws_cmd->add_flag("--list", list, "list registered laws");

  bool allow_partial = false;
  std::string output;
  auto* export_cmd = app.add_subcommand("export-smt", "write an SMT-LIB verification condition")->fallthrough();
  export_cmd->add_option("spec", spec, "spec file")->required();
  export_cmd->add_option("-o,--output", output, "output file, stdout by default");
  export_cmd->add_flag("--allow-partial-unroll", allow_partial, "keep only the exit of loops when --unroll is 0");

  auto* dump_cmd = app.add_subcommand("dump-relation", "print the denoted relation")->fallthrough();
  dump_cmd->add_option("spec", spec, "spec file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  g.unroll_given = unroll_opt->count() > 0;

  try {
    if (verify_cmd->parsed()) return cmd_verify(spec, g, timing, out);
    if (wp_cmd->parsed()) return cmd_wp(spec, g, limit, out);
    if (laws_cmd->parsed()) return cmd_laws(law_ids, all, exhaustive, list, sizes, g, out, err);
    if (export_cmd->parsed()) return cmd_export(spec, g, allow_partial, output, out);
    if (dump_cmd->parsed()) return cmd_dump(spec, g, out);
  } catch (const Error& e) {
    err << "scalc: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "scalc: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace scalc
