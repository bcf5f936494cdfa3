#include "scalc/hoare.hpp"

#include <chrono>
#include <json.hpp>

#include "scalc/error.hpp"
#include "scalc/semantics.hpp"

namespace scalc {

std::string_view to_string(Mode mode) { return mode == Mode::Total ? "total" : "partial"; }

Mode parse_mode(std::string_view text) {
  if (text == "total") return Mode::Total;
  if (text == "partial") return Mode::Partial;
  throw Error(ErrorKind::UsageError, "mode must be 'total' or 'partial', got '" + std::string(text) + "'");
}

std::string_view to_string(Counterexample::Kind kind) {
  switch (kind) {
    case Counterexample::Kind::NoSuccessor: return "NoSuccessor";
    case Counterexample::Kind::BadSuccessor: return "BadSuccessor";
    case Counterexample::Kind::PartialViolation: return "PartialViolation";
  }
  return "Unknown";
}

namespace {

void require_same(const PredSet& pre, const Relation& rel, const PredSet& post) {
  if (pre.size() != rel.size() || post.size() != rel.size()) {
    throw Error(ErrorKind::SpaceMismatch,
                "precondition, relation and postcondition range over spaces of size " +
                    std::to_string(pre.size()) + ", " + std::to_string(rel.size()) + ", " +
                    std::to_string(post.size()));
  }
}

Verdict scan(Mode mode, const PredSet& pre, const Relation& rel, const PredSet& post) {
  require_same(pre, rel, post);
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  for (std::size_t x = 0; x < rel.size() && v.holds; ++x) {
    ++v.stats.states_checked;
    if (!pre.test(x)) continue;
    auto succ = rel.successors(x);
    if (succ.empty()) {
      if (mode == Mode::Total) {
        v.holds = false;
        v.counterexample = Counterexample{Counterexample::Kind::NoSuccessor, x, std::nullopt};
      }
      continue;
    }
    for (auto z : succ) {
      ++v.stats.pairs_checked;
      if (!post.test(z)) {
        v.holds = false;
        v.counterexample = Counterexample{mode == Mode::Total ? Counterexample::Kind::BadSuccessor
                                                              : Counterexample::Kind::PartialViolation,
                                          x, static_cast<std::size_t>(z)};
        break;
      }
    }
  }
  v.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return v;
}

}  // namespace

Verdict check_total(const PredSet& pre, const Relation& rel, const PredSet& post) {
  return scan(Mode::Total, pre, rel, post);
}

Verdict check_partial(const PredSet& pre, const Relation& rel, const PredSet& post) {
  return scan(Mode::Partial, pre, rel, post);
}

Verdict check(Mode mode, const PredSet& pre, const Relation& rel, const PredSet& post) {
  return scan(mode, pre, rel, post);
}

PredSet wp(const Relation& rel, const PredSet& post) {
  if (post.size() != rel.size()) {
    throw Error(ErrorKind::SpaceMismatch, "postcondition and relation range over different spaces");
  }
  PredSet out(rel.size());
  for (std::size_t x = 0; x < rel.size(); ++x) {
    auto succ = rel.successors(x);
    if (succ.empty()) continue;
    bool all = true;
    for (auto z : succ) {
      if (!post.test(z)) {
        all = false;
        break;
      }
    }
    out.set(x, all);
  }
  return out;
}

Report verify(const Stmt& program, const PredExpr& pre, const PredExpr& post, Mode mode,
              const StateSpace& space) {
  const auto start = std::chrono::steady_clock::now();
  const Relation rel = denote(program, space);
  const PredSet p = pred_to_set(pre, space);
  const PredSet q = pred_to_set(post, space);
  Report r;
  r.mode = mode;
  r.verdict = check(mode, p, rel, q);
  r.wp_size = wp(rel, q).count();
  r.space_size = space.size();
  r.program = pretty_print(program);
  r.pre = to_string(pre);
  r.post = to_string(post);
  r.verdict.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

namespace {

nlohmann::ordered_json state_json(const StateSpace& space, std::size_t k) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (std::size_t v = 0; v < space.universe().size(); ++v) {
    out[space.universe()[v].name] = space.value_at(k, v);
  }
  return out;
}

}  // namespace

std::string report_to_json(const Report& report, const StateSpace& space, bool timing) {
  nlohmann::ordered_json j;
  j["mode"] = std::string(to_string(report.mode));
  j["holds"] = report.verdict.holds;
  if (const auto& cex = report.verdict.counterexample) {
    nlohmann::ordered_json c;
    c["kind"] = std::string(to_string(cex->kind));
    c["initial"] = state_json(space, cex->initial);
    c["final"] = cex->witness_final ? state_json(space, *cex->witness_final) : nlohmann::ordered_json();
    j["counterexample"] = c;
  } else {
    j["counterexample"] = nullptr;
  }
  nlohmann::ordered_json stats;
  stats["space_size"] = report.space_size;
  stats["states_checked"] = report.verdict.stats.states_checked;
  stats["pairs_checked"] = report.verdict.stats.pairs_checked;
  stats["wp_size"] = report.wp_size;
  if (timing) stats["wall_ms"] = report.verdict.stats.wall_ms;
  j["stats"] = stats;
  j["input"] = {{"pre", report.pre}, {"post", report.post}, {"program", report.program}};
  return j.dump();
}

}  // namespace scalc
