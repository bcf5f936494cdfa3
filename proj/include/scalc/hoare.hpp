#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "scalc/expr.hpp"
#include "scalc/pred_set.hpp"
#include "scalc/relation.hpp"
#include "scalc/state_space.hpp"
#include "scalc/syntax.hpp"

namespace scalc {

enum class Mode { Total, Partial };

std::string_view to_string(Mode mode);
/// Accepts "total" or "partial"; throws UsageError otherwise.
Mode parse_mode(std::string_view text);

struct Counterexample {
  enum class Kind { NoSuccessor, BadSuccessor, PartialViolation };

  Kind kind = Kind::NoSuccessor;
  std::size_t initial = 0;
  // Present for BadSuccessor and PartialViolation.
  std::optional<std::size_t> witness_final;
};

std::string_view to_string(Counterexample::Kind kind);

struct CheckStats {
  std::size_t states_checked = 0;
  std::size_t pairs_checked = 0;
  double wall_ms = 0.0;
};

struct Verdict {
  bool holds = true;
  std::optional<Counterexample> counterexample;
  CheckStats stats;
};

/// Decides ∀x[P(x) ⇒ (∃y S(x,y) ∧ ∀z(S(x,z) ⇒ Q(z)))]. Initial states are
/// scanned in index order and the first failing one is reported; among its
/// bad successors the smallest index is the witness.
Verdict check_total(const PredSet& pre, const Relation& rel, const PredSet& post);

/// Decides ∀x[(P(x) ∧ ∃y S(x,y)) ⇒ ∀z(S(x,z) ⇒ Q(z))], same reporting order.
Verdict check_partial(const PredSet& pre, const Relation& rel, const PredSet& post);

Verdict check(Mode mode, const PredSet& pre, const Relation& rel, const PredSet& post);

/// Weakest precondition as a state set: {x | ∃y S(x,y) ∧ ∀z(S(x,z) ⇒ Q(z))}.
PredSet wp(const Relation& rel, const PredSet& post);

struct Report {
  Mode mode = Mode::Total;
  Verdict verdict;
  std::size_t wp_size = 0;
  std::size_t space_size = 0;
  std::string program;
  std::string pre;
  std::string post;
};

/// Denotes the program over `space`, extends P and Q, and runs the check
/// for `mode`.
Report verify(const Stmt& program, const PredExpr& pre, const PredExpr& post, Mode mode,
              const StateSpace& space);

/// JSON rendering; `timing` adds the wall-clock time, which makes the
/// output run-dependent.
std::string report_to_json(const Report& report, const StateSpace& space, bool timing = false);

}  // namespace scalc
