#pragma once

#include <string>
#include <vector>

#include "scalc/expr.hpp"
#include "scalc/hoare.hpp"
#include "scalc/state_space.hpp"
#include "scalc/syntax.hpp"

namespace scalc {

/// SMT-LIB 2 verification condition. The single assertion is the negated
/// correctness formula, so `unsat` means the triple holds.
struct VCDocument {
  std::string logic;
  std::vector<std::string> comments;
  std::vector<std::string> declarations;
  std::string assertion;

  std::string text() const;
};

struct ExportOptions {
  Mode mode = Mode::Total;
  std::size_t unroll = 0;
  // With no unrolling, keep loops as their zero-iteration exit only
  // instead of rejecting them.
  bool allow_partial_unroll = false;
};

/// Encodes the program in SSA form over unbounded integers. Loops are
/// unrolled `unroll` times as `if B { body; W } else ;`, ending in a step
/// that blocks where B still holds. `universe` fixes the initial variables
/// and which of them are boolean. Throws UnsupportedForExport when the
/// program has a loop, `unroll` is 0 and partial unrolling is off.
VCDocument export_vc(const Stmt& program, const PredExpr& pre, const PredExpr& post,
                     const VarUniverse& universe, const ExportOptions& options);

}  // namespace scalc
