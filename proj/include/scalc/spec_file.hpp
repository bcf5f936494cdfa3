#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scalc/expr.hpp"
#include "scalc/hoare.hpp"
#include "scalc/state_space.hpp"
#include "scalc/syntax.hpp"

namespace scalc {

struct VarSpec {
  std::string name;
  std::string type;  // "int" or "bool"
  std::optional<std::pair<Value, Value>> bounds;
};

/// Sectioned text file:
///
///   [vars]      one `name: int`, `name: int lo..hi` or `name: bool` per line
///   [program]   program text
///   [pre]       precondition, default `true`
///   [post]      postcondition, default `true`
///   [options]   `key = value`: mode, unroll, max_states, int_range, program_file
///
/// Lines starting with `#` are comments outside [program].
struct SpecFile {
  std::vector<VarSpec> vars;
  std::string program;
  std::string pre = "true";
  std::string post = "true";
  // Number of file lines before each text section, for error positions.
  std::size_t program_line = 0;
  std::size_t pre_line = 0;
  std::size_t post_line = 0;

  std::optional<Mode> mode;
  std::optional<std::size_t> unroll;
  std::optional<std::uint64_t> max_states;
  std::pair<Value, Value> int_range{kDefaultIntMin, kDefaultIntMax};
};

/// `base_dir` resolves a relative program_file option.
SpecFile parse_spec_file(std::string_view text, const std::filesystem::path& base_dir = {});
SpecFile load_spec_file(const std::filesystem::path& path);

struct Problem {
  Stmt program;
  PredExpr pre;
  PredExpr post;
  VarUniverse universe;
  Mode mode = Mode::Total;
  std::size_t unroll = 0;
  std::uint64_t max_states = kDefaultMaxStates;
};

struct ProblemOverrides {
  std::optional<Mode> mode;
  std::optional<std::size_t> unroll;
  std::optional<std::uint64_t> max_states;
};

/// Parses the program and predicates. The universe is the [vars] prelude
/// followed by in-program declarations of other variables; a prelude entry
/// fixes the domain even if the program re-declares the variable.
/// max_states precedence: override, SCALC_MAX_STATES, file option, default.
Problem build_problem(const SpecFile& spec, const ProblemOverrides& overrides = {});

}  // namespace scalc
