#include "scalc/spec_file.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "scalc/error.hpp"

namespace scalc {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw Error(ErrorKind::SpecFileError, message, SourceSpan{0, 0, line, 1});
}

template <typename T>
T parse_number(std::string_view text, std::size_t line, std::string_view what) {
  text = trim(text);
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    fail(line, "invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::pair<Value, Value> parse_range(std::string_view text, std::size_t line) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    fail(line, "expected a range lo..hi, got '" + std::string(text) + "'");
  }
  const Value lo = parse_number<Value>(text.substr(0, dots), line, "range bound");
  const Value hi = parse_number<Value>(text.substr(dots + 2), line, "range bound");
  if (lo > hi) fail(line, "empty range " + std::to_string(lo) + ".." + std::to_string(hi));
  return {lo, hi};
}

VarSpec parse_var(std::string_view text, std::size_t line) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) fail(line, "expected 'name: type', got '" + std::string(text) + "'");
  VarSpec v;
  v.name = std::string(trim(text.substr(0, colon)));
  const bool ident = !v.name.empty() && !std::isdigit(static_cast<unsigned char>(v.name[0])) &&
                     std::all_of(v.name.begin(), v.name.end(), [](unsigned char c) {
                       return std::isalnum(c) || c == '_';
                     });
  if (!ident) fail(line, "invalid variable name '" + v.name + "'");
  const std::string_view rest = trim(text.substr(colon + 1));
  const auto space = rest.find_first_of(" \t");
  v.type = std::string(rest.substr(0, space));
  const std::string_view bounds = space == std::string_view::npos ? std::string_view{} : trim(rest.substr(space));
  if (v.type == "bool") {
    if (!bounds.empty()) fail(line, "bool variables take no bounds");
  } else if (v.type == "int") {
    if (!bounds.empty()) v.bounds = parse_range(bounds, line);
  } else {
    fail(line, "unknown type '" + v.type + "'");
  }
  return v;
}

}  // namespace

SpecFile parse_spec_file(std::string_view text, const std::filesystem::path& base_dir) {
  SpecFile spec;
  enum class Section { None, Vars, Program, Pre, Post, Options };
  Section section = Section::None;
  std::string program, pre, post;
  bool have_pre = false, have_post = false, have_program = false;
  std::optional<std::filesystem::path> program_file;
  std::size_t program_file_line = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    const std::string_view line = trim(raw);

    if (line.size() >= 2 && line.front() == '[' && line.back() == ']') {
      const std::string_view name = line.substr(1, line.size() - 2);
      if (name == "vars") {
        section = Section::Vars;
      } else if (name == "program") {
        section = Section::Program;
        if (have_program) fail(line_no, "duplicate [program] section");
        have_program = true;
        spec.program_line = line_no;
      } else if (name == "pre") {
        section = Section::Pre;
        if (have_pre) fail(line_no, "duplicate [pre] section");
        have_pre = true;
        spec.pre_line = line_no;
      } else if (name == "post") {
        section = Section::Post;
        if (have_post) fail(line_no, "duplicate [post] section");
        have_post = true;
        spec.post_line = line_no;
      } else if (name == "options") {
        section = Section::Options;
      } else {
        fail(line_no, "unknown section [" + std::string(name) + "]");
      }
      continue;
    }
    if (section == Section::Program) {
      program += std::string(raw) + "\n";
      continue;
    }
    // Text sections keep blank and comment lines so that spans stay aligned.
    const bool comment = !line.empty() && line.front() == '#';
    if (section == Section::Pre || section == Section::Post) {
      (section == Section::Pre ? pre : post) += (comment ? std::string() : std::string(raw)) + "\n";
      continue;
    }
    if (line.empty() || comment) continue;
    switch (section) {
      case Section::None: fail(line_no, "text outside of any section");
      case Section::Vars: {
        VarSpec v = parse_var(line, line_no);
        for (const auto& other : spec.vars) {
          if (other.name == v.name) fail(line_no, "variable '" + v.name + "' declared twice");
        }
        spec.vars.push_back(std::move(v));
        break;
      }
      case Section::Options: {
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) fail(line_no, "expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key == "mode") {
          if (value != "total" && value != "partial") fail(line_no, "mode must be total or partial");
          spec.mode = parse_mode(value);
        } else if (key == "unroll") {
          spec.unroll = parse_number<std::size_t>(value, line_no, "unroll bound");
        } else if (key == "max_states") {
          spec.max_states = parse_number<std::uint64_t>(value, line_no, "state limit");
        } else if (key == "int_range") {
          spec.int_range = parse_range(value, line_no);
        } else if (key == "program_file") {
          program_file = base_dir / std::filesystem::path(std::string(value));
          program_file_line = line_no;
        } else {
          fail(line_no, "unknown option '" + key + "'");
        }
        break;
      }
      default: break;
    }
  }

  if (program_file) {
    if (have_program) fail(program_file_line, "program_file conflicts with a [program] section");
    std::ifstream in(*program_file);
    if (!in) fail(program_file_line, "cannot read program file '" + program_file->string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    program = ss.str();
    spec.program_line = 0;
  } else if (!have_program) {
    fail(line_no, "missing [program] section");
  }
  spec.program = std::move(program);
  if (have_pre) spec.pre = std::move(pre);
  if (have_post) spec.post = std::move(post);
  auto blank = [](const std::string& s) { return s.find_first_not_of(" \t\r\n") == std::string::npos; };
  if (blank(spec.pre)) spec.pre = "true";
  if (blank(spec.post)) spec.post = "true";
  return spec;
}

SpecFile load_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::SpecFileError, "cannot read spec file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spec_file(ss.str(), path.parent_path());
}

namespace {

template <typename F>
auto relocated(std::size_t lines, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw e.shifted(lines);
  }
}

void check_known(const PredExpr& p, const VarUniverse& universe, std::size_t line_offset) {
  std::vector<std::string> vars;
  collect_vars(p, vars);
  for (const auto& v : vars) {
    if (!universe.find(v)) {
      throw Error(ErrorKind::UnknownVariable, "predicate mentions undeclared variable '" + v + "'",
                  SourceSpan{0, 0, line_offset + 1, 1});
    }
  }
}

std::uint64_t env_max_states() {
  const char* env = std::getenv("SCALC_MAX_STATES");
  if (env == nullptr || *env == '\0') return 0;
  std::uint64_t v = 0;
  const std::string_view s(env);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v == 0) {
    throw Error(ErrorKind::UsageError, "SCALC_MAX_STATES must be a positive integer, got '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Problem build_problem(const SpecFile& spec, const ProblemOverrides& overrides) {
  Problem pb;
  std::vector<std::string> prelude;
  for (const auto& v : spec.vars) {
    prelude.push_back(v.name);
    if (v.type == "bool") {
      pb.universe.add(v.name, Domain::boolean());
    } else {
      const auto [lo, hi] = v.bounds.value_or(spec.int_range);
      pb.universe.add(v.name, Domain::integer(lo, hi));
    }
  }
  pb.program = relocated(spec.program_line, [&] { return parse_program(spec.program, prelude); });
  for (const auto& d : collect_declarations(pb.program)) {
    if (pb.universe.find(d.var)) continue;
    if (d.type_name == "bool") {
      pb.universe.add(d.var, Domain::boolean());
    } else {
      pb.universe.add(d.var, Domain::integer(spec.int_range.first, spec.int_range.second));
    }
  }
  pb.pre = relocated(spec.pre_line, [&] { return parse_pred(spec.pre); });
  pb.post = relocated(spec.post_line, [&] { return parse_pred(spec.post); });
  check_known(pb.pre, pb.universe, spec.pre_line);
  check_known(pb.post, pb.universe, spec.post_line);

  pb.mode = overrides.mode.value_or(spec.mode.value_or(Mode::Total));
  pb.unroll = overrides.unroll.value_or(spec.unroll.value_or(0));
  if (overrides.max_states) {
    pb.max_states = *overrides.max_states;
  } else if (const auto env = env_max_states(); env != 0) {
    pb.max_states = env;
  } else {
    pb.max_states = spec.max_states.value_or(kDefaultMaxStates);
  }
  return pb;
}

}  // namespace scalc
