#include "scalc/spec_file.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "support.hpp"

using namespace scalc;
using scalc::test::expect_error;

namespace {

std::size_t error_line(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.span() ? e.span()->line : 0;
  }
  return 0;
}

}  // namespace

TEST(SpecFile, Sections) {
  const SpecFile s = parse_spec_file(
      "# comment\n[vars]\ni: int 0..7\nb: bool\nk: int\n\n[program]\ni = i + 1;\n[pre]\ni < 7\n[post]\n"
      "# only a comment\ni > 0\n[options]\nmode = partial\nunroll = 3\nmax_states = 5000\nint_range = -4..4\n");
  ASSERT_EQ(s.vars.size(), 3u);
  EXPECT_EQ(s.vars[0].bounds, (std::pair<Value, Value>{0, 7}));
  EXPECT_EQ(s.vars[1].type, "bool");
  EXPECT_FALSE(s.vars[2].bounds.has_value());
  EXPECT_EQ(s.mode, Mode::Partial);
  EXPECT_EQ(s.unroll, 3u);
  EXPECT_EQ(s.max_states, 5000u);
  EXPECT_EQ(s.int_range, (std::pair<Value, Value>{-4, 4}));

  const Problem p = build_problem(s);
  EXPECT_EQ(p.universe.size(), 3u);
  EXPECT_EQ(p.universe[2].domain.size(), 9u);
  EXPECT_EQ(p.mode, Mode::Partial);
  EXPECT_EQ(to_string(p.post), "i > 0");
}

TEST(SpecFile, DefaultsAndDeclaredVariables) {
  const Problem p = build_problem(parse_spec_file("[program]\nint a = 5; bool c; c = 1;\n"));
  ASSERT_EQ(p.universe.size(), 2u);
  EXPECT_EQ(p.universe[0].domain.size(), 256u);
  EXPECT_EQ(p.universe[1].domain.size(), 2u);
  EXPECT_EQ(p.pre, PredExpr::truth());
  EXPECT_EQ(p.post, PredExpr::truth());
  EXPECT_EQ(p.mode, Mode::Total);
}

TEST(SpecFile, PreludeDomainWinsOverDeclaration) {
  const Problem p = build_problem(parse_spec_file("[vars]\na: int 0..3\n[program]\nint a; a = 1;\n"));
  ASSERT_EQ(p.universe.size(), 1u);
  EXPECT_EQ(p.universe[0].domain.size(), 4u);
}

TEST(SpecFile, Overrides) {
  const SpecFile s = parse_spec_file("[program]\n;\n[options]\nmode = partial\nmax_states = 10\nunroll = 1\n");
  ProblemOverrides o;
  o.mode = Mode::Total;
  o.max_states = 99;
  o.unroll = 7;
  const Problem p = build_problem(s, o);
  EXPECT_EQ(p.mode, Mode::Total);
  EXPECT_EQ(p.max_states, 99u);
  EXPECT_EQ(p.unroll, 7u);

  ::setenv("SCALC_MAX_STATES", "1234", 1);
  EXPECT_EQ(build_problem(s).max_states, 1234u);
  EXPECT_EQ(build_problem(s, o).max_states, 99u);
  ::setenv("SCALC_MAX_STATES", "lots", 1);
  expect_error(ErrorKind::UsageError, [&] { build_problem(s); });
  ::unsetenv("SCALC_MAX_STATES");
  EXPECT_EQ(build_problem(s).max_states, 10u);
}

TEST(SpecFile, ProgramFile) {
  const auto dir = std::filesystem::temp_directory_path() / "scalc_spec_file_test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "prog.c") << "int a = 1;\n";
  std::ofstream(dir / "s.spec") << "[options]\nprogram_file = prog.c\n[post]\na == 1\n";
  const Problem p = build_problem(load_spec_file(dir / "s.spec"));
  EXPECT_EQ(pretty_print(p.program), pretty_print(parse_program("int a = 1;")));
  std::filesystem::remove_all(dir);
  expect_error(ErrorKind::SpecFileError, [&] { load_spec_file(dir / "missing.spec"); });
}

TEST(SpecFile, ErrorsCarryFileLines) {
  EXPECT_EQ(error_line([] { parse_spec_file("[vars]\nx int\n[program]\n;\n"); }), 2u);
  EXPECT_EQ(error_line([] { parse_spec_file("[vars]\nx: real\n[program]\n;\n"); }), 2u);
  EXPECT_EQ(error_line([] { parse_spec_file("[vars]\nx: int 5..1\n[program]\n;\n"); }), 2u);
  EXPECT_EQ(error_line([] { parse_spec_file("[program]\n;\n[weird]\n"); }), 3u);
  EXPECT_EQ(error_line([] { parse_spec_file("stray\n[program]\n;\n"); }), 1u);
  EXPECT_EQ(error_line([] { parse_spec_file("[program]\n;\n[options]\ncolor = red\n"); }), 4u);
  EXPECT_EQ(error_line([] { build_problem(parse_spec_file("[vars]\nx: int\n[program]\nx = 1;\ny = 2;\n")); }), 5u);
  EXPECT_EQ(error_line([] { build_problem(parse_spec_file("[program]\nint x;\n[pre]\n\nx >\n")); }), 5u);
  expect_error(ErrorKind::SpecFileError, [] { parse_spec_file("[vars]\nx: int\n"); });
  expect_error(ErrorKind::SpecFileError, [] { parse_spec_file("[vars]\nx: int\nx: bool\n[program]\n;\n"); });
  expect_error(ErrorKind::UnknownVariable, [] { build_problem(parse_spec_file("[program]\n;\n[post]\nq == 1\n")); });
}
