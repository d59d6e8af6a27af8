#include <gtest/gtest.h>

#include <array>
#include <cstdio>

#include "test_support.hpp"

using namespace injdim;
using namespace injdim::testing;

namespace {

std::vector<Diagnostic> diagnostics_of(const std::string& text) {
  try {
    parse_session(text);
  } catch (const SessionError& e) {
    return e.diagnostics();
  }
  return {};
}

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  CliRun r;
  std::string cmd = std::string(INJDIM_CLI) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

const nlohmann::json& invariant(const nlohmann::json& report, const std::string& id) {
  for (const auto& m : report.at("invariants"))
    if (m.at("id") == id) return m;
  throw std::out_of_range(id);
}

}  // namespace

TEST(ParseSession, MinimalRingOnly) {
  Session s = parse_session(R"({"char": 32003, "vars": ["x","y"], "ideal": ["x*y"]})");
  EXPECT_EQ(s.ring->nvars(), 2);
  EXPECT_TRUE(s.modules.empty());
  EXPECT_TRUE(s.checks.empty());
  EXPECT_EQ(s.flags.seed, 1u);
  EXPECT_EQ(module_names(s), std::vector<std::string>{"R"});
  EXPECT_TRUE(s.has_module("R"));
}

TEST(ParseSession, FullExample) {
  Session s = parse_session(
      R"({"char": 32003, "vars": ["x","y"], "ideal": ["x*y"], "modules": {"C": {"degrees":[0], "relations": [[]]}},
          "flags": {"domain": false, "degree_bound": 10, "res_cap": 8, "seed": 1}, "checks": [{"id":"T2.4","C":"C","M":"R"}]})");
  ASSERT_EQ(s.checks.size(), 1u);
  EXPECT_EQ(s.checks[0].args.at("C"), "C");
  EXPECT_EQ(s.flags.res_cap, 8);
  EXPECT_EQ(s.flags.degree_bound, 10);
  EXPECT_EQ(s.module("C").num_generators(), 1);
  EXPECT_FALSE(s.module("C").is_zero());
  auto res = run_session(s);
  ASSERT_EQ(res.criteria.size(), 1u);
  EXPECT_EQ(res.criteria[0].verdict, Verdict::pass);
}

TEST(ParseSession, UnknownVariableIsPositioned) {
  const std::string text = R"({"char": 32003, "vars": ["x","y"], "ideal": ["x + z^2"]})";
  auto d = diagnostics_of(text);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].line, 1);
  // Column of 'z' inside the string literal.
  EXPECT_EQ(d[0].column, static_cast<int>(text.find("z^2")) + 1);
  EXPECT_NE(d[0].message.find("z"), std::string::npos);
  EXPECT_NE(d[0].to_string().find(":"), std::string::npos);
}

TEST(ParseSession, ErrorKinds) {
  struct Case {
    std::string text;
    std::string needle;
  };
  std::vector<Case> cases = {
      {R"({"char": 32003, "vars": ["x"], )", ""},
      {R"({"char": 12, "vars": ["x"], "ideal": []})", "prime"},
      {R"({"char": 32003, "vars": ["x","x"], "ideal": []})", "duplicate"},
      {R"({"char": 32003, "vars": ["1x"], "ideal": []})", ""},
      {R"({"char": 32003, "vars": ["x","y"], "ideal": ["x^2 - y"]})", "homogeneous"},
      {R"({"char": 32003, "vars": ["x"], "ideal": [], "colour": 1})", "colour"},
      {R"({"char": 32003, "vars": ["x"], "ideal": [], "modules": {"R": {"degrees": [0], "relations": [[]]}}})", "R"},
      {R"({"char": 32003, "vars": ["x"], "ideal": [], "modules": {"A": {"degrees": [0, 0], "relations": [["x"]]}}})", ""},
      {R"({"char": 32003, "vars": ["x"], "ideal": [], "checks": [{"id": "T9.9", "C": "R", "M": "R"}]})", "T9.9"},
      {R"({"char": 32003, "vars": ["x"], "ideal": [], "checks": [{"id": "T2.4", "C": "Q", "M": "R"}]})", "Q"},
      {R"({"char": 32003, "vars": ["x"], "ideal": [], "checks": [{"id": "T2.4", "C": "R"}]})", "M"},
  };
  for (const auto& c : cases) {
    auto d = diagnostics_of(c.text);
    ASSERT_FALSE(d.empty()) << c.text;
    EXPECT_GE(d[0].line, 1);
    EXPECT_GE(d[0].column, 1);
    if (!c.needle.empty()) EXPECT_NE(d[0].message.find(c.needle), std::string::npos) << d[0].message;
  }
}

TEST(ParseSession, CollectsSeveralErrorsInOneStage) {
  auto d = diagnostics_of(R"({"char": 32003, "vars": ["x"], "ideal": [], "checks": [{"id": "T9.9"}, {"id": "T2.4", "C": "Q", "M": "R"}]})");
  EXPECT_GE(d.size(), 2u);
}

TEST(ParseSession, MultilinePositions) {
  const std::string text = "{\n  \"char\": 32003,\n  \"vars\": [\"x\", \"y\"],\n  \"ideal\": [\"x^2 - y\"]\n}";
  auto d = diagnostics_of(text);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].line, 4);
}

TEST(ParseSession, RoundTripOverCorpus) {
  for (const auto& e : load_corpus()) {
    Session again = parse_session(emit_session(e.session));
    EXPECT_TRUE(again == e.session) << e.name;
    EXPECT_EQ(emit_session(again), emit_session(e.session)) << e.name;
  }
}

TEST(Report, GoldensMatch) {
  for (const auto& e : load_corpus()) {
    std::string got = emit_report(run_session(e.session), Format::json);
    std::string want = slurp(corpus_dir() / "golden" / (e.name + ".json"));
    EXPECT_EQ(got, want) << e.name;
  }
}

TEST(Report, EmitIsDeterministic) {
  for (const auto& e : load_corpus()) {
    auto a = run_session(e.session);
    auto b = run_session(parse_session(e.text));
    EXPECT_EQ(emit_report(a, Format::json), emit_report(a, Format::json));
    EXPECT_EQ(emit_report(a, Format::json), emit_report(b, Format::json)) << e.name;
    EXPECT_EQ(emit_report(a, Format::human), emit_report(b, Format::human)) << e.name;
  }
}

TEST(Report, NodeInvariants) {
  Session s = parse_session(R"({"char": 32003, "vars": ["x","y"], "ideal": ["x*y"]})");
  auto j = nlohmann::json::parse(emit_report(run_session(s), Format::json));
  const auto& r = invariant(j, "R");
  EXPECT_EQ(r.at("dim"), 1);
  EXPECT_EQ(r.at("depth"), 1);
  EXPECT_EQ(r.at("e"), 2);
  EXPECT_EQ(r.at("type"), 1);
  EXPECT_EQ(r.at("cm"), true);
  EXPECT_EQ(r.at("length"), "infinite");
  EXPECT_TRUE(j.at("criteria").empty());
}

TEST(Report, KeysAreSorted) {
  Session s = parse_session(R"({"char": 32003, "vars": ["x"], "ideal": ["x^2"], "checks": [{"id": "Bass", "C": "R"}]})");
  std::string out = emit_report(run_session(s), Format::json);
  EXPECT_EQ(out.back(), '\n');
  EXPECT_EQ(out.find('\n'), out.size() - 1);
  EXPECT_LT(out.find("\"criteria\""), out.find("\"invariants\""));
  EXPECT_LT(out.find("\"invariants\""), out.find("\"ring\""));
}

TEST(Report, UndecidedCarriesReason) {
  Session s = parse_session(R"({"char": 32003, "vars": ["x","y"], "ideal": ["x^2","x*y","y^2"],
      "flags": {"res_cap": 1}, "checks": [{"id": "Bass", "C": "R"}]})");
  auto res = run_session(s);
  ASSERT_EQ(res.criteria.size(), 1u);
  EXPECT_EQ(res.criteria[0].verdict, Verdict::undecided);
  EXPECT_TRUE(res.has_undecided());
  auto j = nlohmann::json::parse(emit_report(res, Format::json));
  const auto& c = j.at("criteria").at(0);
  EXPECT_EQ(c.at("verdict"), "undecided");
  EXPECT_FALSE(c.at("reason").get<std::string>().empty());
  EXPECT_EQ(c.at("conclusion_asserted"), false);
}

TEST(Report, HumanFormatMentionsEveryModule) {
  for (const auto& e : load_corpus()) {
    std::string h = emit_report(run_session(e.session), Format::human);
    for (const auto& name : module_names(e.session)) EXPECT_NE(h.find(name), std::string::npos) << e.name << " " << name;
  }
}

TEST(Cli, CheckMatchesGoldenAndIsRepeatable) {
  const auto file = (corpus_dir() / "gorenstein_node.json").string();
  CliRun a = run_cli("--json check " + file);
  CliRun b = run_cli("--json check " + file);
  EXPECT_EQ(a.status, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, slurp(corpus_dir() / "golden" / "gorenstein_node.json"));
}

TEST(Cli, ParseErrorExitCode) {
  auto dir = std::filesystem::temp_directory_path() / "injdim_cli_test";
  std::filesystem::create_directories(dir);
  auto bad = dir / "bad.json";
  std::ofstream(bad) << R"({"char": 32003, "vars": ["x","y"], "ideal": ["x + z^2"]})";
  CliRun r = run_cli("check " + bad.string());
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("bad.json:1:"), std::string::npos) << r.out;
}

TEST(Cli, UndecidedExitCode) {
  auto dir = std::filesystem::temp_directory_path() / "injdim_cli_test";
  std::filesystem::create_directories(dir);
  auto f = dir / "tiny.json";
  std::ofstream(f) << R"({"char": 32003, "vars": ["x","y"], "ideal": ["x^2","x*y","y^2"], "checks": [{"id": "Bass", "C": "R"}]})";
  EXPECT_EQ(run_cli("check " + f.string()).status, 0);
  EXPECT_EQ(run_cli("--res-cap 1 check " + f.string()).status, 2);
}

TEST(Cli, CorpusRunAndOracle) {
  CliRun r = run_cli("corpus run");
  EXPECT_EQ(r.status, 0) << r.out;
  CliRun l = run_cli("corpus list");
  EXPECT_NE(l.out.find("type2_artinian"), std::string::npos);
  CliRun o = run_cli("oracle " + (corpus_dir() / "hypersurface_dim0.json").string());
  EXPECT_EQ(o.status, 0) << o.out;
  CliRun inv = run_cli("--json invariants " + (corpus_dir() / "gorenstein_node.json").string());
  auto j = nlohmann::json::parse(inv.out);
  EXPECT_TRUE(j.at("criteria").empty());
  EXPECT_EQ(invariant(j, "R").at("e"), 2);
}
