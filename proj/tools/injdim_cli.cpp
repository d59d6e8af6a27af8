// injdim command-line front end.
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "injdim/injdim.hpp"

#ifndef INJDIM_CORPUS_DIR
#define INJDIM_CORPUS_DIR "corpus"
#endif

namespace fs = std::filesystem;
using namespace injdim;

namespace {

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<int> degree_bound;
  std::optional<int> res_cap;
  bool json = false;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Session load(const fs::path& p, const Overrides& o) {
  Session s = parse_session(slurp(p));
  if (o.seed) s.flags.seed = *o.seed;
  if (o.degree_bound) s.flags.degree_bound = *o.degree_bound;
  if (o.res_cap) s.flags.res_cap = *o.res_cap;
  return s;
}

int exit_code(const SessionResult& r) {
  if (!r.errors.empty() || r.has_discrepancy()) return 1;
  return r.has_undecided() ? 2 : 0;
}

int run_file(const fs::path& p, const Overrides& o, bool checks) {
  Session s = load(p, o);
  SessionResult r = run_session(s, checks);
  std::cout << emit_report(r, o.json ? Format::json : Format::human);
  for (const auto& e : r.errors) std::cerr << "error: " << e << "\n";
  return exit_code(r);
}

// Dense-oracle view of the session: Hilbert functions and Ext^i(k, N).
int run_oracle(const fs::path& p, const Overrides& o) {
  Session s = load(p, o);
  const int D = s.flags.degree_bound >= 0 ? s.flags.degree_bound : 6;
  const GradedModule k = GradedModule::residue_field(s.ring);
  nlohmann::json out;
  out["ring"] = s.ring->describe();
  out["degree_bound"] = D;
  out["modules"] = nlohmann::json::array();
  for (const auto& name : module_names(s)) {
    GradedModule N = s.module(name);
    nlohmann::json m;
    m["id"] = name;
    auto h = oracle::hilbert(N, D);
    m["hilbert"] = {{"low", h.lo}, {"values", h.values}};
    try {
      auto t = oracle::ext_dims(k, N, 3, D, std::max(D, 8));
      nlohmann::json ext = nlohmann::json::array();
      for (int i = 0; i <= 3; ++i) {
        nlohmann::json row = nlohmann::json::object();
        for (const auto& [e, v] : t.dims[i])
          if (v != 0) row[std::to_string(e)] = v;
        ext.push_back(row);
      }
      m["ext_k"] = ext;
      m["ext_exact"] = t.exact;
    } catch (const oracle::InsufficientTruncation& e) {
      m["ext_k"] = nullptr;
      m["reason"] = e.what();
    }
    out["modules"].push_back(m);
  }
  if (o.json) {
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "ring " << out["ring"].get<std::string>() << "\n";
    for (const auto& m : out["modules"]) {
      std::cout << m["id"].get<std::string>() << "  hilbert from degree " << m["hilbert"]["low"] << ": " << m["hilbert"]["values"].dump() << "\n";
      if (!m["ext_k"].is_null())
        for (std::size_t i = 0; i < m["ext_k"].size(); ++i) std::cout << "  Ext^" << i << "(k,-) by degree: " << m["ext_k"][i].dump() << "\n";
      else
        std::cout << "  Ext: " << m["reason"].get<std::string>() << "\n";
    }
  }
  return 0;
}

std::vector<fs::path> corpus_files(const fs::path& dir) {
  std::vector<fs::path> out;
  if (!fs::is_directory(dir)) throw std::runtime_error("corpus directory not found: " + dir.string());
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

int run_corpus(const std::string& action, const fs::path& dir, const Overrides& o, bool update) {
  auto files = corpus_files(dir);
  if (action == "list") {
    for (const auto& f : files) std::cout << f.stem().string() << "\n";
    return 0;
  }
  int worst = 0;
  for (const auto& f : files) {
    std::string status;
    int code = 0;
    try {
      Session s = load(f, o);
      SessionResult r = run_session(s);
      code = exit_code(r);
      const std::string got = emit_report(r, Format::json);
      const fs::path golden = dir / "golden" / f.filename();
      if (update) {
        fs::create_directories(golden.parent_path());
        std::ofstream(golden, std::ios::binary) << got;
        status = "written";
      } else if (!fs::exists(golden)) {
        status = "no golden";
        code = 1;
      } else if (slurp(golden) != got) {
        status = "MISMATCH";
        code = 1;
      } else {
        status = "ok";
      }
    } catch (const std::exception& e) {
      status = std::string("error: ") + e.what();
      code = 1;
    }
    std::cout << f.stem().string() << ": " << status << "\n";
    worst = (code == 1 || worst == 1) ? 1 : std::max(worst, code);
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"injdim: graded Ext, invariants and injective-dimension criteria over F_p"};
  app.require_subcommand(1);
  Overrides o;
  std::uint64_t seed = 0;
  int degree_bound = -1, res_cap = -1;
  app.add_flag("--json", o.json, "machine-readable output");
  auto* seed_opt = app.add_option("--seed", seed, "random seed for regular-sequence search")->check(CLI::NonNegativeNumber);
  auto* db_opt = app.add_option("--degree-bound", degree_bound, "degree bound D")->check(CLI::Range(0, 1000));
  auto* rc_opt = app.add_option("--res-cap", res_cap, "resolution length cap")->check(CLI::Range(0, 1000));

  std::string file;
  auto* inv = app.add_subcommand("invariants", "invariant reports for every module");
  inv->add_option("file", file, "session file")->required()->check(CLI::ExistingFile);
  auto* chk = app.add_subcommand("check", "invariants plus the requested criterion checks");
  chk->add_option("file", file, "session file")->required()->check(CLI::ExistingFile);
  auto* orc = app.add_subcommand("oracle", "dense linear-algebra view (debugging)");
  orc->add_option("file", file, "session file")->required()->check(CLI::ExistingFile);
  auto* cor = app.add_subcommand("corpus", "list or run the shipped corpus against golden reports");
  std::string action;
  std::string dir = INJDIM_CORPUS_DIR;
  bool update = false;
  cor->add_option("action", action, "list | run")->required()->check(CLI::IsMember({"list", "run"}));
  cor->add_option("--dir", dir, "corpus directory");
  cor->add_flag("--update", update, "rewrite golden reports instead of comparing");
  for (auto* sub : {inv, chk, orc, cor}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  if (*seed_opt) o.seed = seed;
  if (*db_opt) o.degree_bound = degree_bound;
  if (*rc_opt) o.res_cap = res_cap;

  try {
    if (*inv) return run_file(file, o, false);
    if (*chk) return run_file(file, o, true);
    if (*orc) return run_oracle(file, o);
    return run_corpus(action, dir, o, update);
  } catch (const SessionError& e) {
    for (const auto& d : e.diagnostics()) std::cerr << file << ":" << d.to_string() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
