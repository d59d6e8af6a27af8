#ifndef INJDIM_SESSION_HPP
#define INJDIM_SESSION_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "report.hpp"

namespace injdim {

struct Diagnostic {
  int line = 0;
  int column = 0;
  std::string message;
  std::string to_string() const { return std::to_string(line) + ":" + std::to_string(column) + ": " + message; }
};

/// Parse or validation failure with every diagnostic found.
class SessionError : public std::runtime_error {
 public:
  explicit SessionError(std::vector<Diagnostic> diags)
      : std::runtime_error(join(diags)), diags_(std::move(diags)) {}
  const std::vector<Diagnostic>& diagnostics() const noexcept { return diags_; }

 private:
  static std::string join(const std::vector<Diagnostic>& d) {
    std::string s;
    for (const auto& x : d) s += (s.empty() ? "" : "\n") + x.to_string();
    return s;
  }
  std::vector<Diagnostic> diags_;
};

struct SessionFlags {
  bool domain = false;
  int degree_bound = -1;
  int res_cap = -1;
  std::uint64_t seed = 1;
  bool operator==(const SessionFlags&) const = default;
};

struct CheckRequest {
  std::string id;
  std::map<std::string, std::string> args;  // C, M
  std::vector<std::string> N;               // T2.4-moreover only
  bool operator==(const CheckRequest&) const = default;
};

struct ModuleDecl {
  std::string name;
  std::vector<int> degrees;
  std::vector<std::vector<Polynomial>> rows;  // g rows, one column per relation
  GradedModule module;
};

struct Session {
  RingPtr ring;
  std::vector<ModuleDecl> modules;  // document order; "R" is implicit
  SessionFlags flags;
  std::vector<CheckRequest> checks;

  GradedModule module(const std::string& name) const {
    if (name == "R") return GradedModule::free(ring, {0});
    for (const auto& m : modules)
      if (m.name == name) return m.module;
    throw std::out_of_range("unknown module '" + name + "'");
  }
  bool has_module(const std::string& name) const {
    return name == "R" || std::any_of(modules.begin(), modules.end(), [&](const ModuleDecl& m) { return m.name == name; });
  }
  CheckOptions options() const {
    CheckOptions o;
    o.res_cap = flags.res_cap;
    o.degree_bound = flags.degree_bound;
    o.seed = flags.seed;
    o.domain = flags.domain;
    return o;
  }
};

/// Structural equality (ring data, raw presentations, flags, checks).
inline bool operator==(const Session& a, const Session& b) {
  if (a.ring->field().characteristic() != b.ring->field().characteristic()) return false;
  if (a.ring->poly_ring().variables() != b.ring->poly_ring().variables()) return false;
  if (a.ring->ideal_generators() != b.ring->ideal_generators()) return false;
  if (a.modules.size() != b.modules.size()) return false;
  for (std::size_t i = 0; i < a.modules.size(); ++i)
    if (a.modules[i].name != b.modules[i].name || a.modules[i].degrees != b.modules[i].degrees || a.modules[i].rows != b.modules[i].rows)
      return false;
  return a.flags == b.flags && a.checks == b.checks;
}

/// Criterion ids and the module arguments each one takes.
inline const std::map<std::string, std::vector<std::string>>& check_signatures() {
  static const std::map<std::string, std::vector<std::string>> sig{
      {"L2.1", {"M"}},      {"L2.2", {"M", "C"}}, {"L2.3", {"M", "C"}}, {"T2.4", {"C", "M"}}, {"T2.4-moreover", {"C", "M"}},
      {"Claim", {"M"}},     {"C2.6", {"M"}},      {"C2.7", {"C"}},      {"C2.8", {"C"}},      {"C2.9", {"C"}},
      {"Bass", {"C"}}};
  return sig;
}

namespace detail {

/// Offsets of every JSON string token (keys and values) in document order,
/// and a map from JSON pointers to the offset that best locates them.
class Locator {
 public:
  explicit Locator(const std::string& text) : text_(text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] != '"') continue;
      tokens_.push_back(i);
      for (++i; i < text.size() && text[i] != '"'; ++i)
        if (text[i] == '\\') ++i;
    }
  }

  void index(const nlohmann::ordered_json& j) {
    std::size_t next = 0;
    walk(j, "", next, 0);
  }

  Diagnostic at(const std::string& pointer, const std::string& msg, std::size_t inner = 0) const {
    std::string p = pointer;
    for (;;) {
      auto it = where_.find(p);
      if (it != where_.end()) return at_offset(it->second + inner, msg);
      if (p.empty()) return at_offset(0, msg);
      p = p.substr(0, p.rfind('/'));
      inner = 0;
    }
  }
  Diagnostic at_offset(std::size_t off, const std::string& msg) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < off && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col, msg};
  }

 private:
  void walk(const nlohmann::ordered_json& j, const std::string& ptr, std::size_t& next, std::size_t fallback) {
    if (j.is_object()) {
      where_.emplace(ptr, fallback);
      for (auto it = j.begin(); it != j.end(); ++it) {
        std::size_t key_off = next < tokens_.size() ? tokens_[next++] : fallback;
        std::string child = ptr + "/" + it.key();
        walk(it.value(), child, next, key_off);
      }
    } else if (j.is_array()) {
      where_.emplace(ptr, fallback);
      std::size_t k = 0;
      for (const auto& e : j) walk(e, ptr + "/" + std::to_string(k++), next, fallback);
    } else if (j.is_string()) {
      // position just inside the opening quote
      where_.emplace(ptr, next < tokens_.size() ? tokens_[next++] + 1 : fallback);
    } else {
      where_.emplace(ptr, fallback);
    }
  }

  const std::string& text_;
  std::vector<std::size_t> tokens_;
  std::map<std::string, std::size_t> where_;
};

}  // namespace detail

/// Parses and validates a session document. All problems found are
/// reported together, each with line and column.
inline Session parse_session(const std::string& text) {
  detail::Locator loc(text);
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw SessionError({loc.at_offset(e.byte > 0 ? e.byte - 1 : 0, msg)});
  }
  loc.index(doc);
  std::vector<Diagnostic> diags;
  auto fail = [&](const std::string& ptr, const std::string& msg, std::size_t inner = 0) { diags.push_back(loc.at(ptr, msg, inner)); };

  if (!doc.is_object()) throw SessionError({loc.at("", "session must be a JSON object")});
  static const std::set<std::string> known{"char", "vars", "ideal", "modules", "flags", "checks"};
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (!known.count(it.key())) fail("/" + it.key(), "unknown key '" + it.key() + "'");

  // Ring.
  std::uint32_t p = PrimeField::kDefaultModulus;
  if (doc.contains("char")) {
    if (!doc["char"].is_number_unsigned() || doc["char"].get<std::uint64_t>() > 0x7fffffffu) {
      fail("/char", "characteristic must be a positive integer below 2^31");
    } else {
      p = static_cast<std::uint32_t>(doc["char"].get<std::uint64_t>());
      if (!is_prime(p)) fail("/char", "characteristic " + std::to_string(p) + " is not prime");
    }
  }
  std::vector<std::string> vars;
  if (!doc.contains("vars") || !doc["vars"].is_array()) {
    fail("/vars", "\"vars\" must be an array of variable names");
  } else {
    std::set<std::string> seen;
    for (std::size_t i = 0; i < doc["vars"].size(); ++i) {
      const auto& v = doc["vars"][i];
      const std::string ptr = "/vars/" + std::to_string(i);
      if (!v.is_string()) {
        fail(ptr, "variable names must be strings");
        continue;
      }
      std::string name = v.get<std::string>();
      bool ident = !name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_') &&
                   std::all_of(name.begin(), name.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
      if (!ident) fail(ptr, "'" + name + "' is not an identifier");
      if (!seen.insert(name).second) fail(ptr, "duplicate variable '" + name + "'");
      vars.push_back(name);
    }
    if (static_cast<int>(vars.size()) > Monomial::kMaxVars) fail("/vars", "at most " + std::to_string(Monomial::kMaxVars) + " variables");
  }
  if (!diags.empty()) throw SessionError(diags);

  auto S = std::make_shared<const PolyRing>(PrimeField(p), vars);
  auto parse_poly = [&](const nlohmann::ordered_json& v, const std::string& ptr) -> std::optional<Polynomial> {
    if (!v.is_string()) {
      fail(ptr, "polynomials must be strings");
      return std::nullopt;
    }
    try {
      return S->parse(v.get<std::string>());
    } catch (const ParseError& e) {
      fail(ptr, e.what(), e.offset());
      return std::nullopt;
    }
  };

  std::vector<Polynomial> ideal;
  if (doc.contains("ideal")) {
    if (!doc["ideal"].is_array()) {
      fail("/ideal", "\"ideal\" must be an array of polynomials");
    } else {
      for (std::size_t i = 0; i < doc["ideal"].size(); ++i) {
        const std::string ptr = "/ideal/" + std::to_string(i);
        if (auto f = parse_poly(doc["ideal"][i], ptr)) {
          if (!f->is_homogeneous()) fail(ptr, "ideal generator is not homogeneous");
          else ideal.push_back(std::move(*f));
        }
      }
    }
  }
  if (!diags.empty()) throw SessionError(diags);
  Session s;
  s.ring = RingPresentation::make(S, ideal);

  // Flags.
  if (doc.contains("flags")) {
    const auto& f = doc["flags"];
    if (!f.is_object()) {
      fail("/flags", "\"flags\" must be an object");
    } else {
      for (auto it = f.begin(); it != f.end(); ++it) {
        const std::string ptr = "/flags/" + it.key();
        const auto& v = it.value();
        if (it.key() == "domain") {
          if (!v.is_boolean()) fail(ptr, "\"domain\" must be true or false");
          else s.flags.domain = v.get<bool>();
        } else if (it.key() == "degree_bound" || it.key() == "res_cap") {
          if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || v.get<std::int64_t>() > 1000) {
            fail(ptr, "\"" + it.key() + "\" must be an integer in [0, 1000]");
          } else {
            (it.key() == "res_cap" ? s.flags.res_cap : s.flags.degree_bound) = v.get<int>();
          }
        } else if (it.key() == "seed") {
          if (!v.is_number_unsigned()) fail(ptr, "\"seed\" must be a non-negative integer");
          else s.flags.seed = v.get<std::uint64_t>();
        } else {
          fail(ptr, "unknown flag '" + it.key() + "'");
        }
      }
    }
  }

  // Modules.
  if (doc.contains("modules")) {
    const auto& mods = doc["modules"];
    if (!mods.is_object()) {
      fail("/modules", "\"modules\" must be an object");
    } else {
      for (auto it = mods.begin(); it != mods.end(); ++it) {
        const std::string name = it.key();
        const std::string ptr = "/modules/" + name;
        if (name == "R") {
          fail(ptr, "the name R is reserved for the ring itself");
          continue;
        }
        if (s.has_module(name)) {
          fail(ptr, "duplicate module '" + name + "'");
          continue;
        }
        const auto& m = it.value();
        if (!m.is_object() || !m.contains("degrees") || !m["degrees"].is_array()) {
          fail(ptr, "module needs a \"degrees\" array");
          continue;
        }
        for (auto k = m.begin(); k != m.end(); ++k)
          if (k.key() != "degrees" && k.key() != "relations") fail(ptr + "/" + k.key(), "unknown key '" + k.key() + "'");
        ModuleDecl decl;
        decl.name = name;
        bool ok = true;
        for (std::size_t i = 0; i < m["degrees"].size(); ++i) {
          if (!m["degrees"][i].is_number_integer() || std::abs(m["degrees"][i].get<std::int64_t>()) > 1000) {
            fail(ptr + "/degrees/" + std::to_string(i), "degrees must be integers");
            ok = false;
          } else {
            decl.degrees.push_back(m["degrees"][i].get<int>());
          }
        }
        const std::size_t g = m["degrees"].size();
        std::size_t ncols = 0;
        if (m.contains("relations")) {
          const auto& rows = m["relations"];
          if (!rows.is_array() || rows.size() != g) {
            fail(ptr + "/relations", "\"relations\" must have one row per generator (" + std::to_string(g) + ")");
            ok = false;
          } else {
            for (std::size_t i = 0; i < g && ok; ++i) {
              const std::string rptr = ptr + "/relations/" + std::to_string(i);
              if (!rows[i].is_array()) {
                fail(rptr, "each relation row must be an array");
                ok = false;
                break;
              }
              if (i == 0) ncols = rows[i].size();
              if (rows[i].size() != ncols) {
                fail(rptr, "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) + " entries, expected " + std::to_string(ncols));
                ok = false;
                break;
              }
              std::vector<Polynomial> row;
              for (std::size_t c = 0; c < ncols; ++c) {
                auto f = parse_poly(rows[i][c], rptr + "/" + std::to_string(c));
                if (!f) ok = false;
                else row.push_back(std::move(*f));
              }
              decl.rows.push_back(std::move(row));
            }
          }
        } else {
          decl.rows.assign(g, {});
        }
        if (!ok) continue;
        std::vector<std::vector<Polynomial>> columns(ncols, std::vector<Polynomial>(g));
        for (std::size_t i = 0; i < g; ++i)
          for (std::size_t c = 0; c < ncols; ++c) columns[c][i] = decl.rows[i][c];
        try {
          decl.module = GradedModule::build(s.ring, decl.degrees, columns);
        } catch (const PresentationError& e) {
          fail(ptr + "/relations", name + ": " + e.what());
          continue;
        }
        s.modules.push_back(std::move(decl));
      }
    }
  }

  // Checks.
  if (doc.contains("checks")) {
    const auto& checks = doc["checks"];
    if (!checks.is_array()) {
      fail("/checks", "\"checks\" must be an array");
    } else {
      for (std::size_t i = 0; i < checks.size(); ++i) {
        const std::string ptr = "/checks/" + std::to_string(i);
        const auto& c = checks[i];
        if (!c.is_object() || !c.contains("id") || !c["id"].is_string()) {
          fail(ptr, "each check needs a string \"id\"");
          continue;
        }
        CheckRequest req;
        req.id = c["id"].get<std::string>();
        auto sig = check_signatures().find(req.id);
        if (sig == check_signatures().end()) {
          fail(ptr + "/id", "unknown check id '" + req.id + "'");
          continue;
        }
        for (auto it = c.begin(); it != c.end(); ++it) {
          const std::string& key = it.key();
          if (key == "id") continue;
          const std::string aptr = ptr + "/" + key;
          if (key == "N" && req.id == "T2.4-moreover") {
            if (!it.value().is_array()) {
              fail(aptr, "\"N\" must be an array of module names");
              continue;
            }
            for (std::size_t k = 0; k < it.value().size(); ++k) {
              const auto& v = it.value()[k];
              if (!v.is_string()) fail(aptr + "/" + std::to_string(k), "module names must be strings");
              else if (!s.has_module(v.get<std::string>())) fail(aptr + "/" + std::to_string(k), "unknown module '" + v.get<std::string>() + "'");
              else req.N.push_back(v.get<std::string>());
            }
            continue;
          }
          if (std::find(sig->second.begin(), sig->second.end(), key) == sig->second.end()) {
            fail(aptr, "check " + req.id + " takes no argument '" + key + "'");
            continue;
          }
          if (!it.value().is_string()) {
            fail(aptr, "module references must be strings");
            continue;
          }
          const std::string ref = it.value().get<std::string>();
          if (!s.has_module(ref)) fail(aptr, "unknown module '" + ref + "'");
          req.args[key] = ref;
        }
        for (const auto& role : sig->second)
          if (!c.contains(role)) fail(ptr, "check " + req.id + " needs argument '" + role + "'");
        s.checks.push_back(std::move(req));
      }
    }
  }
  if (!diags.empty()) throw SessionError(diags);
  return s;
}

/// Canonical session text; parse_session(emit_session(s)) == s.
inline std::string emit_session(const Session& s) {
  const PolyRing& S = s.ring->poly_ring();
  nlohmann::ordered_json j;
  j["char"] = s.ring->field().characteristic();
  j["vars"] = S.variables();
  j["ideal"] = nlohmann::ordered_json::array();
  for (const auto& f : s.ring->ideal_generators()) j["ideal"].push_back(S.to_string(f));
  j["modules"] = nlohmann::ordered_json::object();
  for (const auto& m : s.modules) {
    nlohmann::ordered_json mj;
    mj["degrees"] = m.degrees;
    mj["relations"] = nlohmann::ordered_json::array();
    for (const auto& row : m.rows) {
      nlohmann::ordered_json r = nlohmann::ordered_json::array();
      for (const auto& f : row) r.push_back(S.to_string(f));
      mj["relations"].push_back(r);
    }
    j["modules"][m.name] = mj;
  }
  nlohmann::ordered_json f;
  f["domain"] = s.flags.domain;
  if (s.flags.degree_bound >= 0) f["degree_bound"] = s.flags.degree_bound;
  if (s.flags.res_cap >= 0) f["res_cap"] = s.flags.res_cap;
  f["seed"] = s.flags.seed;
  j["flags"] = f;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : s.checks) {
    nlohmann::ordered_json cj;
    cj["id"] = c.id;
    for (const auto& [k, v] : c.args) cj[k] = v;
    if (!c.N.empty()) cj["N"] = c.N;
    j["checks"].push_back(cj);
  }
  return j.dump(2) + "\n";
}

/// Module names in report order: R first, then declarations.
inline std::vector<std::string> module_names(const Session& s) {
  std::vector<std::string> names{"R"};
  for (const auto& m : s.modules) names.push_back(m.name);
  return names;
}

inline CriterionReport run_check(const Session& s, const CheckRequest& c) {
  CheckOptions opt = s.options();
  auto arg = [&](const std::string& role) { return c.args.at(role); };
  auto mod = [&](const std::string& role) { return s.module(arg(role)); };
  if (c.id == "L2.1" || c.id == "L2.2") {
    GradedModule M = mod("M");
    std::optional<RegularSequenceCertificate> cert;
    std::string why;
    try {
      if (M.is_zero()) why = "M is the zero module";
      else if (!is_cohen_macaulay(M)) why = "M is not Cohen–Macaulay, so no regular system of parameters exists";
      else cert = find_regular_sop(M, opt.seed, opt.sop_attempts);
    } catch (const RetryLimitExceeded& e) {
      why = e.what();
    }
    if (!cert) {
      CriterionReport r;
      r.id = c.id;
      r.inputs = c.args;
      r.seed = opt.seed;
      r.hypotheses.push_back({"M admits a verified regular system of parameters", Outcome::fail, {}, why});
      r.verdict = Verdict::not_applicable;
      return r;
    }
    if (c.id == "L2.1") return check_lemma_mult_length(M, *cert, opt, arg("M"));
    return check_regseq_transfer(M, mod("C"), *cert, opt, arg("M"), arg("C"));
  }
  if (c.id == "L2.3") return check_finite_length_criterion(mod("M"), mod("C"), opt, arg("M"), arg("C"));
  if (c.id == "T2.4") return check_main_theorem(mod("C"), mod("M"), opt, arg("C"), arg("M"));
  if (c.id == "T2.4-moreover") {
    std::vector<std::pair<std::string, GradedModule>> Ns;
    for (const auto& n : c.N.empty() ? module_names(s) : c.N) Ns.emplace_back(n, s.module(n));
    return check_moreover_clause(mod("C"), mod("M"), Ns, opt, arg("C"), arg("M"));
  }
  if (c.id == "Claim") return check_canonical_claim(mod("M"), opt, arg("M"));
  if (c.id == "C2.6") return check_gorenstein_criterion(mod("M"), opt, arg("M"));
  if (c.id == "C2.7") return check_mcm_inequality(mod("C"), opt, arg("C"));
  if (c.id == "C2.8") return check_rank_criterion(mod("C"), opt, arg("C"));
  if (c.id == "C2.9") return check_self_ext_criterion(mod("C"), opt, arg("C"));
  if (c.id == "Bass") return verify_finite_injdim_bass(mod("C"), opt, arg("C"));
  throw std::invalid_argument("unknown check id '" + c.id + "'");
}

/// Invariants of every module (R first), then the requested checks in
/// order. Checks that throw are recorded as errors.
inline SessionResult run_session(const Session& s, bool with_checks = true) {
  SessionResult out;
  out.ring = s.ring->describe();
  out.seed = s.flags.seed;
  CheckOptions opt = s.options();
  for (const auto& name : module_names(s)) out.invariants.push_back(compute_invariants(s.module(name), name, opt));
  if (!with_checks) return out;
  for (const auto& c : s.checks) {
    try {
      out.criteria.push_back(run_check(s, c));
    } catch (const std::exception& e) {
      out.errors.push_back(c.id + ": " + e.what());
    }
  }
  return out;
}

}  // namespace injdim

#endif  // INJDIM_SESSION_HPP
