#ifndef INJDIM_REPORT_HPP
#define INJDIM_REPORT_HPP

#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "criteria.hpp"

namespace injdim {

/// Numerical invariants of one module. Absent values are undefined (zero
/// module), infinite (length) or undecided (type at the resolution cap).
struct InvariantReport {
  std::string id;
  std::string description;
  int generators = 0;
  int dim = -1;
  std::optional<int> depth;
  std::optional<std::int64_t> e;
  std::optional<std::int64_t> length;
  std::optional<std::int64_t> type;
  std::optional<std::int64_t> socle;
  std::optional<bool> cm;
  std::optional<std::int64_t> rank;
  std::vector<int> betti_S;
  LaurentPoly numerator;
  LaurentPoly reduced_numerator;
  std::vector<std::string> undecided;
};

inline InvariantReport compute_invariants(const GradedModule& M, const std::string& id, const CheckOptions& opt = {}) {
  InvariantReport r;
  r.id = id;
  r.description = M.describe();
  GradedModule Mm = minimize_presentation(M);
  r.generators = Mm.num_generators();
  HilbertSeries h = hilbert_series(M);
  r.numerator = h.numerator;
  r.reduced_numerator = h.reduced;
  r.dim = h.dim;
  if (h.is_zero()) return r;
  r.e = multiplicity(h);
  if (h.dim == 0) r.length = h.reduced.value_at_one();
  FreeResolution F = minimal_free_resolution_S(M);
  r.betti_S = F.betti_numbers();
  r.depth = M.ring().nvars() - F.length();
  r.cm = *r.depth == r.dim;
  try {
    r.type = type(Mm, opt.res_cap);
  } catch (const Undecided& u) {
    r.undecided.push_back(std::string("type: ") + u.what());
  }
  if (r.length) r.socle = socle_dimension(Mm);
  if (opt.domain) {
    try {
      r.rank = rank(M, true, opt.minor_cap);
    } catch (const Undecided& u) {
      r.undecided.push_back(std::string("rank: ") + u.what());
    }
  }
  return r;
}

namespace detail {

inline nlohmann::json poly_json(const LaurentPoly& p) {
  nlohmann::json j;
  j["low"] = p.low;
  j["coeffs"] = p.coeffs;
  j["text"] = p.to_string();
  return j;
}

template <class T>
nlohmann::json opt_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

inline nlohmann::json condition_json(const Condition& c) {
  nlohmann::json j;
  j["name"] = c.name;
  j["result"] = to_string(c.result);
  j["values"] = nlohmann::json::object();
  for (const auto& [k, v] : c.values) j["values"][k] = v;
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

}  // namespace detail

inline nlohmann::json to_json(const InvariantReport& r) {
  nlohmann::json j;
  j["id"] = r.id;
  j["module"] = r.description;
  j["generators"] = r.generators;
  j["dim"] = r.dim;
  j["depth"] = detail::opt_json(r.depth);
  j["e"] = detail::opt_json(r.e);
  j["length"] = r.dim == 0 || r.dim < 0 ? detail::opt_json(r.length) : nlohmann::json("infinite");
  j["type"] = detail::opt_json(r.type);
  j["socle"] = detail::opt_json(r.socle);
  j["cm"] = detail::opt_json(r.cm);
  if (r.rank) j["rank"] = *r.rank;
  j["betti_S"] = r.betti_S;
  j["hilbert"] = {{"numerator", detail::poly_json(r.numerator)}, {"reduced", detail::poly_json(r.reduced_numerator)}, {"d", r.dim}};
  if (!r.undecided.empty()) j["undecided"] = r.undecided;
  return j;
}

inline nlohmann::json to_json(const CriterionReport& r) {
  nlohmann::json j;
  j["id"] = r.id;
  j["inputs"] = r.inputs;
  j["parameters"] = nlohmann::json::object();
  for (const auto& [k, v] : r.parameters) j["parameters"][k] = v;
  j["hypotheses"] = nlohmann::json::array();
  for (const auto& h : r.hypotheses) j["hypotheses"].push_back(detail::condition_json(h));
  j["conclusion_asserted"] = r.conclusion_asserted;
  j["conclusion"] = r.conclusion;
  nlohmann::json v;
  v["outcome"] = to_string(r.verification_outcome());
  v["method"] = r.verification_method;
  v["checks"] = nlohmann::json::array();
  for (const auto& c : r.verification) v["checks"].push_back(detail::condition_json(c));
  j["verification"] = v;
  j["verdict"] = to_string(r.verdict);
  if (r.verdict == Verdict::undecided) j["reason"] = r.undecided.empty() ? "undecided" : r.undecided.front();
  j["undecided"] = r.undecided;
  j["notes"] = r.notes;
  j["seed"] = r.seed;
  return j;
}

struct SessionResult {
  std::string ring;
  std::uint64_t seed = 0;
  std::vector<InvariantReport> invariants;
  std::vector<CriterionReport> criteria;
  std::vector<std::string> errors;  // per-check failures that are not verdicts

  bool has_undecided() const {
    for (const auto& c : criteria)
      if (c.verdict == Verdict::undecided) return true;
    for (const auto& i : invariants)
      if (!i.undecided.empty()) return true;
    return false;
  }
  bool has_discrepancy() const {
    for (const auto& c : criteria)
      if (c.verdict == Verdict::discrepancy) return true;
    return false;
  }
};

enum class Format { human, json };

inline nlohmann::json to_json(const SessionResult& s) {
  nlohmann::json j;
  j["ring"] = s.ring;
  j["seed"] = s.seed;
  j["invariants"] = nlohmann::json::array();
  for (const auto& r : s.invariants) j["invariants"].push_back(to_json(r));
  j["criteria"] = nlohmann::json::array();
  for (const auto& r : s.criteria) j["criteria"].push_back(to_json(r));
  if (!s.errors.empty()) j["errors"] = s.errors;
  return j;
}

/// Machine format: one compact JSON document with sorted keys. Human format:
/// aligned tables.
inline std::string emit_report(const SessionResult& s, Format fmt) {
  if (fmt == Format::json) return to_json(s).dump() + "\n";
  std::ostringstream os;
  auto opt = [](const auto& v) { return v ? std::to_string(*v) : std::string("-"); };
  os << "ring " << s.ring << "   seed " << s.seed << "\n";
  if (!s.invariants.empty()) {
    os << "\n" << std::left << std::setw(10) << "module" << std::setw(6) << "gens" << std::setw(5) << "dim" << std::setw(7) << "depth"
       << std::setw(5) << "e" << std::setw(8) << "length" << std::setw(6) << "type" << std::setw(7) << "socle" << std::setw(4) << "CM"
       << std::setw(6) << "rank" << "hilbert series\n";
    for (const auto& r : s.invariants) {
      os << std::setw(10) << r.id << std::setw(6) << r.generators << std::setw(5) << r.dim << std::setw(7) << opt(r.depth) << std::setw(5)
         << opt(r.e) << std::setw(8) << (r.dim > 0 ? std::string("inf") : opt(r.length)) << std::setw(6) << opt(r.type) << std::setw(7)
         << opt(r.socle) << std::setw(4) << (r.cm ? (*r.cm ? "yes" : "no") : "-") << std::setw(6) << opt(r.rank)
         << (r.dim < 0 ? std::string("0") : "(" + r.reduced_numerator.to_string() + ") / (1-t)^" + std::to_string(r.dim)) << "\n";
      for (const auto& u : r.undecided) os << "  undecided: " << u << "\n";
    }
  }
  for (const auto& c : s.criteria) {
    os << "\n" << c.id;
    for (const auto& [role, name] : c.inputs) os << "  " << role << "=" << name;
    os << "   -> " << to_string(c.verdict) << "\n";
    if (!c.parameters.empty()) {
      os << "  parameters:";
      for (const auto& [k, v] : c.parameters) os << " " << k << "=" << v;
      os << "\n";
    }
    auto line = [&](const Condition& h) {
      os << "    " << std::setw(9) << to_string(h.result) << h.name;
      for (const auto& [k, v] : h.values) os << "  " << k << "=" << v;
      if (!h.detail.empty()) os << "  (" << h.detail << ")";
      os << "\n";
    };
    if (!c.hypotheses.empty()) os << "  hypotheses\n";
    for (const auto& h : c.hypotheses) line(h);
    if (c.conclusion_asserted) os << "  conclusion: " << c.conclusion << "\n";
    if (!c.verification.empty()) os << "  verification (" << c.verification_method << ")\n";
    for (const auto& h : c.verification) line(h);
    for (const auto& u : c.undecided) os << "  undecided: " << u << "\n";
    for (const auto& n : c.notes) os << "  note: " << n << "\n";
  }
  for (const auto& e : s.errors) os << "\nerror: " << e << "\n";
  return os.str();
}

}  // namespace injdim

#endif  // INJDIM_REPORT_HPP
