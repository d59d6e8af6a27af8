#ifndef INJDIM_HILBERT_HPP
#define INJDIM_HILBERT_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "module.hpp"

namespace injdim {

/// Integer Laurent polynomial sum c[i] t^(low+i), trimmed at both ends.
struct LaurentPoly {
  int low = 0;
  std::vector<std::int64_t> coeffs;

  static LaurentPoly monomial(int exp, std::int64_t c = 1) { return LaurentPoly{exp, {c}}.trimmed(); }
  bool is_zero() const noexcept { return coeffs.empty(); }
  int high() const noexcept { return low + static_cast<int>(coeffs.size()) - 1; }
  std::int64_t at(int e) const noexcept {
    int i = e - low;
    return (i < 0 || i >= static_cast<int>(coeffs.size())) ? 0 : coeffs[static_cast<std::size_t>(i)];
  }
  std::int64_t value_at_one() const noexcept {
    std::int64_t s = 0;
    for (auto c : coeffs) s += c;
    return s;
  }

  LaurentPoly trimmed() const {
    LaurentPoly r = *this;
    while (!r.coeffs.empty() && r.coeffs.back() == 0) r.coeffs.pop_back();
    std::size_t k = 0;
    while (k < r.coeffs.size() && r.coeffs[k] == 0) ++k;
    r.coeffs.erase(r.coeffs.begin(), r.coeffs.begin() + static_cast<std::ptrdiff_t>(k));
    r.low = r.coeffs.empty() ? 0 : r.low + static_cast<int>(k);
    return r;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    LaurentPoly r;
    r.low = std::min(a.low, b.low);
    r.coeffs.assign(static_cast<std::size_t>(std::max(a.high(), b.high()) - r.low + 1), 0);
    for (int e = a.low; e <= a.high(); ++e) r.coeffs[static_cast<std::size_t>(e - r.low)] += a.at(e);
    for (int e = b.low; e <= b.high(); ++e) r.coeffs[static_cast<std::size_t>(e - r.low)] += b.at(e);
    return r.trimmed();
  }
  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r = a;
    for (auto& c : r.coeffs) c = -c;
    return r;
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    LaurentPoly r;
    r.low = a.low + b.low;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    return r.trimmed();
  }
  LaurentPoly shifted(int s) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.low += s;
    return r;
  }
  /// Exact quotient by (1 - t); requires value_at_one() == 0.
  LaurentPoly divided_by_one_minus_t() const {
    // p = (1 - t) q  =>  q_k = sum_{j<=k} p_j.
    LaurentPoly q;
    q.low = low;
    std::int64_t run = 0;
    for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) {
      run += coeffs[i];
      q.coeffs.push_back(run);
    }
    return q.trimmed();
  }

  bool operator==(const LaurentPoly& o) const { return low == o.low && coeffs == o.coeffs; }

  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string s;
    for (int e = low; e <= high(); ++e) {
      std::int64_t c = at(e);
      if (c == 0) continue;
      std::int64_t a = c < 0 ? -c : c;
      if (s.empty())
        s += c < 0 ? "-" : "";
      else
        s += c < 0 ? " - " : " + ";
      if (e == 0) {
        s += std::to_string(a);
        continue;
      }
      if (a != 1) s += std::to_string(a) + "*";
      s += var;
      if (e != 1) s += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
    }
    return s;
  }
};

namespace detail {

inline void minimalize_monomials(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& o : out)
      if (o.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  gens = std::move(out);
}

}  // namespace detail

/// Numerator N(t) with H_{S/J}(t) = N(t)/(1-t)^n for a monomial ideal J, by
/// pivoting on variables: N(J) = N(J + (x)) + t * N(J : x).
inline LaurentPoly hilbert_numerator(std::vector<Monomial> gens, int nvars) {
  detail::minimalize_monomials(gens);
  if (gens.empty()) return LaurentPoly::monomial(0);
  if (gens.front().is_one()) return {};
  std::vector<int> count(static_cast<std::size_t>(nvars), 0);
  for (const auto& g : gens)
    for (int i = 0; i < nvars; ++i)
      if (g[i]) ++count[static_cast<std::size_t>(i)];
  int pivot = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  if (count[static_cast<std::size_t>(pivot)] <= 1) {
    // Pairwise coprime generators: a complete intersection.
    LaurentPoly r = LaurentPoly::monomial(0);
    for (const auto& g : gens) r = r * (LaurentPoly::monomial(0) - LaurentPoly::monomial(g.degree()));
    return r;
  }
  Monomial x = Monomial::variable(nvars, pivot);
  std::vector<Monomial> plus{x};
  std::vector<Monomial> colon;
  for (const auto& g : gens) {
    if (g[pivot] == 0) plus.push_back(g);
    colon.push_back(g[pivot] ? x.quotient_of(g) : g);
  }
  return hilbert_numerator(std::move(plus), nvars) + hilbert_numerator(std::move(colon), nvars).shifted(1);
}

/// Hilbert series N(t)/(1-t)^n and its reduced form q(t)/(1-t)^d.
struct HilbertSeries {
  LaurentPoly numerator;
  int nvars = 0;
  LaurentPoly reduced;
  int dim = -1;  // -1 for the zero module

  static HilbertSeries from_numerator(LaurentPoly num, int nvars) {
    HilbertSeries h;
    h.numerator = num.trimmed();
    h.nvars = nvars;
    h.reduced = h.numerator;
    h.dim = nvars;
    if (h.reduced.is_zero()) {
      h.dim = -1;
      return h;
    }
    while (h.dim > 0 && h.reduced.value_at_one() == 0) {
      h.reduced = h.reduced.divided_by_one_minus_t();
      --h.dim;
    }
    return h;
  }

  bool is_zero() const noexcept { return numerator.is_zero(); }

  /// dim_k M_d.
  std::int64_t coefficient(int d) const {
    if (is_zero()) return 0;
    if (dim == 0) return reduced.at(d);
    std::int64_t s = 0;
    for (int e = reduced.low; e <= reduced.high() && e <= d; ++e) s += reduced.at(e) * binomial(d - e + dim - 1, dim - 1);
    return s;
  }
  std::vector<std::int64_t> coefficients(int from, int to) const {
    std::vector<std::int64_t> out;
    for (int d = from; d <= to; ++d) out.push_back(coefficient(d));
    return out;
  }
  /// Lowest degree with a nonzero component.
  int initial_degree() const { return numerator.low; }

  static std::int64_t binomial(int n, int k) {
    if (k < 0 || n < k) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  }
};

/// Hilbert series of a presented module, from the lead terms of its
/// relation basis.
inline HilbertSeries hilbert_series(const GradedModule& M) {
  const int n = M.ring().nvars();
  std::vector<std::vector<Monomial>> leads(static_cast<std::size_t>(M.num_generators()));
  for (const auto& g : M.basis().elements) leads[static_cast<std::size_t>(g.lead().comp)].push_back(g.lead().mono);
  LaurentPoly num;
  for (int j = 0; j < M.num_generators(); ++j)
    num = num + hilbert_numerator(leads[static_cast<std::size_t>(j)], n).shifted(M.degrees()[static_cast<std::size_t>(j)]);
  return HilbertSeries::from_numerator(num, n);
}

}  // namespace injdim

#endif  // INJDIM_HILBERT_HPP
