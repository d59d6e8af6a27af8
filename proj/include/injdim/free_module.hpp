#ifndef INJDIM_FREE_MODULE_HPP
#define INJDIM_FREE_MODULE_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace injdim {

/// A term c * m * e_comp of a free module.
struct Term {
  Monomial mono;
  int comp;
  Coeff coeff;
  bool operator==(const Term&) const = default;
};

/// Element of a graded free module: terms strictly decreasing in the module
/// order, nonzero coefficients.
struct FreeElement {
  std::vector<Term> terms;

  bool is_zero() const noexcept { return terms.empty(); }
  const Term& lead() const { return terms.front(); }
  bool operator==(const FreeElement&) const = default;
};

/// Module monomial orders. Every kind is graded by the component shifts
/// first unless it is position_over_term. `elimination_boundary` splits the
/// components into an upper block [0, b) and a lower block [b, rank); any
/// upper term is greater than any lower term.
struct ModuleOrder {
  enum class Kind { term_over_position, position_over_term, schreyer };

  Kind kind = Kind::term_over_position;
  int elimination_boundary = -1;
  /// Schreyer-induced order: e_i is weighted by the lead term of the i-th
  /// generator in the previous module, compared with `base`.
  std::shared_ptr<const ModuleOrder> base;
  std::vector<int> base_shifts;
  std::vector<std::pair<int, Monomial>> schreyer_leads;

  static ModuleOrder top() { return {}; }
  static ModuleOrder pot() {
    ModuleOrder o;
    o.kind = Kind::position_over_term;
    return o;
  }
  static ModuleOrder elimination(int boundary) {
    ModuleOrder o;
    o.elimination_boundary = boundary;
    return o;
  }
  static ModuleOrder schreyer(ModuleOrder base, std::vector<int> base_shifts, std::vector<std::pair<int, Monomial>> leads) {
    ModuleOrder o;
    o.kind = Kind::schreyer;
    o.base = std::make_shared<const ModuleOrder>(std::move(base));
    o.base_shifts = std::move(base_shifts);
    o.schreyer_leads = std::move(leads);
    return o;
  }
};

/// Compares the module monomials m1*e_c1 and m2*e_c2.
inline std::strong_ordering compare_module_monomials(const ModuleOrder& order, MonomialOrder mono_order,
                                                     const std::vector<int>& shifts, int c1, const Monomial& m1, int c2,
                                                     const Monomial& m2) {
  if (order.elimination_boundary >= 0) {
    bool up1 = c1 < order.elimination_boundary, up2 = c2 < order.elimination_boundary;
    if (up1 != up2) return up1 ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  switch (order.kind) {
    case ModuleOrder::Kind::term_over_position: {
      int d1 = m1.degree() + shifts[static_cast<std::size_t>(c1)];
      int d2 = m2.degree() + shifts[static_cast<std::size_t>(c2)];
      if (d1 != d2) return d1 <=> d2;
      if (auto c = compare_monomials(mono_order, m1, m2); c != 0) return c;
      return c2 <=> c1;
    }
    case ModuleOrder::Kind::position_over_term:
      if (c1 != c2) return c2 <=> c1;
      return compare_monomials(mono_order, m1, m2);
    case ModuleOrder::Kind::schreyer: {
      const auto& l1 = order.schreyer_leads.at(static_cast<std::size_t>(c1));
      const auto& l2 = order.schreyer_leads.at(static_cast<std::size_t>(c2));
      if (auto c = compare_module_monomials(*order.base, mono_order, order.base_shifts, l1.first, m1 * l1.second,
                                            l2.first, m2 * l2.second);
          c != 0)
        return c;
      return c2 <=> c1;
    }
  }
  return std::strong_ordering::equal;
}

/// Graded free module S^rank with generator degrees `shifts`, over an
/// ambient polynomial ring, with a fixed module order.
class FreeModule {
 public:
  FreeModule(std::shared_ptr<const PolyRing> ring, std::vector<int> shifts, ModuleOrder order = ModuleOrder::top())
      : ring_(std::move(ring)), shifts_(std::move(shifts)), order_(std::move(order)) {
    if (!ring_) throw std::invalid_argument("free module needs a ring");
  }

  const PolyRing& ring() const noexcept { return *ring_; }
  const std::shared_ptr<const PolyRing>& ring_ptr() const noexcept { return ring_; }
  const PrimeField& field() const noexcept { return ring_->field(); }
  int rank() const noexcept { return static_cast<int>(shifts_.size()); }
  const std::vector<int>& shifts() const noexcept { return shifts_; }
  const ModuleOrder& order() const noexcept { return order_; }

  std::strong_ordering compare(const Term& a, const Term& b) const {
    return compare_module_monomials(order_, ring_->order(), shifts_, a.comp, a.mono, b.comp, b.mono);
  }
  std::strong_ordering compare(int c1, const Monomial& m1, int c2, const Monomial& m2) const {
    return compare_module_monomials(order_, ring_->order(), shifts_, c1, m1, c2, m2);
  }

  int term_degree(const Term& t) const { return t.mono.degree() + shifts_[static_cast<std::size_t>(t.comp)]; }
  /// Degree of the lead term; elements handled by the engine are homogeneous.
  int degree(const FreeElement& f) const {
    if (f.is_zero()) throw std::invalid_argument("degree of zero element");
    return term_degree(f.lead());
  }
  bool is_homogeneous(const FreeElement& f) const {
    for (const auto& t : f.terms)
      if (term_degree(t) != term_degree(f.lead())) return false;
    return true;
  }

  FreeElement basis(int i) const {
    check_comp(i);
    return {{Term{ring_->one_monomial(), i, 1}}};
  }

  /// Canonicalizes an arbitrary term list.
  FreeElement from_terms(std::vector<Term> ts) const {
    for (const auto& t : ts) check_comp(t.comp);
    std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) { return compare(a, b) > 0; });
    FreeElement r;
    for (auto& t : ts) {
      if (!r.terms.empty() && r.terms.back().comp == t.comp && r.terms.back().mono == t.mono) {
        r.terms.back().coeff = field().add(r.terms.back().coeff, t.coeff);
        if (r.terms.back().coeff == 0) r.terms.pop_back();
      } else if (t.coeff != 0) {
        r.terms.push_back(t);
      }
    }
    return r;
  }

  /// Element with entries[i] in component i.
  FreeElement from_column(const std::vector<Polynomial>& entries) const {
    if (static_cast<int>(entries.size()) != rank()) throw std::invalid_argument("column length does not match rank");
    std::vector<Term> ts;
    for (std::size_t i = 0; i < entries.size(); ++i)
      for (const auto& t : entries[i].terms()) ts.push_back({t.mono, static_cast<int>(i), t.coeff});
    return from_terms(std::move(ts));
  }
  std::vector<Polynomial> to_column(const FreeElement& f) const {
    std::vector<std::vector<PolyTerm>> parts(static_cast<std::size_t>(rank()));
    for (const auto& t : f.terms) parts[static_cast<std::size_t>(t.comp)].push_back({t.mono, t.coeff});
    std::vector<Polynomial> out;
    out.reserve(parts.size());
    for (auto& p : parts) out.push_back(ring_->from_terms(std::move(p)));
    return out;
  }

  /// a*ca + b*cb.
  FreeElement combine(const FreeElement& a, Coeff ca, const FreeElement& b, Coeff cb) const {
    FreeElement r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    const PrimeField& F = field();
    auto i = a.terms.begin(), j = b.terms.begin();
    while (i != a.terms.end() || j != b.terms.end()) {
      std::strong_ordering c = i == a.terms.end()   ? std::strong_ordering::less
                               : j == b.terms.end() ? std::strong_ordering::greater
                                                    : compare(*i, *j);
      if (c > 0) {
        if (Coeff v = F.mul(i->coeff, ca)) r.terms.push_back({i->mono, i->comp, v});
        ++i;
      } else if (c < 0) {
        if (Coeff v = F.mul(j->coeff, cb)) r.terms.push_back({j->mono, j->comp, v});
        ++j;
      } else {
        Coeff v = F.add(F.mul(i->coeff, ca), F.mul(j->coeff, cb));
        if (v) r.terms.push_back({i->mono, i->comp, v});
        ++i;
        ++j;
      }
    }
    return r;
  }
  FreeElement add(const FreeElement& a, const FreeElement& b) const { return combine(a, 1, b, 1); }
  FreeElement sub(const FreeElement& a, const FreeElement& b) const { return combine(a, 1, b, field().neg(1)); }

  FreeElement scale(const FreeElement& a, Coeff c) const {
    if (c == 0) return {};
    FreeElement r = a;
    for (auto& t : r.terms) t.coeff = field().mul(t.coeff, c);
    return r;
  }
  /// c*m*a; order is preserved under multiplication by a monomial.
  FreeElement mul_term(const FreeElement& a, Coeff c, const Monomial& m) const {
    if (c == 0) return {};
    FreeElement r;
    r.terms.reserve(a.terms.size());
    for (const auto& t : a.terms) r.terms.push_back({t.mono * m, t.comp, field().mul(t.coeff, c)});
    return r;
  }
  FreeElement mul_poly(const FreeElement& a, const Polynomial& p) const {
    FreeElement acc;
    for (const auto& t : p.terms()) acc = add(acc, mul_term(a, t.coeff, t.mono));
    return acc;
  }
  FreeElement make_monic(const FreeElement& a) const {
    if (a.is_zero()) return a;
    return scale(a, field().inv(a.lead().coeff));
  }

  /// Re-sorts an element for this module's order (used when an element moves
  /// between modules with the same components but different orders).
  FreeElement adopt(const FreeElement& f) const { return from_terms(f.terms); }

  std::string to_string(const FreeElement& f) const {
    auto col = to_column(f);
    std::string s = "(";
    for (std::size_t i = 0; i < col.size(); ++i) s += (i ? ", " : "") + ring_->to_string(col[i]);
    return s + ")";
  }

 private:
  void check_comp(int c) const {
    if (c < 0 || c >= rank()) throw std::out_of_range("component index " + std::to_string(c) + " out of range");
  }

  std::shared_ptr<const PolyRing> ring_;
  std::vector<int> shifts_;
  ModuleOrder order_;
};

}  // namespace injdim

#endif  // INJDIM_FREE_MODULE_HPP
