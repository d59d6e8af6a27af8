#ifndef INJDIM_GROEBNER_HPP
#define INJDIM_GROEBNER_HPP

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "free_module.hpp"

namespace injdim {

/// Gröbner basis of a submodule of a graded free module.
struct GroebnerBasis {
  FreeModule module;
  std::vector<FreeElement> elements;  // monic
  bool reduced = false;

  std::size_t size() const noexcept { return elements.size(); }
};

namespace detail {

/// Divisor lookup over the lead terms of a growing basis.
class LeadIndex {
 public:
  explicit LeadIndex(int rank) : by_comp_(static_cast<std::size_t>(rank)) {}

  void insert(int idx, const Term& lead) {
    by_comp_[static_cast<std::size_t>(lead.comp)].push_back({lead.mono, lead.mono.support_mask(), idx});
  }
  /// Index of some basis element whose lead divides m*e_comp, or -1.
  int find(int comp, const Monomial& m) const {
    const std::uint32_t mask = m.support_mask();
    for (const auto& e : by_comp_[static_cast<std::size_t>(comp)])
      if ((e.mask & ~mask) == 0 && e.mono.divides(m)) return e.idx;
    return -1;
  }

 private:
  struct Entry {
    Monomial mono;
    std::uint32_t mask;
    int idx;
  };
  std::vector<std::vector<Entry>> by_comp_;
};

/// Full reduction of f by monic basis elements located through `index`.
inline FreeElement reduce_full(const FreeModule& F, FreeElement f, const std::vector<FreeElement>& basis,
                               const LeadIndex& index, int skip = -1) {
  FreeElement rem;
  const PrimeField& K = F.field();
  while (!f.is_zero()) {
    const Term t = f.lead();
    int g = index.find(t.comp, t.mono);
    if (g == skip) g = -1;
    if (g >= 0 && g != skip) {
      const FreeElement& b = basis[static_cast<std::size_t>(g)];
      f = F.combine(f, 1, F.mul_term(b, 1, b.lead().mono.quotient_of(t.mono)), K.neg(t.coeff));
    } else {
      rem.terms.push_back(t);
      f.terms.erase(f.terms.begin());
    }
  }
  return rem;
}

inline bool reducible_term(const LeadIndex& index, const Term& t) { return index.find(t.comp, t.mono) >= 0; }

}  // namespace detail

/// Fully reduced remainder of f modulo G; zero iff f lies in the submodule.
inline FreeElement normal_form(const FreeElement& f, const GroebnerBasis& G) {
  detail::LeadIndex index(G.module.rank());
  for (std::size_t i = 0; i < G.elements.size(); ++i) index.insert(static_cast<int>(i), G.elements[i].lead());
  for (const auto& t : f.terms)
    if (t.comp < 0 || t.comp >= G.module.rank()) throw std::invalid_argument("element does not live in the basis' ambient module");
  return detail::reduce_full(G.module, f, G.elements, index);
}

/// Reusable reducer for many normal forms against one basis.
class Reducer {
 public:
  explicit Reducer(const GroebnerBasis& G) : G_(&G), index_(G.module.rank()) {
    for (std::size_t i = 0; i < G.elements.size(); ++i) index_.insert(static_cast<int>(i), G.elements[i].lead());
  }
  FreeElement operator()(const FreeElement& f) const { return detail::reduce_full(G_->module, f, G_->elements, index_); }
  bool contains(const FreeElement& f) const { return (*this)(f).is_zero(); }

 private:
  const GroebnerBasis* G_;
  detail::LeadIndex index_;
};

inline bool contains(const GroebnerBasis& G, const FreeElement& f) { return normal_form(f, G).is_zero(); }

struct BuchbergerResult {
  GroebnerBasis basis;
  /// minimal[i]: input generator i was not in the span of lower-degree data
  /// and earlier generators of its degree, i.e. it is part of a minimal
  /// generating set (graded case).
  std::vector<bool> minimal;
};

/// Homogeneous Buchberger algorithm, processed degree by degree with the
/// normal selection strategy and the Gebauer–Möller criteria.
/// `known_basis` must already be a Gröbner basis in F's order; pairs among
/// its elements are never formed. Inputs are absorbed in degree order, which
/// yields the minimal-generator mask as a by-product.
inline BuchbergerResult buchberger(const FreeModule& F, const std::vector<FreeElement>& gens,
                                   const std::vector<FreeElement>& known_basis = {}) {
  const PrimeField& K = F.field();
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!gens[i].is_zero() && !F.is_homogeneous(gens[i]))
      throw std::invalid_argument("buchberger: generator " + std::to_string(i) + " is not homogeneous");

  // Product criterion only applies to ideals.
  const bool ideal_case = F.rank() == 1;

  struct Pair {
    int i, j;
    Monomial lcm;
    int degree;
  };
  std::vector<FreeElement> G;
  std::vector<int> Gdeg;
  detail::LeadIndex index(F.rank());
  std::vector<Pair> pairs;

  auto lead_lcm = [&](int a, int b) { return G[static_cast<std::size_t>(a)].lead().mono.lcm(G[static_cast<std::size_t>(b)].lead().mono); };

  auto add_element = [&](FreeElement h, bool make_pairs) {
    h = F.make_monic(h);
    const int k = static_cast<int>(G.size());
    const Term hl = h.lead();
    G.push_back(std::move(h));
    Gdeg.push_back(F.term_degree(hl));
    index.insert(k, hl);
    if (!make_pairs) return;

    struct Cand {
      int i;
      Monomial lcm;
      bool coprime;
      bool alive = true;
    };
    std::vector<Cand> C;
    for (int i = 0; i < k; ++i) {
      const Term& il = G[static_cast<std::size_t>(i)].lead();
      if (il.comp != hl.comp) continue;
      C.push_back({i, il.mono.lcm(hl.mono), ideal_case && il.mono.coprime(hl.mono)});
    }
    // Criterion M: drop (i,k) if some (j,k) has lcm properly dividing it.
    for (auto& a : C) {
      for (const auto& b : C) {
        if (&a == &b || !b.alive) continue;
        if (b.lcm.divides(a.lcm) && !(b.lcm == a.lcm)) {
          a.alive = false;
          break;
        }
      }
    }
    // Criterion F: among equal lcms keep one, preferring a coprime one (which
    // is then dropped by the product criterion).
    for (std::size_t x = 0; x < C.size(); ++x) {
      if (!C[x].alive) continue;
      for (std::size_t y = x + 1; y < C.size(); ++y) {
        if (!C[y].alive || !(C[x].lcm == C[y].lcm)) continue;
        if (C[y].coprime && !C[x].coprime) std::swap(C[x].coprime, C[y].coprime), std::swap(C[x].i, C[y].i);
        C[y].alive = false;
      }
    }
    // Criterion B on old pairs.
    std::vector<Pair> kept;
    kept.reserve(pairs.size());
    for (auto& p : pairs) {
      const Term& pl = G[static_cast<std::size_t>(p.i)].lead();
      if (pl.comp == hl.comp && hl.mono.divides(p.lcm) && !(lead_lcm(p.i, k) == p.lcm) && !(lead_lcm(p.j, k) == p.lcm))
        continue;
      kept.push_back(std::move(p));
    }
    pairs = std::move(kept);
    for (const auto& c : C)
      if (c.alive && !c.coprime)
        pairs.push_back({c.i, k, c.lcm, c.lcm.degree() + F.shifts()[static_cast<std::size_t>(hl.comp)]});
  };

  for (const auto& b : known_basis)
    if (!b.is_zero()) add_element(b, false);

  // Bucket the inputs by degree, keeping input order within a degree.
  std::map<int, std::vector<int>> by_degree;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!gens[i].is_zero()) by_degree[F.degree(gens[i])].push_back(static_cast<int>(i));

  std::vector<bool> minimal(gens.size(), false);
  while (!pairs.empty() || !by_degree.empty()) {
    int d = std::numeric_limits<int>::max();
    for (const auto& p : pairs) d = std::min(d, p.degree);
    if (!by_degree.empty()) d = std::min(d, by_degree.begin()->first);

    std::vector<Pair> now;
    std::vector<Pair> later;
    for (auto& p : pairs) (p.degree == d ? now : later).push_back(std::move(p));
    pairs = std::move(later);
    // Deterministic processing order.
    std::sort(now.begin(), now.end(), [](const Pair& a, const Pair& b) { return a.i != b.i ? a.i < b.i : a.j < b.j; });
    for (const auto& p : now) {
      const FreeElement& fi = G[static_cast<std::size_t>(p.i)];
      const FreeElement& fj = G[static_cast<std::size_t>(p.j)];
      FreeElement s = F.combine(F.mul_term(fi, 1, fi.lead().mono.quotient_of(p.lcm)), 1,
                                F.mul_term(fj, 1, fj.lead().mono.quotient_of(p.lcm)), K.neg(1));
      FreeElement r = detail::reduce_full(F, std::move(s), G, index);
      if (!r.is_zero()) add_element(std::move(r), true);
    }
    if (!by_degree.empty() && by_degree.begin()->first == d) {
      for (int gi : by_degree.begin()->second) {
        FreeElement r = detail::reduce_full(F, gens[static_cast<std::size_t>(gi)], G, index);
        if (!r.is_zero()) {
          minimal[static_cast<std::size_t>(gi)] = true;
          add_element(std::move(r), true);
        }
      }
      by_degree.erase(by_degree.begin());
    }
  }

  // Inter-reduce tails and sort by decreasing lead term.
  std::vector<FreeElement> out;
  out.reserve(G.size());
  for (std::size_t i = 0; i < G.size(); ++i) {
    FreeElement tail = G[i];
    Term lead = tail.lead();
    tail.terms.erase(tail.terms.begin());
    FreeElement red = detail::reduce_full(F, std::move(tail), G, index, static_cast<int>(i));
    FreeElement e;
    e.terms.reserve(red.terms.size() + 1);
    e.terms.push_back(lead);
    e.terms.insert(e.terms.end(), red.terms.begin(), red.terms.end());
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [&](const FreeElement& a, const FreeElement& b) { return F.compare(a.lead(), b.lead()) > 0; });
  return {GroebnerBasis{F, std::move(out), true}, std::move(minimal)};
}

/// Reduced Gröbner basis of the submodule generated by `gens`.
inline GroebnerBasis groebner_basis(const FreeModule& F, const std::vector<FreeElement>& gens) {
  return buchberger(F, gens).basis;
}

/// S-pair criterion check: every S-pair reduces to zero.
inline bool satisfies_buchberger_criterion(const GroebnerBasis& G) {
  const FreeModule& F = G.module;
  Reducer red(G);
  for (std::size_t i = 0; i < G.elements.size(); ++i)
    for (std::size_t j = i + 1; j < G.elements.size(); ++j) {
      const auto& a = G.elements[i];
      const auto& b = G.elements[j];
      if (a.lead().comp != b.lead().comp) continue;
      Monomial l = a.lead().mono.lcm(b.lead().mono);
      FreeElement s = F.combine(F.mul_term(a, F.field().inv(a.lead().coeff), a.lead().mono.quotient_of(l)), 1,
                                F.mul_term(b, F.field().inv(b.lead().coeff), b.lead().mono.quotient_of(l)),
                                F.field().neg(1));
      if (!red.contains(s)) return false;
    }
  return true;
}

}  // namespace injdim

#endif  // INJDIM_GROEBNER_HPP
