#ifndef INJDIM_RESOLUTION_HPP
#define INJDIM_RESOLUTION_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "syzygy.hpp"

namespace injdim {

/// Raised when a bounded computation cannot decide within its caps.
class Undecided : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Graded free complex F_L -> ... -> F_0 over `ring` (S or R).
/// differentials[i-1] holds d_i : F_i -> F_{i-1} as columns in F_{i-1}.
struct FreeResolution {
  RingPtr ring;
  std::vector<std::vector<int>> shifts;                 // generator degrees of F_0..F_L
  std::vector<std::vector<FreeElement>> differentials;  // d_1..d_L
  bool minimal = true;
  /// True when F_{L+1} = 0 is known, i.e. the resolution is complete.
  bool complete = false;

  int length() const noexcept { return static_cast<int>(shifts.size()) - 1; }
  int rank(int i) const { return (i < 0 || i > length()) ? 0 : static_cast<int>(shifts[static_cast<std::size_t>(i)].size()); }
  std::vector<int> betti_numbers() const {
    std::vector<int> b;
    for (const auto& s : shifts) b.push_back(static_cast<int>(s.size()));
    return b;
  }
  FreeModule free_module(int i) const { return FreeModule(ring->poly_ring_ptr(), shifts.at(static_cast<std::size_t>(i))); }
  const std::vector<FreeElement>& differential(int i) const { return differentials.at(static_cast<std::size_t>(i - 1)); }
  /// Entry (row, col) of d_i as a polynomial.
  Polynomial entry(int i, int row, int col) const {
    return free_module(i - 1).to_column(differential(i).at(static_cast<std::size_t>(col)))[static_cast<std::size_t>(row)];
  }
};

namespace detail {

inline void extend_resolution(FreeResolution& F, int max_length) {
  while (!F.complete && F.length() < max_length) {
    const int i = F.length();
    std::vector<FreeElement> next;
    if (i == 0) {
      throw std::logic_error("resolution has no presentation step");
    }
    const auto& d = F.differential(i);
    if (d.empty()) {
      F.complete = true;
      break;
    }
    next = syzygies_over_R(F.ring, F.free_module(i - 1), d, F.shifts[static_cast<std::size_t>(i)]);
    if (next.empty()) {
      F.complete = true;
      break;
    }
    FreeModule Fi = F.free_module(i);
    std::vector<int> degs;
    for (const auto& c : next) degs.push_back(Fi.degree(c));
    F.shifts.push_back(degs);
    F.differentials.push_back(std::move(next));
  }
}

inline FreeResolution start_resolution(const GradedModule& M) {
  GradedModule P = minimize_presentation(M);
  FreeResolution F;
  F.ring = P.ring_ptr();
  F.shifts.push_back(P.degrees());
  if (P.relations().empty()) {
    F.complete = true;
    return F;
  }
  FreeModule F0 = P.cover();
  std::vector<int> degs;
  for (const auto& r : P.relations()) degs.push_back(F0.degree(r));
  F.shifts.push_back(degs);
  F.differentials.push_back(P.relations());
  return F;
}

}  // namespace detail

/// Minimal graded free resolution over R truncated at step L (F_0..F_L).
inline FreeResolution free_resolution_R(const GradedModule& M, int L) {
  if (L < 0) throw std::invalid_argument("resolution length bound must be non-negative");
  FreeResolution F = detail::start_resolution(M);
  if (F.length() > L) {
    F.shifts.resize(static_cast<std::size_t>(L) + 1);
    F.differentials.resize(static_cast<std::size_t>(L));
    return F;
  }
  detail::extend_resolution(F, L);
  return F;
}

/// Extends an R-resolution in place up to length L.
inline void extend_resolution(FreeResolution& F, int L) { detail::extend_resolution(F, L); }

/// Minimal graded free resolution over the ambient polynomial ring S;
/// finite by the syzygy theorem.
inline FreeResolution minimal_free_resolution_S(const GradedModule& M) {
  FreeResolution F = detail::start_resolution(M.over_ambient());
  detail::extend_resolution(F, M.ring().nvars() + 1);
  if (!F.complete) throw std::logic_error("resolution over a polynomial ring longer than the number of variables");
  return F;
}

/// d_i ∘ d_{i+1} = 0 modulo the ring's ideal, for all i.
inline bool is_complex(const FreeResolution& F) {
  for (int i = 1; i < F.length(); ++i) {
    FreeModule Fi1 = F.free_module(i - 1);
    FreeModule Fi = F.free_module(i);
    const auto& di = F.differential(i);
    for (const auto& col : F.differential(i + 1)) {
      FreeElement acc;
      for (const auto& t : col.terms) acc = Fi1.add(acc, Fi1.mul_term(di[static_cast<std::size_t>(t.comp)], t.coeff, t.mono));
      if (!GradedModule::reduce_mod_ideal(*F.ring, Fi1, acc).is_zero()) return false;
    }
    (void)Fi;
  }
  return true;
}

/// Every differential entry lies in the irrelevant ideal.
inline bool is_minimal_complex(const FreeResolution& F) {
  for (int i = 1; i <= F.length(); ++i)
    for (const auto& col : F.differential(i))
      for (const auto& t : col.terms)
        if (t.mono.is_one()) return false;
  return true;
}

/// ker d_i = im d_{i+1} (mod I) for 1 <= i < L, checked by mutual membership.
inline bool is_exact(const FreeResolution& F) {
  for (int i = 1; i < F.length(); ++i) {
    FreeModule Fi = F.free_module(i);
    auto kernel = syzygies_over_R(F.ring, F.free_module(i - 1), F.differential(i), F.shifts[static_cast<std::size_t>(i)]);
    GradedModule image_mod = GradedModule::from_relations(F.ring, F.shifts[static_cast<std::size_t>(i)], F.differential(i + 1));
    Reducer red(image_mod.basis());
    for (const auto& k : kernel)
      if (!red.contains(k)) return false;
  }
  return is_complex(F);
}

}  // namespace injdim

#endif  // INJDIM_RESOLUTION_HPP
