#ifndef INJDIM_EXT_HPP
#define INJDIM_EXT_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hilbert.hpp"
#include "resolution.hpp"

namespace injdim {

enum class BaseRing { S, R };

/// Ext^i_base(source, target) presented as a graded module.
struct ExtModule {
  GradedModule module;
  int index = 0;
  BaseRing base = BaseRing::R;
};

/// Computes Ext^i(M, C) for several i from one resolution of M, via
/// H^i(Hom(F_•, C)). Each Hom(F_j, C) is ⊕_l C(a_{j,l}).
class ExtCalculator {
 public:
  /// `res_cap` bounds the resolution length; requests needing more raise
  /// Undecided.
  ExtCalculator(const GradedModule& M, const GradedModule& C, BaseRing base = BaseRing::R, int res_cap = -1)
      : base_(base) {
    if (M.ring_ptr() != C.ring_ptr() && M.ring().poly_ring().variables() != C.ring().poly_ring().variables())
      throw std::invalid_argument("ext: modules over different rings");
    if (base == BaseRing::S) {
      M_ = M.over_ambient();
      C_ = minimize_presentation(C.over_ambient().change_ring(M_.ring_ptr()));
    } else {
      M_ = M;
      C_ = minimize_presentation(C.change_ring(M.ring_ptr()));
    }
    res_cap_ = res_cap >= 0 ? res_cap : 2 * M.ring().nvars() + 4;
    F_ = free_resolution_R(M_, 1);
  }

  const FreeResolution& resolution() const noexcept { return F_; }
  const GradedModule& target() const noexcept { return C_; }
  BaseRing base() const noexcept { return base_; }

  ExtModule ext(int i) {
    if (i < 0) throw std::invalid_argument("negative Ext index");
    ensure_length(i + 1);
    GradedModule Hi = hom_term(i);
    FreeModule Hcov = Hi.cover();
    RingPtr ring = M_.ring_ptr();
    if (Hi.num_generators() == 0) return {GradedModule::free(ring, {}), i, base_};

    // Cycles: kernel of Hom(F_i, C) -> Hom(F_{i+1}, C).
    GradedModule Hnext = hom_term(i + 1);
    std::vector<FreeElement> cycles;
    if (Hnext.num_generators() == 0) {
      for (int j = 0; j < Hi.num_generators(); ++j) cycles.push_back(Hcov.basis(j));
    } else {
      cycles = kernel_of_cokernel_map(hom_map(i + 1, Hi, Hnext), Hi, Hnext, false).generators;
    }
    // Boundaries: image of Hom(F_{i-1}, C), together with C's relations.
    std::vector<FreeElement> brels = Hi.relations();
    if (i >= 1) {
      GradedModule Hprev = hom_term(i - 1);
      auto images = hom_map(i, Hprev, Hi);
      for (auto& e : images)
        if (!e.is_zero()) brels.push_back(std::move(e));
    }
    GradedModule quotient = GradedModule::from_relations(ring, Hi.degrees(), std::move(brels));
    std::vector<FreeElement> gens = minimal_generators(Hcov, cycles, quotient.basis().elements);
    if (gens.empty()) return {GradedModule::free(ring, {}), i, base_};
    std::vector<int> degs;
    for (const auto& g : gens) degs.push_back(Hcov.degree(g));
    GradedModule free_gens = GradedModule::free(ring, degs);
    auto rels = kernel_of_cokernel_map(gens, free_gens, quotient, false).generators;
    GradedModule E = GradedModule::from_relations(ring, degs, std::move(rels));
    return {minimize_presentation(E), i, base_};
  }

 private:
  void ensure_length(int L) {
    if (F_.complete || F_.length() >= L) return;
    if (L > res_cap_) {
      extend_resolution(F_, res_cap_);
      if (F_.complete || F_.length() >= L) return;
      throw Undecided("Ext needs a resolution of length " + std::to_string(L) + " beyond the cap " + std::to_string(res_cap_));
    }
    extend_resolution(F_, L);
  }

  /// Hom(F_j, C) = ⊕_l C(a_{j,l}); generator (l, c) has index l*g_C + c.
  GradedModule hom_term(int j) {
    if (auto it = hom_cache_.find(j); it != hom_cache_.end()) return it->second;
    std::vector<GradedModule> parts;
    if (j <= F_.length())
      for (int a : F_.shifts[static_cast<std::size_t>(j)]) parts.push_back(C_.twist(a));
    GradedModule H = parts.empty() ? GradedModule::free(M_.ring_ptr(), {}) : direct_sum(parts);
    hom_cache_.emplace(j, H);
    return H;
  }

  /// Images of the generators of Hom(F_{j-1}, C) under d_j^*.
  std::vector<FreeElement> hom_map(int j, const GradedModule& from, const GradedModule& to) {
    const int gC = C_.num_generators();
    FreeModule T = to.cover();
    std::vector<FreeElement> images(static_cast<std::size_t>(from.num_generators()));
    if (j > F_.length()) return images;
    const auto& d = F_.differential(j);
    std::vector<std::vector<Term>> acc(images.size());
    for (std::size_t lp = 0; lp < d.size(); ++lp)
      for (const auto& t : d[lp].terms)
        for (int c = 0; c < gC; ++c)
          acc[static_cast<std::size_t>(t.comp * gC + c)].push_back({t.mono, static_cast<int>(lp) * gC + c, t.coeff});
    for (std::size_t k = 0; k < images.size(); ++k) images[k] = T.from_terms(std::move(acc[k]));
    return images;
  }

  BaseRing base_;
  GradedModule M_;
  GradedModule C_;
  int res_cap_ = 0;
  FreeResolution F_;
  std::map<int, GradedModule> hom_cache_;
};

/// Ext^i_base(M, C).
inline ExtModule ext(const GradedModule& M, const GradedModule& C, int i, BaseRing base = BaseRing::R, int res_cap = -1) {
  return ExtCalculator(M, C, base, res_cap).ext(i);
}

/// Hom_R(M, C) computed directly as the kernel of one map: homomorphisms are
/// tuples (c_j) in C^g with Σ r_{jk} c_j = 0 for every relation of M.
inline GradedModule hom_direct(const GradedModule& M, const GradedModule& C0) {
  GradedModule C = minimize_presentation(C0);
  GradedModule Mp = minimize_presentation(M);
  const int g = Mp.num_generators();
  const int gC = C.num_generators();
  RingPtr ring = M.ring_ptr();
  if (g == 0 || gC == 0) return GradedModule::free(ring, {});
  std::vector<GradedModule> src_parts, tgt_parts;
  FreeModule F0 = Mp.cover();
  std::vector<int> rel_degs;
  for (const auto& r : Mp.relations()) rel_degs.push_back(F0.degree(r));
  for (int d : Mp.degrees()) src_parts.push_back(C.twist(d));
  for (int d : rel_degs) tgt_parts.push_back(C.twist(d));
  GradedModule src = direct_sum(src_parts);
  if (tgt_parts.empty()) return src;
  GradedModule tgt = direct_sum(tgt_parts);
  FreeModule T = tgt.cover();
  std::vector<std::vector<Term>> acc(static_cast<std::size_t>(src.num_generators()));
  for (std::size_t k = 0; k < Mp.relations().size(); ++k)
    for (const auto& t : Mp.relations()[k].terms)
      for (int c = 0; c < gC; ++c) acc[static_cast<std::size_t>(t.comp * gC + c)].push_back({t.mono, static_cast<int>(k) * gC + c, t.coeff});
  std::vector<FreeElement> images;
  for (auto& a : acc) images.push_back(T.from_terms(std::move(a)));
  auto K = kernel_of_cokernel_map(images, src, tgt, false).generators;
  auto gens = minimal_generators(src.cover(), K, src.basis().elements);
  if (gens.empty()) return GradedModule::free(ring, {});
  std::vector<int> degs;
  for (const auto& x : gens) degs.push_back(src.cover().degree(x));
  auto rels = kernel_of_cokernel_map(gens, GradedModule::free(ring, degs), src, false).generators;
  return minimize_presentation(GradedModule::from_relations(ring, degs, std::move(rels)));
}

}  // namespace injdim

#endif  // INJDIM_EXT_HPP
