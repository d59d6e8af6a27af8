#ifndef INJDIM_RING_HPP
#define INJDIM_RING_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "groebner.hpp"

namespace injdim {

/// R = S/I for S = k[x_1..x_n] standard graded and I homogeneous. The
/// irrelevant ideal (x_1..x_n) plays the role of the maximal ideal.
class RingPresentation {
 public:
  static std::shared_ptr<const RingPresentation> make(std::shared_ptr<const PolyRing> S, std::vector<Polynomial> ideal) {
    for (std::size_t i = 0; i < ideal.size(); ++i)
      if (!ideal[i].is_homogeneous())
        throw std::invalid_argument("ideal generator " + std::to_string(i) + " (" + S->to_string(ideal[i]) + ") is not homogeneous");
    FreeModule F(S, {0});
    std::vector<FreeElement> gens;
    for (const auto& f : ideal) gens.push_back(F.from_column({f}));
    GroebnerBasis gb = groebner_basis(F, gens);
    return std::shared_ptr<const RingPresentation>(new RingPresentation(std::move(S), std::move(ideal), std::move(gb)));
  }
  static std::shared_ptr<const RingPresentation> make(PrimeField field, std::vector<std::string> vars,
                                                      const std::vector<std::string>& ideal) {
    auto S = std::make_shared<const PolyRing>(field, std::move(vars));
    std::vector<Polynomial> gens;
    for (const auto& s : ideal) gens.push_back(S->parse(s));
    return make(S, std::move(gens));
  }

  const PolyRing& poly_ring() const noexcept { return *S_; }
  const std::shared_ptr<const PolyRing>& poly_ring_ptr() const noexcept { return S_; }
  const PrimeField& field() const noexcept { return S_->field(); }
  int nvars() const noexcept { return S_->nvars(); }
  const std::vector<Polynomial>& ideal_generators() const noexcept { return ideal_; }
  const GroebnerBasis& ideal_basis() const noexcept { return gb_; }
  std::vector<Polynomial> ideal_basis_polys() const {
    std::vector<Polynomial> out;
    for (const auto& e : gb_.elements) out.push_back(gb_.module.to_column(e)[0]);
    return out;
  }
  bool is_polynomial_ring() const noexcept { return gb_.elements.empty(); }
  /// True when I is the unit ideal (R = 0).
  bool is_zero_ring() const noexcept {
    return !gb_.elements.empty() && gb_.elements.front().lead().mono.is_one();
  }

  /// Normal form modulo I.
  Polynomial reduce(const Polynomial& f) const {
    return gb_.module.to_column(normal_form(gb_.module.from_column({f}), gb_))[0];
  }
  bool is_zero(const Polynomial& f) const { return reduce(f).is_zero(); }

  /// The ambient polynomial ring S as a presentation with zero ideal.
  std::shared_ptr<const RingPresentation> ambient() const { return make(S_, {}); }

  /// Generators f*e_comp of I*F for every ideal basis element f; a Gröbner
  /// basis of I*F in any graded module order on F.
  std::vector<FreeElement> ideal_times_basis(const FreeModule& F, int comp) const {
    std::vector<FreeElement> out;
    for (const auto& g : gb_.elements) {
      std::vector<Term> ts;
      for (const auto& t : g.terms) ts.push_back({t.mono, comp, t.coeff});
      out.push_back(F.from_terms(std::move(ts)));
    }
    return out;
  }
  std::vector<FreeElement> ideal_times_module(const FreeModule& F) const {
    std::vector<FreeElement> out;
    for (int c = 0; c < F.rank(); ++c) {
      auto part = ideal_times_basis(F, c);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

  std::string describe() const {
    std::string s = "k[";
    for (int i = 0; i < nvars(); ++i) s += (i ? "," : "") + S_->variables()[static_cast<std::size_t>(i)];
    s += "]";
    if (!ideal_.empty()) {
      s += "/(";
      for (std::size_t i = 0; i < ideal_.size(); ++i) s += (i ? ", " : "") + S_->to_string(ideal_[i]);
      s += ")";
    }
    return s;
  }

 private:
  RingPresentation(std::shared_ptr<const PolyRing> S, std::vector<Polynomial> ideal, GroebnerBasis gb)
      : S_(std::move(S)), ideal_(std::move(ideal)), gb_(std::move(gb)) {}

  std::shared_ptr<const PolyRing> S_;
  std::vector<Polynomial> ideal_;
  GroebnerBasis gb_;
};

using RingPtr = std::shared_ptr<const RingPresentation>;

}  // namespace injdim

#endif  // INJDIM_RING_HPP
