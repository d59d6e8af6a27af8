#ifndef INJDIM_SYZYGY_HPP
#define INJDIM_SYZYGY_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "module.hpp"

namespace injdim {

/// Generators of a submodule of a free cover, with their Gröbner basis.
struct SubmodulePresentation {
  FreeModule ambient;
  std::vector<FreeElement> generators;
  GroebnerBasis basis;
};

/// Raised when a matrix does not induce a map of the given cokernels.
class IllDefinedMap : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Elements of the free cover of `source` mapped by `images` into the
/// relation module of `target`: {e : φ(e) ∈ im P_target + I F_target}.
/// images[j] is the image of source generator j, an element of target's cover.
inline SubmodulePresentation kernel_of_cokernel_map(const std::vector<FreeElement>& images, const GradedModule& source,
                                                    const GradedModule& target, bool validate = true) {
  const int gs = source.num_generators();
  const int gt = target.num_generators();
  if (static_cast<int>(images.size()) != gs)
    throw std::invalid_argument("kernel_of_cokernel_map: " + std::to_string(images.size()) + " images for " +
                                std::to_string(gs) + " generators");
  FreeModule T = target.cover();
  FreeModule Src = source.cover();
  for (int j = 0; j < gs; ++j) {
    const auto& im = images[static_cast<std::size_t>(j)];
    if (im.is_zero()) continue;
    if (!T.is_homogeneous(im) || T.degree(im) != source.degrees()[static_cast<std::size_t>(j)])
      throw IllDefinedMap("image of generator " + std::to_string(j) + " is not homogeneous of degree " +
                          std::to_string(source.degrees()[static_cast<std::size_t>(j)]));
  }
  auto apply = [&](const FreeElement& e) {
    FreeElement acc;
    for (const auto& t : e.terms) acc = T.add(acc, T.mul_term(images[static_cast<std::size_t>(t.comp)], t.coeff, t.mono));
    return acc;
  };
  if (validate) {
    Reducer red(target.basis());
    for (std::size_t r = 0; r < source.relations().size(); ++r)
      if (!red.contains(apply(source.relations()[r])))
        throw IllDefinedMap("map does not send source relation " + std::to_string(r) + " into the target relations");
  }

  std::vector<int> shifts = target.degrees();
  shifts.insert(shifts.end(), source.degrees().begin(), source.degrees().end());
  FreeModule A(T.ring_ptr(), shifts, ModuleOrder::elimination(gt));
  std::vector<FreeElement> known;
  for (const auto& g : target.basis().elements) known.push_back(A.adopt(g));
  std::vector<FreeElement> inputs;
  for (int j = 0; j < gs; ++j) {
    std::vector<Term> ts = images[static_cast<std::size_t>(j)].terms;
    ts.push_back({T.ring().one_monomial(), gt + j, 1});
    inputs.push_back(A.from_terms(std::move(ts)));
  }
  GroebnerBasis G = buchberger(A, inputs, known).basis;

  std::vector<FreeElement> gens;
  for (const auto& g : G.elements) {
    if (g.lead().comp < gt) continue;
    FreeElement e;
    for (auto t : g.terms) {
      t.comp -= gt;
      e.terms.push_back(t);
    }
    gens.push_back(Src.adopt(e));
  }
  std::sort(gens.begin(), gens.end(), [&](const FreeElement& a, const FreeElement& b) { return Src.compare(a.lead(), b.lead()) > 0; });
  return {Src, gens, GroebnerBasis{Src, gens, true}};
}

/// Subset of `gens` forming a minimal generating set of (gens + known)/known
/// in the graded sense; `known` must be a Gröbner basis in F's order.
inline std::vector<FreeElement> minimal_generators(const FreeModule& F, const std::vector<FreeElement>& gens,
                                                   const std::vector<FreeElement>& known = {}) {
  auto res = buchberger(F, gens, known);
  std::vector<FreeElement> out;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (res.minimal[i]) out.push_back(gens[i]);
  return out;
}

/// Kernel of S^m -> F given by the columns; columns live in F. Returns a
/// Gröbner basis (as generators) of the syzygy module.
inline std::vector<FreeElement> syzygies_over_S(const FreeModule& F, const std::vector<FreeElement>& columns,
                                                const std::vector<int>& column_degrees) {
  RingPtr S = RingPresentation::make(F.ring_ptr(), {});
  GradedModule target = GradedModule::free(S, F.shifts());
  GradedModule source = GradedModule::free(S, column_degrees);
  std::vector<FreeElement> images;
  for (const auto& c : columns) images.push_back(target.cover().adopt(c));
  return kernel_of_cokernel_map(images, source, target, false).generators;
}

/// Column degrees of a matrix of homogeneous nonzero columns.
inline std::vector<int> column_degrees(const FreeModule& F, const std::vector<FreeElement>& columns) {
  std::vector<int> d;
  for (const auto& c : columns) {
    if (c.is_zero()) throw std::invalid_argument("zero column has no degree; pass degrees explicitly");
    d.push_back(F.degree(c));
  }
  return d;
}

/// Minimal generators over R of ker(R^m -> R^g) for columns in F (a cover of
/// R^g); results are reduced mod I and live in the free module with
/// `column_degrees`.
inline std::vector<FreeElement> syzygies_over_R(const RingPtr& R, const FreeModule& F, const std::vector<FreeElement>& columns,
                                                const std::vector<int>& column_degrees) {
  GradedModule target = GradedModule::free(R, F.shifts());
  GradedModule source = GradedModule::free(R, column_degrees);
  std::vector<FreeElement> images;
  for (const auto& c : columns) images.push_back(target.cover().adopt(c));
  auto K = kernel_of_cokernel_map(images, source, target, false);
  FreeModule Src = source.cover();
  std::vector<FreeElement> reduced;
  for (const auto& g : K.generators) {
    FreeElement r = GradedModule::reduce_mod_ideal(*R, Src, g);
    if (!r.is_zero()) reduced.push_back(std::move(r));
  }
  return minimal_generators(Src, reduced, R->ideal_times_module(Src));
}

}  // namespace injdim

#endif  // INJDIM_SYZYGY_HPP
