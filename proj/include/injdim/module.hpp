#ifndef INJDIM_MODULE_HPP
#define INJDIM_MODULE_HPP

#include <algorithm>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ring.hpp"

namespace injdim {

/// Raised when a module presentation fails validation.
class PresentationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// coker(F_1 -> F_0) over R = S/I, with F_0 = ⊕ R(-degrees[j]). Relations
/// are stored as columns in the S-cover of F_0 with entries reduced mod I;
/// the cached basis is a Gröbner basis over S of relations + I*F_0.
class GradedModule {
 public:
  GradedModule() = default;

  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const RingPresentation& ring() const noexcept { return *ring_; }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  int num_generators() const noexcept { return static_cast<int>(degrees_.size()); }
  const std::vector<FreeElement>& relations() const noexcept { return relations_; }
  const GroebnerBasis& basis() const noexcept { return *gb_; }
  FreeModule cover() const { return FreeModule(ring_->poly_ring_ptr(), degrees_); }

  /// Relations as a g x m matrix over R (row i = generator i).
  std::vector<std::vector<Polynomial>> relation_matrix() const {
    FreeModule F = cover();
    std::vector<std::vector<Polynomial>> rows(degrees_.size());
    for (const auto& r : relations_) {
      auto col = F.to_column(r);
      for (std::size_t i = 0; i < col.size(); ++i) rows[i].push_back(col[i]);
    }
    return rows;
  }
  int relation_degree(std::size_t j) const { return cover().degree(relations_.at(j)); }

  /// Zero iff every generator lies in the relation module.
  bool is_zero() const {
    Reducer red(*gb_);
    FreeModule F = cover();
    for (int j = 0; j < num_generators(); ++j)
      if (!red.contains(F.basis(j))) return false;
    return true;
  }

  /// Builds and validates a presentation. Columns must be homogeneous with
  /// respect to the generator degrees; the error names the offending column.
  static GradedModule build(RingPtr ring, std::vector<int> degrees, const std::vector<std::vector<Polynomial>>& columns) {
    FreeModule F(ring->poly_ring_ptr(), degrees);
    std::vector<FreeElement> rels;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const auto& col = columns[c];
      if (col.size() != degrees.size())
        throw PresentationError("relation column " + std::to_string(c) + " has " + std::to_string(col.size()) +
                                " entries, expected " + std::to_string(degrees.size()));
      std::optional<int> deg;
      std::vector<Polynomial> reduced;
      for (std::size_t i = 0; i < col.size(); ++i) {
        Polynomial e = ring->reduce(col[i]);
        if (!col[i].is_zero()) {
          if (!col[i].is_homogeneous())
            throw PresentationError("relation column " + std::to_string(c) + ": entry " + std::to_string(i) +
                                    " is not a homogeneous polynomial");
          int d = col[i].degree() + degrees[i];
          if (deg && *deg != d)
            throw PresentationError("relation column " + std::to_string(c) + " is inhomogeneous: entry " +
                                    std::to_string(i) + " has degree " + std::to_string(d) + ", expected " +
                                    std::to_string(*deg));
          deg = d;
        }
        reduced.push_back(std::move(e));
      }
      FreeElement r = F.from_column(reduced);
      if (!r.is_zero()) rels.push_back(std::move(r));
    }
    return from_relations(std::move(ring), std::move(degrees), std::move(rels));
  }

  /// Builds from homogeneous relation elements of the cover (entries already
  /// reduced mod I or not; they are reduced here).
  static GradedModule from_relations(RingPtr ring, std::vector<int> degrees, std::vector<FreeElement> rels) {
    FreeModule F(ring->poly_ring_ptr(), degrees);
    std::vector<FreeElement> clean;
    for (auto& r : rels) {
      if (r.is_zero()) continue;
      if (!F.is_homogeneous(r)) throw PresentationError("relation " + F.to_string(r) + " is not homogeneous");
      FreeElement red = reduce_mod_ideal(*ring, F, r);
      if (!red.is_zero()) clean.push_back(std::move(red));
    }
    auto result = buchberger(F, clean, ring->ideal_times_module(F));
    GradedModule M;
    M.ring_ = std::move(ring);
    M.degrees_ = std::move(degrees);
    M.relations_ = std::move(clean);
    M.gb_ = std::make_shared<const GroebnerBasis>(std::move(result.basis));
    M.minimal_mask_ = std::move(result.minimal);
    return M;
  }

  /// Free module ⊕ R(-degrees[j]).
  static GradedModule free(RingPtr ring, std::vector<int> degrees) { return from_relations(std::move(ring), std::move(degrees), {}); }
  /// R/m = k placed in degree `shift`.
  static GradedModule residue_field(RingPtr ring, int shift = 0) {
    FreeModule F(ring->poly_ring_ptr(), {shift});
    std::vector<FreeElement> rels;
    for (int i = 0; i < ring->nvars(); ++i) rels.push_back(F.from_column({ring->poly_ring().variable(i)}));
    return from_relations(std::move(ring), {shift}, std::move(rels));
  }
  /// R/(gens) as a cyclic module.
  static GradedModule cyclic(RingPtr ring, const std::vector<Polynomial>& ideal) {
    FreeModule F(ring->poly_ring_ptr(), {0});
    std::vector<FreeElement> rels;
    for (const auto& f : ideal) rels.push_back(F.from_column({f}));
    return from_relations(std::move(ring), {0}, std::move(rels));
  }

  /// Degree-twist M(a): generator degrees decrease by a. Reuses the basis.
  GradedModule twist(int a) const {
    GradedModule M = *this;
    for (auto& d : M.degrees_) d -= a;
    FreeModule F = M.cover();
    M.gb_ = std::make_shared<const GroebnerBasis>(GroebnerBasis{F, gb_->elements, gb_->reduced});
    return M;
  }

  /// Relations that belong to a minimal generating set of the relation
  /// module over R.
  std::vector<FreeElement> minimal_relations() const {
    std::vector<FreeElement> out;
    for (std::size_t i = 0; i < relations_.size(); ++i)
      if (minimal_mask_.at(i)) out.push_back(relations_[i]);
    return out;
  }

  /// Same module, over S: the relations of I*F_0 become explicit.
  GradedModule over_ambient() const {
    FreeModule F = cover();
    std::vector<FreeElement> rels = relations_;
    auto extra = ring_->ideal_times_module(F);
    rels.insert(rels.end(), extra.begin(), extra.end());
    return from_relations(ring_->ambient(), degrees_, std::move(rels));
  }
  /// Re-reads the presentation over another quotient of the same S.
  GradedModule change_ring(RingPtr target) const {
    if (target->poly_ring_ptr() != ring_->poly_ring_ptr() &&
        target->poly_ring().variables() != ring_->poly_ring().variables())
      throw std::invalid_argument("change_ring: different ambient rings");
    FreeModule F(target->poly_ring_ptr(), degrees_);
    std::vector<FreeElement> rels;
    for (const auto& r : relations_) rels.push_back(F.from_terms(r.terms));
    return from_relations(std::move(target), degrees_, std::move(rels));
  }

  static FreeElement reduce_mod_ideal(const RingPresentation& ring, const FreeModule& F, const FreeElement& f) {
    if (ring.is_polynomial_ring()) return f;
    auto col = F.to_column(f);
    for (auto& e : col) e = ring.reduce(e);
    return F.from_column(col);
  }

  std::string describe() const {
    std::ostringstream os;
    os << "coker over " << ring_->describe() << " with generator degrees [";
    for (std::size_t i = 0; i < degrees_.size(); ++i) os << (i ? "," : "") << degrees_[i];
    os << "] and " << relations_.size() << " relations";
    return os.str();
  }

 private:
  RingPtr ring_;
  std::vector<int> degrees_;
  std::vector<FreeElement> relations_;
  std::shared_ptr<const GroebnerBasis> gb_;
  std::vector<bool> minimal_mask_;
};

/// Presentation with every generator made necessary: unit entries of
/// relations eliminate generators, then only minimal relations are kept.
inline GradedModule minimize_presentation(const GradedModule& M) {
  const RingPresentation& R = M.ring();
  const PrimeField& K = R.field();
  std::vector<int> degrees = M.degrees();
  FreeModule F(R.poly_ring_ptr(), degrees);
  std::vector<std::vector<Polynomial>> cols;
  for (const auto& r : M.relations()) cols.push_back(F.to_column(r));

  for (;;) {
    std::size_t pc = cols.size();
    std::size_t pj = 0;
    for (std::size_t c = 0; c < cols.size() && pc == cols.size(); ++c)
      for (std::size_t j = 0; j < cols[c].size(); ++j)
        if (Coeff u = cols[c][j].constant_coeff(); u != 0 && cols[c][j].size() == 1) {
          pc = c;
          pj = j;
          break;
        }
    if (pc == cols.size()) break;
    const std::vector<Polynomial> pivot = cols[pc];
    const Coeff uinv = K.inv(pivot[pj].constant_coeff());
    std::vector<std::vector<Polynomial>> next;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c == pc) continue;
      std::vector<Polynomial> col = cols[c];
      if (!col[pj].is_zero()) {
        Polynomial factor = R.poly_ring().scale(col[pj], uinv);
        for (std::size_t i = 0; i < col.size(); ++i)
          col[i] = R.reduce(R.poly_ring().sub(col[i], R.poly_ring().multiply(factor, pivot[i])));
      }
      col.erase(col.begin() + static_cast<std::ptrdiff_t>(pj));
      if (std::any_of(col.begin(), col.end(), [](const Polynomial& p) { return !p.is_zero(); })) next.push_back(std::move(col));
    }
    degrees.erase(degrees.begin() + static_cast<std::ptrdiff_t>(pj));
    cols = std::move(next);
  }
  FreeModule G(R.poly_ring_ptr(), degrees);
  std::vector<FreeElement> rels;
  for (const auto& c : cols) rels.push_back(G.from_column(c));
  GradedModule pruned = GradedModule::from_relations(M.ring_ptr(), degrees, std::move(rels));
  return GradedModule::from_relations(M.ring_ptr(), degrees, pruned.minimal_relations());
}

/// build_module: validated presentation from relation columns.
inline GradedModule build_module(RingPtr ring, std::vector<int> shifts, const std::vector<std::vector<Polynomial>>& columns) {
  return GradedModule::build(std::move(ring), std::move(shifts), columns);
}

/// Direct sum; the Gröbner basis is assembled blockwise.
inline GradedModule direct_sum(const std::vector<GradedModule>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum of nothing");
  RingPtr ring = parts.front().ring_ptr();
  std::vector<int> degrees;
  std::vector<FreeElement> rels;
  int offset = 0;
  for (const auto& P : parts) {
    degrees.insert(degrees.end(), P.degrees().begin(), P.degrees().end());
    for (const auto& r : P.relations()) {
      FreeElement e = r;
      for (auto& t : e.terms) t.comp += offset;
      rels.push_back(std::move(e));
    }
    offset += P.num_generators();
  }
  FreeModule F(ring->poly_ring_ptr(), degrees);
  for (auto& r : rels) r = F.adopt(r);
  return GradedModule::from_relations(ring, degrees, std::move(rels));
}

/// M/(xs)M.
inline GradedModule quotient_by_sequence(const GradedModule& M, const std::vector<Polynomial>& xs) {
  FreeModule F = M.cover();
  std::vector<FreeElement> rels = M.relations();
  for (const auto& x : xs) {
    if (!x.is_zero() && !x.is_homogeneous()) throw std::invalid_argument("quotient_by_sequence: element is not homogeneous");
    for (int j = 0; j < M.num_generators(); ++j) {
      FreeElement e = F.mul_poly(F.basis(j), x);
      if (!e.is_zero()) rels.push_back(std::move(e));
    }
  }
  return GradedModule::from_relations(M.ring_ptr(), M.degrees(), std::move(rels));
}

}  // namespace injdim

#endif  // INJDIM_MODULE_HPP
