#ifndef INJDIM_INVARIANTS_HPP
#define INJDIM_INVARIANTS_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "ext.hpp"

namespace injdim {

/// Raised for invariants that are undefined on the zero module.
class ZeroModuleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline int dimension(const GradedModule& M) { return hilbert_series(M).dim; }

inline std::int64_t multiplicity(const HilbertSeries& h) {
  if (h.is_zero()) throw ZeroModuleError("multiplicity of the zero module");
  return h.reduced.value_at_one();
}
inline std::int64_t multiplicity(const GradedModule& M) { return multiplicity(hilbert_series(M)); }

/// ℓ(M) if finite, std::nullopt otherwise.
inline std::optional<std::int64_t> length(const GradedModule& M) {
  HilbertSeries h = hilbert_series(M);
  if (h.is_zero()) return 0;
  if (h.dim > 0) return std::nullopt;
  return h.reduced.value_at_one();
}

/// pd over S of the module viewed over the ambient polynomial ring.
inline int projective_dimension_S(const GradedModule& M) { return minimal_free_resolution_S(M).length(); }

/// depth M = n - pd_S M (Auslander–Buchsbaum).
inline int depth(const GradedModule& M) {
  if (M.is_zero()) throw ZeroModuleError("depth of the zero module");
  return M.ring().nvars() - projective_dimension_S(M);
}

/// Least i with Ext^i_R(k, M) != 0; an independent route to the depth.
inline int depth_via_ext(const GradedModule& M, int res_cap = -1) {
  if (M.is_zero()) throw ZeroModuleError("depth of the zero module");
  ExtCalculator E(GradedModule::residue_field(M.ring_ptr()), M, BaseRing::R, res_cap);
  for (int i = 0;; ++i)
    if (!E.ext(i).module.is_zero()) return i;
}

inline bool is_cohen_macaulay(const GradedModule& M) {
  if (M.is_zero()) throw ZeroModuleError("Cohen–Macaulayness of the zero module");
  return depth(M) == dimension(M);
}

/// r(M) = dim_k Ext^t_R(k, M) for t = depth M.
inline std::int64_t type(const GradedModule& M, int res_cap = -1) {
  int t = depth(M);
  ExtCalculator E(GradedModule::residue_field(M.ring_ptr()), M, BaseRing::R, res_cap);
  return *length(E.ext(t).module);
}

/// For Cohen–Macaulay M: the last Betti number of the minimal S-resolution.
inline std::int64_t type_from_betti(const GradedModule& M) {
  FreeResolution F = minimal_free_resolution_S(M);
  return F.rank(F.length());
}

/// dim_k of {m : 𝔪 m = 0} for finite-length M.
inline std::int64_t socle_dimension(const GradedModule& M0) {
  if (!length(M0)) throw std::domain_error("socle_dimension needs a module of finite length");
  GradedModule M = minimize_presentation(M0);
  const int g = M.num_generators();
  const int n = M.ring().nvars();
  if (g == 0) return 0;
  if (n == 0) return g;
  std::vector<GradedModule> copies(static_cast<std::size_t>(n), M.twist(1));
  GradedModule target = direct_sum(copies);
  FreeModule T = target.cover();
  std::vector<FreeElement> images;
  for (int j = 0; j < g; ++j) {
    std::vector<Term> ts;
    for (int i = 0; i < n; ++i) ts.push_back({Monomial::variable(n, i), i * g + j, 1});
    images.push_back(T.from_terms(std::move(ts)));
  }
  auto K = kernel_of_cokernel_map(images, M, target, false).generators;
  return static_cast<std::int64_t>(minimal_generators(M.cover(), K, M.basis().elements).size());
}

/// Whether multiplication by x is injective on M.
inline bool is_regular_element(const GradedModule& M, const Polynomial& x) {
  if (!x.is_homogeneous() || x.is_zero()) return false;
  FreeModule F = M.cover();
  GradedModule target = M.twist(x.degree());
  std::vector<FreeElement> images;
  for (int j = 0; j < M.num_generators(); ++j) images.push_back(target.cover().adopt(F.mul_poly(F.basis(j), x)));
  auto K = kernel_of_cokernel_map(images, M, target, false).generators;
  Reducer red(M.basis());
  return std::all_of(K.begin(), K.end(), [&](const FreeElement& k) { return red.contains(k); });
}

/// Degree-one sequence verified regular on M and cutting it to finite
/// length, with the randomness that produced it.
struct RegularSequenceCertificate {
  std::vector<Polynomial> elements;
  std::vector<bool> regular;
  bool reduction = false;
  std::uint64_t seed = 0;
  int attempts = 0;

  bool verified() const {
    return reduction && std::all_of(regular.begin(), regular.end(), [](bool b) { return b; });
  }
};

/// Checks a given sequence on M: each element regular on the successive
/// quotient, final quotient of finite length, and length = dim M.
inline RegularSequenceCertificate certify_sequence(const GradedModule& M, const std::vector<Polynomial>& xs) {
  RegularSequenceCertificate c;
  c.elements = xs;
  GradedModule N = M;
  for (const auto& x : xs) {
    c.regular.push_back(is_regular_element(N, x));
    N = quotient_by_sequence(N, {x});
  }
  c.reduction = static_cast<int>(xs.size()) == dimension(M) && length(N).has_value();
  return c;
}

class RetryLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Random linear forms x_1..x_s (s = dim M) verified to be an M-regular
/// system of parameters.
inline RegularSequenceCertificate find_regular_sop(const GradedModule& M, std::uint64_t seed, int max_attempts = 20) {
  if (M.is_zero()) throw ZeroModuleError("regular sequence on the zero module");
  const int s = dimension(M);
  const PolyRing& S = M.ring().poly_ring();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> coeff(0, S.field().characteristic() - 1);
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    std::vector<Polynomial> xs;
    for (int j = 0; j < s; ++j) {
      std::vector<PolyTerm> ts;
      for (int v = 0; v < S.nvars(); ++v) ts.push_back({Monomial::variable(S.nvars(), v), coeff(rng)});
      xs.push_back(S.from_terms(std::move(ts)));
    }
    RegularSequenceCertificate c = certify_sequence(M, xs);
    c.seed = seed;
    c.attempts = attempt;
    if (c.verified()) return c;
  }
  throw RetryLimitExceeded("no regular system of parameters found in " + std::to_string(max_attempts) +
                           " attempts; the module may not be Cohen–Macaulay or the field is too small");
}

/// ann_R(M) as minimal homogeneous generators (reduced mod I). The zero
/// module yields the unit ideal {1}.
inline std::vector<Polynomial> annihilator(const GradedModule& M0) {
  GradedModule M = minimize_presentation(M0);
  const RingPtr& R = M.ring_ptr();
  if (M.num_generators() == 0) return {R->poly_ring().constant(1)};
  const int g = M.num_generators();
  std::vector<GradedModule> copies;
  for (int d : M.degrees()) copies.push_back(M.twist(d));
  GradedModule target = direct_sum(copies);
  FreeModule T = target.cover();
  std::vector<Term> ts;
  for (int j = 0; j < g; ++j) ts.push_back({R->poly_ring().one_monomial(), j * g + j, 1});
  GradedModule source = GradedModule::free(R, {0});
  auto K = kernel_of_cokernel_map({T.from_terms(std::move(ts))}, source, target, false).generators;
  FreeModule F = source.cover();
  std::vector<FreeElement> reduced;
  for (const auto& k : K) {
    FreeElement r = GradedModule::reduce_mod_ideal(*R, F, k);
    if (!r.is_zero()) reduced.push_back(std::move(r));
  }
  std::vector<Polynomial> out;
  for (const auto& e : minimal_generators(F, reduced, R->ideal_times_module(F))) out.push_back(F.to_column(e)[0]);
  return out;
}

/// A witness pair (a, b) of nonzero elements with a*b = 0 in R, searched among
/// variables, sums/differences of two variables, and monomials of degree two.
inline std::optional<std::pair<Polynomial, Polynomial>> find_zero_divisor_pair(const RingPresentation& R) {
  if (R.is_zero_ring()) return std::pair{R.poly_ring().constant(1), R.poly_ring().constant(1)};
  const PolyRing& S = R.poly_ring();
  const int n = S.nvars();
  std::vector<Polynomial> cands;
  for (int i = 0; i < n; ++i) cands.push_back(S.variable(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      cands.push_back(S.add(S.variable(i), S.variable(j)));
      cands.push_back(S.sub(S.variable(i), S.variable(j)));
    }
  for (const auto& m : monomials_of_degree(n, 2)) cands.push_back(S.term(1, m));
  std::vector<Polynomial> nonzero;
  for (auto& c : cands)
    if (!R.is_zero(c)) nonzero.push_back(c);
  for (std::size_t a = 0; a < nonzero.size(); ++a)
    for (std::size_t b = a; b < nonzero.size(); ++b)
      if (R.is_zero(S.multiply(nonzero[a], nonzero[b]))) return std::pair{nonzero[a], nonzero[b]};
  return std::nullopt;
}

/// Determinant by cofactor expansion, reduced mod I.
inline Polynomial determinant(const RingPresentation& R, const std::vector<std::vector<Polynomial>>& A) {
  const PolyRing& S = R.poly_ring();
  const std::size_t n = A.size();
  if (n == 0) return S.constant(1);
  if (n == 1) return R.reduce(A[0][0]);
  Polynomial acc;
  for (std::size_t c = 0; c < n; ++c) {
    if (A[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(A[r][k]);
      minor.push_back(std::move(row));
    }
    Polynomial term = S.multiply(A[0][c], determinant(R, minor));
    acc = (c % 2 == 0) ? S.add(acc, term) : S.sub(acc, term);
  }
  return R.reduce(acc);
}

/// rank = (#generators) - (largest size of a minor of the relation matrix
/// that is nonzero in R). Meaningful only over a domain; the caller decides.
inline std::int64_t rank_over_domain(const GradedModule& M0, std::int64_t minor_cap = 20000) {
  GradedModule M = minimize_presentation(M0);
  auto A = M.relation_matrix();
  const int g = M.num_generators();
  const int m = static_cast<int>(M.relations().size());
  auto choose = [](int n, int k) { return HilbertSeries::binomial(n, k); };
  for (int r = std::min(g, m); r >= 1; --r) {
    if (choose(g, r) * choose(m, r) > minor_cap)
      throw Undecided("rank: " + std::to_string(choose(g, r) * choose(m, r)) + " minors of size " + std::to_string(r) +
                      " exceed the cap");
    std::vector<int> rows(static_cast<std::size_t>(r)), cols(static_cast<std::size_t>(r));
    std::function<bool(int, int, std::vector<int>&, int)> pick;
    bool found = false;
    std::vector<int> rsel, csel;
    std::function<void(int, int)> choose_cols = [&](int start, int left) {
      if (found) return;
      if (left == 0) {
        std::vector<std::vector<Polynomial>> sub;
        for (int i : rsel) {
          std::vector<Polynomial> row;
          for (int j : csel) row.push_back(A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
          sub.push_back(std::move(row));
        }
        if (!determinant(M.ring(), sub).is_zero()) found = true;
        return;
      }
      for (int j = start; j <= m - left && !found; ++j) {
        csel.push_back(j);
        choose_cols(j + 1, left - 1);
        csel.pop_back();
      }
    };
    std::function<void(int, int)> choose_rows = [&](int start, int left) {
      if (found) return;
      if (left == 0) {
        choose_cols(0, r);
        return;
      }
      for (int i = start; i <= g - left && !found; ++i) {
        rsel.push_back(i);
        choose_rows(i + 1, left - 1);
        rsel.pop_back();
      }
    };
    choose_rows(0, r);
    if (found) return g - r;
  }
  return g;
}

/// Rank when R is flagged a domain and the cheap zero-divisor search finds
/// nothing; std::nullopt otherwise.
inline std::optional<std::int64_t> rank(const GradedModule& M, bool domain_flag, std::int64_t minor_cap = 20000) {
  if (!domain_flag || find_zero_divisor_pair(M.ring())) return std::nullopt;
  return rank_over_domain(M, minor_cap);
}

/// Hilbert functions agree in degrees <= D and minimal generator degrees
/// agree. Necessary for an isomorphism, not sufficient.
struct IsoCheck {
  bool equal = false;
  std::string report;
};

inline IsoCheck verify_iso_by_hilbert(const GradedModule& A, const GradedModule& B, int D) {
  HilbertSeries ha = hilbert_series(A), hb = hilbert_series(B);
  GradedModule ma = minimize_presentation(A), mb = minimize_presentation(B);
  std::vector<int> da = ma.degrees(), db = mb.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  int lo = std::min(ha.is_zero() ? D : ha.initial_degree(), hb.is_zero() ? D : hb.initial_degree());
  for (int d = lo; d <= D; ++d)
    if (ha.coefficient(d) != hb.coefficient(d))
      return {false, "Hilbert functions differ in degree " + std::to_string(d) + ": " + std::to_string(ha.coefficient(d)) +
                         " vs " + std::to_string(hb.coefficient(d))};
  if (da != db)
    return {false, "minimal generator counts differ: " + std::to_string(da.size()) + " vs " + std::to_string(db.size())};
  return {true, "Hilbert functions agree up to degree " + std::to_string(D) + " and both need " +
                    std::to_string(da.size()) + " generators"};
}

}  // namespace injdim

#endif  // INJDIM_INVARIANTS_HPP
