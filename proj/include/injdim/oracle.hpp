#ifndef INJDIM_ORACLE_HPP
#define INJDIM_ORACLE_HPP

// Brute-force graded linear algebra. Nothing here touches Gröbner bases:
// graded pieces are quotients F_d / N_d computed by dense row reduction,
// with N_d spanned by S_1 * N_{d-1} and the relations of degree d.

#include <algorithm>
#include <climits>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dense.hpp"
#include "module.hpp"

namespace injdim::oracle {

using dense::LinMap;
using dense::Vec;

/// The requested answer depends on degrees beyond the truncation.
class InsufficientTruncation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Graded pieces lo..hi of a module with the variable actions. When
/// `complete` is set the module vanishes above hi; otherwise degrees above
/// hi are unknown.
struct TruncatedModule {
  const PrimeField* field = nullptr;
  int nvars = 0;
  int lo = 0;
  int hi = -1;
  bool complete = false;
  std::vector<int> dims;
  std::vector<std::vector<LinMap>> mult;  // [d - lo][var]: degree d -> d + 1
  std::vector<std::vector<std::pair<int, Monomial>>> labels;  // optional

  bool known(int d) const noexcept { return d <= hi || complete; }
  int dim(int d) const {
    if (d < lo) return 0;
    if (d > hi) {
      if (!complete) throw InsufficientTruncation("degree " + std::to_string(d) + " lies beyond the truncation " + std::to_string(hi));
      return 0;
    }
    return dims[static_cast<std::size_t>(d - lo)];
  }
  std::int64_t total() const {
    std::int64_t s = 0;
    for (int x : dims) s += x;
    return s;
  }
  Vec act(int var, int d, const Vec& v) const {
    if (d < lo) return Vec(static_cast<std::size_t>(dim(d + 1)), 0);
    if (d > hi) {
      dim(d + 1);
      return {};
    }
    return mult[static_cast<std::size_t>(d - lo)][static_cast<std::size_t>(var)].apply(*field, v);
  }
  Vec act_monomial(const Monomial& u, int d, Vec v) const {
    for (int i = 0; i < nvars; ++i)
      for (int e = 0; e < u[i]; ++e) v = act(i, d++, v);
    return v;
  }
  /// Top nonzero degree; requires completeness.
  int top() const {
    if (!complete) throw InsufficientTruncation("module is not known to have finite length");
    for (int d = hi; d >= lo; --d)
      if (dim(d) > 0) return d;
    return lo - 1;
  }
};

namespace detail {

struct DegreeBasis {
  std::vector<std::pair<int, Monomial>> elems;
  std::vector<std::unordered_map<Monomial, int, MonomialHash>> index;  // per generator

  int find(int j, const Monomial& u) const {
    auto it = index[static_cast<std::size_t>(j)].find(u);
    return it == index[static_cast<std::size_t>(j)].end() ? -1 : it->second;
  }
};

inline DegreeBasis free_basis(int nvars, const std::vector<int>& shifts, int d) {
  DegreeBasis B;
  B.index.resize(shifts.size());
  for (std::size_t j = 0; j < shifts.size(); ++j) {
    if (d < shifts[j]) continue;
    for (auto& u : monomials_of_degree(nvars, d - shifts[j])) {
      B.index[j].emplace(u, static_cast<int>(B.elems.size()));
      B.elems.emplace_back(static_cast<int>(j), u);
    }
  }
  return B;
}

}  // namespace detail

/// Truncation of coker(relations + I*F) to degrees <= D, built from the
/// raw presentation and the original ideal generators.
inline TruncatedModule truncate(const GradedModule& M, int D) {
  const RingPresentation& R = M.ring();
  const PrimeField& K = R.field();
  const int n = R.nvars();
  const std::vector<int>& s = M.degrees();
  TruncatedModule T;
  T.field = &K;
  T.nvars = n;
  if (s.empty()) {
    T.complete = true;
    return T;
  }
  T.lo = *std::min_element(s.begin(), s.end());
  const int smax = *std::max_element(s.begin(), s.end());

  // Spanning elements of the relation module grouped by degree.
  std::map<int, std::vector<std::vector<Term>>> gens;
  FreeModule F = M.cover();
  for (const auto& r : M.relations()) gens[F.degree(r)].push_back(r.terms);
  for (const auto& f : R.ideal_generators())
    for (std::size_t j = 0; j < s.size(); ++j) {
      std::vector<Term> ts;
      for (const auto& t : f.terms()) ts.push_back({t.mono, static_cast<int>(j), t.coeff});
      gens[f.degree() + s[j]].push_back(std::move(ts));
    }

  struct Piece {
    detail::DegreeBasis basis;
    std::vector<Vec> rows;  // RREF rows of N_d
    std::vector<int> pivots;
    std::vector<int> qcols;
  };
  std::vector<Piece> pieces;
  const int stop = std::max(D, T.lo) + 1;
  int built_to = T.lo - 1;
  for (int d = T.lo; d <= stop; ++d) {
    Piece P;
    P.basis = detail::free_basis(n, s, d);
    const int N = static_cast<int>(P.basis.elems.size());
    dense::Echelon E(K, N);
    if (d > T.lo) {
      const Piece& prev = pieces.back();
      for (const auto& row : prev.rows)
        for (int i = 0; i < n; ++i) {
          Vec v(static_cast<std::size_t>(N), 0);
          for (std::size_t k = 0; k < row.size(); ++k) {
            if (!row[k]) continue;
            const auto& [j, u] = prev.basis.elems[k];
            v[static_cast<std::size_t>(P.basis.find(j, u * Monomial::variable(n, i)))] = row[k];
          }
          E.insert(std::move(v));
        }
    }
    if (auto it = gens.find(d); it != gens.end())
      for (const auto& ts : it->second) {
        Vec v(static_cast<std::size_t>(N), 0);
        for (const auto& t : ts) {
          auto& slot = v[static_cast<std::size_t>(P.basis.find(t.comp, t.mono))];
          slot = K.add(slot, t.coeff);
        }
        E.insert(std::move(v));
      }
    P.rows = E.rows();
    P.pivots = E.pivots();
    std::vector<char> is_pivot(static_cast<std::size_t>(N), 0);
    for (int p : P.pivots) is_pivot[static_cast<std::size_t>(p)] = 1;
    for (int c = 0; c < N; ++c)
      if (!is_pivot[static_cast<std::size_t>(c)]) P.qcols.push_back(c);
    const bool vanished = P.qcols.empty() && d > smax;
    pieces.push_back(std::move(P));
    built_to = d;
    if (vanished) {
      T.complete = true;
      break;
    }
  }
  T.hi = built_to - 1;  // the last built degree only feeds the actions

  auto coords = [&](const Piece& P, Vec v) {
    for (std::size_t r = 0; r < P.rows.size(); ++r) {
      Coeff c = v[static_cast<std::size_t>(P.pivots[r])];
      if (!c) continue;
      const Coeff m = K.neg(c);
      for (std::size_t k = 0; k < v.size(); ++k)
        if (P.rows[r][k]) v[k] = K.add(v[k], K.mul(m, P.rows[r][k]));
    }
    Vec q(P.qcols.size());
    for (std::size_t k = 0; k < P.qcols.size(); ++k) q[k] = v[static_cast<std::size_t>(P.qcols[k])];
    return q;
  };

  for (int d = T.lo; d <= T.hi; ++d) {
    const Piece& P = pieces[static_cast<std::size_t>(d - T.lo)];
    const Piece& Q = pieces[static_cast<std::size_t>(d + 1 - T.lo)];
    T.dims.push_back(static_cast<int>(P.qcols.size()));
    std::vector<std::pair<int, Monomial>> lab;
    for (int c : P.qcols) lab.push_back(P.basis.elems[static_cast<std::size_t>(c)]);
    T.labels.push_back(std::move(lab));
    std::vector<LinMap> acts;
    for (int i = 0; i < n; ++i) {
      LinMap A;
      A.rows = static_cast<int>(Q.qcols.size());
      for (int c : P.qcols) {
        const auto& [j, u] = P.basis.elems[static_cast<std::size_t>(c)];
        Vec v(Q.basis.elems.size(), 0);
        v[static_cast<std::size_t>(Q.basis.find(j, u * Monomial::variable(n, i)))] = 1;
        A.cols.push_back(coords(Q, std::move(v)));
      }
      acts.push_back(std::move(A));
    }
    T.mult.push_back(std::move(acts));
  }
  if (T.complete) {
    // trim trailing zero degrees
    while (T.hi >= T.lo && T.dims.back() == 0) {
      T.dims.pop_back();
      T.mult.pop_back();
      T.labels.pop_back();
      --T.hi;
    }
    if (T.hi >= T.lo)
      for (auto& A : T.mult.back()) A = LinMap::zero(0, T.dims.back());
  }
  return T;
}

/// The ring R itself, truncated; labels are the standard monomials.
inline TruncatedModule truncate_ring(const RingPtr& R, int D) { return truncate(GradedModule::free(R, {0}), D); }

/// ⊕_l R(-shifts[l]) up to degree D, assembled from a truncation of R.
/// Labels are (l, standard monomial).
inline TruncatedModule free_over(const TruncatedModule& R, const std::vector<int>& shifts, int D) {
  TruncatedModule P;
  P.field = R.field;
  P.nvars = R.nvars;
  if (shifts.empty()) {
    P.complete = true;
    return P;
  }
  P.lo = *std::min_element(shifts.begin(), shifts.end());
  const int amax = *std::max_element(shifts.begin(), shifts.end());
  P.complete = R.complete;
  P.hi = R.complete ? amax + R.hi : D;
  for (int a : shifts)
    if (!R.known(P.hi + 1 - a)) throw InsufficientTruncation("ring truncation too short for the free module");
  auto rdim = [&](int e) { return e < 0 ? 0 : R.dim(e); };
  for (int d = P.lo; d <= P.hi; ++d) {
    std::vector<std::pair<int, Monomial>> lab;
    int total = 0;
    for (std::size_t l = 0; l < shifts.size(); ++l) {
      int e = d - shifts[l];
      for (int k = 0; k < rdim(e); ++k) lab.emplace_back(static_cast<int>(l), R.labels[static_cast<std::size_t>(e - R.lo)][static_cast<std::size_t>(k)].second);
      total += rdim(e);
    }
    P.dims.push_back(total);
    P.labels.push_back(std::move(lab));
    std::vector<LinMap> acts;
    const int rows_total = [&] {
      int t = 0;
      for (int a : shifts) t += rdim(d + 1 - a);
      return t;
    }();
    for (int i = 0; i < P.nvars; ++i) {
      LinMap A = LinMap::zero(rows_total, total);
      int col = 0, row = 0;
      for (int a : shifts) {
        const int e = d - a;
        const int w = rdim(e), h = rdim(e + 1);
        if (e >= 0 && w > 0) {
          const LinMap& B = R.mult[static_cast<std::size_t>(e - R.lo)][static_cast<std::size_t>(i)];
          for (int c = 0; c < w; ++c)
            for (int r = 0; r < h; ++r) A.cols[static_cast<std::size_t>(col + c)][static_cast<std::size_t>(row + r)] = B.cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
        }
        col += w;
        row += h;
      }
      acts.push_back(std::move(A));
    }
    P.mult.push_back(std::move(acts));
  }
  return P;
}

/// Degree-d matrix of the map P -> X sending generator l to images[l].
inline LinMap map_from_free(const TruncatedModule& P, const std::vector<int>& shifts, const std::vector<Vec>& images,
                            const TruncatedModule& X, int d) {
  LinMap A;
  A.rows = X.dim(d);
  if (d < P.lo || d > P.hi) return A;
  for (const auto& [l, u] : P.labels[static_cast<std::size_t>(d - P.lo)])
    A.cols.push_back(X.act_monomial(u, shifts[static_cast<std::size_t>(l)], images[static_cast<std::size_t>(l)]));
  return A;
}

/// One step of a minimal resolution: generators of P_j and their images in
/// the previous module (M itself for j = 0).
struct ResolutionStep {
  std::vector<int> shifts;
  std::vector<Vec> images;
};

struct OracleResolution {
  std::vector<ResolutionStep> steps;
  std::vector<TruncatedModule> modules;  // P_j
  int truncation = 0;                    // generators are exact up to this degree
  bool finite = false;                   // the resolution stopped
  int max_generator_degree() const {
    int m = INT_MIN;
    for (const auto& s : steps)
      for (int a : s.shifts) m = std::max(m, a);
    return m;
  }
};

/// Minimal free resolution P_0..P_L of X over the ring truncation R, exact
/// in degrees <= Dres.
inline OracleResolution resolve(const TruncatedModule& X, const TruncatedModule& R, int L, int Dres) {
  const PrimeField& K = *X.field;
  OracleResolution out;
  out.truncation = Dres;
  const TruncatedModule* A = &X;
  // Submodule V of A, one basis per degree (keyed by degree).
  std::map<int, std::vector<Vec>> V;
  const int top0 = X.complete ? std::min(Dres, X.hi) : Dres;
  for (int d = X.lo; d <= top0; ++d) V[d] = LinMap::identity(X.dim(d)).cols;
  out.modules.reserve(static_cast<std::size_t>(L + 1));
  for (int j = 0; j <= L; ++j) {
    ResolutionStep step;
    for (auto& [d, basis] : V) {
      if (basis.empty()) continue;
      std::vector<Vec> W;
      if (auto it = V.find(d - 1); it != V.end())
        for (const auto& v : it->second)
          for (int i = 0; i < A->nvars; ++i) W.push_back(A->act(i, d - 1, v));
      for (auto& g : dense::complement(K, A->dim(d), W, basis)) {
        step.shifts.push_back(d);
        step.images.push_back(std::move(g));
      }
    }
    if (step.shifts.empty()) {
      out.finite = true;
      break;
    }
    out.modules.push_back(free_over(R, step.shifts, Dres));
    const TruncatedModule& P = out.modules.back();
    std::map<int, std::vector<Vec>> Knext;
    const int top = std::min(Dres, P.hi);
    for (int d = P.lo; d <= top; ++d) Knext[d] = dense::kernel(K, map_from_free(P, step.shifts, step.images, *A, d));
    out.steps.push_back(std::move(step));
    A = &out.modules.back();
    V = std::move(Knext);
  }
  return out;
}

/// Graded dimensions of Ext^i(M, C) for i <= i_max and internal degrees
/// e <= degree_max. Entries are exact when R is artinian, or when C has
/// finite length and e >= certified_from[i]. Other entries assume the
/// resolution has no generators above the truncation; `margin` is the gap
/// between the truncation and the highest generator actually found.
struct ExtTable {
  std::vector<std::map<int, std::int64_t>> dims;  // per i: degree -> dimension (zeros omitted)
  std::vector<int> lowest;                        // first degree examined per i
  std::vector<int> certified_from;                // INT_MAX when nothing is certified
  int degree_max = 0;
  int truncation = 0;
  int margin = 0;
  bool exact = false;

  std::int64_t dim(int i, int e) const {
    const auto& m = dims.at(static_cast<std::size_t>(i));
    auto it = m.find(e);
    return it == m.end() ? 0 : it->second;
  }
  std::int64_t total(int i) const {
    std::int64_t s = 0;
    for (const auto& [e, v] : dims.at(static_cast<std::size_t>(i))) s += v;
    return s;
  }
  bool certified(int i, int e) const { return exact || e >= certified_from.at(static_cast<std::size_t>(i)); }
};

inline ExtTable ext_dims(const GradedModule& M, const GradedModule& C, int i_max, int degree_max, int truncation = 12) {
  if (i_max < 0) throw std::invalid_argument("ext_dims: negative index");
  const RingPtr& ring = M.ring_ptr();
  const PrimeField& K = ring->field();
  ExtTable out;
  out.degree_max = degree_max;

  TruncatedModule Mt = truncate(M, truncation);
  TruncatedModule Rt = truncate_ring(ring, truncation + 1 - std::min(0, Mt.lo));
  const bool artinian = Rt.complete;
  int Dres = truncation;
  if (artinian) {
    if (!Mt.complete) throw std::logic_error("module over an artinian ring without finite length");
    const int topR = std::max(Rt.hi, 0);
    const int mtop = Mt.hi >= Mt.lo ? Mt.hi : Mt.lo;
    Dres = mtop + (i_max + 2) * topR;
  }
  OracleResolution res = resolve(Mt, Rt, i_max + 1, Dres);
  out.truncation = Dres;
  out.exact = artinian;
  const int gmax = res.steps.empty() ? Dres : res.max_generator_degree();
  out.margin = Dres - gmax;

  // C must be known in every degree a + e used below.
  TruncatedModule Ct = truncate(C, std::max(gmax, 0) + std::max(degree_max, 0) + 1);
  if (!Ct.complete && Ct.hi < gmax + degree_max) throw InsufficientTruncation("target truncation too short");

  auto shifts_of = [&](int j) -> const std::vector<int>& {
    static const std::vector<int> none;
    return j < static_cast<int>(res.steps.size()) ? res.steps[static_cast<std::size_t>(j)].shifts : none;
  };
  // Hom(P_j, C)_e = ⊕_l C_{a_l + e}; offsets of the blocks.
  auto hom_dim = [&](int j, int e) {
    int t = 0;
    for (int a : shifts_of(j)) t += Ct.dim(a + e);
    return t;
  };
  // δ_{j}: Hom(P_{j-1}, C)_e -> Hom(P_j, C)_e, j >= 1.
  auto delta = [&](int j, int e) {
    const auto& src = shifts_of(j - 1);
    const auto& tgt = shifts_of(j);
    LinMap A = LinMap::zero(hom_dim(j, e), hom_dim(j - 1, e));
    if (tgt.empty() || src.empty()) return A;
    const auto& step = res.steps[static_cast<std::size_t>(j)];
    const TruncatedModule& Pprev = res.modules[static_cast<std::size_t>(j - 1)];
    std::vector<int> src_off(src.size() + 1, 0), tgt_off(tgt.size() + 1, 0);
    for (std::size_t l = 0; l < src.size(); ++l) src_off[l + 1] = src_off[l] + Ct.dim(src[l] + e);
    for (std::size_t l = 0; l < tgt.size(); ++l) tgt_off[l + 1] = tgt_off[l] + Ct.dim(tgt[l] + e);
    for (std::size_t lp = 0; lp < tgt.size(); ++lp) {
      const int ap = tgt[lp];
      if (Ct.dim(ap + e) == 0) continue;
      const Vec& w = step.images[lp];
      const auto& lab = Pprev.labels[static_cast<std::size_t>(ap - Pprev.lo)];
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (!w[k]) continue;
        const auto& [l, u] = lab[k];
        const int a = src[static_cast<std::size_t>(l)];
        const int w0 = Ct.dim(a + e);
        for (int c = 0; c < w0; ++c) {
          Vec basis(static_cast<std::size_t>(w0), 0);
          basis[static_cast<std::size_t>(c)] = 1;
          Vec img = Ct.act_monomial(u, a + e, std::move(basis));
          auto& col = A.cols[static_cast<std::size_t>(src_off[static_cast<std::size_t>(l)] + c)];
          for (std::size_t r = 0; r < img.size(); ++r)
            if (img[r]) {
              auto& slot = col[static_cast<std::size_t>(tgt_off[lp]) + r];
              slot = K.add(slot, K.mul(w[k], img[r]));
            }
        }
      }
    }
    return A;
  };

  const int clo = Ct.lo;
  const int ctop = Ct.complete ? Ct.top() : INT_MAX;
  for (int i = 0; i <= i_max; ++i) {
    std::map<int, std::int64_t> row;
    const auto& sh = shifts_of(i);
    int lowest = degree_max + 1;
    if (!sh.empty()) lowest = clo - *std::max_element(sh.begin(), sh.end());
    int highest = degree_max;
    if (Ct.complete && !sh.empty()) highest = std::min(highest, ctop - *std::min_element(sh.begin(), sh.end()));
    for (int e = lowest; e <= highest; ++e) {
      const int h = hom_dim(i, e);
      if (h == 0) continue;
      std::int64_t v = h;
      v -= dense::rank(K, delta(i + 1, e));
      if (i >= 1) v -= dense::rank(K, delta(i, e));
      if (v) row[e] = v;
    }
    out.dims.push_back(std::move(row));
    out.lowest.push_back(lowest);
    if (artinian)
      out.certified_from.push_back(INT_MIN);
    else if (Ct.complete)
      out.certified_from.push_back(ctop == Ct.lo - 1 ? INT_MIN : ctop - Dres);
    else
      out.certified_from.push_back(INT_MAX);
  }
  return out;
}

/// Hilbert function values for degrees lo..D (lo = lowest generator degree).
struct HilbertTable {
  int lo = 0;
  std::vector<std::int64_t> values;
  std::int64_t at(int d) const {
    if (d < lo || d >= lo + static_cast<int>(values.size())) return 0;
    return values[static_cast<std::size_t>(d - lo)];
  }
};

inline HilbertTable hilbert(const GradedModule& M, int D) {
  TruncatedModule T = truncate(M, D);
  HilbertTable H;
  H.lo = T.lo;
  for (int d = T.lo; d <= D; ++d) H.values.push_back(T.dim(d));
  return H;
}

/// Truncation that is known to be the whole module; grows the bound until
/// the module vanishes or `cap` is reached.
inline TruncatedModule truncate_finite(const GradedModule& M, int cap = 64) {
  int D = 8;
  for (;;) {
    TruncatedModule T = truncate(M, D);
    if (T.complete) return T;
    if (D >= cap) throw InsufficientTruncation("module does not vanish up to degree " + std::to_string(cap));
    D = std::min(2 * D, cap);
  }
}

inline std::int64_t length(const GradedModule& M, int cap = 64) { return truncate_finite(M, cap).total(); }

inline std::int64_t socle(const TruncatedModule& T) {
  if (!T.complete) throw InsufficientTruncation("socle needs a finite-length module");
  std::int64_t s = 0;
  for (int d = T.lo; d <= T.hi; ++d) {
    LinMap stacked;
    stacked.rows = 0;
    const auto& acts = T.mult[static_cast<std::size_t>(d - T.lo)];
    for (const auto& A : acts) stacked.rows += A.rows;
    for (int c = 0; c < T.dim(d); ++c) {
      Vec col;
      for (const auto& A : acts) col.insert(col.end(), A.cols[static_cast<std::size_t>(c)].begin(), A.cols[static_cast<std::size_t>(c)].end());
      stacked.cols.push_back(std::move(col));
    }
    s += T.dim(d) - dense::rank(*T.field, stacked);
  }
  return s;
}
inline std::int64_t socle(const GradedModule& M, int cap = 64) { return socle(truncate_finite(M, cap)); }

/// Minimal generator count, per degree, of a truncated module.
inline std::int64_t minimal_generator_count(const TruncatedModule& T) {
  std::int64_t g = 0;
  for (int d = T.lo; d <= T.hi; ++d) {
    std::vector<Vec> W;
    if (d - 1 >= T.lo)
      for (int i = 0; i < T.nvars; ++i)
        for (const auto& c : T.mult[static_cast<std::size_t>(d - 1 - T.lo)][static_cast<std::size_t>(i)].cols) W.push_back(c);
    g += T.dim(d) - [&] {
      dense::Echelon E(*T.field, T.dim(d));
      for (auto& w : W) E.insert(w);
      return E.dim();
    }();
  }
  return g;
}

/// k-linear dual Hom_k(M, k) with the contragredient action: degree d of
/// the dual is M_{-d}^*, and x acts by the transpose of x: M_{-d-1} -> M_{-d}.
inline TruncatedModule dual(const TruncatedModule& M) {
  if (!M.complete) throw InsufficientTruncation("Matlis dual needs a finite-length module");
  TruncatedModule D;
  D.field = M.field;
  D.nvars = M.nvars;
  D.complete = true;
  if (M.hi < M.lo) return D;
  D.lo = -M.hi;
  D.hi = -M.lo;
  for (int d = D.lo; d <= D.hi; ++d) {
    D.dims.push_back(M.dim(-d));
    std::vector<LinMap> acts;
    for (int i = 0; i < M.nvars; ++i) {
      // x: M_{-d-1} -> M_{-d}; transpose maps M_{-d}^* -> M_{-d-1}^*.
      LinMap T = LinMap::zero(M.dim(-d - 1), M.dim(-d));
      if (-d - 1 >= M.lo) {
        const LinMap& A = M.mult[static_cast<std::size_t>(-d - 1 - M.lo)][static_cast<std::size_t>(i)];
        for (int r = 0; r < A.ncols(); ++r)
          for (int c = 0; c < A.rows; ++c) T.cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] = A.cols[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      }
      acts.push_back(std::move(T));
    }
    D.mult.push_back(std::move(acts));
  }
  return D;
}

/// A graded presentation of a finite-length truncated module over an
/// artinian ring: minimal generators and generators of their syzygies.
inline GradedModule present(const RingPtr& ring, const TruncatedModule& X) {
  if (!X.complete) throw InsufficientTruncation("presentation needs a finite-length module");
  TruncatedModule Rt = truncate_ring(ring, 64);
  if (!Rt.complete) throw std::invalid_argument("presentation from linear algebra needs an artinian ring");
  OracleResolution res = resolve(X, Rt, 1, X.hi + Rt.hi + 1);
  if (res.steps.empty()) return GradedModule::free(ring, {});
  const auto& g = res.steps[0];
  const PolyRing& S = ring->poly_ring();
  std::vector<std::vector<Polynomial>> columns;
  if (res.steps.size() > 1) {
    const TruncatedModule& P0 = res.modules[0];
    const auto& rel = res.steps[1];
    for (std::size_t k = 0; k < rel.shifts.size(); ++k) {
      std::vector<std::vector<PolyTerm>> entries(g.shifts.size());
      const auto& lab = P0.labels[static_cast<std::size_t>(rel.shifts[k] - P0.lo)];
      for (std::size_t c = 0; c < rel.images[k].size(); ++c)
        if (Coeff v = rel.images[k][c]) entries[static_cast<std::size_t>(lab[c].first)].push_back({lab[c].second, v});
      std::vector<Polynomial> col;
      for (auto& e : entries) col.push_back(S.from_terms(std::move(e)));
      columns.push_back(std::move(col));
    }
  }
  return GradedModule::build(ring, g.shifts, columns);
}

struct MatlisDual {
  TruncatedModule dual;
  GradedModule presentation;
};

/// Matlis dual of a module over an artinian ring.
inline MatlisDual matlis_dual(const GradedModule& M, int cap = 64) {
  TruncatedModule Rt = truncate_ring(M.ring_ptr(), cap);
  if (!Rt.complete) throw std::invalid_argument("matlis_dual: the ring is not artinian");
  TruncatedModule D = dual(truncate_finite(M, cap));
  GradedModule P = present(M.ring_ptr(), D);
  return {std::move(D), std::move(P)};
}

/// Structure constants of an artinian graded algebra on its standard
/// monomial basis.
struct FiniteAlgebra {
  const PrimeField* field = nullptr;
  std::vector<Monomial> basis;
  std::vector<int> degrees;
  std::vector<std::vector<Vec>> table;  // table[i][j] = b_i * b_j

  int size() const noexcept { return static_cast<int>(basis.size()); }
  int unit_index() const {
    for (int i = 0; i < size(); ++i)
      if (basis[static_cast<std::size_t>(i)].is_one()) return i;
    return -1;
  }
  Vec multiply(const Vec& a, const Vec& b) const {
    const PrimeField& K = *field;
    Vec out(basis.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (!b[j]) continue;
        Coeff c = K.mul(a[i], b[j]);
        const Vec& t = table[i][j];
        for (std::size_t k = 0; k < t.size(); ++k)
          if (t[k]) out[k] = K.add(out[k], K.mul(c, t[k]));
      }
    }
    return out;
  }
  Vec unit(int i) const {
    Vec v(basis.size(), 0);
    v[static_cast<std::size_t>(i)] = 1;
    return v;
  }
  bool is_associative() const {
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < size(); ++j)
        for (int k = 0; k < size(); ++k)
          if (multiply(multiply(unit(i), unit(j)), unit(k)) != multiply(unit(i), multiply(unit(j), unit(k)))) return false;
    return true;
  }
  bool is_unital() const {
    int u = unit_index();
    if (u < 0) return size() == 0;
    for (int i = 0; i < size(); ++i)
      if (table[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)] != unit(i) ||
          table[static_cast<std::size_t>(i)][static_cast<std::size_t>(u)] != unit(i))
        return false;
    return true;
  }
  bool is_commutative() const {
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < size(); ++j)
        if (table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != table[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) return false;
    return true;
  }
};

inline FiniteAlgebra finite_algebra(const RingPtr& ring, int cap = 64) {
  TruncatedModule R = truncate_ring(ring, cap);
  if (!R.complete) throw std::invalid_argument("finite_algebra: the ring is not artinian");
  FiniteAlgebra A;
  A.field = R.field;
  std::vector<int> offset;
  for (int d = R.lo; d <= R.hi; ++d) {
    offset.push_back(static_cast<int>(A.basis.size()));
    for (const auto& [j, u] : R.labels[static_cast<std::size_t>(d - R.lo)]) {
      A.basis.push_back(u);
      A.degrees.push_back(d);
    }
  }
  const std::size_t N = A.basis.size();
  A.table.assign(N, std::vector<Vec>(N));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      const int di = A.degrees[i];
      const int dj = A.degrees[j];
      Vec local(static_cast<std::size_t>(R.dim(dj)), 0);
      local[j - static_cast<std::size_t>(offset[static_cast<std::size_t>(dj - R.lo)])] = 1;
      Vec prod = R.act_monomial(A.basis[i], dj, std::move(local));
      Vec full(N, 0);
      const int dd = di + dj;
      if (dd <= R.hi)
        for (std::size_t k = 0; k < prod.size(); ++k) full[static_cast<std::size_t>(offset[static_cast<std::size_t>(dd - R.lo)]) + k] = prod[k];
      A.table[i][j] = std::move(full);
    }
  return A;
}

}  // namespace injdim::oracle

#endif  // INJDIM_ORACLE_HPP
