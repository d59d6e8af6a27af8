#ifndef INJDIM_DENSE_HPP
#define INJDIM_DENSE_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "field.hpp"

namespace injdim::dense {

using Vec = std::vector<Coeff>;

inline bool is_zero(const Vec& v) {
  for (Coeff c : v)
    if (c) return false;
  return true;
}

/// Linear map given by the images of the standard basis (columns).
struct LinMap {
  int rows = 0;
  std::vector<Vec> cols;

  int ncols() const noexcept { return static_cast<int>(cols.size()); }
  Vec apply(const PrimeField& F, const Vec& v) const {
    Vec out(static_cast<std::size_t>(rows), 0);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (!v[j]) continue;
      for (int i = 0; i < rows; ++i)
        if (Coeff a = cols[j][static_cast<std::size_t>(i)]) out[static_cast<std::size_t>(i)] = F.add(out[static_cast<std::size_t>(i)], F.mul(a, v[j]));
    }
    return out;
  }
  /// this ∘ other.
  LinMap compose(const PrimeField& F, const LinMap& other) const {
    LinMap r;
    r.rows = rows;
    for (const auto& c : other.cols) r.cols.push_back(apply(F, c));
    return r;
  }
  static LinMap identity(int n) {
    LinMap r;
    r.rows = n;
    for (int j = 0; j < n; ++j) {
      Vec e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(j)] = 1;
      r.cols.push_back(std::move(e));
    }
    return r;
  }
  static LinMap zero(int rows, int cols) {
    LinMap r;
    r.rows = rows;
    r.cols.assign(static_cast<std::size_t>(cols), Vec(static_cast<std::size_t>(rows), 0));
    return r;
  }
};

/// Reduced row echelon basis of a subspace of F^n, optionally tracking for
/// each row the combination of inserted vectors that produced it.
class Echelon {
 public:
  Echelon(const PrimeField& F, int n, bool track = false) : F_(F), n_(n), track_(track) {}

  int dim() const noexcept { return static_cast<int>(rows_.size()); }
  int ambient() const noexcept { return n_; }
  const std::vector<Vec>& rows() const noexcept { return rows_; }
  const std::vector<int>& pivots() const noexcept { return pivots_; }

  Vec reduce(Vec v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      Coeff c = v[static_cast<std::size_t>(pivots_[r])];
      if (c) axpy(v, rows_[r], F_.neg(c));
    }
    return v;
  }
  bool contains(const Vec& v) const { return is_zero(reduce(v)); }

  /// Inserts v; returns false if v was already in the span. With tracking,
  /// `kernel_out` receives the dependency (in terms of insertion indices)
  /// when v reduces to zero.
  bool insert(Vec v, Vec* kernel_out = nullptr) {
    const std::size_t idx = inserted_++;
    Vec tag;
    if (track_) {
      tag.assign(idx + 1, 0);
      tag[idx] = 1;
      for (auto& t : tags_) t.resize(idx + 1, 0);
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      Coeff c = v[static_cast<std::size_t>(pivots_[r])];
      if (!c) continue;
      axpy(v, rows_[r], F_.neg(c));
      if (track_) axpy(tag, tags_[r], F_.neg(c));
    }
    int p = -1;
    for (int i = 0; i < n_; ++i)
      if (v[static_cast<std::size_t>(i)]) {
        p = i;
        break;
      }
    if (p < 0) {
      if (kernel_out) *kernel_out = std::move(tag);
      return false;
    }
    Coeff inv = F_.inv(v[static_cast<std::size_t>(p)]);
    scale(v, inv);
    if (track_) scale(tag, inv);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      Coeff c = rows_[r][static_cast<std::size_t>(p)];
      if (!c) continue;
      axpy(rows_[r], v, F_.neg(c));
      if (track_) axpy(tags_[r], tag, F_.neg(c));
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    if (track_) tags_.push_back(std::move(tag));
    return true;
  }

 private:
  void axpy(Vec& y, const Vec& x, Coeff a) const {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i]) y[i] = F_.add(y[i], F_.mul(a, x[i]));
  }
  void scale(Vec& v, Coeff a) const {
    for (auto& c : v) c = F_.mul(c, a);
  }

  const PrimeField& F_;
  int n_;
  bool track_;
  std::size_t inserted_ = 0;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
  std::vector<Vec> tags_;
};

inline int rank(const PrimeField& F, const LinMap& A) {
  Echelon E(F, A.rows);
  for (const auto& c : A.cols) E.insert(c);
  return E.dim();
}

/// Basis of ker A.
inline std::vector<Vec> kernel(const PrimeField& F, const LinMap& A) {
  Echelon E(F, A.rows, true);
  std::vector<Vec> out;
  for (const auto& c : A.cols) {
    Vec k;
    if (!E.insert(c, &k)) {
      k.resize(A.cols.size(), 0);
      out.push_back(std::move(k));
    }
  }
  return out;
}

/// Vectors among `candidates` extending a basis of span(base) to a basis of
/// span(base ∪ candidates).
inline std::vector<Vec> complement(const PrimeField& F, int n, const std::vector<Vec>& base, const std::vector<Vec>& candidates) {
  Echelon E(F, n);
  for (const auto& b : base) E.insert(b);
  std::vector<Vec> out;
  for (const auto& c : candidates)
    if (E.insert(c)) out.push_back(c);
  return out;
}

}  // namespace injdim::dense

#endif  // INJDIM_DENSE_HPP
