#ifndef INJDIM_MONOMIAL_HPP
#define INJDIM_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace injdim {

/// Exponent vector with inline storage. All monomials in one computation
/// share the same variable count.
class Monomial {
 public:
  static constexpr int kMaxVars = 16;

  Monomial() = default;
  explicit Monomial(int nvars) : nvars_(static_cast<std::uint8_t>(check_nvars(nvars))) {}
  Monomial(std::initializer_list<int> exps) : Monomial(std::span<const int>(exps.begin(), exps.size())) {}
  explicit Monomial(std::span<const int> exps) : nvars_(static_cast<std::uint8_t>(check_nvars(static_cast<int>(exps.size())))) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 0) throw std::invalid_argument("negative exponent");
      exp_[i] = static_cast<std::int16_t>(exps[i]);
      degree_ += exps[i];
    }
  }

  static Monomial variable(int nvars, int index) {
    Monomial m(nvars);
    m.exp_.at(static_cast<std::size_t>(index)) = 1;
    m.degree_ = 1;
    return m;
  }

  int nvars() const noexcept { return nvars_; }
  int degree() const noexcept { return degree_; }
  int operator[](int i) const noexcept { return exp_[static_cast<std::size_t>(i)]; }
  bool is_one() const noexcept { return degree_ == 0; }

  std::vector<int> exponents() const { return {exp_.begin(), exp_.begin() + nvars_}; }

  Monomial operator*(const Monomial& o) const {
    check_same(o);
    Monomial r(*this);
    for (int i = 0; i < nvars_; ++i) r.exp_[i] = static_cast<std::int16_t>(exp_[i] + o.exp_[i]);
    r.degree_ = degree_ + o.degree_;
    return r;
  }

  bool divides(const Monomial& o) const noexcept {
    if (degree_ > o.degree_) return false;
    for (int i = 0; i < nvars_; ++i)
      if (exp_[i] > o.exp_[i]) return false;
    return true;
  }
  /// o / *this; requires divides(o).
  Monomial quotient_of(const Monomial& o) const {
    Monomial r(o);
    for (int i = 0; i < nvars_; ++i) r.exp_[i] = static_cast<std::int16_t>(o.exp_[i] - exp_[i]);
    r.degree_ = o.degree_ - degree_;
    return r;
  }
  Monomial lcm(const Monomial& o) const {
    check_same(o);
    Monomial r(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      r.exp_[i] = std::max(exp_[i], o.exp_[i]);
      r.degree_ += r.exp_[i];
    }
    return r;
  }
  Monomial gcd(const Monomial& o) const {
    check_same(o);
    Monomial r(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      r.exp_[i] = std::min(exp_[i], o.exp_[i]);
      r.degree_ += r.exp_[i];
    }
    return r;
  }
  bool coprime(const Monomial& o) const noexcept {
    for (int i = 0; i < nvars_; ++i)
      if (exp_[i] > 0 && o.exp_[i] > 0) return false;
    return true;
  }

  /// Bit i set iff variable i occurs; a cheap necessary test for divisibility.
  std::uint32_t support_mask() const noexcept {
    std::uint32_t m = 0;
    for (int i = 0; i < nvars_; ++i)
      if (exp_[i]) m |= 1u << i;
    return m;
  }

  bool operator==(const Monomial& o) const noexcept {
    return nvars_ == o.nvars_ && degree_ == o.degree_ && exp_ == o.exp_;
  }

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int i = 0; i < nvars_; ++i) h = (h ^ static_cast<std::size_t>(exp_[i])) * 1099511628211ull;
    return h;
  }

  void check_same(const Monomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("monomials over different variable counts");
  }

 private:
  static int check_nvars(int n) {
    if (n < 0 || n > kMaxVars) throw std::invalid_argument("variable count out of range: " + std::to_string(n));
    return n;
  }

  std::array<std::int16_t, kMaxVars> exp_{};
  std::uint8_t nvars_ = 0;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

enum class MonomialOrder { grevlex, lex };

/// Total order on monomials; grevlex compares degree first and breaks ties
/// reverse-lexicographically, lex ignores degree.
inline std::strong_ordering compare_monomials(MonomialOrder order, const Monomial& a, const Monomial& b) {
  a.check_same(b);
  const int n = a.nvars();
  if (order == MonomialOrder::grevlex) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    for (int i = n - 1; i >= 0; --i)
      if (a[i] != b[i]) return b[i] <=> a[i];
    return std::strong_ordering::equal;
  }
  for (int i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

/// All monomials of the given degree in nvars variables, in decreasing
/// lex order.
inline std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == nvars - 1) {
      e[static_cast<std::size_t>(var)] = left;
      out.emplace_back(std::span<const int>(e));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[static_cast<std::size_t>(var)] = k;
      rec(var + 1, left - k);
    }
  };
  rec(0, degree);
  return out;
}

}  // namespace injdim

#endif  // INJDIM_MONOMIAL_HPP
