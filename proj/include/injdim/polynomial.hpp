#ifndef INJDIM_POLYNOMIAL_HPP
#define INJDIM_POLYNOMIAL_HPP

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "field.hpp"
#include "monomial.hpp"

namespace injdim {

struct PolyTerm {
  Monomial mono;
  Coeff coeff;
  bool operator==(const PolyTerm&) const = default;
};

/// Sparse polynomial; terms are strictly decreasing in the ambient order and
/// carry nonzero coefficients. Arithmetic lives on PolyRing.
class Polynomial {
 public:
  Polynomial() = default;

  const std::vector<PolyTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const PolyTerm& lead() const { return terms_.front(); }

  /// Degree of the leading term; -1 for zero.
  int degree() const noexcept { return terms_.empty() ? -1 : terms_.front().mono.degree(); }
  bool is_homogeneous() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const PolyTerm& t) { return t.mono.degree() == terms_.front().mono.degree(); });
  }
  /// Constant term coefficient (0 if absent).
  Coeff constant_coeff() const noexcept {
    return (!terms_.empty() && terms_.back().mono.is_one()) ? terms_.back().coeff : 0;
  }

  bool operator==(const Polynomial&) const = default;

 private:
  friend class PolyRing;
  std::vector<PolyTerm> terms_;
};

/// Error with a character offset into the parsed text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& msg) : std::runtime_error(msg), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// The ambient polynomial ring k[x_1..x_n] with a fixed monomial order.
class PolyRing {
 public:
  PolyRing(PrimeField field, std::vector<std::string> vars, MonomialOrder order = MonomialOrder::grevlex)
      : field_(field), vars_(std::move(vars)), order_(order) {
    if (static_cast<int>(vars_.size()) > Monomial::kMaxVars) throw std::invalid_argument("too many variables");
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (!valid_identifier(vars_[i])) throw std::invalid_argument("invalid variable name '" + vars_[i] + "'");
      for (std::size_t j = 0; j < i; ++j)
        if (vars_[i] == vars_[j]) throw std::invalid_argument("duplicate variable '" + vars_[i] + "'");
    }
  }

  const PrimeField& field() const noexcept { return field_; }
  const std::vector<std::string>& variables() const noexcept { return vars_; }
  int nvars() const noexcept { return static_cast<int>(vars_.size()); }
  MonomialOrder order() const noexcept { return order_; }
  PolyRing with_order(MonomialOrder o) const { return PolyRing(field_, vars_, o); }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const { return compare_monomials(order_, a, b); }

  Monomial one_monomial() const { return Monomial(nvars()); }

  Polynomial zero() const { return {}; }
  Polynomial constant(std::int64_t c) const { return term(field_.from_int(c), one_monomial()); }
  Polynomial variable(int i) const { return term(1, Monomial::variable(nvars(), i)); }
  Polynomial term(Coeff c, const Monomial& m) const {
    Polynomial p;
    if (c % field_.characteristic() != 0) p.terms_.push_back({m, c % field_.characteristic()});
    return p;
  }

  /// Builds a canonical polynomial from arbitrary (monomial, coefficient)
  /// pairs: sorts, merges duplicates, drops zeros.
  Polynomial from_terms(std::vector<PolyTerm> ts) const {
    std::sort(ts.begin(), ts.end(), [&](const PolyTerm& a, const PolyTerm& b) { return compare(a.mono, b.mono) > 0; });
    Polynomial p;
    for (auto& t : ts) {
      if (t.mono.nvars() != nvars()) throw std::invalid_argument("monomial has wrong variable count");
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff = field_.add(p.terms_.back().coeff, t.coeff);
        if (p.terms_.back().coeff == 0) p.terms_.pop_back();
      } else if (t.coeff != 0) {
        p.terms_.push_back(t);
      }
    }
    return p;
  }

  Polynomial add(const Polynomial& a, const Polynomial& b) const { return combine(a, 1, b, 1); }
  Polynomial sub(const Polynomial& a, const Polynomial& b) const { return combine(a, 1, b, field_.neg(1)); }
  Polynomial neg(const Polynomial& a) const { return scale(a, field_.neg(1)); }

  Polynomial scale(const Polynomial& a, Coeff c) const {
    if (c == 0) return {};
    Polynomial r = a;
    for (auto& t : r.terms_) t.coeff = field_.mul(t.coeff, c);
    return r;
  }
  Polynomial mul_term(const Polynomial& a, Coeff c, const Monomial& m) const {
    if (c == 0) return {};
    Polynomial r;
    r.terms_.reserve(a.terms_.size());
    for (const auto& t : a.terms_) r.terms_.push_back({t.mono * m, field_.mul(t.coeff, c)});
    return r;
  }

  /// a*ca + b*cb, merging sorted term lists.
  Polynomial combine(const Polynomial& a, Coeff ca, const Polynomial& b, Coeff cb) const {
    Polynomial r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin(), j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      std::strong_ordering c = i == a.terms_.end()   ? std::strong_ordering::less
                               : j == b.terms_.end() ? std::strong_ordering::greater
                                                     : compare(i->mono, j->mono);
      if (c > 0) {
        if (Coeff v = field_.mul(i->coeff, ca)) r.terms_.push_back({i->mono, v});
        ++i;
      } else if (c < 0) {
        if (Coeff v = field_.mul(j->coeff, cb)) r.terms_.push_back({j->mono, v});
        ++j;
      } else {
        Coeff v = field_.add(field_.mul(i->coeff, ca), field_.mul(j->coeff, cb));
        if (v) r.terms_.push_back({i->mono, v});
        ++i;
        ++j;
      }
    }
    return r;
  }

  Polynomial multiply(const Polynomial& a, const Polynomial& b) const {
    if (a.is_zero() || b.is_zero()) return {};
    const Polynomial& small = a.size() <= b.size() ? a : b;
    const Polynomial& big = a.size() <= b.size() ? b : a;
    Polynomial acc;
    for (const auto& t : small.terms_) acc = add(acc, mul_term(big, t.coeff, t.mono));
    return acc;
  }

  Polynomial power(const Polynomial& a, int e) const {
    Polynomial r = constant(1);
    for (int i = 0; i < e; ++i) r = multiply(r, a);
    return r;
  }

  Polynomial make_monic(const Polynomial& a) const {
    if (a.is_zero()) return a;
    return scale(a, field_.inv(a.lead().coeff));
  }

  /// Ring homomorphism x_i -> images[i].
  Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != nvars())
      throw std::invalid_argument("substitution needs one image per variable");
    Polynomial acc;
    for (const auto& t : f.terms()) {
      Polynomial m = constant(1);
      for (int i = 0; i < nvars(); ++i)
        if (t.mono[i]) m = multiply(m, power(images[static_cast<std::size_t>(i)], t.mono[i]));
      acc = add(acc, scale(m, t.coeff));
    }
    return acc;
  }

  /// Homogeneous part of degree d.
  Polynomial homogeneous_part(const Polynomial& f, int d) const {
    Polynomial r;
    for (const auto& t : f.terms())
      if (t.mono.degree() == d) r.terms_.push_back(t);
    return r;
  }

  std::string to_string(const Polynomial& f) const {
    if (f.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : f.terms()) {
      std::int64_t c = field_.to_signed(t.coeff);
      if (c < 0) {
        s += first ? "-" : " - ";
        c = -c;
      } else if (!first) {
        s += " + ";
      }
      first = false;
      std::string mono = monomial_to_string(t.mono);
      if (mono.empty())
        s += std::to_string(c);
      else if (c == 1)
        s += mono;
      else
        s += std::to_string(c) + "*" + mono;
    }
    return s;
  }

  std::string monomial_to_string(const Monomial& m) const {
    std::string s;
    for (int i = 0; i < nvars(); ++i) {
      if (!m[i]) continue;
      if (!s.empty()) s += "*";
      s += vars_[static_cast<std::size_t>(i)];
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
  }

  std::optional<int> variable_index(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return static_cast<int>(i);
    return std::nullopt;
  }

  /// Parses the text grammar: integers, variables, '^', explicit '*', '+',
  /// '-', parentheses. Throws ParseError with the offending offset.
  Polynomial parse(std::string_view text) const;

  static bool valid_identifier(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
  }

 private:
  PrimeField field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

namespace detail {

class PolyParser {
 public:
  PolyParser(const PolyRing& ring, std::string_view s) : ring_(ring), s_(s) {}

  Polynomial run() {
    skip();
    if (pos_ == s_.size()) throw ParseError(pos_, "empty polynomial");
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(pos_, std::string("unexpected character '") + s_[pos_] + "'");
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  Polynomial expr() {
    Polynomial acc;
    bool first = true;
    for (;;) {
      skip();
      bool negate = false;
      if (peek('+') || peek('-')) {
        negate = s_[pos_] == '-';
        ++pos_;
      } else if (!first) {
        return acc;
      }
      Polynomial t = product();
      acc = negate ? ring_.sub(acc, t) : ring_.add(acc, t);
      first = false;
    }
  }

  Polynomial product() {
    Polynomial acc = power();
    while (peek('*')) {
      ++pos_;
      acc = ring_.multiply(acc, power());
    }
    skip();
    if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(' || s_[pos_] == '_'))
      throw ParseError(pos_, "juxtaposition is not multiplication; use '*'");
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (peek('^')) {
      ++pos_;
      skip();
      std::size_t start = pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw ParseError(pos_, "expected exponent after '^'");
      long long e = number();
      if (e > 1000) throw ParseError(start, "exponent too large");
      base = ring_.power(base, static_cast<int>(e));
    }
    return base;
  }

  long long number() {
    long long v = 0;
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > (1ll << 40)) throw ParseError(start, "integer literal too large");
      ++pos_;
    }
    return v;
  }

  Polynomial atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError(pos_, "unexpected end of polynomial");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!peek(')')) throw ParseError(pos_, "expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return ring_.constant(number());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      auto idx = ring_.variable_index(name);
      if (!idx) throw ParseError(start, "unknown variable '" + std::string(name) + "'");
      return ring_.variable(*idx);
    }
    throw ParseError(pos_, std::string("unexpected character '") + c + "'");
  }

  const PolyRing& ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial PolyRing::parse(std::string_view text) const { return detail::PolyParser(*this, text).run(); }

}  // namespace injdim

#endif  // INJDIM_POLYNOMIAL_HPP
