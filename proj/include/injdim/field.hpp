#ifndef INJDIM_FIELD_HPP
#define INJDIM_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace injdim {

using Coeff = std::uint32_t;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Arithmetic in Z/p with canonical representatives in [0, p).
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultModulus = 32003;

  explicit PrimeField(std::uint32_t p = kDefaultModulus) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p))
      throw std::invalid_argument("characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }

  std::uint32_t characteristic() const noexcept { return p_; }

  Coeff from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Coeff>(r);
  }
  /// Symmetric lift into (-p/2, p/2], used for printing.
  std::int64_t to_signed(Coeff a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  Coeff add(Coeff a, Coeff b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Coeff pow(Coeff a, std::uint64_t e) const noexcept {
    Coeff r = 1 % p_;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Coeff inv(Coeff a) const {
    if (a == 0) throw std::domain_error("inverse of zero in prime field");
    return pow(a, p_ - 2);
  }

  bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace injdim

#endif  // INJDIM_FIELD_HPP
