#pragma once

// Exact coefficient fields: the rationals, or F_p for a prime p. Elements of
// either field are held as boost rationals; in characteristic p they are kept
// reduced to an integer representative in [0, p).

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "stardiff/error.hpp"

namespace stardiff {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

/// q = p^r with r >= 1; returns p, or 0 when q is not a prime power.
inline std::uint64_t prime_of_power(std::uint64_t q) {
  if (q < 2) return 0;
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  while (q % p == 0) q /= p;
  return q == 1 ? p : 0;
}

class FieldSpec {
 public:
  /// Characteristic 0 means the rationals.
  constexpr FieldSpec() = default;

  explicit FieldSpec(std::uint64_t characteristic) : p_(characteristic) {
    if (p_ != 0 && !is_prime(p_)) {
      throw Error(ErrorKind::FieldMismatch, "characteristic " + std::to_string(p_) + " is not prime");
    }
  }

  static FieldSpec rationals() { return FieldSpec(); }
  static FieldSpec prime(std::uint64_t p) { return FieldSpec(p); }

  constexpr std::uint64_t characteristic() const { return p_; }
  constexpr bool is_rational() const { return p_ == 0; }

  /// Map an exact rational into the field. Throws if the denominator vanishes mod p.
  Rational reduce(const Rational& x) const {
    if (p_ == 0) return x;
    const BigInt p(p_);
    BigInt num = boost::multiprecision::numerator(x) % p;
    if (num < 0) num += p;
    BigInt den = boost::multiprecision::denominator(x) % p;
    if (den == 0) throw Error(ErrorKind::FieldMismatch, "denominator divisible by the characteristic");
    return Rational((num * inverse_mod(den)) % p);
  }

  Rational from_integer(const BigInt& n) const { return reduce(Rational(n)); }

  Rational inverse(const Rational& x) const {
    if (x == 0) throw Error(ErrorKind::FieldMismatch, "inverse of zero");
    if (p_ == 0) return 1 / x;
    return Rational(inverse_mod(boost::multiprecision::numerator(reduce(x))));
  }

  bool operator==(const FieldSpec&) const = default;

  std::string name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

 private:
  BigInt inverse_mod(BigInt a) const {
    const BigInt p(p_);
    BigInt r0 = p, r1 = a % p, s0 = 0, s1 = 1;
    while (r1 != 0) {
      BigInt q = r0 / r1;
      BigInt t = r0 - q * r1;
      r0 = r1;
      r1 = t;
      t = s0 - q * s1;
      s0 = s1;
      s1 = t;
    }
    BigInt inv = s0 % p;
    if (inv < 0) inv += p;
    return inv;
  }

  std::uint64_t p_ = 0;
};

/// Exact binomial coefficient C(n, k) over the integers; zero for k > n.
inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

/// C(n, k) mod p by Lucas' theorem: the product of digit-wise binomials in base p.
inline std::uint64_t binomial_mod_lucas(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  std::uint64_t result = 1;
  while ((n != 0 || k != 0) && result != 0) {
    const std::uint64_t nd = n % p, kd = k % p;
    if (kd > nd) return 0;
    result = (result * static_cast<std::uint64_t>(binomial(nd, kd) % p)) % p;
    n /= p;
    k /= p;
  }
  return result;
}

/// C(n, k) as a field element; the characteristic-p result goes through the
/// Lucas fast path when `use_lucas` is set.
inline Rational binomial_in(const FieldSpec& field, std::uint64_t n, std::uint64_t k, bool use_lucas = true) {
  if (field.is_rational() || !use_lucas) return field.from_integer(binomial(n, k));
  return Rational(binomial_mod_lucas(n, k, field.characteristic()));
}

}  // namespace stardiff
