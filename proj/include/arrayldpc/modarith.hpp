#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace arrayldpc {

using Int = std::int64_t;

/// Result of the extended Euclidean algorithm: kappa * a + eta * b == g.
struct ExtGcd {
  Int g;
  Int kappa;
  Int eta;

  bool operator==(const ExtGcd&) const = default;
};

ExtGcd ext_gcd(Int a, Int b);

/// Least nonnegative residue of a modulo q (q > 0).
Int mod(Int a, Int q) noexcept;

/// (a * b) mod q without intermediate overflow.
Int mul_mod(Int a, Int b, Int q) noexcept;

Int mod_inverse(Int a, Int q);

/// Unique u in [0, q1*q2) with u = v1 (mod q1) and u = v2 (mod q2), computed
/// as v1 + q1 * kappa * (v2 - v1) where kappa * q1 + eta * q2 = 1.
Int crt_lift(Int v1, Int q1, Int v2, Int q2);

bool is_prime(Int n) noexcept;
bool is_odd_prime(Int n) noexcept;
std::vector<Int> primes_between(Int lo, Int hi);
std::vector<Int> prime_factors(Int n);

/// A rational a/k that stands for a * k^{-1} once reduced modulo a prime.
/// Always stored in lowest terms with a positive denominator.
class ModRational {
 public:
  ModRational() = default;
  ModRational(Int num, Int den = 1);  // NOLINT(google-explicit-constructor)

  Int num() const noexcept { return num_; }
  Int den() const noexcept { return den_; }

  /// "n" when the denominator is 1, otherwise "n/d".
  std::string to_string() const;
  static ModRational parse(std::string_view text);

  ModRational operator+(const ModRational& rhs) const;
  ModRational operator-(const ModRational& rhs) const;
  ModRational operator*(Int k) const;
  ModRational operator-() const { return ModRational(-num_, den_); }

  bool operator==(const ModRational&) const = default;
  std::strong_ordering operator<=>(const ModRational& rhs) const;

 private:
  Int num_ = 0;
  Int den_ = 1;
};

Int eval_rational(const ModRational& r, Int q);

}  // namespace arrayldpc
