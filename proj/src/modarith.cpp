#include "arrayldpc/modarith.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>

#include "arrayldpc/error.hpp"

namespace arrayldpc {

namespace {

__extension__ typedef __int128 Wide;

Int checked(Wide v) {
  if (v > Wide(INT64_MAX) || v < Wide(INT64_MIN)) {
    throw Error(Errc::out_of_range, "integer overflow in rational arithmetic");
  }
  return static_cast<Int>(v);
}

ExtGcd ext_gcd_nonneg(Int a, Int b) {
  if (b == 0) return {a, 1, 0};
  const ExtGcd r = ext_gcd_nonneg(b, a % b);
  return {r.g, r.eta, r.kappa - (a / b) * r.eta};
}

Int parse_int(std::string_view text) {
  Int value = 0;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw Error(Errc::parse_error, "bad integer '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

ExtGcd ext_gcd(Int a, Int b) {
  if (a == 0 && b == 0) {
    throw Error(Errc::undefined_input, "ext_gcd(0, 0) is undefined");
  }
  ExtGcd r = ext_gcd_nonneg(a < 0 ? -a : a, b < 0 ? -b : b);
  if (a < 0) r.kappa = -r.kappa;
  if (b < 0) r.eta = -r.eta;
  return r;
}

Int mod(Int a, Int q) noexcept {
  const Int r = a % q;
  return r < 0 ? r + q : r;
}

Int mul_mod(Int a, Int b, Int q) noexcept {
  const Wide r = (Wide(a) * Wide(b)) % Wide(q);
  return static_cast<Int>(r < 0 ? r + q : r);
}

Int mod_inverse(Int a, Int q) {
  const Int r = mod(a, q);
  if (r == 0) {
    throw Error(Errc::non_invertible, std::to_string(a) + " is not invertible modulo " + std::to_string(q));
  }
  const ExtGcd e = ext_gcd(r, q);
  if (e.g != 1) {
    throw Error(Errc::non_invertible, std::to_string(a) + " shares a factor with " + std::to_string(q));
  }
  return mod(e.kappa, q);
}

Int crt_lift(Int v1, Int q1, Int v2, Int q2) {
  if (q1 == q2) throw Error(Errc::invalid_moduli, "CRT moduli must be distinct");
  if (q1 <= 0 || q2 <= 0) throw Error(Errc::invalid_moduli, "CRT moduli must be positive");
  const ExtGcd e = ext_gcd(q1, q2);
  if (e.g != 1) throw Error(Errc::invalid_moduli, "CRT moduli must be coprime");
  const Wide n = Wide(q1) * Wide(q2);
  const Wide a = mod(v1, q1);
  const Wide b = mod(v2, q2);
  Wide u = (a + Wide(q1) * ((Wide(e.kappa) * (b - a)) % n)) % n;
  if (u < 0) u += n;
  return checked(u);
}

bool is_prime(Int n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (Int d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_odd_prime(Int n) noexcept { return n != 2 && is_prime(n); }

std::vector<Int> primes_between(Int lo, Int hi) {
  std::vector<Int> out;
  for (Int n = lo < 2 ? 2 : lo; n <= hi; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

std::vector<Int> prime_factors(Int n) {
  std::vector<Int> out;
  if (n < 0) n = -n;
  for (Int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

ModRational::ModRational(Int num, Int den) {
  if (den == 0) throw Error(Errc::undefined_input, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    den = 1;
  } else {
    const Int g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

std::string ModRational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

ModRational ModRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return ModRational(parse_int(text));
  return ModRational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

ModRational ModRational::operator+(const ModRational& rhs) const {
  return ModRational(checked(Wide(num_) * rhs.den_ + Wide(rhs.num_) * den_), checked(Wide(den_) * rhs.den_));
}

ModRational ModRational::operator-(const ModRational& rhs) const { return *this + (-rhs); }

ModRational ModRational::operator*(Int k) const { return ModRational(checked(Wide(num_) * k), den_); }

std::strong_ordering ModRational::operator<=>(const ModRational& rhs) const {
  return Wide(num_) * rhs.den_ <=> Wide(rhs.num_) * den_;
}

Int eval_rational(const ModRational& r, Int q) {
  if (std::gcd(r.den(), q) != 1) {
    throw Error(Errc::evaluation_undefined,
                r.to_string() + " cannot be evaluated modulo " + std::to_string(q));
  }
  return mul_mod(mod(r.num(), q), mod_inverse(r.den(), q), q);
}

}  // namespace arrayldpc
