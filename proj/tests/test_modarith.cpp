#include <doctest.h>

#include "arrayldpc/error.hpp"
#include "arrayldpc/modarith.hpp"

using namespace arrayldpc;

TEST_SUITE("modarith") {
  TEST_CASE("ext_gcd of 47 and 59 gives kappa -5, eta 4") {
    CHECK(ext_gcd(47, 59) == ExtGcd{1, -5, 4});
  }

  TEST_CASE("ext_gcd with equal arguments") {
    const ExtGcd r = ext_gcd(7, 7);
    CHECK(r.g == 7);
    CHECK(7 * r.kappa + 7 * r.eta == 7);
  }

  TEST_CASE("ext_gcd identity case") { CHECK(ext_gcd(1, 0) == ExtGcd{1, 1, 0}); }

  TEST_CASE("ext_gcd of two zeros is undefined") {
    CHECK_THROWS_AS(ext_gcd(0, 0), Error);
    try {
      ext_gcd(0, 0);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::undefined_input);
    }
  }

  TEST_CASE("ext_gcd satisfies the Bezout identity, including negative inputs") {
    for (Int a = -40; a <= 40; ++a) {
      for (Int b = -40; b <= 40; ++b) {
        if (a == 0 && b == 0) continue;
        const ExtGcd r = ext_gcd(a, b);
        CHECK(r.g > 0);
        CHECK(r.kappa * a + r.eta * b == r.g);
        CHECK(a % r.g == 0);
        CHECK(b % r.g == 0);
      }
    }
  }

  TEST_CASE("mod_inverse examples") {
    CHECK(mod_inverse(2, 7) == 4);
    CHECK(mod_inverse(1, 47) == 1);
    CHECK(mod_inverse(2, 47) == 24);
    CHECK(mod_inverse(-1, 7) == 6);
  }

  TEST_CASE("mod_inverse of zero residue fails") {
    CHECK_THROWS_AS(mod_inverse(0, 7), Error);
    try {
      mod_inverse(14, 7);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::non_invertible);
    }
  }

  TEST_CASE("mod_inverse property over all residues for primes up to 97") {
    for (const Int q : primes_between(3, 97)) {
      for (Int a = 1; a < q; ++a) {
        const Int b = mod_inverse(a, q);
        CHECK(b >= 0);
        CHECK(b < q);
        CHECK(mul_mod(a, b, q) == 1);
      }
    }
  }

  TEST_CASE("eval_rational examples") {
    CHECK(eval_rational(ModRational(-3, 2), 47) == 22);
    CHECK(eval_rational(ModRational(17, 2), 47) == 32);
    CHECK(eval_rational(ModRational(0, 1), 47) == 0);
    CHECK(eval_rational(ModRational(0, 1), 7) == 0);
  }

  TEST_CASE("eval_rational is undefined when q divides the denominator") {
    CHECK_THROWS_AS(eval_rational(ModRational(1, 7), 7), Error);
    try {
      eval_rational(ModRational(3, 14), 7);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::evaluation_undefined);
    }
  }

  TEST_CASE("half-integers evaluate to (q + a) / 2") {
    for (const Int q : primes_between(3, 97)) {
      for (Int a = -q; a <= q; ++a) {
        if (a % 2 == 0) continue;
        const Int expected = mod(q + a, 2 * q) / 2;
        CHECK(eval_rational(ModRational(a, 2), q) == mod(expected, q));
      }
    }
  }

  TEST_CASE("crt_lift table values") {
    CHECK(crt_lift(46, 47, 58, 59) == 2772);
    CHECK(crt_lift(23, 47, 29, 59) == 1386);
    CHECK(crt_lift(0, 47, 0, 59) == 0);
  }

  TEST_CASE("crt_lift needs distinct moduli") {
    try {
      crt_lift(1, 7, 2, 7);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::invalid_moduli);
    }
  }

  TEST_CASE("crt_lift round-trips every residue for moduli products up to 10^4") {
    const auto primes = primes_between(3, 200);
    for (std::size_t a = 0; a < primes.size(); ++a) {
      for (std::size_t b = a + 1; b < primes.size(); ++b) {
        const Int q1 = primes[a], q2 = primes[b];
        if (q1 * q2 > 10000) continue;
        for (Int u = 0; u < q1 * q2; ++u) REQUIRE(crt_lift(u % q1, q1, u % q2, q2) == u);
      }
    }
  }

  TEST_CASE("ModRational is stored reduced with a positive denominator") {
    const ModRational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(ModRational(0, 5) == ModRational(0, 1));
    CHECK(ModRational(0, 5).den() == 1);
    CHECK(ModRational(10, 5) == ModRational(2));
    CHECK_THROWS_AS(ModRational(1, 0), Error);
  }

  TEST_CASE("ModRational text form") {
    CHECK(ModRational(-3, 2).to_string() == "-3/2");
    CHECK(ModRational(5).to_string() == "5");
    CHECK(ModRational::parse("-3/2") == ModRational(-3, 2));
    CHECK(ModRational::parse("17/2") == ModRational(17, 2));
    CHECK(ModRational::parse("-16") == ModRational(-16));
    CHECK(ModRational::parse("4/8") == ModRational(1, 2));
    CHECK_THROWS_AS(ModRational::parse("1/"), Error);
    CHECK_THROWS_AS(ModRational::parse("x"), Error);
    CHECK_THROWS_AS(ModRational::parse("1/0"), Error);
  }

  TEST_CASE("ModRational arithmetic and ordering") {
    CHECK(ModRational(1, 2) + ModRational(1, 2) == ModRational(1));
    CHECK(ModRational(5) - ModRational(1, 2) == ModRational(9, 2));
    CHECK(ModRational(-1, 2) * 3 == ModRational(-3, 2));
    CHECK(ModRational(-1, 2) < ModRational(0));
    CHECK(ModRational(1, 4) < ModRational(1, 2));
  }

  TEST_CASE("primality helpers") {
    CHECK(is_odd_prime(7));
    CHECK_FALSE(is_odd_prime(2));
    CHECK_FALSE(is_odd_prime(9));
    CHECK(primes_between(7, 13) == std::vector<Int>{7, 11, 13});
    CHECK(prime_factors(-60) == std::vector<Int>{2, 3, 5});
  }
}
