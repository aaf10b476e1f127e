#include "sl2dist/arith.hpp"

#include <doctest.h>

#include <random>

using namespace sl2dist;

TEST_CASE("binom_int basic values and negative tops") {
  CHECK(binom_int(10, 3) == 120);
  CHECK(binom_int(0, 0) == 1);
  CHECK(binom_int(5, 0) == 1);
  CHECK(binom_int(4, 7) == 0);
  // Falling-factorial convention for negative tops.
  CHECK(binom_int(-1, 0) == 1);
  CHECK(binom_int(-1, 1) == -1);
  CHECK(binom_int(-1, 4) == 1);
  CHECK(binom_int(-3, 2) == 6);
  CHECK(binom_int(-2, 3) == -4);
}

TEST_CASE("binom_int satisfies the Pascal recurrence on a window of tops") {
  for (long n = -20; n <= 20; ++n)
    for (unsigned long k = 1; k <= 12; ++k)
      CHECK(binom_int(n, k) == binom_int(n - 1, k) + binom_int(n - 1, k - 1));
}

TEST_CASE("factorial_int") {
  CHECK(factorial_int(0) == 1);
  CHECK(factorial_int(5) == 120);
  CHECK(factorial_int(10) == 3628800);
}

TEST_CASE("vp valuations") {
  CHECK(vp(BigInt(0), 5).is_infinite());
  CHECK(vp(BigInt(1), 5) == Valuation::finite(0));
  CHECK(vp(BigInt(250), 5) == Valuation::finite(3));
  CHECK(vp(BigInt(-250), 5) == Valuation::finite(3));
  CHECK(vp(BigInt(243), 3) == Valuation::finite(5));
  CHECK(Valuation::finite(7) < Valuation::infinity());
  CHECK(!(Valuation::infinity() < Valuation::finite(1000)));

  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> d(1, 10000);
  for (int i = 0; i < 200; ++i) {
    BigInt a(d(rng)), b(d(rng));
    // valuations add under multiplication
    CHECK(vp(a * b, 3).value() == vp(a, 3).value() + vp(b, 3).value());
  }
}

TEST_CASE("vp_signed on rationals") {
  CHECK(vp_signed(BigRat(9, 2), 3) == 2);
  CHECK(vp_signed(BigRat(2, 9), 3) == -2);
  CHECK(vp_signed(BigRat(10, 21), 7) == -1);
  CHECK_THROWS_AS(vp_signed(BigRat(0), 3), std::domain_error);
}

TEST_CASE("is_small_prime") {
  CHECK(is_small_prime(2));
  CHECK(is_small_prime(3));
  CHECK(is_small_prime(97));
  CHECK(!is_small_prime(1));
  CHECK(!is_small_prime(91));  // 7 * 13
}

TEST_CASE("binom_mod_p_lucas agrees with direct reduction") {
  for (unsigned long p : {3ul, 5ul, 7ul})
    for (long n = 0; n <= 200; n += 7)
      for (long k = 0; k <= n; k += 5) {
        Residue lucas = binom_mod_p_lucas(BigInt(n), BigInt(k), p);
        BigInt direct = binom_int(n, static_cast<unsigned long>(k));
        CHECK(lucas == Residue(direct, p, 1));
      }
  // A classical instance: binom(p, k) = 0 mod p for 0 < k < p.
  for (unsigned long k = 1; k < 7; ++k)
    CHECK(binom_mod_p_lucas(BigInt(7), BigInt(static_cast<long>(k)), 7).is_zero());
}

TEST_CASE("Residue arithmetic mod p^m") {
  Residue a(BigInt(20), 3, 3);  // 20 mod 27
  Residue b(BigInt(15), 3, 3);
  CHECK((a + b).value() == 8);   // 35 mod 27
  CHECK((a * b).value() == 3);   // 300 mod 27
  CHECK((a - b).value() == 5);
  CHECK(Residue(BigInt(-1), 3, 3).value() == 26);
  Residue c(BigInt(2), 5, 1);
  CHECK_THROWS_AS((void)(a + c), std::invalid_argument);
  CHECK_THROWS_AS(Residue(BigInt(1), 4, 2), std::invalid_argument);
}

TEST_CASE("PLocalRational invariants") {
  CHECK_THROWS_AS(PLocalRational(BigRat(1, 3), 3), std::domain_error);
  CHECK_THROWS_AS(PLocalRational(BigRat(5, 9), 3), std::domain_error);
  PLocalRational half(BigRat(1, 2), 3);
  CHECK(half.den() == 2);

  // Closure of +,-,* : denominators stay coprime to p.
  std::mt19937 rng(999);
  std::uniform_int_distribution<long> dn(-50, 50), dd(1, 50);
  for (unsigned long p : {3ul, 5ul}) {
    for (int i = 0; i < 300; ++i) {
      long d1 = dd(rng), d2 = dd(rng);
      while (d1 % static_cast<long>(p) == 0) d1 = dd(rng);
      while (d2 % static_cast<long>(p) == 0) d2 = dd(rng);
      PLocalRational x(BigRat(dn(rng), d1), p), y(BigRat(dn(rng), d2), p);
      for (const PLocalRational& r : {x + y, x - y, x * y})
        CHECK(mpz_divisible_ui_p(r.den().get_mpz_t(), p) == 0);
    }
  }
}

TEST_CASE("PLocalRational division by p-units only") {
  PLocalRational x(BigRat(7, 2), 3), unit(BigRat(4, 5), 3), bad(BigRat(3, 1), 3);
  CHECK((x / unit) == PLocalRational(BigRat(35, 8), 3));
  CHECK_THROWS_AS(x / bad, std::domain_error);  // 3 is not a unit at p = 3
  CHECK_THROWS_AS(x / PLocalRational(BigRat(0), 3), std::domain_error);
}

TEST_CASE("PLocalRational reduction to Z/p^m") {
  // 1/2 = 5 mod 9 because 2 * 5 = 10 = 1 mod 9.
  PLocalRational half(BigRat(1, 2), 3);
  CHECK(half.reduce(2) == Residue(BigInt(5), 3, 2));
  PLocalRational q(BigRat(22, 7), 5);
  Residue r = q.reduce(3);
  CHECK((r * Residue(BigInt(7), 5, 3)) == Residue(BigInt(22), 5, 3));
}
