#include "sl2dist/congruence.hpp"

#include <doctest.h>

#include <vector>

#include "sl2dist/splitting.hpp"

using namespace sl2dist;

namespace {

// Independent route to chi: expand each product as a polynomial in h by
// naive convolution and only then evaluate, instead of evaluating factor by
// factor at a fixed h.
using ZPoly = std::vector<BigInt>;

ZPoly zconv(const ZPoly& a, const ZPoly& b) {
  ZPoly r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

BigInt zeval(const ZPoly& a, long h) {
  BigInt acc(0);
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * h + a[i];
  return acc;
}

// sum_i prod_{l != i} (jt + s1 h - 2l + 1)(jt + s2 h + 2l - 1) with the sign
// pattern (s1, s2) = (+1, -1) for the first product list and (+1, ... ) for
// the second; pass the two linear factors explicitly.
ZPoly chi_poly(unsigned long p, long jt, bool plus_side) {
  ZPoly total = {BigInt(0)};
  for (unsigned long i = 1; i <= p; ++i) {
    ZPoly prod = {BigInt(1)};
    for (unsigned long l = 1; l <= p; ++l) {
      if (l == i) continue;
      ZPoly lin1, lin2;
      if (!plus_side) {
        lin1 = {BigInt(jt - 2 * static_cast<long>(l) + 1), BigInt(1)};
        lin2 = {BigInt(jt + 2 * static_cast<long>(l) - 1), BigInt(-1)};
      } else {
        lin1 = {BigInt(jt + 2 * static_cast<long>(l) - 1), BigInt(1)};
        lin2 = {BigInt(jt - 2 * static_cast<long>(l) + 1), BigInt(-1)};
      }
      prod = zconv(prod, zconv(lin1, lin2));
    }
    total = zadd(total, prod);
  }
  return total;
}

}  // namespace

TEST_CASE("polynomial helpers: eval, derivative, product") {
  IntPoly a;  // 1 + 2x + 3x^2
  a.c = {BigRat(1), BigRat(2), BigRat(3)};
  CHECK(a.degree() == 2);
  CHECK(a.eval(BigInt(2)) == BigRat(17));
  IntPoly d = a.derivative();  // 2 + 6x
  CHECK(d.c == std::vector<BigRat>{BigRat(2), BigRat(6)});
  IntPoly b;  // x - 1
  b.c = {BigRat(-1), BigRat(1)};
  IntPoly ab = mul(a, b);  // -1 - x - x^2 + 3x^3
  CHECK(ab.c == std::vector<BigRat>{BigRat(-1), BigRat(-1), BigRat(-1), BigRat(3)});
  CHECK(sub(a, a).is_zero());
  CHECK(scale(BigRat(0), a).is_zero());
}

TEST_CASE("Casimir element: fixed coefficients and centrality") {
  RingQp ring(3);
  Element<RingQp> d = casimir(ring);  // throws if either identity fails
  Element<RingQp> expect(ring);
  expect.add_term(Monomial{1, 0, 1}, BigRat(4));
  expect.add_term(Monomial{0, 2, 0}, BigRat(2));
  expect.add_term(Monomial{0, 1, 0}, BigRat(3));
  expect.add_term(Monomial{0, 0, 0}, BigRat(1));
  CHECK(d == expect);

  CHECK_NOTHROW(casimir(RingZ{}));
  CHECK_NOTHROW(casimir(RingFp(5)));
  CHECK_NOTHROW(casimir(RingFp(7)));
}

TEST_CASE("divided-power product formulas over the p-local integers") {
  for (unsigned long p : {3ul, 5ul, 7ul}) {
    CAPTURE(p);
    CHECK(product_formula_check(p));
  }
}

TEST_CASE("Q polynomial: shape, pointwise integrality, zero of the checker") {
  for (unsigned long p : {3ul, 5ul, 7ul}) {
    CAPTURE(p);
    DeltaPoly q = q_poly(p);
    CHECK(q.degree() == p - 1);
    // coefficient of delta^i has h-degree 2(p - i) - 1
    for (std::size_t i = 0; i < q.c.size(); ++i)
      CHECK(q.c[i].degree() == 2 * (p - i) - 1);
    long lim = 2 * static_cast<long>(p * p);
    CHECK(q_integrality_check(q, p, -lim, lim));
  }

  // The checker can fail: a bare 1/p coefficient is not p-local.
  DeltaPoly bad;
  IntPoly third;
  third.c = {BigRat(1, 3)};
  bad.c = {third};
  CHECK_FALSE(q_integrality_check(bad, 3, 0, 0));
}

TEST_CASE("image of Q mod p: equals 4 X_1 and produces t_1") {
  for (unsigned long p : {3ul, 5ul}) {
    CAPTURE(p);
    DeltaPoly q = q_poly(p);
    CHECK(q_image_is_4X1(q, p));
    CHECK(q_image_gives_t1(q, p));
  }
}

TEST_CASE("minimal polynomial of the Casimir mod p") {
  for (unsigned long p : {3ul, 5ul, 7ul}) {
    CAPTURE(p);
    CHECK(delta_minpoly_check(p));
  }
}

TEST_CASE("chi values against the expand-then-evaluate oracle") {
  CHECK(chi_value(3, 1, 0) == 192);
  CHECK(chi_value(3, 1, 6) == 192);
  CHECK_THROWS_AS(chi_value(3, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(chi_value(5, 10, 1), std::invalid_argument);

  for (unsigned long p : {3ul, 5ul}) {
    for (long jt = 1; jt < static_cast<long>(p); ++jt) {
      CAPTURE(p);
      CAPTURE(jt);
      ZPoly minus = chi_poly(p, jt, false);
      ZPoly plus = chi_poly(p, jt, true);
      for (long h = -7; h <= 7; ++h) {
        CAPTURE(h);
        CHECK(zeval(minus, h) == chi_value(p, jt, h));
        // The second product list is the first shifted by 2p in h.
        CHECK(zeval(plus, h) == chi_value(p, jt, h + 2 * static_cast<long>(p)));
      }
    }
  }
}

TEST_CASE("chi(h) - chi(h+2p) vanishes mod p^3 across the window") {
  CHECK(r1_congruence_check(3, 2, -18, 18));
  CHECK(r1_congruence_check(5, 1, -50, 50));
  for (unsigned long p : {3ul, 5ul, 7ul}) {
    long lim = 2 * static_cast<long>(p * p);
    for (long jt = 1; jt < static_cast<long>(p); ++jt) {
      CAPTURE(p);
      CAPTURE(jt);
      CHECK(r1_congruence_check(p, jt, -lim, lim));
      // independent of the chosen lift of the residue
      CHECK(r1_congruence_check(p, jt + static_cast<long>(p), -5, 5));
      CHECK(r1_congruence_check(p, jt - static_cast<long>(p), -5, 5));
    }
  }
}

TEST_CASE("phi derivative divisible by p at the annihilated index") {
  CHECK(phi_prime_check(3, 1, 0));
  CHECK(phi_prime_check(5, 2, 1));
  for (unsigned long p : {3ul, 5ul, 7ul}) {
    long lim = 2 * static_cast<long>(p * p);
    for (long jt = 1; jt < static_cast<long>(p); ++jt) {
      CAPTURE(p);
      CAPTURE(jt);
      for (long h = -lim; h <= lim; ++h) {
        CAPTURE(h);
        CHECK(phi_prime_check(p, jt, h));
      }
    }
  }
  CHECK_THROWS_AS(phi_prime_check(3, 6, 0), std::invalid_argument);
}

TEST_CASE("action scalars land in {0, 4} with the (r, s) cross-check") {
  // frozen table at p = 3 (4 = 1 mod 3)
  std::uint32_t table3[3][3] = {{0, 0, 0}, {1, 0, 0}, {0, 1, 1}};
  for (unsigned i = 0; i < 3; ++i)
    for (long jt = 0; jt < 3; ++jt) {
      CAPTURE(i);
      CAPTURE(jt);
      CHECK(eigenvalue_check(3, i, jt) == table3[i][jt]);
    }

  for (unsigned long p : {3ul, 5ul, 7ul}) {
    for (unsigned i = 0; i < p; ++i) {
      unsigned nonzero = 0;
      for (long jt = 0; jt < static_cast<long>(p); ++jt) {
        CAPTURE(p);
        CAPTURE(i);
        CAPTURE(jt);
        std::uint32_t v = eigenvalue_check(p, i, jt);  // throws outside {0, 4}
        CHECK((v == 0 || v == 4 % p));
        if (v != 0) ++nonzero;
        // lift independence
        CHECK(eigenvalue_check(p, i, jt + static_cast<long>(p)) == v);
        CHECK(eigenvalue_check(p, i, jt - 2 * static_cast<long>(p)) == v);
      }
      // each weight row carries exactly i nonzero scalars
      CHECK(nonzero == i);
    }
  }
  CHECK_THROWS_AS(eigenvalue_check(5, 5, 1), std::invalid_argument);
}

TEST_CASE("binom(np, p) = n mod p^3 for p >= 5; fails at p = 3") {
  CHECK(wolstenholme_check(2, 5));   // 252 = 2 mod 125
  CHECK(wolstenholme_check(3, 7));
  for (unsigned long p : {5ul, 7ul, 11ul})
    for (unsigned long n = 1; n <= 10; ++n) {
      CAPTURE(p);
      CAPTURE(n);
      CHECK(wolstenholme_check(n, p));
    }
  // binom(6, 3) = 20 and 20 - 2 = 18 is not divisible by 27
  CHECK_FALSE(wolstenholme_check(2, 3));
}
