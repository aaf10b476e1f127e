#include "sl2dist/product.hpp"
#include "sl2dist/serialize.hpp"

#include <doctest.h>

#include "helpers.hpp"
#include "oracle_usl2.hpp"

using namespace sl2dist;
using namespace sl2dist::testing;

namespace {
const RingZ Z{};

Element<RingZ> ez(unsigned c) { return Element<RingZ>::monomial(Z, Monomial{0, 0, c}); }
Element<RingZ> fz(unsigned a) { return Element<RingZ>::monomial(Z, Monomial{a, 0, 0}); }
Element<RingZ> hz(unsigned b) { return Element<RingZ>::monomial(Z, Monomial{0, b, 0}); }
}  // namespace

TEST_CASE("hshift_expand matches pointwise evaluation") {
  for (long a = -6; a <= 6; ++a)
    for (unsigned k = 0; k <= 6; ++k) {
      HPoly<RingZ> hp = hshift_expand(Z, a, k);
      for (long t = -10; t <= 10; ++t) CHECK(hp.eval(t) == binom_int(t + a, k));
    }
}

TEST_CASE("hshift_expand frozen small case") {
  // binom(h - 2, 1) = binom(h, 1) - 2
  HPoly<RingZ> hp = hshift_expand(Z, -2, 1);
  CHECK(hp.coeff(1) == 1);
  CHECK(hp.coeff(0) == -2);
  CHECK(hp.terms().size() == 2);
}

TEST_CASE("hh_mul validated against pointwise evaluation") {
  for (unsigned a = 0; a <= 8; ++a)
    for (unsigned b = a; b <= 8; ++b) {
      HPoly<RingZ> hp = hh_mul(Z, a, b);
      for (long t = -20; t <= 20; ++t)
        CHECK(hp.eval(t) == binom_int(t, a) * binom_int(t, b));
    }
}

TEST_CASE("hh_mul frozen small cases") {
  HPoly<RingZ> h11 = hh_mul(Z, 1, 1);  // h^2 = 2 binom(h,2) + binom(h,1)
  CHECK(h11.coeff(2) == 2);
  CHECK(h11.coeff(1) == 1);
  HPoly<RingZ> h12 = hh_mul(Z, 1, 2);  // = 3 binom(h,3) + 2 binom(h,2)
  CHECK(h12.coeff(3) == 3);
  CHECK(h12.coeff(2) == 2);
  CHECK(h12.coeff(1) == 0);
}

TEST_CASE("hpoly product: values route vs binomial-basis route") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<unsigned> db(0, 7);
  std::uniform_int_distribution<long> dc(-9, 9);
  for (int trial = 0; trial < 40; ++trial) {
    HPoly<RingZ> x(Z), y(Z);
    for (int i = 0; i < 4; ++i) {
      x.add_term(db(rng), BigInt(dc(rng)));
      y.add_term(db(rng), BigInt(dc(rng)));
    }
    CHECK(hpoly_mul_values(x, y) == hpoly_mul_hh(x, y));
  }
}

TEST_CASE("newton_coeffs round-trips binomial-basis coefficients") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> dc(-20, 20);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<BigInt> coefs;
    for (int b = 0; b < 9; ++b) coefs.emplace_back(dc(rng));
    std::vector<BigInt> vals;
    for (long t = 0; t < 9; ++t) {
      BigInt v = 0;
      for (unsigned b = 0; b < coefs.size(); ++b) v += coefs[b] * binom_int(t, b);
      vals.push_back(v);
    }
    CHECK(newton_coeffs(Z, vals) == coefs);
  }
}

TEST_CASE("ef_straighten frozen small cases") {
  // e f = f e + binom(h, 1)
  Element<RingZ> s11 = ef_straighten(Z, 1, 1);
  CHECK(s11.size() == 2);
  CHECK(s11.coeff(Monomial{1, 0, 1}) == 1);
  CHECK(s11.coeff(Monomial{0, 1, 0}) == 1);
  // e f^(2) = f^(2) e + f (binom(h,1) - 1)
  Element<RingZ> s12 = ef_straighten(Z, 1, 2);
  CHECK(s12.size() == 3);
  CHECK(s12.coeff(Monomial{2, 0, 1}) == 1);
  CHECK(s12.coeff(Monomial{1, 1, 0}) == 1);
  CHECK(s12.coeff(Monomial{1, 0, 0}) == -1);
}

TEST_CASE("ef_straighten against the brute-force PBW oracle") {
  for (unsigned r = 0; r <= 8; ++r)
    for (unsigned s = 0; s <= 8; ++s) {
      UElt expect = u_word_ef(r, s);
      // normalize by 1/(r! s!): the oracle word is e^r f^s, not divided powers
      mpq_class scale(1, 1);
      scale /= mpq_class(factorial_int(r) * factorial_int(s));
      UElt scaled;
      for (const auto& [k, c] : expect) scaled[k] = c * scale;
      UElt got = from_divided(ef_straighten(Z, r, s));
      CHECK(got == scaled);
    }
}

TEST_CASE("ef_straighten cache on/off gives identical results") {
  set_memo_enabled(false);
  Element<RingZ> cold = ef_straighten(Z, 6, 5);
  set_memo_enabled(true);
  Element<RingZ> warm = ef_straighten(Z, 6, 5);
  CHECK(cold == warm);
}

TEST_CASE("h_past_ef matches products") {
  for (unsigned k : {0u, 1u, 2u, 4u})
    for (unsigned m : {1u, 2u, 5u}) {
      // e^(m) binom(h,k) = H e^(m)
      Element<RingZ> lhs = mul(ez(m), hz(k));
      Element<RingZ> rhs = mul(hpoly_to_element(h_past_ef(Z, k, m, 'e')), ez(m));
      CHECK(lhs == rhs);
      Element<RingZ> lhsf = mul(fz(m), hz(k));
      Element<RingZ> rhsf = mul(hpoly_to_element(h_past_ef(Z, k, m, 'f')), fz(m));
      CHECK(lhsf == rhsf);
    }
}

TEST_CASE("mul frozen cases") {
  Element<RingZ> ef = mul(ez(1), fz(1));
  CHECK(to_string(ef) == "f(1)e(1) + h(1)");
  Element<RingZ> ee = mul(ez(2), ez(3));
  CHECK(to_string(ee) == "10 e(5)");
  // e^(3) f over F_3: f(1)e(3) + (h(1)+1) e(2)
  RingFp F3(3);
  Element<RingFp> e3(F3);
  e3.add_term(Monomial{0, 0, 3}, 1);
  Element<RingFp> f1(F3);
  f1.add_term(Monomial{1, 0, 0}, 1);
  CHECK(to_string(mul(e3, f1)) == "f(1)e(3) + (h(1)+1) e(2)");
}

TEST_CASE("commutator of e^(p) and f over F_p") {
  for (unsigned long p : {3ul, 5ul, 7ul}) {
    RingFp F(p);
    Element<RingFp> ep(F), f1(F), expect(F);
    ep.add_term(Monomial{0, 0, static_cast<std::uint32_t>(p)}, 1);
    f1.add_term(Monomial{1, 0, 0}, 1);
    expect.add_term(Monomial{0, 1, static_cast<std::uint32_t>(p - 1)}, 1);
    expect.add_term(Monomial{0, 0, static_cast<std::uint32_t>(p - 1)}, 1);
    CHECK(commutator(ep, f1) == expect);
  }
}

TEST_CASE("mul agrees with mul_reference on random elements") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 30; ++trial) {
    Element<RingZ> x = random_element(Z, rng, 4, 9, 5, 9);
    Element<RingZ> y = random_element(Z, rng, 4, 9, 5, 9);
    CHECK(mul(x, y) == mul_reference(x, y));
  }
  RingFp F5(5);
  for (int trial = 0; trial < 30; ++trial) {
    Element<RingFp> x = random_element(F5, rng, 4, 12, 8, 12);
    Element<RingFp> y = random_element(F5, rng, 4, 12, 8, 12);
    CHECK(mul(x, y) == mul_reference(x, y));
  }
}

TEST_CASE("mul agrees with the brute-force PBW oracle on small elements") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 12; ++trial) {
    Element<RingZ> x = random_element(Z, rng, 3, 3, 3, 3);
    Element<RingZ> y = random_element(Z, rng, 3, 3, 3, 3);
    UElt expect = u_mul(from_divided(x), from_divided(y));
    UElt got = from_divided(mul(x, y));
    CHECK(got == expect);
  }
}

TEST_CASE("mul fast paths agree with the general path") {
  std::mt19937 rng(55);
  for (int trial = 0; trial < 10; ++trial) {
    Element<RingZ> y = random_element(Z, rng, 5, 8, 5, 8);
    Element<RingZ> pf = scalar_mul(BigInt(3), fz(4));
    CHECK(mul(pf, y) == mul_reference(pf, y));
    Element<RingZ> pe = scalar_mul(BigInt(-2), ez(6));
    CHECK(mul(y, pe) == mul_reference(y, pe));
  }
}

TEST_CASE("mul is associative") {
  std::mt19937 rng(808);
  RingFp F7(7);
  for (int trial = 0; trial < 10; ++trial) {
    auto x = random_element(F7, rng, 3, 8, 6, 8);
    auto y = random_element(F7, rng, 3, 8, 6, 8);
    auto z = random_element(F7, rng, 3, 8, 6, 8);
    CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
  }
  for (int trial = 0; trial < 6; ++trial) {
    auto x = random_element(Z, rng, 3, 5, 4, 5);
    auto y = random_element(Z, rng, 3, 5, 4, 5);
    auto z = random_element(Z, rng, 3, 5, 4, 5);
    CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
  }
}

TEST_CASE("unit is neutral and products respect the weight grading") {
  std::mt19937 rng(99);
  auto one = Element<RingZ>::unit(Z);
  for (int trial = 0; trial < 10; ++trial) {
    auto x = random_element(Z, rng, 4, 10, 6, 10);
    CHECK(mul(one, x) == x);
    CHECK(mul(x, one) == x);
  }
  // homogeneous times homogeneous stays homogeneous of the summed weight
  auto xa = mul(fz(2), hz(3));  // weight -4
  auto yb = mul(hz(1), ez(5));  // weight 10
  auto prod = mul(xa, yb);
  CHECK(!prod.is_zero());
  CHECK(is_weight_homogeneous(prod, 6));
}

TEST_CASE("counit is multiplicative") {
  std::mt19937 rng(654);
  for (int trial = 0; trial < 20; ++trial) {
    auto x = random_element(Z, rng, 4, 6, 4, 6);
    auto y = random_element(Z, rng, 4, 6, 4, 6);
    CHECK(counit(mul(x, y)) == counit(x) * counit(y));
  }
}

TEST_CASE("chevalley involution: generator images, squares to identity, multiplicative") {
  CHECK(chevalley_involution(ez(3)) == fz(3));
  CHECK(chevalley_involution(fz(2)) == ez(2));
  // omega(binom(h,1)) = -binom(h,1)
  CHECK(chevalley_involution(hz(1)) == negate(hz(1)));
  std::mt19937 rng(11);
  for (int trial = 0; trial < 8; ++trial) {
    auto x = random_element(Z, rng, 3, 5, 4, 5);
    CHECK(chevalley_involution(chevalley_involution(x)) == x);
    auto y = random_element(Z, rng, 3, 5, 4, 5);
    CHECK(chevalley_involution(mul(x, y)) == mul(chevalley_involution(x), chevalley_involution(y)));
  }
}

TEST_CASE("mul over Zp-local and Z/p^m rings") {
  RingQp Q5(5);
  Element<RingQp> x(Q5), y(Q5);
  x.add_term(Monomial{0, 0, 1}, Q5.from_rational(BigRat(1, 2)));
  y.add_term(Monomial{1, 0, 0}, Q5.from_rational(BigRat(2, 3)));
  Element<RingQp> expect(Q5);
  expect.add_term(Monomial{1, 0, 1}, Q5.from_rational(BigRat(1, 3)));
  expect.add_term(Monomial{0, 1, 0}, Q5.from_rational(BigRat(1, 3)));
  CHECK(mul(x, y) == expect);

  RingZpM Z27(3, 3);
  Element<RingZpM> a(Z27), b(Z27);
  a.add_term(Monomial{0, 0, 2}, Z27.from_long(1));
  b.add_term(Monomial{0, 0, 3}, Z27.from_long(1));
  Element<RingZpM> ab = mul(a, b);
  CHECK(ab.coeff(Monomial{0, 0, 5}) == 10);  // binom(5,2) = 10 mod 27
}

TEST_CASE("value-route multiplication with memoization disabled") {
  std::mt19937 rng(321);
  auto x = random_element(Z, rng, 4, 8, 5, 8);
  auto y = random_element(Z, rng, 4, 8, 5, 8);
  auto warm = mul(x, y);
  set_memo_enabled(false);
  auto cold = mul(x, y);
  set_memo_enabled(true);
  CHECK(warm == cold);
}

TEST_CASE("element JSON round-trip") {
  std::mt19937 rng(77);
  auto x = random_element(Z, rng, 6, 20, 10, 20, -1000, 1000);
  CHECK(element_z_from_json(element_to_json(x)) == x);

  RingFp F7(7);
  auto xf = random_element(F7, rng, 6, 20, 10, 20);
  CHECK(element_fp_from_json(element_to_json(xf)) == xf);

  RingQp Q3(3);
  Element<RingQp> xq(Q3);
  xq.add_term(Monomial{2, 1, 0}, Q3.from_rational(BigRat(-7, 4)));
  xq.add_term(Monomial{0, 0, 3}, Q3.from_rational(BigRat(5, 8)));
  CHECK(element_qp_from_json(element_to_json(xq)) == xq);

  RingZpM Z25(5, 2);
  Element<RingZpM> xz(Z25);
  xz.add_term(Monomial{1, 2, 3}, Z25.from_long(24));
  CHECK(element_zpm_from_json(element_to_json(xz)) == xz);

  // ring mismatch is rejected
  CHECK_THROWS_AS(element_fp_from_json(element_to_json(x)), std::invalid_argument);
}

TEST_CASE("ring descriptor JSON") {
  RingDescriptor d{"Fp", 5, 0};
  CHECK(ring_from_json(ring_to_json(d)) == d);
  RingDescriptor zpm{"Z/p^m", 3, 3};
  CHECK(ring_from_json(ring_to_json(zpm)) == zpm);
}

TEST_CASE("rings reject bad parameters") {
  CHECK_THROWS_AS(RingFp(2), std::invalid_argument);
  CHECK_THROWS_AS(RingFp(9), std::invalid_argument);
  CHECK_THROWS_AS(RingQp(4), std::invalid_argument);
  CHECK_THROWS_AS(RingZpM(3, 0), std::invalid_argument);
}

TEST_CASE("Zp-local coefficient entry rejects denominators divisible by p") {
  RingQp Q3(3);
  CHECK_THROWS_AS(Q3.from_rational(BigRat(1, 3)), std::domain_error);
  CHECK_THROWS_AS(Q3.div_ppow(Q3.from_rational(BigRat(1, 2)), 1), std::domain_error);
  CHECK(Q3.div_ppow(Q3.from_rational(BigRat(9, 2)), 2) == BigRat(1, 2));
}
