#include "sl2dist/hmodp.hpp"

#include <doctest.h>

#include "helpers.hpp"

#include <set>
#include <tuple>

using namespace sl2dist;
using namespace sl2dist::testing;

namespace {

Element<RingFp> fp_monomial(const RingFp& ring, unsigned a, unsigned b, unsigned c) {
  return Element<RingFp>::monomial(ring, Monomial{a, b, c});
}

}  // namespace

TEST_CASE("reduce_mod_p kills p-divisible integers and keeps the rest") {
  RingZ Z;
  RingFp F3(3);
  Element<RingZ> x(Z);
  x.add_term(Monomial{0, 0, 3}, BigInt(6));   // 6 e(3) -> 0
  x.add_term(Monomial{2, 0, 0}, BigInt(7));   // 7 f(2) -> 1 f(2)
  x.add_term(Monomial{0, 1, 0}, BigInt(-1));  // -h(1) -> 2 h(1)
  Element<RingFp> r = reduce_mod_p(x, F3);
  CHECK(r.size() == 2);
  CHECK(r.coeff(Monomial{2, 0, 0}) == 1);
  CHECK(r.coeff(Monomial{0, 1, 0}) == 2);
}

TEST_CASE("reduce_mod_p is a ring map Z -> F_p on random products") {
  RingZ Z;
  RingFp F5(5);
  std::mt19937 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    Element<RingZ> x = random_element(Z, rng, 4, 6, 6, 6);
    Element<RingZ> y = random_element(Z, rng, 4, 6, 6, 6);
    CHECK(reduce_mod_p(mul(x, y), F5) == mul(reduce_mod_p(x, F5), reduce_mod_p(y, F5)));
  }
}

TEST_CASE("reduce_mod_p inverts unit denominators of p-local rationals") {
  RingQp Q3(3);
  RingFp F3(3);
  Element<RingQp> x(Q3);
  x.add_term(Monomial{0, 0, 1}, BigRat(1, 2));  // 1/2 = 2 mod 3
  Element<RingFp> r = reduce_mod_p(x, F3);
  CHECK(r.coeff(Monomial{0, 0, 1}) == 2);

  RingQp Q5(5);
  Element<RingQp> bad(Q5);
  CHECK_THROWS_AS(reduce_mod_p(bad, F3), std::invalid_argument);  // prime mismatch
}

TEST_CASE("p-th powers collapse mod p: e^p = 0 and the h-binomial is fixed") {
  for (unsigned long p : {3ul, 5ul, 7ul}) {
    RingFp F(p);
    // e = e(1); e^p = p! e(p) = 0 mod p, same on the f side.
    CHECK(power(fp_monomial(F, 0, 0, 1), static_cast<unsigned>(p)).is_zero());
    CHECK(power(fp_monomial(F, 1, 0, 0), static_cast<unsigned>(p)).is_zero());
    // h = h(1) satisfies h^p = h mod p (Fermat on every integer value).
    CHECK(power(fp_monomial(F, 0, 1, 0), static_cast<unsigned>(p)) ==
          fp_monomial(F, 0, 1, 0));
  }
}

TEST_CASE("basis_Hn enumerates all monomials below p^n in lexicographic order") {
  auto b1 = basis_Hn(3, 1);
  REQUIRE(b1.size() == 27);
  CHECK(b1.front() == Monomial{0, 0, 0});
  CHECK(b1.back() == Monomial{2, 2, 2});
  for (std::size_t i = 1; i < b1.size(); ++i) {
    auto l = std::tuple{b1[i - 1].a, b1[i - 1].b, b1[i - 1].c};
    auto r = std::tuple{b1[i].a, b1[i].b, b1[i].c};
    CHECK(l < r);
  }
  CHECK(basis_Hn(3, 2).size() == 729);
  CHECK(basis_Hn(5, 1).size() == 125);
  for (const auto& m : basis_Hn(5, 1)) {
    CHECK(m.a < 5);
    CHECK(m.b < 5);
    CHECK(m.c < 5);
  }
}

TEST_CASE("frobenius divides indices by p and kills everything else") {
  RingFp F3(3);
  CHECK(frobenius(Element<RingFp>::unit(F3)) == Element<RingFp>::unit(F3));
  CHECK(frobenius(fp_monomial(F3, 3, 3, 3)) == fp_monomial(F3, 1, 1, 1));
  CHECK(frobenius(fp_monomial(F3, 9, 0, 3)) == fp_monomial(F3, 3, 0, 1));
  CHECK(frobenius(fp_monomial(F3, 0, 0, 1)).is_zero());
  CHECK(frobenius(fp_monomial(F3, 3, 1, 0)).is_zero());
  Element<RingFp> x = add(scalar_mul(2, fp_monomial(F3, 3, 0, 0)), fp_monomial(F3, 1, 0, 0));
  CHECK(frobenius(x) == scalar_mul(2, fp_monomial(F3, 1, 0, 0)));
}

TEST_CASE("frobenius kernel on H_n has dimension p^{3n} - p^{3(n-1)}") {
  for (unsigned long p : {3ul, 5ul}) {
    RingFp F(p);
    for (unsigned n : {1u, 2u}) {
      std::size_t killed = 0;
      for (const auto& m : basis_Hn(p, n))
        if (frobenius(Element<RingFp>::monomial(F, m)).is_zero()) ++killed;
      std::size_t dim = 1, sub = 1;
      for (unsigned i = 0; i < 3 * n; ++i) dim *= p;
      for (unsigned i = 0; i < 3 * (n - 1); ++i) sub *= p;
      CHECK(killed == dim - sub);
    }
  }
}

TEST_CASE("frobenius is an algebra map on random pairs") {
  for (unsigned long p : {3ul, 5ul}) {
    RingFp F(p);
    std::mt19937 rng(static_cast<unsigned>(191 + p));
    unsigned bound = static_cast<unsigned>(p * p - 1);
    for (int trial = 0; trial < 25; ++trial) {
      Element<RingFp> x = random_element(F, rng, 4, bound, bound, bound);
      Element<RingFp> y = random_element(F, rng, 4, bound, bound, bound);
      CHECK(frobenius(mul(x, y)) == mul(frobenius(x), frobenius(y)));
    }
  }
}

TEST_CASE("frobenius maps the H_2 basis onto the H_1 basis") {
  RingFp F3(3);
  std::set<std::uint64_t> images;
  for (const auto& m : basis_Hn(3, 2)) {
    Element<RingFp> fr = frobenius(Element<RingFp>::monomial(F3, m));
    if (fr.is_zero()) continue;
    REQUIRE(fr.size() == 1);
    images.insert(fr.terms().begin()->first);
  }
  CHECK(images.size() == 27);
  for (const auto& m : basis_Hn(3, 1)) CHECK(images.count(m.key()) == 1);
}
