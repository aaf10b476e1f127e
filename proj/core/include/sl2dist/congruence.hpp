#ifndef SL2DIST_CONGRUENCE_HPP
#define SL2DIST_CONGRUENCE_HPP

// The number-theoretic engine behind the idempotency of t_1: the Casimir
// element, the two divided-power product formulas, the Q polynomial and its
// p-integrality, the minimal polynomial of the Casimir, the mod-p^3
// congruence chi(h) = chi(h+2p), the phi-derivative divisibility, the {0,4}
// eigenvalue computation, and the binom(np,p) = n mod p^3 instance.

#include "sl2dist/hmodp.hpp"

namespace sl2dist {

// Dense univariate polynomial over the rationals, ascending powers.
struct IntPoly {
  std::vector<BigRat> c;

  void trim();
  bool is_zero() const { return c.empty(); }
  std::size_t degree() const { return c.empty() ? 0 : c.size() - 1; }
  BigRat eval(const BigInt& x) const;
  IntPoly derivative() const;
  bool operator==(const IntPoly&) const = default;
};

IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);
IntPoly mul(const IntPoly& a, const IntPoly& b);
IntPoly scale(const BigRat& s, const IntPoly& a);

// Polynomial in the Casimir element with coefficients in Q[h], ascending.
struct DeltaPoly {
  std::vector<IntPoly> c;

  void trim();
  std::size_t degree() const { return c.empty() ? 0 : c.size() - 1; }
  bool operator==(const DeltaPoly&) const = default;
};

DeltaPoly sub(const DeltaPoly& a, const DeltaPoly& b);
DeltaPoly mul(const DeltaPoly& a, const DeltaPoly& b);
DeltaPoly scale(const BigRat& s, const DeltaPoly& a);

// The Casimir element 4fe + (h+1)^2 in the PBW basis.  Asserts the equality
// with 4ef + (h-1)^2 and centrality against both generators; a violation
// throws.
template <class R>
Element<R> casimir(const R& ring) {
  Element<R> f = Element<R>::monomial(ring, Monomial{1, 0, 0});
  Element<R> e = Element<R>::monomial(ring, Monomial{0, 0, 1});
  Element<R> h = Element<R>::monomial(ring, Monomial{0, 1, 0});
  Element<R> one = Element<R>::unit(ring);
  Element<R> hp = add(h, one), hm = sub(h, one);
  Element<R> four = Element<R>::scalar(ring, ring.from_long(4));
  Element<R> d1 = add(mul(four, mul(f, e)), mul(hp, hp));
  Element<R> d2 = add(mul(four, mul(e, f)), mul(hm, hm));
  if (!(d1 == d2))
    throw std::logic_error("casimir: 4fe+(h+1)^2 != 4ef+(h-1)^2");
  if (!commutator(d1, e).is_zero() || !commutator(d1, f).is_zero())
    throw std::logic_error("casimir: element is not central");
  return d1;
}

// Both product formulas over the p-local integers:
//   4^p (p-1)!^2 e^(p) f^(p) = prod_{l=1}^p (delta - (h-2l+1)^2) / p^2
//   4^p (p-1)!^2 f^(p) e^(p) = prod_{l=1}^p (delta - (h+2l-1)^2) / p^2
// False (or a non-p-local division) returns false.
bool product_formula_check(unsigned long p);

// The difference of the two delta-products divided by p^2, expanded as a
// polynomial in delta with coefficients in (1/p^2)Z[h].
DeltaPoly q_poly(unsigned long p);

// Every coefficient polynomial maps each integer h in [h_lo, h_hi] to a
// p-local rational.  The range [0, 2p] already determines the binomial-basis
// coordinates, so a pass over a longer range certifies integrality exactly.
bool q_integrality_check(const DeltaPoly& q, unsigned long p, long h_lo, long h_hi);

// The image of Q mod p, assembled as sum_i (Q_i mod p) * casimir^i.
Element<RingFp> q_image(const DeltaPoly& q, const RingFp& ring);

// Image statements: q_image == 4 X_1, and 4 t_1 == q_image - 4 binom(h,p).
bool q_image_is_4X1(const DeltaPoly& q, unsigned long p);
bool q_image_gives_t1(const DeltaPoly& q, unsigned long p);

// prod_{j in F_p} (delta - j^2) = 0 in the mod-p algebra, the numeric
// expansion equals X^p - 2X^{(p+1)/2} + X, and no proper divisor of the
// product annihilates (drop one factor per distinct eigenvalue).
bool delta_minpoly_check(unsigned long p);

// chi(h) = sum_{i=1}^p prod_{l != i} (jt+h-2l+1)(jt-h+2l-1); the coefficient
// of (delta - jt^2) in the expansion of the first product formula at a fixed
// integer h.  Requires p not dividing jt.
BigInt chi_value(unsigned long p, long jt, long h);

// chi(h) - chi(h+2p) = 0 mod p^3 for every integer h in the range.
bool r1_congruence_check(unsigned long p, long jt, long h_lo, long h_hi);

// Build phi(X) = prod_{l != l_0} (jt+X-2l+1)(jt-X+2tau(l)-1) with l_0 the
// index annihilated mod p at the given h and tau the pairing bijection
// (jt - l + tau(l) = 0 mod p); differentiate formally and check p divides
// phi'(h).  Also checks the closing identity
// sum_i (p-1)!/i (p-1)! - sum_i (p-1)! (p-1)!/i = 0 mod p.
bool phi_prime_check(unsigned long p, long jt, long h);

// The scalar by which 4 t_1 acts on the (i, j^2) factor: the difference of
// the two numeric products at h = i divided by p^2, reduced mod p.  Throws
// unless the value lies in {0, 4}, the (r, s) cross-check matches, and the
// bracket bound -2p+4 <= (r-s)p <= 4p-2 holds with (r-s)p in {0, 2p}.
std::uint32_t eigenvalue_check(unsigned long p, unsigned i, long jt);

// binom(np, p) = n mod p^3 (true for p >= 5; the p = 3 instance fails and
// callers assert that failure explicitly).
bool wolstenholme_check(unsigned long n, unsigned long p);

}  // namespace sl2dist

#endif
