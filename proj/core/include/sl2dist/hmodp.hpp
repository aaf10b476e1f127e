#ifndef SL2DIST_HMODP_HPP
#define SL2DIST_HMODP_HPP

// The mod-p hyperalgebra: reduction of integral elements to F_p
// coefficients, the finite truncation bases H_n (all indices < p^n), and the
// Frobenius map that divides every index by p.

#include "sl2dist/product.hpp"

namespace sl2dist {

Element<RingFp> reduce_mod_p(const Element<RingZ>& x, const RingFp& ring);
Element<RingFp> reduce_mod_p(const Element<RingQp>& x, const RingFp& ring);

// The p^{3n} PBW monomials with a, b, c < p^n, in lexicographic (a, b, c)
// order.
std::vector<Monomial> basis_Hn(unsigned long p, unsigned n);

// Frobenius: f^(a) binom(h,b) e^(c) -> f^(a/p) binom(h,b/p) e^(c/p) when p
// divides a, b and c, and to 0 otherwise; extended linearly.  This is an
// algebra map (tested, and a prerequisite for the splitting machinery).
Element<RingFp> frobenius(const Element<RingFp>& x);

}  // namespace sl2dist

#endif
