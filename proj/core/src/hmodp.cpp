#include "sl2dist/hmodp.hpp"

namespace sl2dist {

Element<RingFp> reduce_mod_p(const Element<RingZ>& x, const RingFp& ring) {
  Element<RingFp> out(ring);
  for (const auto& [k, c] : x.terms()) out.add_key(k, ring.from_bigint(c));
  return out;
}

Element<RingFp> reduce_mod_p(const Element<RingQp>& x, const RingFp& ring) {
  if (x.ring().p() != ring.p())
    throw std::invalid_argument("reduce_mod_p: prime mismatch");
  Element<RingFp> out(ring);
  for (const auto& [k, c] : x.terms()) {
    const BigInt num(c.get_num()), den(c.get_den());
    RingFp::Coef d = ring.from_bigint(den);
    if (d == 0) throw std::domain_error("reduce_mod_p: denominator divisible by p");
    out.add_key(k, ring.mul(ring.from_bigint(num), ring.inv(d)));
  }
  return out;
}

std::vector<Monomial> basis_Hn(unsigned long p, unsigned n) {
  unsigned long bound = 1;
  for (unsigned i = 0; i < n; ++i) {
    bound *= p;
    if (bound > kMonomialIndexLimit)
      throw std::invalid_argument("basis_Hn: p^n exceeds the monomial index range");
  }
  std::vector<Monomial> out;
  out.reserve(bound * bound * bound);
  for (unsigned long a = 0; a < bound; ++a)
    for (unsigned long b = 0; b < bound; ++b)
      for (unsigned long c = 0; c < bound; ++c)
        out.push_back(Monomial{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                               static_cast<std::uint32_t>(c)});
  return out;
}

Element<RingFp> frobenius(const Element<RingFp>& x) {
  const RingFp& ring = x.ring();
  const std::uint32_t p = static_cast<std::uint32_t>(ring.p());
  Element<RingFp> out(ring);
  for (const auto& [k, c] : x.terms()) {
    Monomial m = Monomial::from_key(k);
    if (m.a % p || m.b % p || m.c % p) continue;
    out.add_term(Monomial{m.a / p, m.b / p, m.c / p}, c);
  }
  return out;
}

}  // namespace sl2dist
