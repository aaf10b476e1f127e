#ifndef SL2DIST_PRODUCT_HPP
#define SL2DIST_PRODUCT_HPP

// Multiplication in the divided-power form, built from three classical
// rewrite rules:
//
//   (R1)  e^(r) f^(s) = sum_{k>=0} f^(s-k) binom(h - s - r + 2k, k) e^(r-k)
//   (R2)  binom(h, k) f^(m) = f^(m) binom(h - 2m, k)       (and mirrored for e)
//   (R3)  e^(r) e^(s) = binom(r+s, r) e^(r+s)              (same for f)
//
// plus Vandermonde expansion of shifted binomials and a closed formula for
// binom(h,a) binom(h,b) in the binomial basis.
//
// mul() below avoids expanding h-polynomials symbolically: for every output
// (f, e) cell it accumulates the *values* of the h-polynomial at t = 0..D and
// recovers binomial-basis coefficients by forward differences.  That is exact
// over every coefficient ring here and much faster than basis-by-basis
// expansion.  mul_reference() is the symbolic route, kept as an independent
// cross-check.

#include "sl2dist/element.hpp"

#include <mutex>
#include <tuple>

namespace sl2dist {

namespace detail {
// Integer-coefficient caches shared by all rings (the rule coefficients are
// plain integers).  Guarded by a mutex; bypassed when memoization is off.
struct EfTerm {
  std::uint32_t a, b, c;
  BigInt coef;
};
const std::vector<EfTerm>& ef_straighten_terms(unsigned r, unsigned s);
const std::vector<std::pair<unsigned, BigInt>>& hh_mul_terms(unsigned a, unsigned b);
}  // namespace detail

// Vandermonde: binom(h + a, k) = sum_j binom(h, j) binom(a, k - j).
template <class R>
HPoly<R> hshift_expand(const R& ring, long a, unsigned k) {
  HPoly<R> out(ring);
  for (unsigned j = 0; j <= k; ++j)
    out.add_term(j, ring.from_bigint(binom_int(a, k - j)));
  return out;
}

// binom(h,a) binom(h,b) = sum_{k=max(a,b)}^{a+b} binom(k,a) binom(a, a+b-k) binom(h,k).
template <class R>
HPoly<R> hh_mul(const R& ring, unsigned a, unsigned b) {
  HPoly<R> out(ring);
  for (const auto& [k, c] : detail::hh_mul_terms(a, b))
    out.add_term(k, ring.from_bigint(c));
  return out;
}

// Binomial-basis product of two h-polynomials through hh_mul (the slow,
// symbolic route; hpoly_mul_values is the fast one).
template <class R>
HPoly<R> hpoly_mul_hh(const HPoly<R>& x, const HPoly<R>& y) {
  const R& ring = x.ring();
  HPoly<R> out(ring);
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) {
      auto w = ring.mul(ca, cb);
      for (const auto& [k, c] : detail::hh_mul_terms(a, b))
        out.add_term(k, ring.mul(w, ring.from_bigint(c)));
    }
  return out;
}

// e^(r) f^(s) straightened into PBW order.
template <class R>
Element<R> ef_straighten(const R& ring, unsigned r, unsigned s) {
  Element<R> out(ring);
  for (const auto& t : detail::ef_straighten_terms(r, s)) {
    auto c = ring.from_bigint(t.coef);
    out.add_term(Monomial{t.a, t.b, t.c}, c);
  }
  return out;
}

// Commuting binom(h, k) across a divided power: for side 'e',
// e^(m) binom(h, k) = H * e^(m); for side 'f', f^(m) binom(h, k) = H * f^(m),
// where H is the returned polynomial.
template <class R>
HPoly<R> h_past_ef(const R& ring, unsigned k, unsigned m, char side) {
  long shift;
  if (side == 'e')
    shift = -2L * static_cast<long>(m);
  else if (side == 'f')
    shift = 2L * static_cast<long>(m);
  else
    throw std::invalid_argument("h_past_ef: side must be 'e' or 'f'");
  return hshift_expand(ring, shift, k);
}

// ---------------------------------------------------------------------------
// mul

namespace detail {

template <class R>
void check_same_ring(const Element<R>& x, const Element<R>& y) {
  if (!(x.ring() == y.ring()))
    throw std::invalid_argument("Element: mixed coefficient rings");
}

template <class R>
struct TermView {
  std::uint32_t a, b, c;
  const typename R::Coef* coef;
};

template <class R>
std::vector<TermView<R>> term_views(const Element<R>& x) {
  std::vector<TermView<R>> v;
  v.reserve(x.size());
  for (const auto& [k, c] : x.terms()) {
    Monomial m = Monomial::from_key(k);
    v.push_back(TermView<R>{m.a, m.b, m.c, &c});
  }
  return v;
}

}  // namespace detail

template <class R>
Element<R> mul(const Element<R>& x, const Element<R>& y) {
  detail::check_same_ring(x, y);
  const R& ring = x.ring();
  Element<R> out(ring);
  if (x.is_zero() || y.is_zero()) return out;

  // Fast path: left factor is gamma * f^(a) (no h, no e part): f^(a) merges
  // straight into each right monomial without any straightening.
  if (x.size() == 1) {
    Monomial mx = Monomial::from_key(x.terms().begin()->first);
    const auto& cx = x.terms().begin()->second;
    if (mx.b == 0 && mx.c == 0) {
      for (const auto& [k, cy] : y.terms()) {
        Monomial my = Monomial::from_key(k);
        auto w = ring.mul(cx, cy);
        if (mx.a > 0)
          w = ring.mul(w, ring.binom(static_cast<long>(mx.a) + my.a, mx.a));
        out.add_term(Monomial{mx.a + my.a, my.b, my.c}, w);
      }
      return out;
    }
  }
  // Fast path: right factor is gamma * e^(c).
  if (y.size() == 1) {
    Monomial my = Monomial::from_key(y.terms().begin()->first);
    const auto& cy = y.terms().begin()->second;
    if (my.a == 0 && my.b == 0) {
      for (const auto& [k, cx] : x.terms()) {
        Monomial mx = Monomial::from_key(k);
        auto w = ring.mul(cx, cy);
        if (my.c > 0)
          w = ring.mul(w, ring.binom(static_cast<long>(mx.c) + my.c, my.c));
        out.add_term(Monomial{mx.a, mx.b, mx.c + my.c}, w);
      }
      return out;
    }
  }

  auto xs = detail::term_views<R>(x);
  auto ys = detail::term_views<R>(y);

  // Pass 1: per-cell degree bounds and the window of binomial arguments that
  // pass 2 will need.
  struct CellInfo {
    unsigned D = 0;
    std::vector<typename R::Coef> vals;
  };
  std::unordered_map<std::uint64_t, CellInfo> cells;
  long tmin = 0, tmax = 0;
  unsigned kneed = 0;
  for (const auto& t1 : xs)
    for (const auto& t2 : ys) {
      std::uint32_t kcap = std::min(t1.c, t2.a);
      for (std::uint32_t k = 0; k <= kcap; ++k) {
        std::uint32_t ao = t1.a + t2.a - k;
        std::uint32_t co = t1.c + t2.c - k;
        unsigned D = t1.b + t2.b + k;
        auto& cell = cells[Monomial{ao, 0, co}.key()];
        cell.D = std::max(cell.D, D);
        long s1 = 2L * (static_cast<long>(t2.a) - k);
        long s2 = static_cast<long>(t2.a) + t1.c - 2L * k;
        long s3 = 2L * (static_cast<long>(t1.c) - k);
        tmin = std::min({tmin, -s1, -s2, -s3});
        tmax = std::max({tmax, static_cast<long>(D), static_cast<long>(ao),
                         static_cast<long>(co)});
        kneed = std::max({kneed, static_cast<unsigned>(t1.b), static_cast<unsigned>(t2.b),
                          static_cast<unsigned>(k), static_cast<unsigned>(t1.a),
                          static_cast<unsigned>(t2.c)});
      }
    }
  tmax = std::max(tmax, tmin);  // non-empty window
  auto view = ring.bview(tmin, tmax + 1, kneed);

  for (auto& [key, cell] : cells) cell.vals.assign(cell.D + 1, ring.zero());

  // Pass 2: accumulate values of the h-part of each cell at t = 0..D.
  for (const auto& t1 : xs)
    for (const auto& t2 : ys) {
      std::uint32_t kcap = std::min(t1.c, t2.a);
      for (std::uint32_t k = 0; k <= kcap; ++k) {
        std::uint32_t ao = t1.a + t2.a - k;
        std::uint32_t co = t1.c + t2.c - k;
        // Divided-power merge factors f^(a1) f^(a2-k) and e^(c1-k) e^(c2).
        auto w = ring.mul(*t1.coef, *t2.coef);
        if (t1.a > 0) w = ring.mul(w, view.binom(static_cast<long>(ao), t1.a));
        if (ring.is_zero(w)) continue;
        if (t2.c > 0) w = ring.mul(w, view.binom(static_cast<long>(co), t2.c));
        if (ring.is_zero(w)) continue;
        long s1 = 2L * (static_cast<long>(t2.a) - k);
        long s2 = static_cast<long>(t2.a) + t1.c - 2L * k;
        long s3 = 2L * (static_cast<long>(t1.c) - k);
        auto& cell = cells[Monomial{ao, 0, co}.key()];
        const long D = static_cast<long>(cell.D);
        for (long t = 0; t <= D; ++t) {
          // binom(h - s1, b1) binom(h - s2, k) binom(h - s3, b2) at h = t.
          auto v = view.binom(t - s1, t1.b);
          if (t1.b && ring.is_zero(v)) continue;
          if (k) {
            v = ring.mul(v, view.binom(t - s2, k));
            if (ring.is_zero(v)) continue;
          }
          if (t2.b) {
            v = ring.mul(v, view.binom(t - s3, t2.b));
            if (ring.is_zero(v)) continue;
          }
          ring.add_mul(cell.vals[t], w, v);
        }
      }
    }

  // Pass 3: recover binomial-basis coefficients per cell.
  for (auto& [key, cell] : cells) {
    Monomial base = Monomial::from_key(key);
    auto coefs = newton_coeffs(ring, std::move(cell.vals));
    for (unsigned b = 0; b < coefs.size(); ++b)
      if (!ring.is_zero(coefs[b]))
        out.add_term(Monomial{base.a, b, base.c}, coefs[b]);
  }
  return out;
}

// Symbolic route: straighten each monomial pair through ef_straighten /
// hshift_expand / hh_mul.  Slow; used as an oracle against mul().
template <class R>
Element<R> mul_reference(const Element<R>& x, const Element<R>& y) {
  detail::check_same_ring(x, y);
  const R& ring = x.ring();
  Element<R> out(ring);
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      Monomial m1 = Monomial::from_key(kx);
      Monomial m2 = Monomial::from_key(ky);
      auto wpair = ring.mul(cx, cy);
      // e^(c1) f^(a2) = sum_k f^(a2-k) binom(h - a2 - c1 + 2k, k) e^(c1-k)
      std::uint32_t kcap = std::min(m1.c, m2.a);
      for (std::uint32_t k = 0; k <= kcap; ++k) {
        std::uint32_t ao = m1.a + m2.a - k;
        std::uint32_t co = m1.c - k + m2.c;
        auto w = wpair;
        if (m1.a > 0) w = ring.mul(w, ring.binom(static_cast<long>(ao), m1.a));
        if (m2.c > 0) w = ring.mul(w, ring.binom(static_cast<long>(co), m2.c));
        if (ring.is_zero(w)) continue;
        // Three h-factors, shifted into the slot between f^(ao) and e^(co).
        HPoly<R> h1 = hshift_expand(ring, -2L * (static_cast<long>(m2.a) - k), m1.b);
        HPoly<R> hm = hshift_expand(
            ring, -(static_cast<long>(m2.a) + m1.c - 2L * k), k);
        HPoly<R> h2 = hshift_expand(ring, -2L * (static_cast<long>(m1.c) - k), m2.b);
        HPoly<R> prod = hpoly_mul_hh(hpoly_mul_hh(h1, hm), h2);
        for (const auto& [b, hc] : prod.terms())
          out.add_term(Monomial{ao, b, co}, ring.mul(w, hc));
      }
    }
  return out;
}

template <class R>
Element<R> commutator(const Element<R>& x, const Element<R>& y) {
  return sub(mul(x, y), mul(y, x));
}

template <class R>
Element<R> power(const Element<R>& x, unsigned n) {
  Element<R> acc = Element<R>::unit(x.ring());
  for (unsigned i = 0; i < n; ++i) acc = mul(acc, x);
  return acc;
}

// The involution swapping e and f and negating h; an algebra automorphism of
// the integral form.  Images are re-straightened through mul.
template <class R>
Element<R> chevalley_involution(const Element<R>& x) {
  const R& ring = x.ring();
  Element<R> out(ring);
  for (const auto& [k, c] : x.terms()) {
    Monomial m = Monomial::from_key(k);
    // binom(-h, b) expanded in the binomial basis, from its values.
    std::vector<typename R::Coef> vals;
    vals.reserve(m.b + 1);
    for (long t = 0; t <= static_cast<long>(m.b); ++t)
      vals.push_back(ring.binom(-t, m.b));
    Element<R> mid = hpoly_to_element(hpoly_from_values(ring, vals));
    Element<R> img = Element<R>::monomial(ring, Monomial{0, 0, m.a});  // e^(a)
    img = mul(img, mid);
    img = mul(img, Element<R>::monomial(ring, Monomial{m.c, 0, 0}));   // f^(c)
    out = add(out, scalar_mul(c, img));
  }
  return out;
}

}  // namespace sl2dist

#endif
