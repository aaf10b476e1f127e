#include "sl2dist/congruence.hpp"

#include <optional>
#include <set>

#include "sl2dist/splitting.hpp"

namespace sl2dist {

namespace {

long mod_pos(long v, unsigned long p) {
  long r = v % static_cast<long>(p);
  return r < 0 ? r + static_cast<long>(p) : r;
}

IntPoly intpoly_const(const BigRat& v) {
  IntPoly r;
  r.c = {v};
  r.trim();
  return r;
}

// (h + offset)^2 with integer offset.
IntPoly shifted_square(long offset) {
  IntPoly r;
  r.c = {BigRat(BigInt(offset) * offset), BigRat(2 * offset), BigRat(1)};
  return r;
}

// The element (h + offset)^2 computed through the product engine.
template <class R>
Element<R> shifted_square_elem(const R& ring, long offset) {
  Element<R> h = Element<R>::monomial(ring, Monomial{0, 1, 0});
  Element<R> base = add(h, Element<R>::scalar(ring, ring.from_long(offset)));
  return mul(base, base);
}

// Divide every coefficient by p^2; nullopt when some valuation is too low.
std::optional<Element<RingQp>> element_div_p2(const Element<RingQp>& x) {
  const RingQp& ring = x.ring();
  Element<RingQp> out(ring);
  for (const auto& [k, c] : x.terms()) {
    try {
      out.add_key(k, ring.div_ppow(c, 2));
    } catch (const std::domain_error&) {
      return std::nullopt;
    }
  }
  return out;
}

// prod_{l=1}^{p} (delta - (h -+ (2l-1))^2) as a polynomial in delta; the
// minus_side flag selects the (h-2l+1)^2 list, otherwise (h+2l-1)^2.
DeltaPoly delta_product(unsigned long p, bool minus_side) {
  DeltaPoly acc;
  acc.c = {intpoly_const(BigRat(1))};
  for (unsigned long l = 1; l <= p; ++l) {
    long off = minus_side ? -(2 * static_cast<long>(l) - 1)
                          : (2 * static_cast<long>(l) - 1);
    DeltaPoly factor;
    factor.c = {scale(BigRat(-1), shifted_square(off)), intpoly_const(BigRat(1))};
    acc = mul(acc, factor);
  }
  return acc;
}

Element<RingQp> intpoly_to_qp_element(const IntPoly& q, const RingQp& ring) {
  std::vector<BigRat> vals;
  std::size_t n = q.c.size();
  for (std::size_t t = 0; t <= n; ++t) vals.push_back(q.eval(BigInt(t)));
  return hpoly_to_element(hpoly_from_values(ring, vals));
}

}  // namespace

// --- Polynomial types -------------------------------------------------------

void IntPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

BigRat IntPoly::eval(const BigInt& x) const {
  BigRat acc(0);
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * BigRat(x) + c[i];
  return acc;
}

IntPoly IntPoly::derivative() const {
  IntPoly r;
  for (std::size_t i = 1; i < c.size(); ++i) r.c.push_back(c[i] * BigRat(BigInt(i)));
  r.trim();
  return r;
}

IntPoly add(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), BigRat(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.trim();
  return r;
}

IntPoly sub(const IntPoly& a, const IntPoly& b) {
  return add(a, scale(BigRat(-1), b));
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  if (a.c.empty() || b.c.empty()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, BigRat(0));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}

IntPoly scale(const BigRat& s, const IntPoly& a) {
  IntPoly r = a;
  for (auto& v : r.c) v *= s;
  r.trim();
  return r;
}

void DeltaPoly::trim() {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

DeltaPoly sub(const DeltaPoly& a, const DeltaPoly& b) {
  DeltaPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = add(r.c[i], a.c[i]);
  for (std::size_t i = 0; i < b.c.size(); ++i)
    r.c[i] = sub(r.c[i], b.c[i]);
  r.trim();
  return r;
}

DeltaPoly mul(const DeltaPoly& a, const DeltaPoly& b) {
  DeltaPoly r;
  if (a.c.empty() || b.c.empty()) return r;
  r.c.resize(a.c.size() + b.c.size() - 1);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = add(r.c[i + j], mul(a.c[i], b.c[j]));
  r.trim();
  return r;
}

DeltaPoly scale(const BigRat& s, const DeltaPoly& a) {
  DeltaPoly r = a;
  for (auto& q : r.c) q = scale(s, q);
  r.trim();
  return r;
}

// --- Product formulas and Q -------------------------------------------------

bool product_formula_check(unsigned long p) {
  RingQp ring(p);
  Element<RingQp> delta = casimir(ring);
  BigInt fact = factorial_int(p - 1);
  BigRat lead(BigInt(1) << (2 * p));  // 4^p
  lead *= BigRat(fact * fact);

  Element<RingQp> ep = Element<RingQp>::monomial(ring, Monomial{0, 0, static_cast<std::uint32_t>(p)});
  Element<RingQp> fp = Element<RingQp>::monomial(ring, Monomial{static_cast<std::uint32_t>(p), 0, 0});

  for (bool minus_side : {true, false}) {
    Element<RingQp> prod = Element<RingQp>::unit(ring);
    for (unsigned long l = 1; l <= p; ++l) {
      long off = minus_side ? -(2 * static_cast<long>(l) - 1)
                            : (2 * static_cast<long>(l) - 1);
      prod = mul(prod, sub(delta, shifted_square_elem(ring, off)));
    }
    auto rhs = element_div_p2(prod);
    if (!rhs) return false;
    Element<RingQp> lhs = minus_side ? mul(ep, fp) : mul(fp, ep);
    lhs = scalar_mul(lead, lhs);
    if (!(lhs == *rhs)) return false;
  }
  return true;
}

DeltaPoly q_poly(unsigned long p) {
  DeltaPoly diff = sub(delta_product(p, true), delta_product(p, false));
  BigRat inv_p2(1);
  inv_p2 /= BigRat(BigInt(p) * BigInt(p));
  return scale(inv_p2, diff);
}

bool q_integrality_check(const DeltaPoly& q, unsigned long p, long h_lo, long h_hi) {
  for (const IntPoly& qi : q.c)
    for (long h = h_lo; h <= h_hi; ++h) {
      BigRat v = qi.eval(BigInt(h));
      if (v != 0 && vp_signed(v, p) < 0) return false;
    }
  return true;
}

Element<RingFp> q_image(const DeltaPoly& q, const RingFp& ring) {
  RingQp qp(ring.p());
  Element<RingFp> delta = casimir(ring);
  Element<RingFp> acc(ring);
  Element<RingFp> dpow = Element<RingFp>::unit(ring);
  for (std::size_t i = 0; i < q.c.size(); ++i) {
    Element<RingFp> qi = reduce_mod_p(intpoly_to_qp_element(q.c[i], qp), ring);
    acc = add(acc, mul(qi, dpow));
    if (i + 1 < q.c.size()) dpow = mul(dpow, delta);
  }
  return acc;
}

bool q_image_is_4X1(const DeltaPoly& q, unsigned long p) {
  RingFp ring(p);
  Element<RingFp> img = q_image(q, ring);
  return img == scalar_mul(ring.from_long(4), compute_X(1, ring));
}

bool q_image_gives_t1(const DeltaPoly& q, unsigned long p) {
  RingFp ring(p);
  Element<RingFp> hb = Element<RingFp>::monomial(ring, Monomial{0, static_cast<std::uint32_t>(p), 0});
  Element<RingFp> lhs = sub(q_image(q, ring), scalar_mul(ring.from_long(4), hb));
  return lhs == scalar_mul(ring.from_long(4), compute_t(1, ring));
}

// --- Minimal polynomial of the Casimir --------------------------------------

bool delta_minpoly_check(unsigned long p) {
  RingFp ring(p);
  Element<RingFp> delta = casimir(ring);

  std::vector<std::uint32_t> eig;  // j^2 mod p for j = 0..p-1, with multiplicity
  for (unsigned long j = 0; j < p; ++j)
    eig.push_back(static_cast<std::uint32_t>((j * j) % p));

  Element<RingFp> full = Element<RingFp>::unit(ring);
  for (std::uint32_t v : eig)
    full = mul(full, sub(delta, Element<RingFp>::scalar(ring, v)));
  if (!full.is_zero()) return false;

  // Numeric expansion: prod (X - j^2) = X^p - 2 X^{(p+1)/2} + X over F_p.
  std::vector<std::uint32_t> poly = {1};
  for (std::uint32_t v : eig) {
    std::vector<std::uint32_t> next(poly.size() + 1, 0);
    std::uint32_t negv = static_cast<std::uint32_t>((p - v) % p);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = (next[i + 1] + poly[i]) % p;
      next[i] = (next[i] + poly[i] * static_cast<unsigned long long>(negv)) % p;
    }
    poly = std::move(next);
  }
  std::vector<std::uint32_t> expect(p + 1, 0);
  expect[p] = 1;
  expect[(p + 1) / 2] = static_cast<std::uint32_t>(p - 2);
  expect[1] = 1;
  if (poly != expect) return false;

  // Minimality: dropping one factor per distinct eigenvalue leaves a
  // nonzero element, so no proper divisor annihilates.
  std::set<std::uint32_t> distinct(eig.begin(), eig.end());
  for (std::uint32_t v : distinct) {
    Element<RingFp> part = Element<RingFp>::unit(ring);
    bool dropped = false;
    for (std::uint32_t w : eig) {
      if (!dropped && w == v) {
        dropped = true;
        continue;
      }
      part = mul(part, sub(delta, Element<RingFp>::scalar(ring, w)));
    }
    if (part.is_zero()) return false;
  }
  return true;
}

// --- chi, R1, phi' ----------------------------------------------------------

BigInt chi_value(unsigned long p, long jt, long h) {
  if (mod_pos(jt, p) == 0)
    throw std::invalid_argument("chi_value: lift jt must be prime to p");
  BigInt total(0);
  for (unsigned long i = 1; i <= p; ++i) {
    BigInt term(1);
    for (unsigned long l = 1; l <= p; ++l) {
      if (l == i) continue;
      BigInt u = BigInt(jt) + h - 2 * static_cast<long>(l) + 1;
      BigInt w = BigInt(jt) - h + 2 * static_cast<long>(l) - 1;
      term *= u * w;
    }
    total += term;
  }
  return total;
}

bool r1_congruence_check(unsigned long p, long jt, long h_lo, long h_hi) {
  BigInt p3 = BigInt(p) * BigInt(p) * BigInt(p);
  for (long h = h_lo; h <= h_hi; ++h) {
    BigInt diff = chi_value(p, jt, h) - chi_value(p, jt, h + 2 * static_cast<long>(p));
    if (diff % p3 != 0) return false;
  }
  return true;
}

bool phi_prime_check(unsigned long p, long jt, long h) {
  if (mod_pos(jt, p) == 0)
    throw std::invalid_argument("phi_prime_check: lift jt must be prime to p");
  // l_0: the unique index in [1, p] with jt + h - 2 l_0 + 1 = 0 mod p.
  unsigned long l0 = 0;
  for (unsigned long l = 1; l <= p; ++l)
    if (mod_pos(jt + h - 2 * static_cast<long>(l) + 1, p) == 0) {
      l0 = l;
      break;
    }
  if (l0 == 0) throw std::logic_error("phi_prime_check: no annihilated index");

  // tau(l): the unique index in [1, p] with jt - l + tau(l) = 0 mod p.
  auto tau = [&](unsigned long l) -> unsigned long {
    long t = mod_pos(static_cast<long>(l) - jt, p);
    return t == 0 ? p : static_cast<unsigned long>(t);
  };

  IntPoly phi = intpoly_const(BigRat(1));
  for (unsigned long l = 1; l <= p; ++l) {
    if (l == l0) continue;
    IntPoly lin1, lin2;
    lin1.c = {BigRat(jt - 2 * static_cast<long>(l) + 1), BigRat(1)};
    lin2.c = {BigRat(jt + 2 * static_cast<long>(tau(l)) - 1), BigRat(-1)};
    phi = mul(phi, mul(lin1, lin2));
  }

  BigRat dval = phi.derivative().eval(BigInt(h));
  if (dval.get_den() != 1)
    throw std::logic_error("phi_prime_check: non-integer derivative value");
  if (BigInt(dval.get_num()) % BigInt(p) != 0) return false;

  // Closing identity of the argument, taken literally: both sums coincide.
  BigInt fact = factorial_int(p - 1);
  BigInt s1(0), s2(0);
  for (unsigned long i = 1; i <= p - 1; ++i) {
    BigInt over_i = fact / BigInt(i);
    s1 += over_i * fact;
    s2 += fact * over_i;
  }
  return (s1 - s2) % BigInt(p) == 0;
}

// --- Eigenvalues ------------------------------------------------------------

std::uint32_t eigenvalue_check(unsigned long p, unsigned i, long jt) {
  if (i >= p) throw std::invalid_argument("eigenvalue_check: i must lie in [0, p)");
  long it = static_cast<long>(i);
  BigInt j2 = BigInt(jt) * jt;

  BigInt prod_minus(1), prod_plus(1);
  for (unsigned long l = 1; l <= p; ++l) {
    BigInt dm = BigInt(it) - (2 * static_cast<long>(l) - 1);
    BigInt dp = BigInt(it) + (2 * static_cast<long>(l) - 1);
    prod_minus *= j2 - dm * dm;
    prod_plus *= j2 - dp * dp;
  }
  BigInt p2 = BigInt(p) * BigInt(p);
  if (prod_minus % p2 != 0 || prod_plus % p2 != 0)
    throw std::logic_error("eigenvalue_check: product not divisible by p^2");
  BigInt diff = (prod_minus - prod_plus) / p2;
  BigInt dmod = diff % BigInt(p);
  if (dmod < 0) dmod += p;
  std::uint32_t value = static_cast<std::uint32_t>(dmod.get_ui());
  if (value != 0 && value != 4 % p)
    throw std::logic_error("eigenvalue_check: value outside {0, 4}");

  // Cross-check through the (r, s) reduction.
  unsigned long a = 0, b = 0;
  for (unsigned long l = 1; l <= p; ++l) {
    if (mod_pos(jt - it + 2 * static_cast<long>(l) - 1, p) == 0) a = l;
    if (mod_pos(jt + it - 2 * static_cast<long>(l) + 1, p) == 0) b = l;
  }
  if (a == 0 || b == 0) throw std::logic_error("eigenvalue_check: no (a, b) index");
  long r_num = jt - it + 2 * static_cast<long>(a) - 1;
  long s_num = jt + it - 2 * static_cast<long>(b) + 1;
  long r = r_num / static_cast<long>(p), s = s_num / static_cast<long>(p);
  long span = (r - s) * static_cast<long>(p);
  if (span != 2 * static_cast<long>(a) - 1 + 2 * static_cast<long>(b) - 1 - 2 * it)
    throw std::logic_error("eigenvalue_check: span identity violated");
  if (span < -2 * static_cast<long>(p) + 4 || span > 4 * static_cast<long>(p) - 2)
    throw std::logic_error("eigenvalue_check: span bound violated");
  if (span != 0 && span != 2 * static_cast<long>(p))
    throw std::logic_error("eigenvalue_check: span outside {0, 2p}");
  if (static_cast<std::uint32_t>(mod_pos(-2 * (r - s) + 4, p)) != value)
    throw std::logic_error("eigenvalue_check: (r, s) cross-check mismatch");
  return value;
}

bool wolstenholme_check(unsigned long n, unsigned long p) {
  BigInt p3 = BigInt(p) * BigInt(p) * BigInt(p);
  BigInt lhs = binom_int(BigInt(static_cast<long>(n * p)), p);
  return (lhs - BigInt(static_cast<long>(n))) % p3 == 0;
}

}  // namespace sl2dist
