#include "sl2dist/splitting.hpp"

#include "sl2dist/serialize.hpp"

#include <sstream>

namespace sl2dist {

namespace {

constexpr unsigned kMaxLevels = 5;

unsigned long pow_ul(unsigned long p, unsigned k) {
  unsigned long r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= p;
    if (r >= kMonomialIndexLimit)
      throw std::overflow_error("p^k exceeds the monomial index range");
  }
  return r;
}

std::vector<std::uint8_t> digits_of(unsigned long v, unsigned long p) {
  std::vector<std::uint8_t> d;
  while (v) {
    d.push_back(static_cast<std::uint8_t>(v % p));
    v /= p;
  }
  return d;
}

std::uint64_t pack_section(const std::vector<std::uint8_t>& v) {
  if (v.size() > kMaxLevels) throw std::overflow_error("XMonomial: too many levels");
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > 15) throw std::overflow_error("XMonomial: exponent too large to pack");
    out |= static_cast<std::uint64_t>(v[i]) << (4 * i);
  }
  return out;
}

std::vector<std::uint8_t> unpack_section(std::uint64_t bits) {
  std::vector<std::uint8_t> v;
  for (unsigned i = 0; i < kMaxLevels; ++i)
    v.push_back(static_cast<std::uint8_t>((bits >> (4 * i)) & 0xf));
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

void append_pow_token(std::string& s, const std::string& base, unsigned exp) {
  if (exp == 0) return;
  if (!s.empty()) s += " ";
  s += base;
  if (exp > 1) s += "^" + std::to_string(exp);
}

Element<RingFp> e_divided(const RingFp& ring, unsigned long idx) {
  return Element<RingFp>::monomial(ring, Monomial{0, 0, static_cast<std::uint32_t>(idx)});
}
Element<RingFp> f_divided(const RingFp& ring, unsigned long idx) {
  return Element<RingFp>::monomial(ring, Monomial{static_cast<std::uint32_t>(idx), 0, 0});
}
Element<RingFp> h_binom(const RingFp& ring, unsigned long idx) {
  return Element<RingFp>::monomial(ring, Monomial{0, static_cast<std::uint32_t>(idx), 0});
}

RelationReport fail_report(RelationReport r, const Element<RingFp>& witness,
                           const std::string& detail) {
  r.pass = false;
  r.detail = detail;
  r.witness_json = element_to_json(witness);
  return r;
}

}  // namespace

// --- XMonomial --------------------------------------------------------------

void XMonomial::trim() {
  auto drop = [](std::vector<std::uint8_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  drop(fpow);
  drop(xpow);
  drop(epow);
}

unsigned long XMonomial::top_b(unsigned long p) const {
  unsigned long b = 0, scale = 1;
  for (std::size_t i = 0; i < xpow.size(); ++i) {
    b += xpow[i] * scale;
    scale *= p;
  }
  return b;
}

XMonomial XMonomial::shifted_up() const {
  XMonomial out;
  auto shift = [](const std::vector<std::uint8_t>& v) {
    std::vector<std::uint8_t> s;
    if (v.empty()) return s;
    s.reserve(v.size() + 1);
    s.push_back(0);
    s.insert(s.end(), v.begin(), v.end());
    return s;
  };
  out.fpow = shift(fpow);
  out.xpow = shift(xpow);
  out.epow = shift(epow);
  return out;
}

std::uint64_t XMonomial::key() const {
  return pack_section(fpow) | (pack_section(xpow) << 20) | (pack_section(epow) << 40);
}

XMonomial XMonomial::from_key(std::uint64_t k) {
  XMonomial xm;
  xm.fpow = unpack_section(k & 0xfffff);
  xm.xpow = unpack_section((k >> 20) & 0xfffff);
  xm.epow = unpack_section((k >> 40) & 0xfffff);
  return xm;
}

std::string XMonomial::str() const {
  std::string s;
  for (std::size_t i = 0; i < fpow.size(); ++i)
    append_pow_token(s, "f" + std::to_string(i), fpow[i]);
  for (std::size_t i = 0; i < xpow.size(); ++i)
    append_pow_token(s, "X" + std::to_string(i), xpow[i]);
  for (std::size_t i = epow.size(); i-- > 0;)
    append_pow_token(s, "e" + std::to_string(i), epow[i]);
  return s.empty() ? "1" : s;
}

bool XMonomial::operator==(const XMonomial& o) const {
  XMonomial a = *this, b = o;
  a.trim();
  b.trim();
  return a.fpow == b.fpow && a.xpow == b.xpow && a.epow == b.epow;
}

XMonomial digits_xmonomial(const Monomial& m, unsigned long p) {
  XMonomial xm;
  xm.fpow = digits_of(m.a, p);
  xm.xpow = digits_of(m.b, p);
  xm.epow = digits_of(m.c, p);
  return xm;
}

std::string XCoords::str() const {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [xm, c] : terms) {
    if (!s.empty()) s += " + ";
    if (c != 1 || xm.is_unit()) {
      s += std::to_string(c);
      if (!xm.is_unit()) s += " ";
    }
    if (!xm.is_unit()) s += xm.str();
  }
  return s;
}

// --- X_k, t_k, binom of an element -----------------------------------------

Element<RingFp> compute_X(unsigned k, const RingFp& ring) {
  unsigned long q = pow_ul(ring.p(), k);
  Element<RingFp> via_comm = commutator(e_divided(ring, q), f_divided(ring, q));
  Element<RingFp> via_sum(ring);
  for (unsigned long i = 1; i <= q; ++i) {
    Element<RingFp> term =
        mul(h_binom(ring, i),
            Element<RingFp>::monomial(
                ring, Monomial{static_cast<std::uint32_t>(q - i), 0,
                               static_cast<std::uint32_t>(q - i)}));
    via_sum = add(via_sum, term);
  }
  if (via_comm != via_sum)
    throw std::logic_error("compute_X: commutator and zero-weight sum disagree");
  return via_comm;
}

Element<RingFp> compute_t(unsigned k, const RingFp& ring) {
  unsigned long q = pow_ul(ring.p(), k);
  return sub(compute_X(k, ring), h_binom(ring, q));
}

Element<RingFp> binom_elem(const Element<RingFp>& x, unsigned j) {
  const RingFp& ring = x.ring();
  if (j >= ring.p())
    throw std::invalid_argument("binom_elem: order must be below p");
  Element<RingFp> acc = Element<RingFp>::unit(ring);
  RingFp::Coef fact = 1;
  for (unsigned i = 0; i < j; ++i) {
    acc = mul(acc, sub(x, Element<RingFp>::scalar(ring, ring.from_long(static_cast<long>(i)))));
    fact = ring.mul(fact, ring.from_long(static_cast<long>(i + 1)));
  }
  return scalar_mul(ring.inv(fact), acc);
}

// --- SplittingContext -------------------------------------------------------

SplittingContext::SplittingContext(unsigned long p) : ring_(p) {}

Element<RingFp> SplittingContext::X(unsigned k) {
  std::lock_guard<std::mutex> lock(mu_);
  while (xcache_.size() <= k) xcache_.push_back(compute_X(static_cast<unsigned>(xcache_.size()), ring_));
  return xcache_[k];
}

Element<RingFp> SplittingContext::t(unsigned k) {
  std::lock_guard<std::mutex> lock(mu_);
  while (tcache_.size() <= k) {
    unsigned kk = static_cast<unsigned>(tcache_.size());
    while (xcache_.size() <= kk) xcache_.push_back(compute_X(static_cast<unsigned>(xcache_.size()), ring_));
    tcache_.push_back(sub(xcache_[kk], h_binom(ring_, pow_ul(ring_.p(), kk))));
  }
  return tcache_[k];
}

Element<RingFp> SplittingContext::xprod_locked(const std::vector<std::uint8_t>& xpow) {
  std::uint64_t key = pack_section(xpow);
  auto it = xprod_cache_.find(key);
  if (it != xprod_cache_.end()) return it->second;
  Element<RingFp> result(ring_);
  if (key == 0) {
    result = Element<RingFp>::unit(ring_);
  } else {
    // Peel the binomial power of the highest level and recurse.
    std::size_t top = xpow.size();
    while (top > 0 && xpow[top - 1] == 0) --top;
    std::vector<std::uint8_t> rest(xpow.begin(), xpow.begin() + top - 1);
    while (!rest.empty() && rest.back() == 0) rest.pop_back();
    {
      // X levels come from the xcache_; fill it without re-locking.
      while (xcache_.size() < top) xcache_.push_back(compute_X(static_cast<unsigned>(xcache_.size()), ring_));
    }
    result = mul(xprod_locked(rest), binom_elem(xcache_[top - 1], xpow[top - 1]));
  }
  xprod_cache_.emplace(key, result);
  return result;
}

const SplittingContext::XColumn& SplittingContext::column_locked(const XMonomial& xm) {
  std::uint64_t key = xm.key();
  auto it = col_cache_.find(key);
  if (it != col_cache_.end()) return it->second;

  const unsigned long p = ring_.p();
  // Normalized word: a single divided f-power, binomial X-powers, and a
  // single divided e-power; this makes the top coefficient exactly one.
  unsigned long atot = 0, ctot = 0;
  for (std::size_t i = 0; i < xm.fpow.size(); ++i)
    atot += xm.fpow[i] * pow_ul(p, static_cast<unsigned>(i));
  for (std::size_t i = 0; i < xm.epow.size(); ++i)
    ctot += xm.epow[i] * pow_ul(p, static_cast<unsigned>(i));
  Element<RingFp> acc = xprod_locked(xm.xpow);
  if (atot) acc = mul(f_divided(ring_, atot), acc);
  if (ctot) acc = mul(acc, e_divided(ring_, ctot));

  XColumn col;
  unsigned long btot = xm.top_b(p);
  col.top_key = Monomial{static_cast<std::uint32_t>(atot), static_cast<std::uint32_t>(btot),
                         static_cast<std::uint32_t>(ctot)}
                    .key();
  col.terms.reserve(acc.size());
  for (const auto& [tk, tc] : acc.terms()) {
    if (tk == col.top_key) {
      col.top_coef = tc;
    } else {
      Monomial m = Monomial::from_key(tk);
      if (m.b >= btot)
        throw std::logic_error("xbasis_element: expansion of " + xm.str() +
                               " is not triangular (unexpected term at b=" +
                               std::to_string(m.b) + ")");
    }
    col.terms.emplace_back(tk, tc);
  }
  if (col.top_coef != 1)
    throw std::logic_error("xbasis_element: expansion of " + xm.str() +
                           " is not unitriangular (top coefficient " +
                           std::to_string(col.top_coef) + ")");
  return col_cache_.emplace(key, std::move(col)).first->second;
}

Element<RingFp> SplittingContext::xbasis_element(const XMonomial& xm) {
  for (std::uint8_t v : xm.fpow)
    if (v >= ring_.p()) throw std::invalid_argument("xbasis_element: exponent >= p");
  for (std::uint8_t v : xm.xpow)
    if (v >= ring_.p()) throw std::invalid_argument("xbasis_element: exponent >= p");
  for (std::uint8_t v : xm.epow)
    if (v >= ring_.p()) throw std::invalid_argument("xbasis_element: exponent >= p");
  std::lock_guard<std::mutex> lock(mu_);
  const XColumn& col = column_locked(xm);
  Element<RingFp> out(ring_);
  for (const auto& [k, c] : col.terms) out.add_key(k, c);
  return out;
}

XCoords SplittingContext::to_xbasis(const Element<RingFp>& x, unsigned n) {
  if (!(x.ring() == ring_))
    throw std::invalid_argument("to_xbasis: ring mismatch");
  const unsigned long p = ring_.p();
  const unsigned long bound = pow_ul(p, n);
  std::lock_guard<std::mutex> lock(mu_);

  std::unordered_map<std::uint64_t, std::uint32_t> acc;
  Element<RingFp> work = x;
  // The elimination strictly reduces the maximal b-index multiset, so it
  // terminates; the guard turns a broken triangularity argument into an
  // error instead of a hang.
  std::size_t guard = 0;
  const std::size_t guard_max = 64 * (x.size() + 8) * (n + 1) + 4096;
  while (!work.is_zero()) {
    if (++guard > guard_max)
      throw std::logic_error("to_xbasis: elimination did not terminate");
    std::uint64_t best_key = 0;
    std::uint32_t best_b = 0;
    bool have = false;
    for (const auto& [tk, tc] : work.terms()) {
      Monomial m = Monomial::from_key(tk);
      if (!have || m.b > best_b || (m.b == best_b && tk > best_key)) {
        best_key = tk;
        best_b = m.b;
        have = true;
      }
    }
    Monomial m = Monomial::from_key(best_key);
    if (m.a >= bound || m.b >= bound || m.c >= bound)
      throw std::invalid_argument("to_xbasis: element is not in the span of H_" +
                                  std::to_string(n));
    std::uint32_t gamma = work.coeff(m);
    XMonomial xm = digits_xmonomial(m, p);
    const XColumn& col = column_locked(xm);
    if (col.top_key != best_key)
      throw std::logic_error("to_xbasis: column top does not match its monomial");
    std::uint32_t kappa = gamma;  // unit top coefficient
    for (const auto& [tk, tc] : col.terms)
      work.add_key(tk, ring_.neg(ring_.mul(kappa, tc)));
    auto [it, fresh] = acc.emplace(xm.key(), kappa);
    if (!fresh) it->second = ring_.add(it->second, kappa);
  }

  XCoords out;
  out.terms.reserve(acc.size());
  for (const auto& [xk, c] : acc)
    if (c != 0) out.terms.emplace_back(XMonomial::from_key(xk), c);
  std::sort(out.terms.begin(), out.terms.end(),
            [p](const auto& l, const auto& r) {
              unsigned long lb = l.first.top_b(p), rb = r.first.top_b(p);
              if (lb != rb) return lb > rb;
              return l.first.key() > r.first.key();
            });
  return out;
}

Element<RingFp> SplittingContext::theta(const Element<RingFp>& x, unsigned n) {
  XCoords coords = to_xbasis(x, n);
  std::lock_guard<std::mutex> lock(mu_);
  Element<RingFp> out(ring_);
  for (const auto& [xm, kappa] : coords.terms) {
    const XColumn& col = column_locked(xm.shifted_up());
    for (const auto& [tk, tc] : col.terms) out.add_key(tk, ring_.mul(kappa, tc));
  }
  return out;
}

Element<RingFp> SplittingContext::frobenius_theta(const Element<RingFp>& x, unsigned n) {
  XCoords coords = to_xbasis(x, n);
  std::lock_guard<std::mutex> lock(mu_);
  Element<RingFp> out(ring_);
  const std::uint32_t p = static_cast<std::uint32_t>(ring_.p());
  for (const auto& [xm, kappa] : coords.terms) {
    auto fit = fr_shift_cache_.find(xm.key());
    if (fit == fr_shift_cache_.end()) {
      const XColumn& col = column_locked(xm.shifted_up());
      std::vector<std::pair<std::uint64_t, std::uint32_t>> fr;
      for (const auto& [tk, tc] : col.terms) {
        Monomial m = Monomial::from_key(tk);
        if (m.a % p || m.b % p || m.c % p) continue;
        fr.emplace_back(Monomial{m.a / p, m.b / p, m.c / p}.key(), tc);
      }
      fit = fr_shift_cache_.emplace(xm.key(), std::move(fr)).first;
    }
    for (const auto& [tk, tc] : fit->second) out.add_key(tk, ring_.mul(kappa, tc));
  }
  return out;
}

// --- Relation checks --------------------------------------------------------

RelationReport verify_relation(SplittingContext& ctx, int id, unsigned k, unsigned n) {
  const RingFp& ring = ctx.ring();
  const unsigned long p = ring.p();
  RelationReport rep;
  rep.id = id;
  rep.p = p;
  rep.k = k;
  rep.n = (id == 2 || id == 3 || id == 4) ? n : 0;
  rep.pass = true;

  unsigned long q = pow_ul(p, k);
  auto two = ring.from_long(2);
  switch (id) {
    case 1: {
      Element<RingFp> Xk = ctx.X(k);
      Element<RingFp> E = e_divided(ring, q), F = f_divided(ring, q);
      Element<RingFp> d1 = sub(commutator(Xk, E), scalar_mul(two, E));
      if (!d1.is_zero()) return fail_report(rep, d1, "[X_k, e^(p^k)] != 2 e^(p^k)");
      Element<RingFp> d2 = add(commutator(Xk, F), scalar_mul(two, F));
      if (!d2.is_zero()) return fail_report(rep, d2, "[X_k, f^(p^k)] != -2 f^(p^k)");
      break;
    }
    case 2: {
      if (n < 1) throw std::invalid_argument("relation 2 needs n >= 1");
      unsigned long qq = pow_ul(p, k + n);
      Element<RingFp> Xk = ctx.X(k);
      Element<RingFp> d1 = commutator(Xk, e_divided(ring, qq));
      if (!d1.is_zero()) return fail_report(rep, d1, "[X_k, e^(p^{k+n})] != 0");
      Element<RingFp> d2 = commutator(Xk, f_divided(ring, qq));
      if (!d2.is_zero()) return fail_report(rep, d2, "[X_k, f^(p^{k+n})] != 0");
      break;
    }
    case 3: {
      if (n < 1) throw std::invalid_argument("relation 3 needs n >= 1");
      unsigned long qq = pow_ul(p, k + n);
      Element<RingFp> d1 = commutator(e_divided(ring, q), e_divided(ring, qq));
      if (!d1.is_zero()) return fail_report(rep, d1, "[e^(p^k), e^(p^{k+n})] != 0");
      Element<RingFp> d2 = commutator(f_divided(ring, q), f_divided(ring, qq));
      if (!d2.is_zero()) return fail_report(rep, d2, "[f^(p^k), f^(p^{k+n})] != 0");
      break;
    }
    case 4: {
      if (n < 1) throw std::invalid_argument("relation 4 needs n >= 1");
      unsigned long qq = pow_ul(p, k + n);
      Element<RingFp> Xk1 = add(ctx.X(k), Element<RingFp>::unit(ring));
      auto sign = ring.from_long(n % 2 ? -1 : 1);

      Element<RingFp> ffact = Element<RingFp>::unit(ring);
      for (unsigned i = k; i < k + n; ++i)
        ffact = mul(ffact, power(f_divided(ring, pow_ul(p, i)), static_cast<unsigned>(p - 1)));
      Element<RingFp> rhs1 = scalar_mul(sign, mul(ffact, Xk1));
      Element<RingFp> d1 = sub(commutator(e_divided(ring, q), f_divided(ring, qq)), rhs1);
      if (!d1.is_zero())
        return fail_report(rep, d1, "[e^(p^k), f^(p^{k+n})] != +-f-string (X_k + 1)");

      Element<RingFp> efact = Element<RingFp>::unit(ring);
      for (unsigned i = k; i < k + n; ++i)
        efact = mul(efact, power(e_divided(ring, pow_ul(p, i)), static_cast<unsigned>(p - 1)));
      Element<RingFp> rhs2 = scalar_mul(sign, mul(Xk1, efact));
      Element<RingFp> d2 = sub(commutator(e_divided(ring, qq), f_divided(ring, q)), rhs2);
      if (!d2.is_zero())
        return fail_report(rep, d2, "[e^(p^{k+n}), f^(p^k)] != +-(X_k + 1) e-string");
      break;
    }
    case 5: {
      Element<RingFp> d1 = power(e_divided(ring, q), static_cast<unsigned>(p));
      if (!d1.is_zero()) return fail_report(rep, d1, "(e^(p^k))^p != 0");
      Element<RingFp> d2 = power(f_divided(ring, q), static_cast<unsigned>(p));
      if (!d2.is_zero()) return fail_report(rep, d2, "(f^(p^k))^p != 0");
      break;
    }
    case 6: {
      Element<RingFp> Xk = ctx.X(k);
      Element<RingFp> d = sub(power(Xk, static_cast<unsigned>(p)), Xk);
      if (!d.is_zero()) return fail_report(rep, d, "X_k^p != X_k");
      break;
    }
    default:
      throw std::invalid_argument("verify_relation: id must be 1..6");
  }
  return rep;
}

RelationReport verify_relation(int id, unsigned long p, unsigned k, unsigned n) {
  SplittingContext ctx(p);
  return verify_relation(ctx, id, k, n);
}

RelationReport verify_t_idempotent(SplittingContext& ctx, unsigned k) {
  RelationReport rep;
  rep.id = 0;
  rep.p = ctx.p();
  rep.k = k;
  rep.pass = true;
  Element<RingFp> tk = ctx.t(k);
  if (k == 0) {
    if (!tk.is_zero()) return fail_report(rep, tk, "t_0 != 0");
    return rep;
  }
  Element<RingFp> d = sub(mul(tk, tk), tk);
  if (!d.is_zero()) return fail_report(rep, d, "t_k^2 != t_k");
  return rep;
}

RelationReport verify_t_idempotent(unsigned long p, unsigned k) {
  SplittingContext ctx(p);
  return verify_t_idempotent(ctx, k);
}

namespace {
// The two summands of the level recursion for t_k (k >= 1).
std::pair<Element<RingFp>, Element<RingFp>> recursion_summands(SplittingContext& ctx,
                                                               unsigned k) {
  const RingFp& ring = ctx.ring();
  const unsigned long p = ring.p();
  Element<RingFp> tprev = ctx.t(k - 1);
  Element<RingFp> Xprev = ctx.X(k - 1);
  Element<RingFp> A =
      mul(tprev, binom_elem(sub(Xprev, tprev), static_cast<unsigned>(p - 1)));
  Element<RingFp> B(ring);
  unsigned long scale = pow_ul(p, k - 1);
  for (unsigned long j = 1; j <= p - 1; ++j) {
    unsigned long m = scale * (p - j);
    B = add(B, mul(binom_elem(Xprev, static_cast<unsigned>(j)),
                   Element<RingFp>::monomial(ring, Monomial{static_cast<std::uint32_t>(m), 0,
                                                            static_cast<std::uint32_t>(m)})));
  }
  return {A, B};
}
}  // namespace

RelationReport verify_t_recursion(SplittingContext& ctx, unsigned k) {
  RelationReport rep;
  rep.id = 0;
  rep.p = ctx.p();
  rep.k = k;
  rep.pass = true;
  if (k < 1) throw std::invalid_argument("verify_t_recursion: k must be >= 1");
  auto [A, B] = recursion_summands(ctx, k);
  Element<RingFp> d = sub(ctx.t(k), add(A, B));
  if (!d.is_zero()) return fail_report(rep, d, "t_k != A + B");
  return rep;
}

RelationReport verify_t_recursion(unsigned long p, unsigned k) {
  SplittingContext ctx(p);
  return verify_t_recursion(ctx, k);
}

RelationReport verify_orthogonality(SplittingContext& ctx, unsigned k) {
  RelationReport rep;
  rep.id = 0;
  rep.p = ctx.p();
  rep.k = k;
  rep.pass = true;
  if (k < 1) throw std::invalid_argument("verify_orthogonality: k must be >= 1");
  auto [A, B] = recursion_summands(ctx, k);
  Element<RingFp> d = sub(mul(A, A), A);
  if (!d.is_zero()) return fail_report(rep, d, "A^2 != A");
  d = sub(mul(B, B), B);
  if (!d.is_zero()) return fail_report(rep, d, "B^2 != B");
  d = mul(A, B);
  if (!d.is_zero()) return fail_report(rep, d, "AB != 0");
  d = mul(B, A);
  if (!d.is_zero()) return fail_report(rep, d, "BA != 0");
  return rep;
}

RelationReport verify_orthogonality(unsigned long p, unsigned k) {
  SplittingContext ctx(p);
  return verify_orthogonality(ctx, k);
}

// --- Convenience wrappers ---------------------------------------------------

Element<RingFp> xbasis_element(const XMonomial& xm, unsigned long p) {
  SplittingContext ctx(p);
  return ctx.xbasis_element(xm);
}

XCoords to_xbasis(const Element<RingFp>& x, unsigned n, SplittingContext& ctx) {
  return ctx.to_xbasis(x, n);
}

Element<RingFp> theta(const Element<RingFp>& x, unsigned n, SplittingContext& ctx) {
  return ctx.theta(x, n);
}

}  // namespace sl2dist
