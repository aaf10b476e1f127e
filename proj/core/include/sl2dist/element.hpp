#ifndef SL2DIST_ELEMENT_HPP
#define SL2DIST_ELEMENT_HPP

// Sparse elements of the divided-power integral form of U(sl2) in the PBW
// basis f^(a) * binom(h, b) * e^(c), over any of the coefficient rings in
// rings.hpp.  This header holds the data types and linear structure; the
// product lives in product.hpp.

#include "sl2dist/rings.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

namespace sl2dist {

// Basis monomial f^(a) binom(h, b) e^(c).  Indices are divided-power /
// binomial indices, not plain exponents.
struct Monomial {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t c = 0;

  // Eigenvalue of the adjoint torus action.
  long weight() const { return 2 * (static_cast<long>(c) - static_cast<long>(a)); }

  std::uint64_t key() const {
    return (static_cast<std::uint64_t>(a)) | (static_cast<std::uint64_t>(b) << 21) |
           (static_cast<std::uint64_t>(c) << 42);
  }
  static Monomial from_key(std::uint64_t k) {
    return Monomial{static_cast<std::uint32_t>(k & 0x1fffffu),
                    static_cast<std::uint32_t>((k >> 21) & 0x1fffffu),
                    static_cast<std::uint32_t>((k >> 42) & 0x1fffffu)};
  }
  bool operator==(const Monomial&) const = default;
};

inline constexpr std::uint32_t kMonomialIndexLimit = (1u << 21);

// ---------------------------------------------------------------------------

// Polynomial in h written in the binomial basis binom(h, b).
template <class R>
class HPoly {
public:
  using Coef = typename R::Coef;

  explicit HPoly(R ring) : ring_(std::move(ring)) {}

  const R& ring() const { return ring_; }
  const std::map<unsigned, Coef>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  void add_term(unsigned b, const Coef& c) {
    if (ring_.is_zero(c)) return;
    auto [it, fresh] = terms_.emplace(b, c);
    if (!fresh) {
      it->second = ring_.add(it->second, c);
      if (ring_.is_zero(it->second)) terms_.erase(it);
    }
  }

  Coef coeff(unsigned b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? ring_.zero() : it->second;
  }

  // Value at an integer point.
  Coef eval(long t) const {
    Coef acc = ring_.zero();
    for (const auto& [b, c] : terms_) ring_.add_mul(acc, c, ring_.binom(t, b));
    return acc;
  }

  bool operator==(const HPoly& o) const { return terms_ == o.terms_; }

private:
  R ring_;
  std::map<unsigned, Coef> terms_;
};

// Binomial-basis coefficients from values at t = 0..D by forward differences:
// coef_b = Delta^b v(0).  Exact over any commutative ring (no division).
template <class R>
std::vector<typename R::Coef> newton_coeffs(const R& ring,
                                            std::vector<typename R::Coef> vals) {
  std::vector<typename R::Coef> out;
  out.reserve(vals.size());
  for (std::size_t b = 0; b < vals.size(); ++b) {
    out.push_back(vals[0]);
    for (std::size_t i = 0; i + b + 1 < vals.size(); ++i)
      vals[i] = ring.sub(vals[i + 1], vals[i]);
  }
  return out;
}

template <class R>
HPoly<R> hpoly_from_values(const R& ring, const std::vector<typename R::Coef>& vals) {
  HPoly<R> out(ring);
  auto coefs = newton_coeffs(ring, vals);
  for (unsigned b = 0; b < coefs.size(); ++b) out.add_term(b, coefs[b]);
  return out;
}

// Product through evaluation; the binomial-basis route is hh_mul in
// product.hpp, and the two are compared in tests.
template <class R>
HPoly<R> hpoly_mul_values(const HPoly<R>& x, const HPoly<R>& y) {
  const R& ring = x.ring();
  unsigned D = x.degree() + y.degree();
  if (x.is_zero() || y.is_zero()) return HPoly<R>(ring);
  std::vector<typename R::Coef> vals;
  vals.reserve(D + 1);
  for (unsigned t = 0; t <= D; ++t)
    vals.push_back(ring.mul(x.eval(static_cast<long>(t)), y.eval(static_cast<long>(t))));
  return hpoly_from_values(ring, vals);
}

// ---------------------------------------------------------------------------

template <class R>
class Element {
public:
  using Coef = typename R::Coef;
  using TermMap = std::unordered_map<std::uint64_t, Coef>;

  explicit Element(R ring) : ring_(std::move(ring)) {}

  static Element zero(const R& ring) { return Element(ring); }
  static Element unit(const R& ring) { return monomial(ring, Monomial{0, 0, 0}); }
  static Element monomial(const R& ring, Monomial m) {
    return monomial(ring, m, ring.one());
  }
  static Element monomial(const R& ring, Monomial m, const Coef& c) {
    Element e(ring);
    e.add_term(m, c);
    return e;
  }
  static Element scalar(const R& ring, const Coef& c) {
    return monomial(ring, Monomial{0, 0, 0}, c);
  }

  const R& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(Monomial m, const Coef& c) {
    if (m.a >= kMonomialIndexLimit || m.b >= kMonomialIndexLimit || m.c >= kMonomialIndexLimit)
      throw std::overflow_error("Element: monomial index out of range");
    add_key(m.key(), c);
  }
  void add_key(std::uint64_t key, const Coef& c) {
    if (ring_.is_zero(c)) return;
    auto [it, fresh] = terms_.emplace(key, c);
    if (!fresh) {
      it->second = ring_.add(it->second, c);
      if (ring_.is_zero(it->second)) terms_.erase(it);
    }
  }

  Coef coeff(Monomial m) const {
    auto it = terms_.find(m.key());
    return it == terms_.end() ? ring_.zero() : it->second;
  }

  bool operator==(const Element& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (const auto& [k, c] : terms_) {
      auto it = o.terms_.find(k);
      if (it == o.terms_.end() || !ring_.eq(c, it->second)) return false;
    }
    return true;
  }
  bool operator!=(const Element& o) const { return !(*this == o); }

private:
  R ring_;
  TermMap terms_;
};

// ---------------------------------------------------------------------------
// Linear operations.

template <class R>
Element<R> add(const Element<R>& x, const Element<R>& y) {
  Element<R> out = x;
  for (const auto& [k, c] : y.terms()) out.add_key(k, c);
  return out;
}

template <class R>
Element<R> negate(const Element<R>& x) {
  Element<R> out(x.ring());
  for (const auto& [k, c] : x.terms()) out.add_key(k, x.ring().neg(c));
  return out;
}

template <class R>
Element<R> sub(const Element<R>& x, const Element<R>& y) {
  Element<R> out = x;
  for (const auto& [k, c] : y.terms()) out.add_key(k, y.ring().neg(c));
  return out;
}

template <class R>
Element<R> scalar_mul(const typename R::Coef& s, const Element<R>& x) {
  Element<R> out(x.ring());
  if (x.ring().is_zero(s)) return out;
  for (const auto& [k, c] : x.terms()) out.add_key(k, x.ring().mul(s, c));
  return out;
}

// Coefficient of the unit monomial; this is the counit of the bialgebra
// structure (an algebra map, which tests exercise).
template <class R>
typename R::Coef counit(const Element<R>& x) {
  return x.coeff(Monomial{0, 0, 0});
}

template <class R>
Element<R> hpoly_to_element(const HPoly<R>& hp) {
  Element<R> out(hp.ring());
  for (const auto& [b, c] : hp.terms()) out.add_term(Monomial{0, b, 0}, c);
  return out;
}

// The h-part of the (a, ., c) cell of x.
template <class R>
HPoly<R> cell_hpoly(const Element<R>& x, std::uint32_t a, std::uint32_t c) {
  HPoly<R> out(x.ring());
  for (const auto& [k, coef] : x.terms()) {
    Monomial m = Monomial::from_key(k);
    if (m.a == a && m.c == c) out.add_term(m.b, coef);
  }
  return out;
}

// True when every monomial has adjoint weight w; weight of 0 is reported as
// homogeneous of every weight, so callers check is_zero first if they care.
template <class R>
bool is_weight_homogeneous(const Element<R>& x, long w) {
  for (const auto& [k, c] : x.terms())
    if (Monomial::from_key(k).weight() != w) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Printing.  Terms are grouped into (f, e) cells; cells are ordered by
// descending a+c then descending a, h-parts by descending b with the constant
// last, which keeps output stable and matches how the straightening rules are
// usually displayed: "f(1)e(1) + h(1)", "(h(1)+1) e(2)", "10 e(5)".

template <class R>
std::string to_string(const Element<R>& x) {
  const R& ring = x.ring();
  if (x.is_zero()) return "0";

  struct Cell {
    std::uint32_t a, c;
    std::vector<std::pair<unsigned, typename R::Coef>> hterms;
  };
  std::map<std::pair<long, long>, Cell> cells;  // sort key -> cell
  for (const auto& [k, coef] : x.terms()) {
    Monomial m = Monomial::from_key(k);
    long tot = static_cast<long>(m.a) + m.c;
    auto& cell = cells[{-tot, -static_cast<long>(m.a)}];
    cell.a = m.a;
    cell.c = m.c;
    cell.hterms.emplace_back(m.b, coef);
  }

  auto hterm_str = [](const std::string& mag, unsigned b) {
    if (b == 0) return mag;
    std::string hb = "h(" + std::to_string(b) + ")";
    return mag == "1" ? hb : mag + " " + hb;
  };

  std::string out;
  bool first = true;
  for (auto& [skey, cell] : cells) {
    std::sort(cell.hterms.begin(), cell.hterms.end(),
              [](const auto& l, const auto& r) { return l.first > r.first; });

    std::string fpart = cell.a > 0 ? "f(" + std::to_string(cell.a) + ")" : "";
    std::string epart = cell.c > 0 ? "e(" + std::to_string(cell.c) + ")" : "";
    bool has_fe = !fpart.empty() || !epart.empty();

    // The h-part either acts as a scalar prefix (constants) or sits between
    // the f and e tokens (genuine polynomials in h).
    bool negative = false;
    std::string prefix, hmid;
    if (cell.hterms.size() == 1) {
      auto& [b, c] = cell.hterms.front();
      std::string cs = ring.str(c);
      negative = !cs.empty() && cs[0] == '-';
      std::string mag = negative ? cs.substr(1) : cs;
      if (b == 0) {
        if (!(mag == "1" && has_fe)) prefix = mag;
      } else {
        hmid = hterm_str(mag, b);
      }
    } else {
      std::string inner;
      for (auto& [b, c] : cell.hterms) {
        std::string cs = ring.str(c);
        bool tneg = !cs.empty() && cs[0] == '-';
        std::string mag = tneg ? cs.substr(1) : cs;
        if (inner.empty())
          inner = (tneg ? "-" : "") + hterm_str(mag, b);
        else
          inner += (tneg ? "-" : "+") + hterm_str(mag, b);
      }
      hmid = "(" + inner + ")";
    }

    std::string term = fpart;
    if (!hmid.empty()) {
      if (!term.empty()) term += " ";
      term += hmid;
      if (!epart.empty()) term += " ";
    }
    term += epart;
    if (!prefix.empty()) term = term.empty() ? prefix : prefix + " " + term;
    if (negative) term = "-" + term;

    if (first) {
      out = term;
      first = false;
    } else if (!term.empty() && term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

}  // namespace sl2dist

#endif
