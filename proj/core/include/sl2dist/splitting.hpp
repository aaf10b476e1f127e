#ifndef SL2DIST_SPLITTING_HPP
#define SL2DIST_SPLITTING_HPP

// Commutators X_k = [e^(p^k), f^(p^k)], the idempotents t_k = X_k -
// binom(h, p^k), the defining relation checks, the unitriangular change of
// basis from PBW monomials to words in divided powers and binomial X-powers,
// and the Frobenius splitting theta built by shifting that basis up one
// level.

#include "sl2dist/hmodp.hpp"

#include <mutex>

namespace sl2dist {

// A normal word f^(Sum F_i p^i) * Prod_i binom(X_i, G_i) * e^(Sum E_i p^i)
// with all exponents < p, levels listed from 0 upward.  The divided-power /
// binomial normalization makes the top PBW coefficient of every word equal
// to one, so the change of basis is unitriangular.
struct XMonomial {
  std::vector<std::uint8_t> fpow, xpow, epow;

  void trim();
  bool is_unit() const { return fpow.empty() && xpow.empty() && epow.empty(); }
  unsigned levels() const {
    return static_cast<unsigned>(std::max({fpow.size(), xpow.size(), epow.size()}));
  }
  // The b-index of the top PBW monomial in the expansion: sum G_i p^i.
  unsigned long top_b(unsigned long p) const;
  XMonomial shifted_up() const;  // every level i -> i + 1

  std::uint64_t key() const;  // packed; needs levels <= 5 and exponents <= 15
  static XMonomial from_key(std::uint64_t k);
  std::string str() const;  // "f0^2 X1 e1 e0" style; "1" for the unit
  bool operator==(const XMonomial& o) const;
};

// Digit decomposition of a PBW basis monomial: f^(a) binom(h,b) e^(c) pairs
// with the X-basis word whose exponents are the base-p digits of a, b, c.
XMonomial digits_xmonomial(const Monomial& m, unsigned long p);

// A linear combination of XMonomials over F_p.
struct XCoords {
  std::vector<std::pair<XMonomial, std::uint32_t>> terms;
  std::string str() const;
};

class SplittingContext;

// --- Core constructions -----------------------------------------------------

// X_k computed two ways (commutator and the explicit zero-weight sum); the
// routes are compared and a mismatch throws.
Element<RingFp> compute_X(unsigned k, const RingFp& ring);

// t_k = X_k - binom(h, p^k); t_0 = 0.
Element<RingFp> compute_t(unsigned k, const RingFp& ring);

// binom(x, j) = x(x-1)...(x-j+1)/j! for j < p.
Element<RingFp> binom_elem(const Element<RingFp>& x, unsigned j);

// --- Relation and idempotent checks ----------------------------------------

struct RelationReport {
  int id = 0;
  unsigned long p = 0;
  unsigned k = 0;
  unsigned n = 0;  // level gap; meaningful for relations 2, 3, 4
  bool pass = false;
  std::string detail;        // which half failed, if any
  std::string witness_json;  // serialized nonzero difference on failure
};

// Check defining relation `id` (1..6) at level k (and gap n where it
// applies).  Relations:
//   1: [X_k, e^(p^k)] = 2 e^(p^k)   and   [X_k, f^(p^k)] = -2 f^(p^k)
//   2: [X_k, e^(p^{k+n})] = 0 = [X_k, f^(p^{k+n})]          (n >= 1)
//   3: [e^(p^k), e^(p^{k+n})] = 0 = [f^(p^k), f^(p^{k+n})]  (n >= 1)
//   4: [e^(p^k), f^(p^{k+n})] = (-1)^n (f^(p^k))^{p-1} ... (f^(p^{k+n-1}))^{p-1} (X_k + 1)
//      and mirrored with e's on the other side                (n >= 1)
//   5: (e^(p^k))^p = 0 = (f^(p^k))^p
//   6: X_k^p = X_k
RelationReport verify_relation(int id, unsigned long p, unsigned k, unsigned n);
RelationReport verify_relation(SplittingContext& ctx, int id, unsigned k, unsigned n);

// t_k^2 = t_k (with t_0 = 0); on failure the witness is t_k^2 - t_k.
RelationReport verify_t_idempotent(unsigned long p, unsigned k);
RelationReport verify_t_idempotent(SplittingContext& ctx, unsigned k);

// t_k = t_{k-1} binom(X_{k-1} - t_{k-1}, p-1)
//       + sum_{j=1}^{p-1} binom(X_{k-1}, j) f^((p-j) p^{k-1}) e^((p-j) p^{k-1}),
// for k >= 1.
RelationReport verify_t_recursion(unsigned long p, unsigned k);
RelationReport verify_t_recursion(SplittingContext& ctx, unsigned k);

// With A, B the two summands above: A and B are orthogonal idempotents
// (A^2 = A, B^2 = B, AB = BA = 0) summing to t_k.
RelationReport verify_orthogonality(unsigned long p, unsigned k);
RelationReport verify_orthogonality(SplittingContext& ctx, unsigned k);

// --- Change of basis and the splitting -------------------------------------

// Shared caches for one prime: X_k and t_k elements, expansions of X-basis
// words, and Frobenius images of shifted expansions.  Methods lock
// internally, so one context can serve several threads.
class SplittingContext {
public:
  explicit SplittingContext(unsigned long p);
  SplittingContext(const SplittingContext&) = delete;
  SplittingContext& operator=(const SplittingContext&) = delete;

  const RingFp& ring() const { return ring_; }
  unsigned long p() const { return ring_.p(); }

  Element<RingFp> X(unsigned k);
  Element<RingFp> t(unsigned k);

  // PBW expansion of an X-basis word (exponents < p required).  The
  // expansion is unitriangular: one top monomial with coefficient one, all
  // other terms with strictly smaller b-index; that is asserted when the
  // column is first built.
  Element<RingFp> xbasis_element(const XMonomial& xm);

  // Coordinates of x in the X-basis of H_n; errors if x is not in the span.
  XCoords to_xbasis(const Element<RingFp>& x, unsigned n);

  // theta: replace each X-basis word of H_n by its level-shifted copy.
  Element<RingFp> theta(const Element<RingFp>& x, unsigned n);

  // frobenius(theta(x)) computed column-by-column (linearity); identical to
  // composing the two maps, but cheaper on big sweeps.
  Element<RingFp> frobenius_theta(const Element<RingFp>& x, unsigned n);

private:
  struct XColumn {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> terms;  // packed key -> coef
    std::uint64_t top_key = 0;
    std::uint32_t top_coef = 0;
  };
  const XColumn& column_locked(const XMonomial& xm);
  Element<RingFp> xprod_locked(const std::vector<std::uint8_t>& xpow);

  RingFp ring_;
  std::mutex mu_;
  std::vector<Element<RingFp>> xcache_, tcache_;
  std::unordered_map<std::uint64_t, XColumn> col_cache_;
  std::unordered_map<std::uint64_t, Element<RingFp>> xprod_cache_;
  std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint64_t, std::uint32_t>>>
      fr_shift_cache_;
};

// Convenience wrappers constructing a one-shot context.
Element<RingFp> xbasis_element(const XMonomial& xm, unsigned long p);
XCoords to_xbasis(const Element<RingFp>& x, unsigned n, SplittingContext& ctx);
Element<RingFp> theta(const Element<RingFp>& x, unsigned n, SplittingContext& ctx);

}  // namespace sl2dist

#endif
