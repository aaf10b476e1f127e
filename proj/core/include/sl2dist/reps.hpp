#ifndef SL2DIST_REPS_HPP
#define SL2DIST_REPS_HPP

// Finite-dimensional modules with divided-power integral structure: the
// (m+1)-dimensional highest-weight-m module, weight-residue subspaces, the
// level-shift-lifted action on those subspaces, and the twist-recovery
// round trip.

#include "sl2dist/splitting.hpp"

namespace sl2dist {

// Dense (m+1) x (m+1) operator matrix mod p, row-major; column j holds the
// image of the j-th basis vector.
using FpMatrix = std::vector<std::vector<std::uint32_t>>;

FpMatrix matmul(const FpMatrix& a, const FpMatrix& b, unsigned long p);
FpMatrix matadd(const FpMatrix& a, const FpMatrix& b, unsigned long p);
FpMatrix matsub(const FpMatrix& a, const FpMatrix& b, unsigned long p);
FpMatrix matscale(std::uint32_t s, const FpMatrix& a, unsigned long p);
FpMatrix identity_matrix(unsigned dim);
FpMatrix zero_matrix(unsigned dim);
bool mat_is_zero(const FpMatrix& a);

// The highest-weight-m module on basis v_0 .. v_m with
//   f^(s) v_i = binom(i+s, s) v_{i+s}          (0 past the top index)
//   e^(r) v_i = binom(m-i+r, r) v_{i-r}        (0 below index zero)
//   binom(h, b) v_i = binom(m-2i, b) v_i       (falling-factorial binomial)
// Construction cross-validates the tables: binom(h,1) eigenvalues, the
// operator form of the straightening identity for divided powers up to p,
// and the six structural relations at levels 0 and 1.  A violation throws
// std::logic_error.
class WeylModule {
public:
  WeylModule(unsigned m, unsigned long p);

  unsigned highest_weight() const { return m_; }
  unsigned long p() const { return ring_.p(); }
  unsigned dim() const { return m_ + 1; }
  const RingFp& ring() const { return ring_; }
  long weight(unsigned i) const { return static_cast<long>(m_) - 2 * static_cast<long>(i); }

  FpMatrix e_matrix(unsigned long r) const;
  FpMatrix f_matrix(unsigned long s) const;
  FpMatrix h_matrix(unsigned long b) const;

  // Action of an arbitrary element in the divided-power basis; matrix() is
  // apply() on every basis vector.
  std::vector<std::uint32_t> apply(const Element<RingFp>& x,
                                   const std::vector<std::uint32_t>& v) const;
  FpMatrix matrix(const Element<RingFp>& x) const;

private:
  void validate() const;

  unsigned m_;
  RingFp ring_;
};

// Basis indices of the weight subspaces with weight congruent to r mod p.
struct Subspace {
  unsigned m = 0;
  unsigned long p = 0;
  std::uint32_t r = 0;
  std::vector<unsigned> indices;

  bool operator==(const Subspace&) const = default;
};

Subspace project_r(const WeylModule& V, std::uint32_t r);

// Apply the level-shift image of x to a vector supported on the residue-r
// subspace.  Throws std::invalid_argument when the support precondition
// fails and std::logic_error if the image ever leaves the subspace.
std::vector<std::uint32_t> theta_action(const Element<RingFp>& x, const WeylModule& V,
                                        std::uint32_t r, const std::vector<std::uint32_t>& v,
                                        SplittingContext& ctx);
std::vector<std::uint32_t> theta_action(const Element<RingFp>& x, const WeylModule& V,
                                        std::uint32_t r, const std::vector<std::uint32_t>& v);

// Twist the action of W through the level-collapse map, so every weight
// becomes divisible by p, then check that the lifted action on the whole
// twisted module reproduces W's original generator matrices exactly.
bool frobenius_twist_recovery(const WeylModule& W);

// The Casimir element acts on the highest-weight-m module by (m+1)^2 mod p.
bool casimir_scalar_check(const WeylModule& W);

// t_1 acts as an idempotent operator preserving every weight-residue block.
bool t1_idempotent_check(const WeylModule& W);

}  // namespace sl2dist

#endif
