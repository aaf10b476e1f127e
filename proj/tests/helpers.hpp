#ifndef SL2DIST_TESTS_HELPERS_HPP
#define SL2DIST_TESTS_HELPERS_HPP

#include "sl2dist/element.hpp"

#include <random>

namespace sl2dist::testing {

// Random sparse element with indices below the given bounds; deterministic
// for a given generator state.
template <class R>
Element<R> random_element(const R& ring, std::mt19937& rng, unsigned nterms,
                          unsigned amax, unsigned bmax, unsigned cmax,
                          long coef_lo = -9, long coef_hi = 9) {
  std::uniform_int_distribution<unsigned> da(0, amax), db(0, bmax), dc(0, cmax);
  std::uniform_int_distribution<long> dcoef(coef_lo, coef_hi);
  Element<R> out(ring);
  for (unsigned i = 0; i < nterms; ++i)
    out.add_term(Monomial{da(rng), db(rng), dc(rng)}, ring.from_long(dcoef(rng)));
  return out;
}

}  // namespace sl2dist::testing

#endif
