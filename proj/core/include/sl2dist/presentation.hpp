#ifndef SL2DIST_PRESENTATION_HPP
#define SL2DIST_PRESENTATION_HPP

// Straightening arbitrary words in the divided-power generators into normal
// form using only the defining relations, by induction on the lexicographic
// (weight, disorder) measure; the result can be cross-checked by evaluating
// both sides in the concrete algebra.

#include "sl2dist/splitting.hpp"

#include <random>

namespace sl2dist {

// One generator symbol: E_k stands for e^(p^k), F_k for f^(p^k).
struct GenSymbol {
  bool is_e = false;
  unsigned level = 0;
  bool operator==(const GenSymbol&) const = default;
};

using Word = std::vector<GenSymbol>;

// Sum of the formal exponents p^{level} over the factors.
unsigned long word_weight(const Word& w, unsigned long p);

// Number of pairs i < j with w_i an E and w_j an F, at any levels.
std::size_t word_disorder(const Word& w);

// Parse "e0 f1 e0" (letter + level, whitespace separated).
Word parse_word(const std::string& text);
std::string word_str(const Word& w);

// A linear combination of normal words over F_p, keyed by packed XMonomial.
struct NormalCombination {
  unsigned long p = 0;
  std::map<std::uint64_t, std::uint32_t> terms;

  void add(const XMonomial& xm, std::uint32_t coef);
  bool operator==(const NormalCombination&) const = default;
  std::string str() const;  // "f0 e0 + X0"; "0" when empty
};

// Which disordered pair to resolve when several achieve the minimal
// min(level, level); all strategies must agree on the result.
enum class StraightenStrategy { MinLeftmost, MinRightmost, MinRandom };

struct StraightenStats {
  std::size_t calls = 0;      // recursive invocations
  std::size_t max_depth = 0;  // deepest recursion reached
};

// Rewrite w into normal form.  Every recursive call strictly decreases the
// (weight, disorder) measure; a violation throws instead of looping.
NormalCombination straighten(const Word& w, unsigned long p,
                             StraightenStrategy strategy = StraightenStrategy::MinLeftmost,
                             std::uint64_t seed = 0, StraightenStats* stats = nullptr);

// Ground truth: the product of the corresponding divided powers.
Element<RingFp> eval_word(const Word& w, const RingFp& ring);

// Evaluate a normal combination through the X-basis expansion.
Element<RingFp> eval_normal(const NormalCombination& nc, SplittingContext& ctx);

}  // namespace sl2dist

#endif
