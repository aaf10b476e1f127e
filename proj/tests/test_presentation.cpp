#include "sl2dist/presentation.hpp"

#include <doctest.h>

#include "helpers.hpp"

using namespace sl2dist;

namespace {

Word random_word(std::mt19937& rng, std::size_t maxlen, unsigned maxlevel) {
  std::uniform_int_distribution<std::size_t> dlen(0, maxlen);
  std::uniform_int_distribution<int> dletter(0, 1);
  std::uniform_int_distribution<unsigned> dlevel(0, maxlevel);
  Word w;
  std::size_t len = dlen(rng);
  for (std::size_t i = 0; i < len; ++i)
    w.push_back(GenSymbol{dletter(rng) == 1, dlevel(rng)});
  return w;
}

}  // namespace

TEST_CASE("weight and disorder match their definitions") {
  CHECK(word_weight({}, 3) == 0);
  CHECK(word_weight({{true, 0}, {false, 1}}, 3) == 4);
  CHECK(word_weight({{false, 1}, {true, 0}}, 3) == 4);  // reorder invariant
  CHECK(word_weight({{true, 2}}, 5) == 25);

  CHECK(word_disorder({}) == 0);
  CHECK(word_disorder({{false, 0}, {true, 0}}) == 0);
  CHECK(word_disorder({{true, 0}, {false, 0}}) == 1);
  CHECK(word_disorder({{true, 0}, {true, 1}, {false, 0}}) == 2);
  CHECK(word_disorder({{true, 0}, {false, 0}, {true, 1}, {false, 5}}) == 3);
}

TEST_CASE("word parsing and printing round-trip") {
  Word w = parse_word("e0 f1 e0");
  REQUIRE(w.size() == 3);
  CHECK(w[0] == GenSymbol{true, 0});
  CHECK(w[1] == GenSymbol{false, 1});
  CHECK(w[2] == GenSymbol{true, 0});
  CHECK(word_str(w) == "e0 f1 e0");
  CHECK(word_str({}) == "1");
  CHECK(parse_word("").empty());
  CHECK(parse_word("  f12   e3 ").size() == 2);
  CHECK_THROWS_AS(parse_word("g0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("e"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("e1x"), std::invalid_argument);
}

TEST_CASE("straightening the basic swap introduces X_0") {
  NormalCombination nc = straighten(parse_word("e0 f0"), 3);
  CHECK(nc.str() == "f0 e0 + X0");

  NormalCombination already = straighten(parse_word("f0 e0"), 3);
  CHECK(already.str() == "f0 e0");

  CHECK(straighten({}, 3).str() == "1");
  CHECK(straighten(parse_word("e0 e0 e0"), 3).str() == "0");
  CHECK(straighten(parse_word("f1 f1 f1 f1 f1"), 5).str() == "0");
}

TEST_CASE("level-gap swap expands through the fourth relation") {
  // e1 f0 = f0 e1 - (X0 + 1)(e0)^{p-1}; collapsing (e0)^{p-1} into the
  // divided power e^(p-1) contributes (p-1)!, so at p = 3 the hand
  // expansion (h - 2) e^(2) = (X0 + 1) e^(2) has unit coefficients.
  NormalCombination nc = straighten(parse_word("e1 f0"), 3);
  XMonomial f0e1, e0sq, x0e0sq;
  f0e1.fpow = {1};
  f0e1.epow = {0, 1};
  e0sq.epow = {2};
  x0e0sq.xpow = {1};
  x0e0sq.epow = {2};
  REQUIRE(nc.terms.size() == 3);
  CHECK(nc.terms.at(f0e1.key()) == 1);
  CHECK(nc.terms.at(e0sq.key()) == 1);
  CHECK(nc.terms.at(x0e0sq.key()) == 1);
}

TEST_CASE("eval_word multiplies divided powers") {
  RingFp F3(3);
  Element<RingFp> ef = eval_word(parse_word("e0 f0"), F3);
  Element<RingFp> expected(F3);
  expected.add_term(Monomial{1, 0, 1}, 1);
  expected.add_term(Monomial{0, 1, 0}, 1);
  CHECK(ef == expected);
  CHECK(eval_word({}, F3) == Element<RingFp>::unit(F3));
}

TEST_CASE("straightening is sound against direct evaluation") {
  for (unsigned long p : {3ul, 5ul}) {
    SplittingContext ctx(p);
    std::mt19937 rng(static_cast<unsigned>(900 + p));
    for (int trial = 0; trial < 60; ++trial) {
      Word w = random_word(rng, 6, 1);
      StraightenStats stats;
      NormalCombination nc =
          straighten(w, p, StraightenStrategy::MinLeftmost, 0, &stats);
      CHECK(stats.calls >= 1);
      for (const auto& [key, coef] : nc.terms) {
        XMonomial xm = XMonomial::from_key(key);
        for (auto v : xm.fpow) CHECK(v < p);
        for (auto v : xm.xpow) CHECK(v < p);
        for (auto v : xm.epow) CHECK(v < p);
      }
      Element<RingFp> lhs = eval_normal(nc, ctx);
      Element<RingFp> rhs = eval_word(w, ctx.ring());
      INFO("word = " << word_str(w));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("straightening strategies agree") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 30; ++trial) {
    Word w = random_word(rng, 6, 1);
    NormalCombination base = straighten(w, 3, StraightenStrategy::MinLeftmost);
    CHECK(base == straighten(w, 3, StraightenStrategy::MinRightmost));
    CHECK(base == straighten(w, 3, StraightenStrategy::MinRandom, 1));
    CHECK(base == straighten(w, 3, StraightenStrategy::MinRandom, 99));
  }
}

TEST_CASE("straightening handles words with level-two factors") {
  SplittingContext ctx(3);
  for (const char* text : {"e2 f0", "e0 f2", "e2 f1 e0 f0", "e1 e2 f2 f1"}) {
    Word w = parse_word(text);
    NormalCombination nc = straighten(w, 3);
    INFO("word = " << text);
    CHECK(eval_normal(nc, ctx) == eval_word(w, ctx.ring()));
  }
}
