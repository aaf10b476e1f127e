#include "sl2dist/presentation.hpp"

#include <sstream>

namespace sl2dist {

namespace {

unsigned long pow_ul_nocheck(unsigned long p, unsigned k) {
  unsigned long r = 1;
  for (unsigned i = 0; i < k; ++i) r *= p;
  return r;
}

using Measure = std::pair<unsigned long, std::size_t>;  // (weight, disorder)

struct Straightener {
  unsigned long p;
  RingFp ring;
  StraightenStrategy strategy;
  std::mt19937_64 rng;
  StraightenStats* stats;
  std::size_t depth = 0;
  std::size_t calls = 0;
  static constexpr std::size_t kCallLimit = 1u << 24;
  // Same-letter factors commute, so words are canonicalized (runs sorted by
  // level) and results cached; the recursion itself is unchanged.
  std::unordered_map<std::string, NormalCombination> memo;

  Straightener(unsigned long p_, StraightenStrategy s, std::uint64_t seed,
               StraightenStats* st)
      : p(p_), ring(p_), strategy(s), rng(seed), stats(st) {}

  Measure measure(const Word& w) const {
    return {word_weight(w, p), word_disorder(w)};
  }

  std::uint32_t fact_mod(std::uint32_t n) const {
    std::uint32_t r = 1;
    for (std::uint32_t i = 2; i <= n; ++i) r = ring.mul(r, i);
    return r;
  }

  // Multiply nc (all levels >= v) by (X_v + c) on the right: X_v passes the
  // level-v e-block picking up -2 per factor, then joins the X-block by
  // X binom(X, i) = (i+1) binom(X, i+1) + i binom(X, i); the i+1 = p bump
  // drops out because p binom(X_v, p) has numerator X_v^p - X_v = 0.
  NormalCombination mul_x_plus_c(const NormalCombination& nc, unsigned v,
                                 std::uint32_t c) const {
    NormalCombination out;
    out.p = p;
    for (const auto& [key, coef] : nc.terms) {
      XMonomial xm = XMonomial::from_key(key);
      for (unsigned r = 0; r < v; ++r) {
        bool clear = (r >= xm.fpow.size() || xm.fpow[r] == 0) &&
                     (r >= xm.xpow.size() || xm.xpow[r] == 0) &&
                     (r >= xm.epow.size() || xm.epow[r] == 0);
        if (!clear)
          throw std::logic_error("straighten: X-shift hit a lower level");
      }
      std::uint32_t c0 = v < xm.epow.size() ? xm.epow[v] : 0;
      std::uint32_t i = v < xm.xpow.size() ? xm.xpow[v] : 0;
      if (i + 1 < p) {
        XMonomial bumped = xm;
        if (bumped.xpow.size() <= v) bumped.xpow.resize(v + 1, 0);
        bumped.xpow[v] = static_cast<std::uint8_t>(i + 1);
        out.add(bumped, ring.mul(coef, i + 1));
      }
      std::uint32_t stay = ring.add(i, ring.sub(c, ring.from_long(2L * c0)));
      out.add(xm, ring.mul(coef, stay));
    }
    return out;
  }

  // Signed count of level-v letters in w[from..): +1 per E_v, -1 per F_v.
  long level_bias(const Word& w, std::size_t from, unsigned v) const {
    long q = 0;
    for (std::size_t i = from; i < w.size(); ++i)
      if (w[i].level == v) q += w[i].is_e ? 1 : -1;
    return q;
  }

  static Word canonical(Word w) {
    std::size_t i = 0;
    while (i < w.size()) {
      std::size_t j = i + 1;
      while (j < w.size() && w[j].is_e == w[i].is_e) ++j;
      std::sort(w.begin() + i, w.begin() + j,
                [](const GenSymbol& l, const GenSymbol& r) { return l.level < r.level; });
      i = j;
    }
    return w;
  }

  static std::string word_key(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (const GenSymbol& g : w)
      s.push_back(static_cast<char>((g.level << 1) | (g.is_e ? 1 : 0)));
    return s;
  }

  NormalCombination normal_form(const Word& raw, const Measure* parent) {
    if (++calls > kCallLimit)
      throw std::logic_error("straighten: call limit exceeded");
    if (stats) {
      ++stats->calls;
      stats->max_depth = std::max(stats->max_depth, depth);
    }
    Word w = canonical(raw);
    Measure m = measure(w);
    if (parent && !(m < *parent))
      throw std::logic_error("straighten: (weight, disorder) did not decrease");
    std::string key = word_key(w);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    NormalCombination result = compute(w, m);
    return memo.emplace(std::move(key), std::move(result)).first->second;
  }

  NormalCombination compute(const Word& w, const Measure& m) {
    NormalCombination out;
    out.p = p;
    if (m.second == 0) {  // ordered word: collapse repeated letters per level
      XMonomial xm;
      std::uint32_t coef = 1;
      for (const GenSymbol& g : w) {
        auto& vec = g.is_e ? xm.epow : xm.fpow;
        if (vec.size() <= g.level) vec.resize(g.level + 1, 0);
        if (++vec[g.level] == p) return out;  // (e^(p^k))^p = 0
        coef = ring.mul(coef, vec[g.level]);  // (e^(p^k))^a = a! e^(a p^k)
      }
      out.add(xm, coef);
      return out;
    }

    // Minimal min(k, l) over disordered pairs.
    unsigned v = 0;
    {
      bool found = false;
      unsigned best = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (!w[i].is_e) continue;
        for (std::size_t j = i + 1; j < w.size(); ++j) {
          if (w[j].is_e) continue;
          unsigned mv = std::min(w[i].level, w[j].level);
          if (!found || mv < best) best = mv, found = true;
        }
      }
      v = best;
    }

    // Extract factors of level < v: each low F has only F's to its left and
    // each low E only E's to its right (otherwise a lower disordered pair
    // would exist), so they commute to the outside by the same-letter
    // relations and fill the low slots of the normal form directly.
    Word core;
    std::vector<std::uint32_t> alpha(v, 0), beta(v, 0);
    for (const GenSymbol& g : w) {
      if (g.level < v) {
        auto& cnt = g.is_e ? beta[g.level] : alpha[g.level];
        if (++cnt == p) return out;  // p-th power of a generator vanishes
      } else {
        core.push_back(g);
      }
    }
    if (core.size() < w.size()) {
      ++depth;
      NormalCombination inner = normal_form(core, &m);
      --depth;
      std::uint32_t low_scale = 1;  // collapsing a^th repeats costs a! per level
      for (unsigned r = 0; r < v; ++r)
        low_scale = ring.mul(low_scale, ring.mul(fact_mod(alpha[r]), fact_mod(beta[r])));
      for (auto& [key, coef] : inner.terms) {
        XMonomial xm = XMonomial::from_key(key);
        if (xm.fpow.size() < v) xm.fpow.resize(v, 0);
        if (xm.epow.size() < v) xm.epow.resize(v, 0);
        for (unsigned r = 0; r < v; ++r) {
          if ((alpha[r] && xm.fpow[r]) || (beta[r] && xm.epow[r]))
            throw std::logic_error("straighten: low slot already occupied");
          xm.fpow[r] += alpha[r];
          xm.epow[r] += beta[r];
        }
        out.add(xm, ring.mul(coef, low_scale));
      }
      return out;
    }

    // All levels >= v.  Pick a disordered pair achieving min(k, l) = v.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!w[i].is_e) continue;
      for (std::size_t j = i + 1; j < w.size(); ++j)
        if (!w[j].is_e && std::min(w[i].level, w[j].level) == v)
          pairs.emplace_back(i, j);
    }
    std::pair<std::size_t, std::size_t> pick;
    switch (strategy) {
      case StraightenStrategy::MinLeftmost:
        pick = *std::min_element(pairs.begin(), pairs.end());
        break;
      case StraightenStrategy::MinRightmost:
        pick = *std::max_element(pairs.begin(), pairs.end());
        break;
      case StraightenStrategy::MinRandom:
        pick = pairs[std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng)];
        break;
    }

    // Reduce to an adjacent disordered pair E_v F_r or E_r F_v (r >= v) by
    // permuting a same-letter run, which changes neither weight nor
    // disorder.
    Word swapped, dropped;  // swapped: adjacent pair exchanged; dropped: pair removed
    unsigned r = 0;
    std::size_t suffix_start = 0;
    bool e_side = w[pick.first].level == v;
    if (e_side) {
      // The chosen E_v meets the first F after it.
      std::size_t i = pick.first, mpos = i + 1;
      while (w[mpos].is_e) ++mpos;
      r = w[mpos].level;
      Word prefix(w.begin(), w.begin() + i);
      prefix.insert(prefix.end(), w.begin() + i + 1, w.begin() + mpos);
      Word suffix(w.begin() + mpos + 1, w.end());
      swapped = prefix;
      swapped.push_back(w[mpos]);
      swapped.push_back(w[i]);
      swapped.insert(swapped.end(), suffix.begin(), suffix.end());
      dropped = prefix;
      suffix_start = dropped.size();
      dropped.insert(dropped.end(), suffix.begin(), suffix.end());
    } else {
      // The chosen F_v meets the last E before it.
      std::size_t j = pick.second, mpos = j - 1;
      while (!w[mpos].is_e) --mpos;
      r = w[mpos].level;
      Word prefix(w.begin(), w.begin() + mpos);
      Word mid(w.begin() + mpos + 1, w.begin() + j);  // all F's
      Word tail(w.begin() + j + 1, w.end());
      swapped = prefix;
      swapped.push_back(w[j]);
      swapped.push_back(w[mpos]);
      swapped.insert(swapped.end(), mid.begin(), mid.end());
      swapped.insert(swapped.end(), tail.begin(), tail.end());
      dropped = prefix;
      suffix_start = dropped.size();
      dropped.insert(dropped.end(), mid.begin(), mid.end());
      dropped.insert(dropped.end(), tail.begin(), tail.end());
    }

    ++depth;
    out = normal_form(swapped, &m);

    // Commutator summand: +-(word) (X_v + c), with the level-v bias of every
    // factor the X passes on its way to the right absorbed into c.
    if (r == v) {
      long q = level_bias(dropped, suffix_start, v);
      NormalCombination inner = normal_form(dropped, &m);
      NormalCombination shifted = mul_x_plus_c(inner, v, ring.from_long(2 * q));
      for (const auto& [key, coef] : shifted.terms)
        out.add(XMonomial::from_key(key), coef);
    } else {
      unsigned n = r - v;
      Word with_string(dropped.begin(), dropped.begin() + suffix_start);
      for (unsigned lev = v; lev < v + n; ++lev)
        for (unsigned long c = 0; c + 1 < p; ++c)
          with_string.push_back(GenSymbol{!e_side, lev});
      with_string.insert(with_string.end(), dropped.begin() + suffix_start,
                         dropped.end());
      // On the e side the (X_v + 1) factor starts to the right of the
      // inserted f-string; on the f side it starts to its left.
      std::size_t bias_from =
          e_side ? suffix_start + static_cast<std::size_t>(n) * (p - 1) : suffix_start;
      long q = level_bias(with_string, bias_from, v);
      NormalCombination inner = normal_form(with_string, &m);
      std::uint32_t c = ring.add(ring.one(), ring.from_long(2 * q));
      NormalCombination shifted = mul_x_plus_c(inner, v, c);
      std::uint32_t sign = ring.from_long(n % 2 ? -1 : 1);
      for (const auto& [key, coef] : shifted.terms)
        out.add(XMonomial::from_key(key), ring.mul(sign, coef));
    }
    --depth;
    return out;
  }
};

}  // namespace

unsigned long word_weight(const Word& w, unsigned long p) {
  unsigned long total = 0;
  for (const GenSymbol& g : w) total += pow_ul_nocheck(p, g.level);
  return total;
}

std::size_t word_disorder(const Word& w) {
  std::size_t d = 0, es = 0;
  for (const GenSymbol& g : w) {
    if (g.is_e)
      ++es;
    else
      d += es;
  }
  return d;
}

Word parse_word(const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || (tok[0] != 'e' && tok[0] != 'f'))
      throw std::invalid_argument("parse_word: bad token '" + tok + "'");
    std::size_t pos = 0;
    unsigned level = 0;
    try {
      level = static_cast<unsigned>(std::stoul(tok.substr(1), &pos));
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_word: bad level in '" + tok + "'");
    }
    if (pos + 1 != tok.size())
      throw std::invalid_argument("parse_word: bad token '" + tok + "'");
    w.push_back(GenSymbol{tok[0] == 'e', level});
  }
  return w;
}

std::string word_str(const Word& w) {
  std::string s;
  for (const GenSymbol& g : w) {
    if (!s.empty()) s += " ";
    s += (g.is_e ? "e" : "f") + std::to_string(g.level);
  }
  return s.empty() ? "1" : s;
}

void NormalCombination::add(const XMonomial& xm, std::uint32_t coef) {
  coef %= static_cast<std::uint32_t>(p);
  if (coef == 0) return;
  std::uint64_t key = xm.key();
  auto [it, fresh] = terms.emplace(key, coef);
  if (!fresh) {
    it->second = (it->second + coef) % static_cast<std::uint32_t>(p);
    if (it->second == 0) terms.erase(it);
  }
}

std::string NormalCombination::str() const {
  if (terms.empty()) return "0";
  std::vector<std::pair<XMonomial, std::uint32_t>> sorted;
  sorted.reserve(terms.size());
  for (const auto& [key, coef] : terms) sorted.emplace_back(XMonomial::from_key(key), coef);
  std::sort(sorted.begin(), sorted.end(), [this](const auto& l, const auto& r) {
    unsigned long lb = l.first.top_b(p), rb = r.first.top_b(p);
    if (lb != rb) return lb < rb;
    return l.first.key() < r.first.key();
  });
  std::string s;
  for (const auto& [xm, coef] : sorted) {
    if (!s.empty()) s += " + ";
    if (coef != 1 || xm.is_unit()) {
      s += std::to_string(coef);
      if (!xm.is_unit()) s += " ";
    }
    if (!xm.is_unit()) s += xm.str();
  }
  return s;
}

NormalCombination straighten(const Word& w, unsigned long p,
                             StraightenStrategy strategy, std::uint64_t seed,
                             StraightenStats* stats) {
  Straightener s(p, strategy, seed, stats);
  return s.normal_form(w, nullptr);
}

Element<RingFp> eval_word(const Word& w, const RingFp& ring) {
  Element<RingFp> out = Element<RingFp>::unit(ring);
  const unsigned long p = ring.p();
  for (const GenSymbol& g : w) {
    unsigned long q = 1;
    for (unsigned i = 0; i < g.level; ++i) {
      q *= p;
      if (q >= kMonomialIndexLimit)
        throw std::overflow_error("eval_word: index out of range");
    }
    Monomial m = g.is_e ? Monomial{0, 0, static_cast<std::uint32_t>(q)}
                        : Monomial{static_cast<std::uint32_t>(q), 0, 0};
    out = mul(out, Element<RingFp>::monomial(ring, m));
  }
  return out;
}

Element<RingFp> eval_normal(const NormalCombination& nc, SplittingContext& ctx) {
  if (ctx.p() != nc.p)
    throw std::invalid_argument("eval_normal: prime mismatch");
  Element<RingFp> out(ctx.ring());
  for (const auto& [key, coef] : nc.terms) {
    Element<RingFp> exp = ctx.xbasis_element(XMonomial::from_key(key));
    out = add(out, scalar_mul(coef, exp));
  }
  return out;
}

}  // namespace sl2dist
