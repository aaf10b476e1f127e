#include "sl2dist/product.hpp"

#include <map>

namespace sl2dist::detail {

namespace {
std::mutex g_rule_mu;
std::map<std::pair<unsigned, unsigned>, std::vector<EfTerm>> g_ef_cache;
std::map<std::pair<unsigned, unsigned>, std::vector<std::pair<unsigned, BigInt>>> g_hh_cache;

std::vector<EfTerm> compute_ef(unsigned r, unsigned s) {
  // e^(r) f^(s) = sum_k f^(s-k) binom(h - s - r + 2k, k) e^(r-k), the middle
  // binomial expanded by Vandermonde into the binom(h, j) basis.
  std::vector<EfTerm> v;
  unsigned kcap = std::min(r, s);
  for (unsigned k = 0; k <= kcap; ++k) {
    long shift = -static_cast<long>(s) - static_cast<long>(r) + 2L * k;
    for (unsigned j = 0; j <= k; ++j) {
      BigInt c = binom_int(shift, k - j);
      if (c != 0) v.push_back(EfTerm{s - k, j, r - k, std::move(c)});
    }
  }
  return v;
}

std::vector<std::pair<unsigned, BigInt>> compute_hh(unsigned a, unsigned b) {
  std::vector<std::pair<unsigned, BigInt>> v;
  for (unsigned k = std::max(a, b); k <= a + b; ++k) {
    BigInt c = binom_int(static_cast<long>(k), a) * binom_int(static_cast<long>(a), a + b - k);
    if (c != 0) v.emplace_back(k, std::move(c));
  }
  return v;
}
}  // namespace

const std::vector<EfTerm>& ef_straighten_terms(unsigned r, unsigned s) {
  if (!memo_enabled()) {
    static thread_local std::vector<EfTerm> scratch;
    scratch = compute_ef(r, s);
    return scratch;
  }
  std::lock_guard<std::mutex> lock(g_rule_mu);
  auto it = g_ef_cache.find({r, s});
  if (it == g_ef_cache.end()) it = g_ef_cache.emplace(std::make_pair(r, s), compute_ef(r, s)).first;
  return it->second;
}

const std::vector<std::pair<unsigned, BigInt>>& hh_mul_terms(unsigned a, unsigned b) {
  if (!memo_enabled()) {
    static thread_local std::vector<std::pair<unsigned, BigInt>> scratch;
    scratch = compute_hh(a, b);
    return scratch;
  }
  std::lock_guard<std::mutex> lock(g_rule_mu);
  auto it = g_hh_cache.find({a, b});
  if (it == g_hh_cache.end()) it = g_hh_cache.emplace(std::make_pair(a, b), compute_hh(a, b)).first;
  return it->second;
}

}  // namespace sl2dist::detail
