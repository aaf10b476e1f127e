#include "sl2dist/rings.hpp"

namespace sl2dist {

namespace {
std::atomic<bool> g_memo_enabled{true};
}

bool memo_enabled() { return g_memo_enabled.load(std::memory_order_relaxed); }
void set_memo_enabled(bool on) { g_memo_enabled.store(on, std::memory_order_relaxed); }

// ---------------------------------------------------------------------------

const RingZ::Coef& RingZ::BView::binom(long t, unsigned k) const {
  if (!memo_enabled()) {
    static thread_local Coef scratch;
    scratch = binom_int(t, k);
    return scratch;
  }
  auto key = detail::binom_memo_key(t, k);
  auto it = memo_.find(key);
  if (it == memo_.end()) it = memo_.emplace(key, binom_int(t, k)).first;
  return it->second;
}

// ---------------------------------------------------------------------------

RingQp::RingQp(unsigned long p) : p_(p) {
  if (!is_small_prime(p) || p < 3)
    throw std::invalid_argument("RingQp: p must be an odd prime");
}

RingQp::Coef RingQp::from_rational(const BigRat& v) const {
  BigRat c = v;
  c.canonicalize();
  if (mpz_divisible_ui_p(c.get_den().get_mpz_t(), p_))
    throw std::domain_error("RingQp: denominator divisible by p");
  return c;
}

RingQp::Coef RingQp::div_ppow(const Coef& a, unsigned e) const {
  if (a == 0) return a;
  BigInt pe;
  mpz_ui_pow_ui(pe.get_mpz_t(), p_, e);
  BigRat q = a / BigRat(pe);
  q.canonicalize();
  if (mpz_divisible_ui_p(q.get_den().get_mpz_t(), p_))
    throw std::domain_error("RingQp::div_ppow: quotient is not p-local (valuation too small)");
  return q;
}

const RingQp::Coef& RingQp::BView::binom(long t, unsigned k) const {
  if (!memo_enabled()) {
    static thread_local Coef scratch;
    scratch = BigRat(binom_int(t, k));
    return scratch;
  }
  auto key = detail::binom_memo_key(t, k);
  auto it = memo_.find(key);
  if (it == memo_.end()) it = memo_.emplace(key, BigRat(binom_int(t, k))).first;
  return it->second;
}

// ---------------------------------------------------------------------------

FpBinomTable::FpBinomTable(std::uint32_t p, long tmin, long tmax, unsigned kmax)
    : p_(p), tmin_(tmin), tmax_(tmax), kmax_(kmax), stride_(kmax + 1u) {
  if (tmax < tmin) throw std::invalid_argument("FpBinomTable: empty window");
  std::size_t rows = static_cast<std::size_t>(tmax - tmin) + 1;
  if (rows * stride_ > (std::size_t(1) << 31))
    throw std::length_error("FpBinomTable: requested window too large");
  data_.assign(rows * stride_, 0);
  // First row directly from GMP, the rest by Pascal on the top argument.
  for (unsigned k = 0; k <= kmax; ++k) {
    BigInt b = binom_int(tmin, k);
    data_[k] = static_cast<std::uint32_t>(mpz_fdiv_ui(b.get_mpz_t(), p));
  }
  for (long t = tmin + 1; t <= tmax; ++t) {
    const std::uint32_t* prev = &data_[static_cast<std::size_t>(t - 1 - tmin) * stride_];
    std::uint32_t* row = &data_[static_cast<std::size_t>(t - tmin) * stride_];
    row[0] = 1 % p;
    for (unsigned k = 1; k <= kmax; ++k) {
      std::uint32_t s = prev[k] + prev[k - 1];
      row[k] = s >= p ? s - p : s;
    }
  }
}

RingFp::RingFp(unsigned long p) : p_(p), shared_(std::make_shared<Shared>()) {
  if (!is_small_prime(p)) throw std::invalid_argument("RingFp: p must be prime");
  if (p < 3) throw std::invalid_argument("RingFp: p = 2 is not supported");
  if (p > (1ul << 20)) throw std::invalid_argument("RingFp: p too large");
}

RingFp::Coef RingFp::inv(Coef a) const {
  if (a == 0) throw std::domain_error("RingFp::inv(0)");
  Coef r = 1, base = a;
  unsigned long e = p_ - 2;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::shared_ptr<const FpBinomTable> RingFp::binom_table(long tmin, long tmax,
                                                        unsigned kmax) const {
  std::lock_guard<std::mutex> lock(shared_->mu);
  auto cur = shared_->table;
  if (cur && cur->covers(tmin, tmax, kmax)) return cur;
  long lo = tmin, hi = tmax;
  unsigned km = kmax;
  if (cur) {
    lo = std::min(lo, cur->tmin());
    hi = std::max(hi, cur->tmax());
    km = std::max(km, cur->kmax());
  }
  // Slack so that a sequence of slightly growing requests does not trigger a
  // rebuild each time.
  long span = hi - lo;
  lo -= span / 4 + 16;
  hi += span / 4 + 16;
  km += km / 4 + 8;
  auto fresh = std::make_shared<const FpBinomTable>(static_cast<std::uint32_t>(p_), lo, hi, km);
  shared_->table = fresh;
  return fresh;
}

RingFp::Coef RingFp::binom(long t, unsigned k) const {
  auto cur = [this] {
    std::lock_guard<std::mutex> lock(shared_->mu);
    return shared_->table;
  }();
  if (cur && cur->covers(t, t, k)) return cur->at(t, k);
  BigInt b = binom_int(t, k);
  return from_bigint(b);
}

RingFp::Coef RingFp::binom_big(const BigInt& t, unsigned long k) const {
  return from_bigint(binom_int(t, k));
}

// ---------------------------------------------------------------------------

RingZpM::RingZpM(unsigned long p, unsigned m) : p_(p), m_(m) {
  if (!is_small_prime(p) || p < 3)
    throw std::invalid_argument("RingZpM: p must be an odd prime");
  if (m < 1) throw std::invalid_argument("RingZpM: m must be >= 1");
  mpz_ui_pow_ui(modulus_.get_mpz_t(), p, m);
}

const RingZpM::Coef& RingZpM::BView::binom(long t, unsigned k) const {
  if (!memo_enabled()) {
    static thread_local Coef scratch;
    scratch = ring_.binom(t, k);
    return scratch;
  }
  auto key = detail::binom_memo_key(t, k);
  auto it = memo_.find(key);
  if (it == memo_.end()) it = memo_.emplace(key, ring_.binom(t, k)).first;
  return it->second;
}

}  // namespace sl2dist
