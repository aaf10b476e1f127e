#ifndef SL2DIST_RINGS_HPP
#define SL2DIST_RINGS_HPP

// Coefficient rings for the distribution algebra: Z, Z localized at p,
// F_p, and Z/p^m.  Each ring exposes the same small interface (zero/one,
// arithmetic, equality, printing) plus evaluation of binomial coefficients
// binom(t, k) at integer arguments t, which is the only "transcendental"
// input the multiplication engine needs.
//
// The F_p ring keeps a shared grow-on-demand Pascal table of binom(t, k)
// mod p over a window of integer tops (negative tops included); the other
// rings evaluate through GMP with a small per-view memo.

#include "sl2dist/arith.hpp"

#include <atomic>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace sl2dist {

// Global switch for rule/binomial memo caches, so differential tests can
// compare cached and uncached runs.
bool memo_enabled();
void set_memo_enabled(bool on);

struct RingDescriptor {
  std::string kind;      // "Z", "Zp-local", "Fp", "Z/p^m"
  unsigned long p = 0;   // 0 when not applicable
  unsigned m = 0;
  bool operator==(const RingDescriptor&) const = default;
};

namespace detail {
inline std::uint64_t binom_memo_key(long t, unsigned k) {
  // |t| stays far below 2^30 in every code path that uses views.
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(t + (1L << 30))) << 16) |
         (k & 0xffffu);
}
}  // namespace detail

// ---------------------------------------------------------------------------

class RingZ {
public:
  using Coef = BigInt;

  RingDescriptor descriptor() const { return {"Z", 0, 0}; }
  bool operator==(const RingZ&) const { return true; }

  Coef zero() const { return Coef(0); }
  Coef one() const { return Coef(1); }
  Coef from_long(long v) const { return Coef(v); }
  Coef from_bigint(const BigInt& v) const { return v; }
  Coef add(const Coef& a, const Coef& b) const { return a + b; }
  Coef sub(const Coef& a, const Coef& b) const { return a - b; }
  Coef mul(const Coef& a, const Coef& b) const { return a * b; }
  Coef neg(const Coef& a) const { return -a; }
  void add_assign(Coef& a, const Coef& b) const { a += b; }
  void add_mul(Coef& acc, const Coef& x, const Coef& y) const {
    mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  }
  bool is_zero(const Coef& a) const { return a == 0; }
  bool eq(const Coef& a, const Coef& b) const { return a == b; }
  std::string str(const Coef& a) const { return a.get_str(); }

  Coef binom(long t, unsigned k) const { return binom_int(t, k); }
  Coef binom_big(const BigInt& t, unsigned long k) const { return binom_int(t, k); }

  class BView {
  public:
    const Coef& binom(long t, unsigned k) const;

  private:
    mutable std::unordered_map<std::uint64_t, Coef> memo_;
  };
  BView bview(long, long, unsigned) const { return BView(); }
};

// ---------------------------------------------------------------------------

// Rationals with denominator coprime to p.  Coefficients are plain mpq; the
// p-locality invariant is checked where values enter (construction from
// rationals, deserialization) and on reduction, and is preserved by +,-,*.
class RingQp {
public:
  using Coef = BigRat;

  explicit RingQp(unsigned long p);
  unsigned long p() const { return p_; }
  RingDescriptor descriptor() const { return {"Zp-local", p_, 0}; }
  bool operator==(const RingQp& o) const { return p_ == o.p_; }

  Coef zero() const { return Coef(0); }
  Coef one() const { return Coef(1); }
  Coef from_long(long v) const { return Coef(v); }
  Coef from_bigint(const BigInt& v) const { return Coef(v); }
  Coef from_rational(const BigRat& v) const;  // checks p-locality
  Coef add(const Coef& a, const Coef& b) const { return a + b; }
  Coef sub(const Coef& a, const Coef& b) const { return a - b; }
  Coef mul(const Coef& a, const Coef& b) const { return a * b; }
  Coef neg(const Coef& a) const { return -a; }
  void add_assign(Coef& a, const Coef& b) const { a += b; }
  void add_mul(Coef& acc, const Coef& x, const Coef& y) const { acc += x * y; }
  bool is_zero(const Coef& a) const { return a == 0; }
  bool eq(const Coef& a, const Coef& b) const { return a == b; }
  std::string str(const Coef& a) const { return a.get_str(); }

  // Exact division by p^e; throws unless the valuation allows it.
  Coef div_ppow(const Coef& a, unsigned e) const;

  Coef binom(long t, unsigned k) const { return Coef(binom_int(t, k)); }

  class BView {
  public:
    const Coef& binom(long t, unsigned k) const;

  private:
    mutable std::unordered_map<std::uint64_t, Coef> memo_;
  };
  BView bview(long, long, unsigned) const { return BView(); }

private:
  unsigned long p_;
};

// ---------------------------------------------------------------------------

// Pascal table of binom(t, k) mod p for t in [tmin, tmax], 0 <= k <= kmax.
// Rows are built by the Pascal recurrence binom(t,k) = binom(t-1,k) +
// binom(t-1,k-1), which holds for every integer t, so negative tops come out
// right (binom(-1, k) = (-1)^k etc.).
class FpBinomTable {
public:
  FpBinomTable(std::uint32_t p, long tmin, long tmax, unsigned kmax);

  std::uint32_t at(long t, unsigned k) const {
    return data_[static_cast<std::size_t>(t - tmin_) * stride_ + k];
  }
  bool covers(long tmin, long tmax, unsigned kmax) const {
    return tmin >= tmin_ && tmax <= tmax_ && kmax <= kmax_;
  }
  long tmin() const { return tmin_; }
  long tmax() const { return tmax_; }
  unsigned kmax() const { return kmax_; }

private:
  std::uint32_t p_;
  long tmin_, tmax_;
  unsigned kmax_;
  std::size_t stride_;
  std::vector<std::uint32_t> data_;
};

class RingFp {
public:
  using Coef = std::uint32_t;

  explicit RingFp(unsigned long p);
  unsigned long p() const { return p_; }
  RingDescriptor descriptor() const { return {"Fp", p_, 0}; }
  bool operator==(const RingFp& o) const { return p_ == o.p_; }

  Coef zero() const { return 0; }
  Coef one() const { return 1; }
  Coef from_long(long v) const {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += static_cast<long>(p_);
    return static_cast<Coef>(r);
  }
  Coef from_bigint(const BigInt& v) const {
    return static_cast<Coef>(mpz_fdiv_ui(v.get_mpz_t(), p_));
  }
  Coef add(Coef a, Coef b) const {
    Coef s = a + b;
    return s >= p_ ? s - static_cast<Coef>(p_) : s;
  }
  Coef sub(Coef a, Coef b) const { return a >= b ? a - b : a + static_cast<Coef>(p_) - b; }
  Coef mul(Coef a, Coef b) const {
    return static_cast<Coef>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Coef neg(Coef a) const { return a == 0 ? 0 : static_cast<Coef>(p_) - a; }
  void add_assign(Coef& a, Coef b) const { a = add(a, b); }
  void add_mul(Coef& acc, Coef x, Coef y) const {
    acc = static_cast<Coef>((acc + static_cast<std::uint64_t>(x) * y) % p_);
  }
  Coef inv(Coef a) const;
  bool is_zero(Coef a) const { return a == 0; }
  bool eq(Coef a, Coef b) const { return a == b; }
  std::string str(Coef a) const { return std::to_string(a); }

  Coef binom(long t, unsigned k) const;
  Coef binom_big(const BigInt& t, unsigned long k) const;

  // Shared table access; grows the table to cover the window if needed.
  std::shared_ptr<const FpBinomTable> binom_table(long tmin, long tmax, unsigned kmax) const;

  class BView {
  public:
    BView(std::shared_ptr<const FpBinomTable> t) : table_(std::move(t)) {}
    Coef binom(long t, unsigned k) const { return table_->at(t, k); }

  private:
    std::shared_ptr<const FpBinomTable> table_;
  };
  BView bview(long tmin, long tmax, unsigned kmax) const {
    return BView(binom_table(tmin, tmax, kmax));
  }

private:
  struct Shared {
    std::mutex mu;
    std::shared_ptr<const FpBinomTable> table;
  };
  unsigned long p_;
  std::shared_ptr<Shared> shared_;
};

// ---------------------------------------------------------------------------

class RingZpM {
public:
  using Coef = BigInt;  // held reduced to [0, p^m)

  RingZpM(unsigned long p, unsigned m);
  unsigned long p() const { return p_; }
  unsigned m() const { return m_; }
  const BigInt& modulus() const { return modulus_; }
  RingDescriptor descriptor() const { return {"Z/p^m", p_, m_}; }
  bool operator==(const RingZpM& o) const { return p_ == o.p_ && m_ == o.m_; }

  Coef reduce(const BigInt& v) const {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), modulus_.get_mpz_t());
    return r;
  }
  Coef zero() const { return Coef(0); }
  Coef one() const { return Coef(1); }
  Coef from_long(long v) const { return reduce(BigInt(v)); }
  Coef from_bigint(const BigInt& v) const { return reduce(v); }
  Coef add(const Coef& a, const Coef& b) const { return reduce(a + b); }
  Coef sub(const Coef& a, const Coef& b) const { return reduce(a - b); }
  Coef mul(const Coef& a, const Coef& b) const { return reduce(a * b); }
  Coef neg(const Coef& a) const { return reduce(-a); }
  void add_assign(Coef& a, const Coef& b) const { a = add(a, b); }
  void add_mul(Coef& acc, const Coef& x, const Coef& y) const {
    mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    acc = reduce(acc);
  }
  bool is_zero(const Coef& a) const { return a == 0; }
  bool eq(const Coef& a, const Coef& b) const { return a == b; }
  std::string str(const Coef& a) const { return a.get_str(); }

  Coef binom(long t, unsigned k) const { return reduce(binom_int(t, k)); }

  class BView {
  public:
    explicit BView(const RingZpM& r) : ring_(r) {}
    const Coef& binom(long t, unsigned k) const;

  private:
    const RingZpM& ring_;
    mutable std::unordered_map<std::uint64_t, Coef> memo_;
  };
  BView bview(long, long, unsigned) const { return BView(*this); }

private:
  unsigned long p_;
  unsigned m_;
  BigInt modulus_;
};

}  // namespace sl2dist

#endif
