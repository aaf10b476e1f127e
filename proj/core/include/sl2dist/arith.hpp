#ifndef SL2DIST_ARITH_HPP
#define SL2DIST_ARITH_HPP

// Exact integer / rational helpers shared by the whole library: generalized
// binomial coefficients, p-adic valuations, Lucas reduction, residues and
// p-local rationals.  Everything is backed by GMP, nothing ever rounds.

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace sl2dist {

using BigInt = mpz_class;
using BigRat = mpq_class;

// binom(n, k) for arbitrary integer n (negative allowed) and k >= 0, via the
// falling factorial n(n-1)...(n-k+1)/k!.  binom(n, k) = 0 for k < 0 is the
// caller's job (k is unsigned here).
BigInt binom_int(const BigInt& n, unsigned long k);
BigInt binom_int(long n, unsigned long k);

BigInt factorial_int(unsigned long n);

// p-adic valuation; vp(0) is infinite.
class Valuation {
public:
  static Valuation infinity() { return Valuation(true, 0); }
  static Valuation finite(unsigned long v) { return Valuation(false, v); }
  bool is_infinite() const { return infinite_; }
  unsigned long value() const {
    if (infinite_) throw std::domain_error("Valuation::value on infinity");
    return v_;
  }
  bool operator==(const Valuation& o) const {
    return infinite_ == o.infinite_ && (infinite_ || v_ == o.v_);
  }
  bool operator!=(const Valuation& o) const { return !(*this == o); }
  // infinity compares greater than every finite valuation
  bool operator<(const Valuation& o) const {
    if (infinite_) return false;
    if (o.infinite_) return true;
    return v_ < o.v_;
  }
  bool operator>=(const Valuation& o) const { return !(*this < o); }
  std::string str() const { return infinite_ ? "inf" : std::to_string(v_); }

private:
  Valuation(bool inf, unsigned long v) : infinite_(inf), v_(v) {}
  bool infinite_;
  unsigned long v_;
};

Valuation vp(const BigInt& n, unsigned long p);

// vp of a rational as a signed integer (vp(num) - vp(den)); throws on q == 0.
long vp_signed(const BigRat& q, unsigned long p);

bool is_small_prime(unsigned long n);

// Residue arithmetic modulo p^m (m >= 1): value held reduced to [0, p^m).
class Residue {
public:
  Residue(BigInt value, unsigned long p, unsigned m);
  static Residue from_int(const BigInt& value, unsigned long p, unsigned m) {
    return Residue(value, p, m);
  }
  const BigInt& value() const { return value_; }
  const BigInt& modulus() const { return modulus_; }
  unsigned long p() const { return p_; }
  unsigned m() const { return m_; }

  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator*(const Residue& o) const;
  bool operator==(const Residue& o) const;
  bool operator!=(const Residue& o) const { return !(*this == o); }
  bool is_zero() const { return value_ == 0; }
  std::string str() const;

private:
  void check_compatible(const Residue& o) const;
  BigInt value_;
  BigInt modulus_;
  unsigned long p_;
  unsigned m_;
};

// binom(n, k) mod p via Lucas' theorem (n, k >= 0, p prime).  Returns a
// Residue with m = 1.  Independent of binom_int on purpose: used as an oracle
// against direct computation.
Residue binom_mod_p_lucas(const BigInt& n, const BigInt& k, unsigned long p);

// A rational number lying in Z localized at p: denominator coprime to p.
// Stored canonically (gcd(num, den) = 1, den > 0).  Division by a non-unit
// (i.e. by anything with positive valuation) throws.
class PLocalRational {
public:
  PLocalRational(BigRat value, unsigned long p);
  PLocalRational(const BigInt& n, unsigned long p) : PLocalRational(BigRat(n), p) {}

  const BigRat& value() const { return value_; }
  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }
  unsigned long p() const { return p_; }

  PLocalRational operator+(const PLocalRational& o) const;
  PLocalRational operator-(const PLocalRational& o) const;
  PLocalRational operator*(const PLocalRational& o) const;
  PLocalRational operator/(const PLocalRational& o) const;  // o must be a p-unit
  PLocalRational operator-() const;
  bool operator==(const PLocalRational& o) const;
  bool is_zero() const { return value_ == 0; }

  // Reduction to Z/p^m; defined because den is a p-unit.
  Residue reduce(unsigned m) const;

  std::string str() const;

private:
  void check_compatible(const PLocalRational& o) const;
  BigRat value_;
  unsigned long p_;
};

}  // namespace sl2dist

#endif
