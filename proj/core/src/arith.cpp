#include "sl2dist/arith.hpp"

namespace sl2dist {

BigInt binom_int(const BigInt& n, unsigned long k) {
  BigInt r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

BigInt binom_int(long n, unsigned long k) { return binom_int(BigInt(n), k); }

BigInt factorial_int(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Valuation vp(const BigInt& n, unsigned long p) {
  if (p < 2) throw std::invalid_argument("vp: p must be >= 2");
  if (n == 0) return Valuation::infinity();
  BigInt pz(static_cast<unsigned long>(p));
  BigInt rest;
  unsigned long v = mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t());
  return Valuation::finite(v);
}

long vp_signed(const BigRat& q, unsigned long p) {
  if (q == 0) throw std::domain_error("vp_signed: zero has infinite valuation");
  Valuation vn = vp(BigInt(q.get_num()), p);
  Valuation vd = vp(BigInt(q.get_den()), p);
  return static_cast<long>(vn.value()) - static_cast<long>(vd.value());
}

bool is_small_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Residue::Residue(BigInt value, unsigned long p, unsigned m)
    : value_(std::move(value)), p_(p), m_(m) {
  if (!is_small_prime(p)) throw std::invalid_argument("Residue: p must be prime");
  if (m < 1) throw std::invalid_argument("Residue: m must be >= 1");
  mpz_ui_pow_ui(modulus_.get_mpz_t(), p, m);
  mpz_fdiv_r(value_.get_mpz_t(), value_.get_mpz_t(), modulus_.get_mpz_t());
}

void Residue::check_compatible(const Residue& o) const {
  if (p_ != o.p_ || m_ != o.m_)
    throw std::invalid_argument("Residue: mixed moduli");
}

Residue Residue::operator+(const Residue& o) const {
  check_compatible(o);
  return Residue(value_ + o.value_, p_, m_);
}

Residue Residue::operator-(const Residue& o) const {
  check_compatible(o);
  return Residue(value_ - o.value_, p_, m_);
}

Residue Residue::operator*(const Residue& o) const {
  check_compatible(o);
  return Residue(value_ * o.value_, p_, m_);
}

bool Residue::operator==(const Residue& o) const {
  check_compatible(o);
  return value_ == o.value_;
}

std::string Residue::str() const {
  return value_.get_str() + " (mod " + modulus_.get_str() + ")";
}

Residue binom_mod_p_lucas(const BigInt& n, const BigInt& k, unsigned long p) {
  if (!is_small_prime(p)) throw std::invalid_argument("lucas: p must be prime");
  if (n < 0 || k < 0) throw std::invalid_argument("lucas: n, k must be >= 0");
  // Pascal rows mod p up to row p-1, computed once per call; p is tiny here.
  // binom(n, k) = prod binom(n_i, k_i) over base-p digits.
  BigInt nn = n, kk = k, pz(p);
  unsigned long acc = 1;
  while (kk > 0 || nn > 0) {
    unsigned long nd = mpz_fdiv_ui(nn.get_mpz_t(), p);
    unsigned long kd = mpz_fdiv_ui(kk.get_mpz_t(), p);
    if (kd > nd) return Residue(0, p, 1);
    // binom(nd, kd) mod p with nd, kd < p
    unsigned long num = 1, den = 1;
    for (unsigned long i = 0; i < kd; ++i) {
      num = (num * ((nd - i) % p)) % p;
      den = (den * ((i + 1) % p)) % p;
    }
    // den is invertible mod p (kd < p): Fermat inverse
    unsigned long inv = 1, base = den % p, e = p - 2;
    while (e) {
      if (e & 1) inv = (inv * base) % p;
      base = (base * base) % p;
      e >>= 1;
    }
    acc = (acc * ((num * inv) % p)) % p;
    nn /= pz;
    kk /= pz;
  }
  return Residue(BigInt(acc), p, 1);
}

PLocalRational::PLocalRational(BigRat value, unsigned long p)
    : value_(std::move(value)), p_(p) {
  if (!is_small_prime(p)) throw std::invalid_argument("PLocalRational: p must be prime");
  value_.canonicalize();
  if (mpz_divisible_ui_p(value_.get_den().get_mpz_t(), p))
    throw std::domain_error("PLocalRational: denominator divisible by p");
}

void PLocalRational::check_compatible(const PLocalRational& o) const {
  if (p_ != o.p_) throw std::invalid_argument("PLocalRational: mixed primes");
}

PLocalRational PLocalRational::operator+(const PLocalRational& o) const {
  check_compatible(o);
  return PLocalRational(value_ + o.value_, p_);
}

PLocalRational PLocalRational::operator-(const PLocalRational& o) const {
  check_compatible(o);
  return PLocalRational(value_ - o.value_, p_);
}

PLocalRational PLocalRational::operator*(const PLocalRational& o) const {
  check_compatible(o);
  return PLocalRational(value_ * o.value_, p_);
}

PLocalRational PLocalRational::operator/(const PLocalRational& o) const {
  check_compatible(o);
  if (o.value_ == 0) throw std::domain_error("PLocalRational: division by zero");
  if (mpz_divisible_ui_p(o.value_.get_num().get_mpz_t(), p_))
    throw std::domain_error("PLocalRational: division by a non-unit (p | numerator)");
  return PLocalRational(value_ / o.value_, p_);
}

PLocalRational PLocalRational::operator-() const { return PLocalRational(-value_, p_); }

bool PLocalRational::operator==(const PLocalRational& o) const {
  check_compatible(o);
  return value_ == o.value_;
}

Residue PLocalRational::reduce(unsigned m) const {
  BigInt modulus;
  mpz_ui_pow_ui(modulus.get_mpz_t(), p_, m);
  BigInt den(value_.get_den());
  BigInt dinv;
  if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t()) == 0)
    throw std::domain_error("PLocalRational::reduce: denominator not invertible");
  return Residue(BigInt(value_.get_num()) * dinv, p_, m);
}

std::string PLocalRational::str() const { return value_.get_str(); }

}  // namespace sl2dist
