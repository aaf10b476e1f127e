#include "sl2dist/reps.hpp"

#include "sl2dist/congruence.hpp"
#include "sl2dist/hmodp.hpp"

namespace sl2dist {

namespace {

FpMatrix matpow(const FpMatrix& a, unsigned n, unsigned long p) {
  FpMatrix acc = identity_matrix(static_cast<unsigned>(a.size()));
  for (unsigned i = 0; i < n; ++i) acc = matmul(acc, a, p);
  return acc;
}

FpMatrix matcomm(const FpMatrix& a, const FpMatrix& b, unsigned long p) {
  return matsub(matmul(a, b, p), matmul(b, a, p), p);
}

// Smallest window exponent n >= 1 with every divided-power index < p^n.
unsigned window_of(const Element<RingFp>& x, unsigned long p) {
  std::uint32_t top = 0;
  for (const auto& [k, c] : x.terms()) {
    Monomial m = Monomial::from_key(k);
    top = std::max({top, m.a, m.b, m.c});
  }
  unsigned n = 1;
  unsigned long bound = p;
  while (bound <= top) {
    bound *= p;
    ++n;
  }
  return n;
}

}  // namespace

// --- Matrix helpers ---------------------------------------------------------

FpMatrix matmul(const FpMatrix& a, const FpMatrix& b, unsigned long p) {
  unsigned n = static_cast<unsigned>(a.size());
  FpMatrix r = zero_matrix(n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (unsigned j = 0; j < n; ++j)
        r[i][j] = static_cast<std::uint32_t>(
            (r[i][j] + static_cast<std::uint64_t>(a[i][k]) * b[k][j]) % p);
    }
  return r;
}

FpMatrix matadd(const FpMatrix& a, const FpMatrix& b, unsigned long p) {
  FpMatrix r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j)
      r[i][j] = static_cast<std::uint32_t>((r[i][j] + b[i][j]) % p);
  return r;
}

FpMatrix matsub(const FpMatrix& a, const FpMatrix& b, unsigned long p) {
  FpMatrix r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j)
      r[i][j] = static_cast<std::uint32_t>((r[i][j] + p - b[i][j]) % p);
  return r;
}

FpMatrix matscale(std::uint32_t s, const FpMatrix& a, unsigned long p) {
  FpMatrix r = a;
  for (auto& row : r)
    for (auto& v : row)
      v = static_cast<std::uint32_t>((static_cast<std::uint64_t>(v) * s) % p);
  return r;
}

FpMatrix identity_matrix(unsigned dim) {
  FpMatrix r = zero_matrix(dim);
  for (unsigned i = 0; i < dim; ++i) r[i][i] = 1;
  return r;
}

FpMatrix zero_matrix(unsigned dim) {
  return FpMatrix(dim, std::vector<std::uint32_t>(dim, 0));
}

bool mat_is_zero(const FpMatrix& a) {
  for (const auto& row : a)
    for (auto v : row)
      if (v != 0) return false;
  return true;
}

// --- Module -----------------------------------------------------------------

WeylModule::WeylModule(unsigned m, unsigned long p) : m_(m), ring_(p) { validate(); }

FpMatrix WeylModule::e_matrix(unsigned long r) const {
  FpMatrix mat = zero_matrix(dim());
  for (unsigned i = 0; i < dim(); ++i) {
    if (i < r) continue;
    std::uint32_t c = ring_.binom(static_cast<long>(m_ - i + r), static_cast<unsigned>(r));
    mat[i - r][i] = c;
  }
  return mat;
}

FpMatrix WeylModule::f_matrix(unsigned long s) const {
  FpMatrix mat = zero_matrix(dim());
  for (unsigned i = 0; i < dim(); ++i) {
    if (i + s > m_) continue;
    std::uint32_t c = ring_.binom(static_cast<long>(i + s), static_cast<unsigned>(s));
    mat[i + s][i] = c;
  }
  return mat;
}

FpMatrix WeylModule::h_matrix(unsigned long b) const {
  FpMatrix mat = zero_matrix(dim());
  for (unsigned i = 0; i < dim(); ++i)
    mat[i][i] = ring_.binom(weight(i), static_cast<unsigned>(b));
  return mat;
}

std::vector<std::uint32_t> WeylModule::apply(const Element<RingFp>& x,
                                             const std::vector<std::uint32_t>& v) const {
  if (!(x.ring() == ring_))
    throw std::invalid_argument("WeylModule::apply: coefficient prime mismatch");
  if (v.size() != dim())
    throw std::invalid_argument("WeylModule::apply: vector dimension mismatch");
  unsigned long p = ring_.p();
  std::vector<std::uint32_t> out(dim(), 0);
  for (const auto& [key, coef] : x.terms()) {
    Monomial mono = Monomial::from_key(key);
    for (unsigned j = 0; j < dim(); ++j) {
      if (v[j] == 0) continue;
      // monomial f^(a) binom(h,b) e^(c): the e-part acts first
      if (j < mono.c) continue;
      unsigned mid = j - mono.c;
      if (mid + mono.a > m_) continue;
      std::uint64_t val = coef;
      val = val * ring_.binom(static_cast<long>(m_ - j + mono.c), mono.c) % p;
      val = val * ring_.binom(weight(mid), mono.b) % p;
      val = val * ring_.binom(static_cast<long>(mid + mono.a), mono.a) % p;
      val = val * v[j] % p;
      unsigned i = mid + mono.a;
      out[i] = static_cast<std::uint32_t>((out[i] + val) % p);
    }
  }
  return out;
}

FpMatrix WeylModule::matrix(const Element<RingFp>& x) const {
  FpMatrix mat = zero_matrix(dim());
  std::vector<std::uint32_t> basis(dim(), 0);
  for (unsigned j = 0; j < dim(); ++j) {
    basis[j] = 1;
    std::vector<std::uint32_t> img = apply(x, basis);
    basis[j] = 0;
    for (unsigned i = 0; i < dim(); ++i) mat[i][j] = img[i];
  }
  return mat;
}

void WeylModule::validate() const {
  unsigned long p = ring_.p();

  // h-eigenvalues on the binomial generator of degree one.
  FpMatrix h1 = h_matrix(1);
  for (unsigned i = 0; i < dim(); ++i)
    for (unsigned j = 0; j < dim(); ++j) {
      std::uint32_t expect = i == j ? ring_.from_long(weight(i)) : 0;
      if (h1[i][j] != expect)
        throw std::logic_error("WeylModule: binom(h,1) eigenvalue table broken");
    }

  // Operator form of the divided-power straightening: composing the e- and
  // f-tables must match the table of the algebra product.
  for (unsigned long r = 0; r <= p; ++r)
    for (unsigned long s = 0; s <= p; ++s) {
      Element<RingFp> er = Element<RingFp>::monomial(
          ring_, Monomial{0, 0, static_cast<std::uint32_t>(r)});
      Element<RingFp> fs = Element<RingFp>::monomial(
          ring_, Monomial{static_cast<std::uint32_t>(s), 0, 0});
      FpMatrix lhs = matmul(e_matrix(r), f_matrix(s), p);
      FpMatrix rhs = matrix(mul(er, fs));
      if (lhs != rhs)
        throw std::logic_error("WeylModule: straightening identity fails as operators");
    }

  // Structural relations at levels 0 and 1.
  auto pk = [&](unsigned k) {
    unsigned long v = 1;
    for (unsigned i = 0; i < k; ++i) v *= p;
    return v;
  };
  for (unsigned k = 0; k <= 1; ++k) {
    FpMatrix E = e_matrix(pk(k)), F = f_matrix(pk(k));
    FpMatrix X = matcomm(E, F, p);
    if (matcomm(X, E, p) != matscale(ring_.from_long(2), E, p))
      throw std::logic_error("WeylModule: relation 1 (e side) fails as operators");
    if (matcomm(X, F, p) != matscale(ring_.from_long(-2), F, p))
      throw std::logic_error("WeylModule: relation 1 (f side) fails as operators");
    if (!mat_is_zero(matpow(E, static_cast<unsigned>(p), p)))
      throw std::logic_error("WeylModule: relation 5 (e side) fails as operators");
    if (!mat_is_zero(matpow(F, static_cast<unsigned>(p), p)))
      throw std::logic_error("WeylModule: relation 5 (f side) fails as operators");
    if (matpow(X, static_cast<unsigned>(p), p) != X)
      throw std::logic_error("WeylModule: relation 6 fails as operators");
  }
  struct KN {
    unsigned k, n;
  };
  for (KN kn : {KN{0, 1}, KN{0, 2}, KN{1, 1}}) {
    FpMatrix Elo = e_matrix(pk(kn.k)), Flo = f_matrix(pk(kn.k));
    FpMatrix Ehi = e_matrix(pk(kn.k + kn.n)), Fhi = f_matrix(pk(kn.k + kn.n));
    FpMatrix X = matcomm(Elo, Flo, p);
    if (!mat_is_zero(matcomm(X, Ehi, p)) || !mat_is_zero(matcomm(X, Fhi, p)))
      throw std::logic_error("WeylModule: relation 2 fails as operators");
    if (!mat_is_zero(matcomm(Elo, Ehi, p)) || !mat_is_zero(matcomm(Flo, Fhi, p)))
      throw std::logic_error("WeylModule: relation 3 fails as operators");

    FpMatrix xp1 = matadd(X, identity_matrix(dim()), p);
    std::uint32_t sign = ring_.from_long(kn.n % 2 == 0 ? 1 : -1);
    FpMatrix fstr = identity_matrix(dim());
    for (unsigned i = kn.k; i < kn.k + kn.n; ++i)
      fstr = matmul(fstr, matpow(f_matrix(pk(i)), static_cast<unsigned>(p - 1), p), p);
    if (matcomm(Elo, Fhi, p) != matscale(sign, matmul(fstr, xp1, p), p))
      throw std::logic_error("WeylModule: relation 4 (f string) fails as operators");
    FpMatrix estr = identity_matrix(dim());
    for (unsigned i = kn.k; i < kn.k + kn.n; ++i)
      estr = matmul(estr, matpow(e_matrix(pk(i)), static_cast<unsigned>(p - 1), p), p);
    if (matcomm(Ehi, Flo, p) != matscale(sign, matmul(xp1, estr, p), p))
      throw std::logic_error("WeylModule: relation 4 (e string) fails as operators");
  }
}

// --- Subspaces and the lifted action ----------------------------------------

Subspace project_r(const WeylModule& V, std::uint32_t r) {
  Subspace s;
  s.m = V.highest_weight();
  s.p = V.p();
  s.r = r % static_cast<std::uint32_t>(V.p());
  for (unsigned i = 0; i < V.dim(); ++i)
    if (V.ring().from_long(V.weight(i)) == s.r) s.indices.push_back(i);
  return s;
}

std::vector<std::uint32_t> theta_action(const Element<RingFp>& x, const WeylModule& V,
                                        std::uint32_t r, const std::vector<std::uint32_t>& v,
                                        SplittingContext& ctx) {
  if (!(ctx.ring() == V.ring()))
    throw std::invalid_argument("theta_action: context prime mismatch");
  if (v.size() != V.dim())
    throw std::invalid_argument("theta_action: vector dimension mismatch");
  std::uint32_t rr = r % static_cast<std::uint32_t>(V.p());
  for (unsigned i = 0; i < V.dim(); ++i)
    if (v[i] != 0 && V.ring().from_long(V.weight(i)) != rr)
      throw std::invalid_argument("theta_action: vector leaves the residue subspace");
  Element<RingFp> tx = ctx.theta(x, window_of(x, V.p()));
  std::vector<std::uint32_t> out = V.apply(tx, v);
  for (unsigned i = 0; i < V.dim(); ++i)
    if (out[i] != 0 && V.ring().from_long(V.weight(i)) != rr)
      throw std::logic_error("theta_action: image leaves the residue subspace");
  return out;
}

std::vector<std::uint32_t> theta_action(const Element<RingFp>& x, const WeylModule& V,
                                        std::uint32_t r, const std::vector<std::uint32_t>& v) {
  SplittingContext ctx(V.p());
  return theta_action(x, V, r, v, ctx);
}

bool frobenius_twist_recovery(const WeylModule& W) {
  const RingFp& ring = W.ring();
  unsigned long p = ring.p();
  SplittingContext ctx(p);

  // Under the twisted action x |-> Fr(x), the degree-one binomial acts by
  // zero, so every twisted weight is divisible by p and the residue-zero
  // subspace is the whole module.
  Element<RingFp> h1 = Element<RingFp>::monomial(ring, Monomial{0, 1, 0});
  if (!mat_is_zero(W.matrix(frobenius(h1)))) return false;

  // Generators whose lifted action must reproduce the original tables.
  std::vector<Element<RingFp>> gens;
  for (unsigned long q = 1; q <= std::max<unsigned long>(W.highest_weight(), 1); q *= p) {
    gens.push_back(Element<RingFp>::monomial(ring, Monomial{0, 0, static_cast<std::uint32_t>(q)}));
    gens.push_back(Element<RingFp>::monomial(ring, Monomial{static_cast<std::uint32_t>(q), 0, 0}));
  }
  for (unsigned long b = 1; b <= std::max<unsigned long>(W.highest_weight(), 1); ++b)
    gens.push_back(Element<RingFp>::monomial(ring, Monomial{0, static_cast<std::uint32_t>(b), 0}));

  for (const Element<RingFp>& g : gens) {
    Element<RingFp> lifted = ctx.theta(g, window_of(g, p));
    if (!(W.matrix(frobenius(lifted)) == W.matrix(g))) return false;
  }
  return true;
}

// --- Global operator checks --------------------------------------------------

bool casimir_scalar_check(const WeylModule& W) {
  Element<RingFp> c = casimir(W.ring());
  long scalar = (static_cast<long>(W.highest_weight()) + 1) *
                (static_cast<long>(W.highest_weight()) + 1);
  FpMatrix expect = matscale(W.ring().from_long(scalar), identity_matrix(W.dim()), W.p());
  return W.matrix(c) == expect;
}

bool t1_idempotent_check(const WeylModule& W) {
  const RingFp& ring = W.ring();
  FpMatrix T = W.matrix(compute_t(1, ring));
  if (matmul(T, T, W.p()) != T) return false;
  // t_1 has adjoint weight zero, so it must preserve each residue block.
  for (unsigned i = 0; i < W.dim(); ++i)
    for (unsigned j = 0; j < W.dim(); ++j)
      if (T[i][j] != 0 &&
          ring.from_long(W.weight(i)) != ring.from_long(W.weight(j)))
        return false;
  return true;
}

}  // namespace sl2dist
