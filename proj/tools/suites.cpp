#include "suites.hpp"

#include <sl2dist/congruence.hpp>
#include <sl2dist/reps.hpp>
#include <sl2dist/serialize.hpp>
#include <sl2dist/splitting.hpp>

#include <memory>
#include <random>

namespace sl2dist {

namespace {

using nlohmann::ordered_json;

std::string range_str(long lo, long hi) {
  return std::to_string(lo) + ":" + std::to_string(hi);
}

CheckRecord seed_record(const std::string& suite, ordered_json params) {
  CheckRecord r;
  r.suite = suite;
  r.params = std::move(params);
  return r;
}

CheckRecord from_report(CheckRecord rec, const RelationReport& rep) {
  rec.pass = rep.pass;
  rec.detail = rep.detail;
  rec.witness_json = rep.witness_json;
  return rec;
}

CheckRecord from_bool(CheckRecord rec, bool ok, const std::string& what) {
  rec.pass = ok;
  if (!ok) rec.detail = what + " returned false";
  return rec;
}

Element<RingFp> random_h(const RingFp& ring, std::mt19937& rng, unsigned n,
                         unsigned nterms) {
  unsigned long q = 1;
  for (unsigned i = 0; i < n; ++i) q *= ring.p();
  std::uniform_int_distribution<std::uint32_t> didx(
      0, static_cast<std::uint32_t>(q - 1));
  std::uniform_int_distribution<std::uint32_t> dcoef(
      0, static_cast<std::uint32_t>(ring.p() - 1));
  Element<RingFp> out(ring);
  for (unsigned i = 0; i < nterms; ++i)
    out.add_term(Monomial{didx(rng), didx(rng), didx(rng)}, dcoef(rng));
  return out;
}

// Each prime gets one shared context so X/t/column caches are reused across
// tasks; the context locks internally.
using CtxPtr = std::shared_ptr<SplittingContext>;
CtxPtr make_ctx(unsigned long p) { return std::make_shared<SplittingContext>(p); }

std::vector<Task> relations_suite(const RunConfig& cfg) {
  std::vector<Task> tasks;
  for (unsigned long p : cfg.plist) {
    CtxPtr ctx = make_ctx(p);
    for (int id = 1; id <= 6; ++id) {
      bool gapped = id == 2 || id == 3 || id == 4;
      for (unsigned k = 0; k <= cfg.kmax; ++k) {
        for (unsigned n = gapped ? 1 : 0; n <= (gapped ? cfg.nmax : 0); ++n) {
          ordered_json params{{"id", id}, {"p", p}, {"k", k}};
          if (gapped) params["n"] = n;
          tasks.push_back({seed_record("relations", params),
                           [ctx, id, k, n](CheckRecord rec) {
                             return from_report(std::move(rec),
                                                verify_relation(*ctx, id, k, n));
                           }});
        }
      }
    }
  }
  return tasks;
}

std::vector<Task> idempotent_suite(const RunConfig& cfg) {
  std::vector<Task> tasks;
  for (unsigned long p : cfg.plist) {
    CtxPtr ctx = make_ctx(p);
    for (unsigned k = 0; k <= cfg.kmax; ++k)
      tasks.push_back({seed_record("idempotent", {{"p", p}, {"k", k}}),
                       [ctx, k](CheckRecord rec) {
                         return from_report(std::move(rec),
                                            verify_t_idempotent(*ctx, k));
                       }});
  }
  return tasks;
}

std::vector<Task> recursion_suite(const RunConfig& cfg) {
  std::vector<Task> tasks;
  for (unsigned long p : cfg.plist) {
    CtxPtr ctx = make_ctx(p);
    for (unsigned k = 1; k <= cfg.kmax; ++k)
      tasks.push_back({seed_record("recursion", {{"p", p}, {"k", k}}),
                       [ctx, k](CheckRecord rec) {
                         return from_report(std::move(rec),
                                            verify_t_recursion(*ctx, k));
                       }});
  }
  return tasks;
}

std::vector<Task> orthogonality_suite(const RunConfig& cfg) {
  std::vector<Task> tasks;
  for (unsigned long p : cfg.plist) {
    CtxPtr ctx = make_ctx(p);
    for (unsigned k = 1; k <= cfg.kmax; ++k)
      tasks.push_back({seed_record("orthogonality", {{"p", p}, {"k", k}}),
                       [ctx, k](CheckRecord rec) {
                         return from_report(std::move(rec),
                                            verify_orthogonality(*ctx, k));
                       }});
  }
  return tasks;
}

std::vector<Task> frobenius_suite(const RunConfig& cfg) {
  std::vector<Task> tasks;
  for (unsigned long p : cfg.plist) {
    CtxPtr ctx = make_ctx(p);
    // Exhaustive basis sweep of Fr(theta(x)) = x; H_2 is affordable for
    // p <= 5 (p^6 elements), larger primes sweep H_1.
    unsigned n = p <= 5 ? 2 : 1;
    std::size_t total = basis_Hn(p, n).size();
    std::size_t chunks = std::min<std::size_t>(8, total);
    for (std::size_t c = 0; c < chunks; ++c) {
      std::size_t lo = total * c / chunks, hi = total * (c + 1) / chunks;
      tasks.push_back(
          {seed_record("frobenius", {{"check", "fr_theta_id"},
                                     {"p", p},
                                     {"n", n},
                                     {"range", range_str(static_cast<long>(lo),
                                                         static_cast<long>(hi))}}),
           [ctx, p, n, lo, hi](CheckRecord rec) {
             std::vector<Monomial> basis = basis_Hn(p, n);
             for (std::size_t i = lo; i < hi; ++i) {
               Element<RingFp> x =
                   Element<RingFp>::monomial(ctx->ring(), basis[i]);
               if (!(ctx->frobenius_theta(x, n) == x)) {
                 rec.pass = false;
                 rec.detail = "Fr(theta(x)) != x at basis element " +
                              to_string(x);
                 return rec;
               }
             }
             rec.pass = true;
             return rec;
           }});
    }
  }
  return tasks;
}

std::vector<Task> theta_suite(const RunConfig& cfg) {
  std::vector<Task> tasks;
  for (unsigned long p : cfg.plist) {
    CtxPtr ctx = make_ctx(p);
    tasks.push_back({seed_record("theta", {{"check", "unital"}, {"p", p}}),
                     [ctx](CheckRecord rec) {
                       Element<RingFp> one = Element<RingFp>::unit(ctx->ring());
                       rec.pass = ctx->theta(one, 1) == one;
                       if (!rec.pass) rec.detail = "theta(1) != 1";
                       return rec;
                     }});
    tasks.push_back(
        {seed_record("theta", {{"check", "multiplicative"},
                               {"p", p},
                               {"pairs", 200},
                               {"seed", cfg.seed}}),
         [ctx, p, seed = cfg.seed](CheckRecord rec) {
           std::mt19937 rng(static_cast<std::uint32_t>(seed ^ (0x9e3779b9u * p)));
           for (int trial = 0; trial < 200; ++trial) {
             Element<RingFp> x = random_h(ctx->ring(), rng, 1, 4);
             Element<RingFp> y = random_h(ctx->ring(), rng, 1, 4);
             Element<RingFp> lhs = ctx->theta(mul(x, y), 1);
             Element<RingFp> rhs = mul(ctx->theta(x, 1), ctx->theta(y, 1));
             if (!(lhs == rhs)) {
               rec.pass = false;
               rec.detail = "theta(xy) != theta(x)theta(y) at trial " +
                            std::to_string(trial);
               rec.witness_json = element_to_json(sub(lhs, rhs));
               return rec;
             }
           }
           rec.pass = true;
           return rec;
         }});
    tasks.push_back(
        {seed_record("theta", {{"check", "section"},
                               {"p", p},
                               {"samples", 50},
                               {"seed", cfg.seed}}),
         [ctx, p, seed = cfg.seed](CheckRecord rec) {
           std::mt19937 rng(static_cast<std::uint32_t>(seed ^ (0x85ebca6bu * p)));
           for (int trial = 0; trial < 50; ++trial) {
             Element<RingFp> x = random_h(ctx->ring(), rng, 2, 6);
             if (!(ctx->frobenius_theta(x, 2) == x)) {
               rec.pass = false;
               rec.detail = "Fr(theta(x)) != x at trial " + std::to_string(trial);
               return rec;
             }
           }
           rec.pass = true;
           return rec;
         }});
  }
  return tasks;
}

std::vector<Task> congruence_suite(const RunConfig& cfg) {
  std::vector<Task> tasks;
  for (unsigned long p : cfg.plist) {
    auto [h_lo, h_hi] = cfg.h_range(p);
    for (long jt = 1; jt < static_cast<long>(p); ++jt) {
      tasks.push_back(
          {seed_record("congruence", {{"check", "r1"},
                                      {"p", p},
                                      {"jt", jt},
                                      {"h", range_str(h_lo, h_hi)}}),
           [p, jt, h_lo, h_hi](CheckRecord rec) {
             return from_bool(std::move(rec),
                              r1_congruence_check(p, jt, h_lo, h_hi),
                              "r1_congruence_check");
           }});
      tasks.push_back(
          {seed_record("congruence", {{"check", "phi_prime"},
                                      {"p", p},
                                      {"jt", jt},
                                      {"h", range_str(h_lo, h_hi)}}),
           [p, jt, h_lo, h_hi](CheckRecord rec) {
             for (long h = h_lo; h <= h_hi; ++h)
               if (!phi_prime_check(p, jt, h)) {
                 rec.pass = false;
                 rec.detail = "phi_prime_check failed at h=" + std::to_string(h);
                 return rec;
               }
             rec.pass = true;
             return rec;
           }});
      tasks.push_back(
          {seed_record("congruence",
                       {{"check", "r1_lift"}, {"p", p}, {"jt", jt}}),
           [p, jt](CheckRecord rec) {
             long span = 2 * static_cast<long>(p);
             bool up = r1_congruence_check(p, jt + static_cast<long>(p), -span, span);
             bool down = r1_congruence_check(p, jt - static_cast<long>(p), -span, span);
             return from_bool(std::move(rec), up && down,
                              "r1_congruence_check on lifted jt");
           }});
    }
    tasks.push_back(
        {seed_record("congruence", {{"check", "eigenvalue"}, {"p", p}}),
         [p](CheckRecord rec) {
           for (unsigned i = 0; i < p; ++i)
             for (long jt = 1; jt < static_cast<long>(p); ++jt)
               eigenvalue_check(p, i, jt);  // throws on any violation
           rec.pass = true;
           return rec;
         }});
    if (p == 3) {
      tasks.push_back(
          {seed_record("congruence",
                       {{"check", "wolstenholme_fails"}, {"p", p}, {"n", 2}}),
           [](CheckRecord rec) {
             rec.pass = !wolstenholme_check(2, 3);
             if (!rec.pass)
               rec.detail = "binom(6,3) = 2 mod 27 claimed to hold";
             return rec;
           }});
    } else {
      tasks.push_back(
          {seed_record("congruence",
                       {{"check", "wolstenholme"}, {"p", p}, {"nmax", 10}}),
           [p](CheckRecord rec) {
             for (unsigned long n = 1; n <= 10; ++n)
               if (!wolstenholme_check(n, p)) {
                 rec.pass = false;
                 rec.detail = "binom(np,p) != n mod p^3 at n=" + std::to_string(n);
                 return rec;
               }
             rec.pass = true;
             return rec;
           }});
    }
  }
  return tasks;
}

std::vector<Task> casimir_suite(const RunConfig& cfg) {
  std::vector<Task> tasks;
  for (unsigned long p : cfg.plist) {
    auto [h_lo, h_hi] = cfg.h_range(p);
    tasks.push_back({seed_record("casimir", {{"check", "identity"}, {"p", p}}),
                     [p](CheckRecord rec) {
                       casimir(RingFp(p));   // throws on failure
                       casimir(RingQp(p));
                       rec.pass = true;
                       return rec;
                     }});
    tasks.push_back(
        {seed_record("casimir", {{"check", "product_formula"}, {"p", p}}),
         [p](CheckRecord rec) {
           return from_bool(std::move(rec), product_formula_check(p),
                            "product_formula_check");
         }});
    tasks.push_back(
        {seed_record("casimir", {{"check", "q_integrality"},
                                 {"p", p},
                                 {"h", range_str(h_lo, h_hi)}}),
         [p, h_lo, h_hi](CheckRecord rec) {
           return from_bool(std::move(rec),
                            q_integrality_check(q_poly(p), p, h_lo, h_hi),
                            "q_integrality_check");
         }});
    tasks.push_back(
        {seed_record("casimir", {{"check", "q_image_4X1"}, {"p", p}}),
         [p](CheckRecord rec) {
           return from_bool(std::move(rec), q_image_is_4X1(q_poly(p), p),
                            "q_image_is_4X1");
         }});
    tasks.push_back(
        {seed_record("casimir", {{"check", "q_image_t1"}, {"p", p}}),
         [p](CheckRecord rec) {
           return from_bool(std::move(rec), q_image_gives_t1(q_poly(p), p),
                            "q_image_gives_t1");
         }});
  }
  return tasks;
}

std::vector<Task> minpoly_suite(const RunConfig& cfg) {
  std::vector<Task> tasks;
  for (unsigned long p : cfg.plist)
    tasks.push_back({seed_record("minpoly", {{"p", p}}),
                     [p](CheckRecord rec) {
                       return from_bool(std::move(rec), delta_minpoly_check(p),
                                        "delta_minpoly_check");
                     }});
  return tasks;
}

std::vector<Task> reps_suite(const RunConfig& cfg) {
  std::vector<Task> tasks;
  for (unsigned long p : cfg.plist) {
    for (unsigned m = 0; m <= 12; ++m) {
      tasks.push_back(
          {seed_record("reps", {{"p", p}, {"m", m}}),
           [p, m](CheckRecord rec) {
             WeylModule W(m, p);  // construction validates the relations
             if (!casimir_scalar_check(W)) {
               rec.pass = false;
               rec.detail = "casimir does not act by (m+1)^2";
               return rec;
             }
             if (!t1_idempotent_check(W)) {
               rec.pass = false;
               rec.detail = "t_1 does not act idempotently";
               return rec;
             }
             rec.pass = true;
             return rec;
           }});
    }
    for (unsigned m = 0; m <= 2; ++m)
      tasks.push_back(
          {seed_record("reps", {{"check", "twist"}, {"p", p}, {"m", m}}),
           [p, m](CheckRecord rec) {
             WeylModule W(m, p);
             return from_bool(std::move(rec), frobenius_twist_recovery(W),
                              "frobenius_twist_recovery");
           }});
  }
  return tasks;
}

}  // namespace

std::pair<long, long> RunConfig::h_range(unsigned long p) const {
  if (h_range_set) return {h_lo, h_hi};
  long lim = 2 * static_cast<long>(p) * static_cast<long>(p);
  return {-lim, lim};
}

void validate_config(const RunConfig& cfg) {
  if (cfg.plist.empty())
    throw std::invalid_argument("at least one prime is required");
  for (unsigned long p : cfg.plist) {
    if (p < 3) throw std::invalid_argument("p must be >= 3");
    for (unsigned long d = 2; d * d <= p; ++d)
      if (p % d == 0)
        throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  }
  if (cfg.h_range_set && cfg.h_lo > cfg.h_hi)
    throw std::invalid_argument("empty h-range");
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "relations", "idempotent", "recursion", "orthogonality", "frobenius",
      "theta",     "congruence", "casimir",   "minpoly",       "reps"};
  return names;
}

std::vector<Task> make_suite(const std::string& name, const RunConfig& cfg) {
  validate_config(cfg);
  if (name == "relations") return relations_suite(cfg);
  if (name == "idempotent") return idempotent_suite(cfg);
  if (name == "recursion") return recursion_suite(cfg);
  if (name == "orthogonality") return orthogonality_suite(cfg);
  if (name == "frobenius") return frobenius_suite(cfg);
  if (name == "theta") return theta_suite(cfg);
  if (name == "congruence") return congruence_suite(cfg);
  if (name == "casimir") return casimir_suite(cfg);
  if (name == "minpoly") return minpoly_suite(cfg);
  if (name == "reps") return reps_suite(cfg);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace sl2dist
