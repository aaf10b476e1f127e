#include "exprparse.hpp"
#include "report.hpp"
#include "suites.hpp"

#include <sl2dist/presentation.hpp>
#include <sl2dist/splitting.hpp>

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace sl2dist;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int cmd_mul(const std::string& lhs, const std::string& rhs,
            const std::string& ring_name, unsigned long p) {
  if (p != 0) {
    RingFp ring(p);
    Element<RingFp> prod = mul(parse_element(ring, lhs), parse_element(ring, rhs));
    std::cout << to_string(prod) << "\n";
  } else if (ring_name == "Z") {
    RingZ ring;
    Element<RingZ> prod = mul(parse_element(ring, lhs), parse_element(ring, rhs));
    std::cout << to_string(prod) << "\n";
  } else {
    throw CLI::ValidationError("--ring", "unknown ring '" + ring_name + "'");
  }
  return kExitPass;
}

int cmd_straighten(const std::string& text, unsigned long p) {
  Word w = parse_word(text);
  NormalCombination nc = straighten(w, p);
  SplittingContext ctx(p);
  bool ok = eval_normal(nc, ctx) == eval_word(w, ctx.ring());
  std::cout << nc.str() << " [cross-check: " << (ok ? "OK" : "FAILED") << "]\n";
  return ok ? kExitPass : kExitFail;
}

int cmd_verify(const std::string& suite, const RunConfig& cfg, bool records,
               unsigned jobs, double time_budget) {
  std::vector<Task> tasks = make_suite(suite, cfg);
  RunSummary s = run_tasks(tasks, jobs, time_budget, [&](const CheckRecord& r) {
    std::cout << (records ? r.record_line() : r.text_line()) << "\n";
  });
  if (!records) {
    std::cout << s.passed << "/" << s.total << " checks passed";
    if (s.skipped) std::cout << " (" << s.skipped << " skipped over budget)";
    std::cout << "\n";
  }
  return s.all_pass() ? kExitPass : kExitFail;
}

// "a:b" with optional signs; throws CLI::ValidationError on malformed input.
std::pair<long, long> parse_h_range(const std::string& text) {
  std::size_t colon = text.find(':', text.empty() ? 0 : 1);
  if (colon == std::string::npos || colon + 1 >= text.size())
    throw CLI::ValidationError("--h-range", "expected a:b, got '" + text + "'");
  try {
    std::size_t used = 0;
    long lo = std::stol(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("");
    std::string hi_text = text.substr(colon + 1);
    long hi = std::stol(hi_text, &used);
    if (used != hi_text.size()) throw std::invalid_argument("");
    return {lo, hi};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--h-range", "expected a:b, got '" + text + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the mod-p distribution algebra of SL2"};
  app.require_subcommand(1);

  // mul -----------------------------------------------------------------
  std::string mul_lhs, mul_rhs, mul_ring = "Z";
  unsigned long mul_p = 0;
  CLI::App* mul_cmd = app.add_subcommand(
      "mul", "Multiply two element expressions and print the normal form");
  mul_cmd->add_option("lhs", mul_lhs, "Left factor, e.g. \"e(2)\"")->required();
  mul_cmd->add_option("rhs", mul_rhs, "Right factor")->required();
  CLI::Option* ring_opt =
      mul_cmd->add_option("--ring", mul_ring, "Coefficient ring (Z)");
  mul_cmd->add_option("--p", mul_p, "Work mod the prime p instead of over Z")
      ->excludes(ring_opt);

  // straighten ----------------------------------------------------------
  std::string st_word;
  unsigned long st_p = 0;
  CLI::App* st_cmd = app.add_subcommand(
      "straighten",
      "Rewrite a generator word into the normal form of the presentation");
  st_cmd->add_option("word", st_word, "Letters like \"e0 f0\" or \"e1 f0\"")
      ->required();
  st_cmd->add_option("--p", st_p, "The prime")->required();

  // verify --------------------------------------------------------------
  std::string suite;
  RunConfig cfg;
  std::string h_range_text, format = "text";
  unsigned jobs = 1;
  double time_budget = 0;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run a verification suite");
  verify_cmd
      ->add_option("suite", suite,
                   "One of: relations, idempotent, recursion, orthogonality, "
                   "frobenius, theta, congruence, casimir, minpoly, reps")
      ->required();
  verify_cmd->add_option("--p", cfg.plist, "Primes to cover (default 3 5)");
  verify_cmd->add_option("--kmax", cfg.kmax, "Largest level k (default 2)");
  verify_cmd->add_option("--nmax", cfg.nmax, "Largest level gap n (default 2)");
  verify_cmd->add_option("--h-range", h_range_text,
                         "Integer sweep a:b (default -2p^2:2p^2)");
  verify_cmd->add_option("--seed", cfg.seed, "Seed for randomized checks");
  verify_cmd->add_option("--format", format, "Output format: text or records")
      ->check(CLI::IsMember({"text", "records"}));
  verify_cmd->add_option("--jobs", jobs, "Worker threads (default 1)");
  verify_cmd->add_option("--time-budget", time_budget,
                         "Seconds before remaining checks are skipped as "
                         "failures (default: no limit)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (mul_cmd->parsed()) {
      if (mul_p != 0) RingFp check_prime(mul_p);  // rejects non-primes
      return cmd_mul(mul_lhs, mul_rhs, mul_ring, mul_p);
    }
    if (st_cmd->parsed()) {
      RingFp check_prime(st_p);
      return cmd_straighten(st_word, st_p);
    }
    if (h_range_text.empty()) {
      cfg.h_range_set = false;
    } else {
      auto [lo, hi] = parse_h_range(h_range_text);
      cfg.h_range_set = true;
      cfg.h_lo = lo;
      cfg.h_hi = hi;
    }
    return cmd_verify(suite, cfg, format == "records", jobs, time_budget);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const ExprError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
