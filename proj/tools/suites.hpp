#ifndef SL2DIST_TOOLS_SUITES_HPP
#define SL2DIST_TOOLS_SUITES_HPP

// Verification suites: each one expands a RunConfig into a list of tasks
// driving the library's check routines.

#include "report.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sl2dist {

struct RunConfig {
  std::vector<unsigned long> plist{3, 5};
  unsigned kmax = 2;
  unsigned nmax = 2;
  bool h_range_set = false;
  long h_lo = 0, h_hi = 0;  // used only when h_range_set
  std::uint64_t seed = 0;

  // The sweep range for a given prime: the flag value, or [-2p^2, 2p^2].
  std::pair<long, long> h_range(unsigned long p) const;
};

// Throws std::invalid_argument when a prime is < 3 or composite.
void validate_config(const RunConfig& cfg);

const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown suite name.
std::vector<Task> make_suite(const std::string& name, const RunConfig& cfg);

}  // namespace sl2dist

#endif
