#ifndef SL2DIST_TOOLS_REPORT_HPP
#define SL2DIST_TOOLS_REPORT_HPP

// Check records and the worker pool that produces them.  Records are stable
// across runs: they carry no timing, only {suite, params, verdict, witness}.

#include <json.hpp>

#include <functional>
#include <string>
#include <vector>

namespace sl2dist {

struct CheckRecord {
  std::string suite;
  nlohmann::ordered_json params;  // insertion-ordered for stable output
  bool pass = false;
  std::string detail;        // short failure explanation, empty on pass
  std::string witness_json;  // serialized counterexample, empty if none

  std::string record_line() const;  // one JSON object, no trailing newline
  std::string text_line() const;    // "[PASS] suite k=v ..." style
};

// A unit of work: `seed` carries the suite and params up front so a skipped
// task still produces a well-formed failing record; `run` fills in the
// verdict.
struct Task {
  CheckRecord seed;
  std::function<CheckRecord(CheckRecord)> run;
};

struct RunSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t skipped = 0;  // counted among the failures
  bool all_pass() const { return passed == total; }
};

// Execute tasks on `jobs` workers, streaming records in task order through
// `emit`.  A task that throws fails with the exception text as detail.  Once
// `time_budget` seconds have elapsed, tasks not yet started are emitted as
// failing "skipped" records, so a truncated run never reports success.
RunSummary run_tasks(const std::vector<Task>& tasks, unsigned jobs,
                     double time_budget,
                     const std::function<void(const CheckRecord&)>& emit);

}  // namespace sl2dist

#endif
