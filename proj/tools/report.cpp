#include "report.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <mutex>
#include <thread>

namespace sl2dist {

std::string CheckRecord::record_line() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["params"] = params;
  j["verdict"] = pass ? "pass" : "fail";
  if (!pass) {
    nlohmann::ordered_json w;
    if (!detail.empty()) w["detail"] = detail;
    if (!witness_json.empty()) {
      auto parsed = nlohmann::json::parse(witness_json, nullptr, false);
      w["element"] = parsed.is_discarded() ? nlohmann::json(witness_json)
                                           : nlohmann::json(parsed);
    }
    j["witness"] = w;
  }
  return j.dump();
}

std::string CheckRecord::text_line() const {
  std::string line = pass ? "[PASS] " : "[FAIL] ";
  line += suite;
  for (const auto& [key, value] : params.items()) {
    line += " " + key + "=";
    line += value.is_string() ? value.get<std::string>() : value.dump();
  }
  if (!pass && !detail.empty()) line += ": " + detail;
  if (!pass && !witness_json.empty()) line += "\n  witness: " + witness_json;
  return line;
}

RunSummary run_tasks(const std::vector<Task>& tasks, unsigned jobs,
                     double time_budget,
                     const std::function<void(const CheckRecord&)>& emit) {
  const std::size_t n = tasks.size();
  if (jobs == 0) jobs = 1;
  const auto start = std::chrono::steady_clock::now();
  auto out_of_time = [&] {
    if (time_budget <= 0) return false;
    std::chrono::duration<double> used = std::chrono::steady_clock::now() - start;
    return used.count() >= time_budget;
  };

  std::vector<CheckRecord> results(n);
  std::vector<char> done(n, 0);
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::condition_variable cv;

  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      CheckRecord r = tasks[i].seed;
      if (out_of_time()) {
        r.pass = false;
        r.detail = "skipped: time budget exhausted";
      } else {
        try {
          r = tasks[i].run(std::move(r));
        } catch (const std::exception& e) {
          r.pass = false;
          r.detail = std::string("exception: ") + e.what();
        }
      }
      std::lock_guard<std::mutex> lock(mu);
      results[i] = std::move(r);
      done[i] = 1;
      cv.notify_all();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);

  RunSummary summary;
  summary.total = n;
  {
    std::unique_lock<std::mutex> lock(mu);
    for (std::size_t i = 0; i < n; ++i) {
      cv.wait(lock, [&] { return done[i] != 0; });
      const CheckRecord& r = results[i];
      if (r.pass)
        ++summary.passed;
      else if (r.detail.rfind("skipped:", 0) == 0)
        ++summary.skipped;
      emit(r);
    }
  }
  for (auto& t : pool) t.join();
  return summary;
}

}  // namespace sl2dist
