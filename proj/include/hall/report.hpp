#pragma once

// Outcome of an identity or theorem check.

#include <chrono>
#include <string>
#include <vector>

#include "json.hpp"

namespace hall {

struct VerificationReport {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  bool pass = true;
  std::string lhs;
  std::string rhs;
  double elapsed_ms = 0;
  std::vector<std::string> failures;

  void fail(std::string why) {
    pass = false;
    failures.push_back(std::move(why));
  }
  /// Folds a sub-check into this one; failures are prefixed with its name.
  void absorb(const VerificationReport& sub) {
    for (const auto& f : sub.failures) failures.push_back(sub.check + ": " + f);
    if (!sub.pass) pass = false;
  }

  nlohmann::json to_json(bool with_timing = true) const {
    nlohmann::json j;
    j["check"] = check;
    j["params"] = params;
    j["status"] = pass ? "pass" : "fail";
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    if (with_timing) j["elapsed_ms"] = static_cast<long long>(elapsed_ms);
    if (!failures.empty()) j["failures"] = failures;
    return j;
  }
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace hall
