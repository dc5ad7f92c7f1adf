#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "schurpar/checked.hpp"

namespace schurpar {

struct Failure {
  nlohmann::json input;
  nlohmann::json expected;
  nlohmann::json actual;
};

struct VerificationReport {
  std::string suite;
  std::string range;
  bool passed = false;
  i64 checked = 0;
  std::vector<Failure> failures;
  std::vector<std::string> notes;

  void fail(nlohmann::json input, nlohmann::json expected, nlohmann::json actual) {
    failures.push_back({std::move(input), std::move(expected), std::move(actual)});
  }
  // status = pass iff no failures and something was checked.
  void finish() { passed = failures.empty() && checked > 0; }

  nlohmann::json to_json() const;
};

struct SuiteOptions {
  i64 limit = 0;  // 0: suite default
  std::uint64_t seed = 20240601;
  unsigned threads = 0;
  // congruence8 evaluates R(24n + offset, 5x^2+2xy+11y^2); anything but 11
  // is a fault injection.
  i64 congruence_offset = 11;
};

const std::vector<std::string>& suite_names();
i64 default_limit(std::string_view suite);

// Throws Error(Errc::unknown_suite) for unknown names and
// Error(Errc::invalid_argument) for limits outside a suite's cap.
VerificationReport run_suite(std::string_view name, const SuiteOptions& opts = {});

nlohmann::json reports_to_json(const std::vector<VerificationReport>& reports);

// Iterates u(0) = 2^(t0+1), v(0) = 0, u(n) = v(n-1), v(n) = 2u(n-1) + v(n-1)
// for n = 1..t-t0.
struct Claim2Result {
  int t0 = 0;
  int t = 0;
  std::vector<u64> u;
  std::vector<u64> v;
  // u(t-t0) = 2^(t0+1) (mod 2^(t0+3)), the printed closed form.
  bool closed_form_ok = false;
  // u(t-t0) = 2^(t0+2) (mod 2^(t0+3)) for t-t0 >= 2, 0 for t-t0 = 1,
  // 2^(t0+1) for t = t0: what the recurrence actually produces.
  bool observed_form_ok = false;
};

Claim2Result claim2_recurrence_sim(int t0, int t);

}  // namespace schurpar
