#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace misere {

using Params = std::map<std::string, std::int64_t>;

/// Structured result of one verification run.
struct Report {
  enum class Status { Pass, Fail, Unknown };

  struct Counterexample {
    std::string g;
    std::optional<std::string> h;
    std::optional<std::string> x;
    std::string expected;
    std::string got;
  };

  std::string theorem;
  std::string anchor;
  Params params;
  Status status = Status::Pass;
  std::int64_t instances_checked = 0;
  std::vector<Counterexample> counterexamples;
  std::int64_t elapsed_ms = 0;
};

inline const char* status_name(Report::Status s) {
  switch (s) {
    case Report::Status::Pass: return "pass";
    case Report::Status::Fail: return "fail";
    case Report::Status::Unknown: return "unknown";
  }
  return "?";
}

}  // namespace misere
