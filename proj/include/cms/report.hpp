#pragma once

#include <string>
#include <vector>

namespace cms {

/// Version of the JSON report layout.
inline constexpr const char* kReportVersion = "1";

/// pass / fail gate the overall status; reported entries are informational.
enum class Status { Pass, Fail, Reported };

const char* status_name(Status s);

struct Claim {
  std::string id;      // stable identifier, e.g. "commute[2,3]"
  std::string anchor;  // the statement being checked, in words
  Status status = Status::Pass;
  std::string witness;  // residue or computed value; always set on failure
  double wall_ms = 0;
};

struct SuiteReport {
  std::string suite;
  std::string system;
  std::vector<Claim> claims;

  /// True when no claim failed.
  bool passed() const;
  /// Deterministic JSON; wall times are included only when `timing` is set.
  std::string to_json(bool timing = false) const;
};

}  // namespace cms
