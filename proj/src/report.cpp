#include "cms/report.hpp"

#include <algorithm>

#include "json.hpp"

namespace cms {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Reported: return "reported";
  }
  return "?";
}

bool SuiteReport::passed() const {
  return std::none_of(claims.begin(), claims.end(), [](const Claim& c) { return c.status == Status::Fail; });
}

std::string SuiteReport::to_json(bool timing) const {
  // ordered_json keeps insertion order, so the layout is fixed
  nlohmann::ordered_json out;
  out["version"] = kReportVersion;
  out["suite"] = suite;
  out["system"] = system;
  auto list = nlohmann::ordered_json::array();
  for (const auto& c : claims) {
    nlohmann::ordered_json j;
    j["id"] = c.id;
    j["anchor"] = c.anchor;
    j["status"] = status_name(c.status);
    j["witness"] = c.witness;
    if (timing) j["wall_ms"] = static_cast<long long>(c.wall_ms);
    list.push_back(std::move(j));
  }
  out["claims"] = std::move(list);
  out["overall"] = passed() ? "pass" : "fail";
  return out.dump(2);
}

}  // namespace cms
