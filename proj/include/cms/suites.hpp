#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cms/partition.hpp"
#include "cms/ratfun.hpp"
#include "cms/report.hpp"
#include "cms/rootsys.hpp"

namespace cms {

/// Bad suite/object name or inconsistent flags.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A request the library does not cover (for example integrals of the
/// exceptional systems).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SuiteOptions {
  Family family = Family::A;
  int n = 1, m = 1;
  std::optional<int> pmax, qmax, p, N;
  std::optional<Partition> lambda;
  Model model = Model::Geometric;
  std::optional<Scalar> pin_k;
};

/// "main-identity", "gauge", "commute", ...
std::vector<std::string> suite_names();
/// Runs a suite; claims are evaluated on the worker pool (see set_jobs) and
/// listed in a fixed order. Throws UsageError or UnsupportedError.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);

/// "integral", "hc-image", "super-jack", ...
std::vector<std::string> object_names();
/// Canonical rendering of a computed object.
std::string compute_object(const std::string& name, const SuiteOptions& opts);

/// Parses "a/b" or an integer.
Scalar parse_rational(const std::string& s);

/// The system selected by the options, with k pinned when requested.
std::shared_ptr<GRS> selected_system(const SuiteOptions& opts);

}  // namespace cms
