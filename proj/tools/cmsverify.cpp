#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "cms/parallel.hpp"
#include "cms/suites.hpp"

namespace {

enum Exit { kPass = 0, kClaimFailed = 1, kUsage = 2, kUnsupported = 3 };

struct Flags {
  std::string system = "A";
  std::string model = "trig";
  std::string pin_k;
  std::string lambda;
  std::string out;
  int n = 1, m = 1;
  int pmax = 0, qmax = 0, p = 0, N = 0;
  int jobs = 0;
  bool timing = false;
};

void add_common(CLI::App* app, Flags& f) {
  app->add_option("--system", f.system, "A, BC, B, C, C0, D, AB13, G12 or D21")
      ->check(CLI::IsMember({"A", "BC", "B", "C", "C0", "D", "AB13", "G12", "D21"}));
  app->add_option("--n", f.n, "size of the first block of coordinates")->check(CLI::NonNegativeNumber);
  app->add_option("--m", f.m, "size of the second block of coordinates")->check(CLI::NonNegativeNumber);
  app->add_option("--pmax", f.pmax, "largest integral order")->check(CLI::PositiveNumber);
  app->add_option("--qmax", f.qmax, "largest second index for commutators")->check(CLI::PositiveNumber);
  app->add_option("--p", f.p, "order of the requested object")->check(CLI::PositiveNumber);
  app->add_option("--N", f.N, "largest degree")->check(CLI::NonNegativeNumber);
  app->add_option("--lambda", f.lambda, "partition such as 3,1,1");
  app->add_option("--model", f.model, "trig or rational")->check(CLI::IsMember({"trig", "rational"}));
  app->add_option("--pin-k", f.pin_k, "specialize k to a rational a/b");
  app->add_option("--jobs", f.jobs, "worker threads (default: hardware concurrency)")->check(CLI::NonNegativeNumber);
}

cms::SuiteOptions to_options(const Flags& f) {
  cms::SuiteOptions o;
  o.family = cms::parse_family(f.system);
  o.n = f.n;
  o.m = f.m;
  if (f.pmax) o.pmax = f.pmax;
  if (f.qmax) o.qmax = f.qmax;
  if (f.p) o.p = f.p;
  if (f.N) o.N = f.N;
  if (!f.lambda.empty()) {
    try {
      o.lambda = cms::Partition::parse(f.lambda);
    } catch (const std::exception&) {
      throw cms::UsageError("not a partition: " + f.lambda);
    }
  }
  o.model = f.model == "rational" ? cms::Model::Affine : cms::Model::Geometric;
  if (!f.pin_k.empty()) o.pin_k = cms::parse_rational(f.pin_k);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for deformed Calogero-Moser-Sutherland operators"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read options from a TOML/INI file ([verify] / [compute] sections)");
  Flags f;
  std::string suite, object;

  auto* verify = app.add_subcommand("verify", "run a verification suite and print a JSON report");
  verify->add_option("suite", suite, "suite name")->required();
  add_common(verify, f);
  verify->add_option("--out", f.out, "write the report to this file");
  verify->add_flag("--timing", f.timing, "include wall times in the report");

  auto* compute = app.add_subcommand("compute", "print a computed object");
  compute->add_option("object", object, "object name")->required();
  add_common(compute, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  cms::set_jobs(f.jobs > 0 ? f.jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency())));
  try {
    cms::SuiteOptions opts = to_options(f);
    if (verify->parsed()) {
      cms::SuiteReport report = cms::run_suite(suite, opts);
      std::string json = report.to_json(f.timing);
      if (f.out.empty()) {
        std::cout << json << "\n";
      } else {
        std::ofstream file(f.out);
        if (!file) throw cms::UsageError("cannot write " + f.out);
        file << json << "\n";
      }
      return report.passed() ? kPass : kClaimFailed;
    }
    std::cout << cms::compute_object(object, opts) << "\n";
    return kPass;
  } catch (const cms::UnsupportedError& e) {
    std::cerr << e.what() << "\n";
    return kUnsupported;
  } catch (const cms::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  }
}
