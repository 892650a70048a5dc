// Runs every acceptance criterion and prints one pass/fail line per criterion.
// Failing claims are listed on stderr.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "cms/lambda.hpp"
#include "cms/parallel.hpp"
#include "cms/suites.hpp"
#include "jack_oracle.hpp"
#include "partition_oracle.hpp"
#include "properties.hpp"

using namespace cms;

namespace {

struct Tally {
  int suites = 0, claims = 0, failed = 0;

  void add(const SuiteReport& r) {
    ++suites;
    for (const auto& c : r.claims) {
      if (c.status == Status::Reported) continue;
      ++claims;
      if (c.status == Status::Fail) {
        ++failed;
        std::cerr << "  " << r.suite << " " << r.system << " " << c.id << ": " << c.witness.substr(0, 200) << "\n";
      }
    }
  }
  void check(bool ok, const std::string& what) {
    ++claims;
    if (!ok) {
      ++failed;
      std::cerr << "  " << what << "\n";
    }
  }
  void run(const std::string& suite, SuiteOptions o) {
    try {
      add(run_suite(suite, o));
    } catch (const std::exception& e) {
      check(false, suite + ": " + e.what());
    }
  }
};

SuiteOptions system(Family f, int n = 0, int m = 0, Model model = Model::Geometric) {
  SuiteOptions o;
  o.family = f;
  o.n = n;
  o.m = m;
  o.model = model;
  return o;
}

std::vector<SuiteOptions> deformed_systems(Model model) {
  return {system(Family::A, 2, 2, model),  system(Family::A, 3, 2, model), system(Family::A, 3, 3, model),
          system(Family::BC, 1, 1, model), system(Family::BC, 2, 1, model), system(Family::G12, 0, 0, model),
          system(Family::AB13, 0, 0, model), system(Family::D21, 0, 0, model)};
}

SuiteOptions sizes(int n, int m, int N = 0) {
  SuiteOptions o;
  o.n = n;
  o.m = m;
  if (N) o.N = N;
  return o;
}

void criterion_1(Tally& t) {
  for (const auto& o : deformed_systems(Model::Geometric)) t.run("main-identity", o);
}

void criterion_2(Tally& t) {
  for (Model model : {Model::Geometric, Model::Affine})
    for (const auto& o : deformed_systems(model)) t.run("gauge", o);
}

void criterion_3(Tally& t) {
  for (Model model : {Model::Geometric, Model::Affine})
    for (auto o : {system(Family::A, 2, 1, model), system(Family::A, 2, 2, model), system(Family::BC, 1, 1, model)}) {
      o.pmax = 4;
      t.run("commute", o);
    }
}

void criterion_4(Tally& t) {
  for (auto o : {system(Family::A, 2, 2), system(Family::BC, 1, 1)}) {
    o.pmax = 3;
    t.run("commutator-relation", o);
  }
}

void criterion_5(Tally& t) {
  for (auto o : {system(Family::A, 2, 2), system(Family::A, 3, 2), system(Family::BC, 1, 1)}) {
    o.pmax = 5;
    t.run("hc", o);
  }
}

void criterion_6(Tally& t) {
  for (auto o : {system(Family::A, 2, 1), system(Family::A, 2, 2)}) {
    o.pmax = 6;
    t.run("bernoulli", o);
  }
}

void criterion_7(Tally& t) {
  for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {2, 2}}) t.run("dimensions", sizes(n, m, 6));
}

void criterion_8(Tally& t) {
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m) t.run("poincare", sizes(n, m, 10));
}

void criterion_9(Tally& t) {
  for (auto [n, m] : {std::pair{2, 1}, {1, 2}}) t.run("super-jack", sizes(n, m, 5));
  for (int N = 1; N <= 4; ++N)
    for (const auto& parts : oracle::all_partitions(N)) {
      SymFun j = jack_polynomial(Partition(parts));
      auto expect = oracle::jack_power_sums(parts);
      bool ok = true;
      for (const auto& rho : oracle::all_partitions(N)) {
        Scalar want = expect.count(rho) ? expect.at(rho) : Scalar(0);
        ok = ok && j.coefficient(power_sum_monomial(Partition(rho))) == want;
      }
      t.check(ok, "jack oracle mismatch at " + Partition(parts).str());
    }
}

void criterion_10(Tally& t) {
  for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {2, 2}}) t.run("solutions", sizes(n, m));
}

void criterion_11(Tally& t) { t.run("macdonald", SuiteOptions{}); }

void criterion_12(Tally& t) {
  using namespace cms::testing;
  for (auto [name, r] : {std::pair{"ring axioms", ring_axioms(1000, 12)},
                         {"normalization", normalization_idempotence(1000, 13)},
                         {"nullity + rank", nullity_rank(1000, 14)}}) {
    t.check(r.ok(), std::string(name) + ": " + r.first_failure);
    t.claims += r.instances - 1;
  }
}

}  // namespace

int main() {
  set_jobs(1);
  std::vector<std::function<void(Tally&)>> criteria = {criterion_1, criterion_2, criterion_3,  criterion_4,
                                                       criterion_5, criterion_6, criterion_7,  criterion_8,
                                                       criterion_9, criterion_10, criterion_11, criterion_12};
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Tally t;
    auto start = std::chrono::steady_clock::now();
    criteria[i](t);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = t.failed == 0 && t.claims > 0;
    if (!ok) ++failures;
    std::cout << "criterion " << i + 1 << ": " << (ok ? "pass" : "fail") << " (" << t.claims - t.failed << "/"
              << t.claims << " checks, " << static_cast<int>(secs) << "s)" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
