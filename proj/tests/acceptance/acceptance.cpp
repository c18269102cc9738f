// Runs the twelve acceptance criteria with their default plans and prints one
// PASS/FAIL line each. Optional argument: path for the full JSON report.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>

#include "charkit/verify/suites.hpp"

using namespace charkit;

namespace {

struct Criterion {
  int id;
  const char* title;
  const char* suite;
  double budget_seconds;
  // Extra conditions on the suite's recorded facts; returns a reason on failure.
  std::function<std::string(const SuiteResult&)> facts_check;
};

std::string expect_sets(const SuiteResult& r, const char* shape, std::uint64_t sets) {
  const Json& f = r.facts[shape];
  return f.value("sets", std::uint64_t{0}) == sets ? "" : std::string(shape) + " ran " + f["sets"].dump() + " sets";
}

}  // namespace

int main(int argc, char** argv) {
  const Json self_dual_22 = Json::parse(R"([{"kind":"empty"},{"kind":"lagrangian","basis":[[1,1]],"lambda":"1/2"}])");
  const Json only_empty = Json::parse(R"([{"kind":"empty"}])");

  const std::vector<Criterion> criteria = {
      {1, "staircase example: cbw 3 on (0,1),(1,0),(1,1), closed-form reduced decomposition", "example", 1, {}},
      {2, "transform round trip on 300 functions, naive oracle on 100", "transform", 30,
       [](const SuiteResult& r) { return r.outcome.checks == 400 ? "" : "expected 400 checks"; }},
      {3, "Galois equivariance on 200 functions, p in {3,5,7}, d = 2", "galois", 60,
       [](const SuiteResult& r) { return r.outcome.checks == 200 ? "" : "expected 200 functions"; }},
      {4, "tomography round trip and corruption detection", "tomography", 30, {}},
      {5, "uncertainty inequality: all sets at (2,2), (2,3); 1000 random at (3,3)", "uncertainty", 120,
       [](const SuiteResult& r) {
         std::string why = expect_sets(r, "p=2,d=2", 15) + expect_sets(r, "p=2,d=3", 255) + expect_sets(r, "p=3,d=3", 1000);
         return why;
       }},
      {6, "dichotomy: every subset of Z_2^2 and Z_2^3", "dichotomy", 60,
       [](const SuiteResult& r) { return expect_sets(r, "p=2,d=2", 16) + expect_sets(r, "p=2,d=3", 256); }},
      {7, "equidistribution biconditional on 500 (f, V) pairs", "equidist", 120,
       [](const SuiteResult& r) { return r.facts.value("pairs", 0) == 500 ? "" : "expected 500 pairs"; }},
      {8, "self-dual sets: empty and span(1,1) at (2,2), only empty at (3,2), (2,3)", "selfdual", 120,
       [&](const SuiteResult& r) -> std::string {
         if (r.facts["p=2,d=2"]["self_dual"] != self_dual_22) return "wrong self-dual sets at (2,2)";
         if (r.facts["p=3,d=2"]["self_dual"] != only_empty) return "wrong self-dual sets at (3,2)";
         if (r.facts["p=2,d=3"]["self_dual"] != only_empty) return "wrong self-dual sets at (2,3)";
         return "";
       }},
      {9, "eigenfunction pairs for every subspace and 20 affine cases", "eigen", 60, {}},
      {10, "paraboloid: good slice differences on 100 functions at p = 5, d = 3", "paraboloid", 120, {}},
      {11, "spheres: equal counts, equidistribution, L+/L- unions at p = 5", "spheres", 120,
       [](const SuiteResult& r) {
         return r.facts["p=5,d=2"].contains("indicator_cases") ? "" : "indicator cases missing at p = 5";
       }},
      {12, "Z_4^2: units, |H_v|, line sizes, 100 multiscale round trips", "zpl", 60, {}},
  };

  Json report = Json::array();
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string why;
    SuiteResult r{c.suite, {}, Json::object()};
    try {
      r = run_suite(c.suite, SuiteConfig{}).front();
    } catch (const std::exception& e) {
      why = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (why.empty() && !r.ok()) why = r.outcome.failures.empty() ? "check failed" : r.outcome.failures.front();
    if (why.empty() && c.facts_check) why = c.facts_check(r);
    if (why.empty() && seconds > c.budget_seconds) why = "exceeded the time budget";
    failed += !why.empty();

    char line[256];
    std::snprintf(line, sizeof line, "%s %2d %s (%llu/%llu checks, %.2fs)", why.empty() ? "PASS" : "FAIL", c.id, c.title,
                  static_cast<unsigned long long>(r.outcome.passed), static_cast<unsigned long long>(r.outcome.checks),
                  seconds);
    std::cout << line;
    if (!why.empty()) std::cout << ": " << why;
    std::cout << std::endl;
    Json j = to_json(r);
    j["criterion"] = c.id;
    report.push_back(std::move(j));
  }
  if (argc > 1) std::ofstream(argv[1]) << report.dump(2) << "\n";
  return failed ? 1 : 0;
}
