// Acceptance suite: one test per criterion, each printing a pass/fail line
// with its wall time.  Every bound and tolerance is pinned here; the
// checks are exact, so there are no tolerances to tune.

#include <catch2/catch_amalgamated.hpp>

#include <chrono>
#include <cstdio>
#include <string>

#include "catdiv/verify.hpp"

using namespace catdiv;
using verify::Config;
using verify::Status;
using verify::SuiteReport;

namespace {

struct Stopwatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

bool items_pass(const SuiteReport& report, const std::vector<std::string>& names,
                std::string& why) {
  for (const auto& name : names) {
    bool found = false;
    for (const auto& item : report.items) {
      if (item.name != name) continue;
      found = true;
      if (item.status != Status::pass) {
        why = name + " " + verify::status_name(item.status) +
              (item.detail.empty() ? "" : ": " + item.detail);
        if (!item.counterexample.is_null())
          why += " counterexample " + item.counterexample.dump();
        return false;
      }
    }
    if (!found) {
      why = name + " missing from report";
      return false;
    }
  }
  return true;
}

void report_line(int criterion, const std::string& label, bool pass, double secs,
                 double budget) {
  std::printf("[criterion %d] %s: %s (%.2fs, budget %.0fs)\n", criterion,
              label.c_str(), pass ? "PASS" : "FAIL", secs, budget);
  std::fflush(stdout);
}

}  // namespace

TEST_CASE("criterion 1: class group of the truncated presentation") {
  Stopwatch timer;
  PrimeSet S2({2});
  bool ok = true;
  std::string why;
  for (long long M = 2; M <= 256; M *= 2) {
    auto bound = SmoothNumber::make(S2, M);
    auto p = k0_presentation(S2, bound);
    if (!p.is_infinite_cyclic()) {
      ok = false;
      why = "presentation at bound " + std::to_string(M) + " is not infinite cyclic";
      break;
    }
    auto img = p.free_generator_image();
    if (!img || !(*img == SRational::reduced(1, bound) ||
                  *img == SRational::reduced(-1, bound))) {
      ok = false;
      why = "free generator image at bound " + std::to_string(M) + " is not 1/M";
      break;
    }
    // class map g_m -> 1/m, and the image subgroup is (1/M) Z: every class
    // is an integer multiple of the free generator image
    for (std::size_t i = 0; i < p.generators.size() && ok; ++i) {
      if (!(p.class_map[i] == SRational::reduced(1, p.generators[i]))) {
        ok = false;
        why = "class map deviates from 1/m";
      }
      Int ratio = M / p.generators[i].value();
      if (!(p.class_map[i] == SRational(ratio) * SRational::reduced(1, bound))) {
        ok = false;
        why = "class is not an integer multiple of 1/M";
      }
    }
    if (!ok) break;
  }
  double secs = timer.seconds();
  report_line(1, "class group is the localized integers at every bound", ok, secs, 1);
  INFO(why);
  REQUIRE(ok);
  REQUIRE(secs < 1.0);
}

TEST_CASE("criterion 2: dimension decides isomorphism") {
  Stopwatch timer;
  Config cfg;
  cfg.primes = {2, 3};
  cfg.pair_cases = 500;
  cfg.dim_bound = 8;
  cfg.level_bound = 36;
  cfg.only = {"dim-completeness"};
  auto report = verify::run_suite("loccat", cfg);
  std::string why;
  bool ok = items_pass(report, {"dim-completeness"}, why);
  double secs = timer.seconds();
  report_line(2, "500 seeded pairs: isomorphic exactly when dimensions agree", ok,
              secs, 30);
  INFO(why);
  REQUIRE(ok);
  REQUIRE(secs < 30.0);
}

TEST_CASE("criterion 3: burnside structure") {
  Stopwatch timer;
  Config cfg;
  cfg.primes = {2, 3};
  cfg.chain_bound = 48;
  cfg.entry_bound = 36;
  cfg.only = {"pmap-jmap-functoriality", "simplex-diamonds", "generator-span-products"};
  auto report = verify::run_suite("burnside", cfg);
  std::string why;
  bool ok = items_pass(
      report, {"pmap-jmap-functoriality", "simplex-diamonds", "generator-span-products"},
      why);
  double secs = timer.seconds();
  report_line(3, "map functoriality, simplex pullbacks, generator products", ok, secs,
              10);
  INFO(why);
  REQUIRE(ok);
  REQUIRE(secs < 10.0);
}

TEST_CASE("criterion 4: action laws with the negative control") {
  Stopwatch timer;
  Config cfg;
  cfg.primes = {2, 3};
  cfg.depth = 5;
  cfg.den_bound = 72;
  cfg.only = {"act-identity", "act-packed-model", "act-additivity", "act-freeness",
              "act-consistency", "act-lsf-control-fails"};
  auto report = verify::run_suite("cantor", cfg);
  std::string why;
  bool ok = items_pass(report,
                       {"act-identity", "act-packed-model", "act-additivity",
                        "act-freeness", "act-consistency", "act-lsf-control-fails"},
                       why);
  double secs = timer.seconds();
  report_line(4, "identity, additivity, freeness, consistency; control fails", ok,
              secs, 60);
  INFO(why);
  REQUIRE(ok);
  REQUIRE(secs < 60.0);
}

TEST_CASE("criterion 5: orbit criterion") {
  Stopwatch timer;
  Config cfg;
  cfg.primes = {2, 3};
  cfg.orbit_cases = 1000;
  cfg.only = {"orbit-criterion"};
  auto report = verify::run_suite("cantor", cfg);
  std::string why;
  bool ok = items_pass(report, {"orbit-criterion"}, why);
  double secs = timer.seconds();
  report_line(5, "1000 seeded pairs: witnesses verify and match the projections", ok,
              secs, 10);
  INFO(why);
  REQUIRE(ok);
  REQUIRE(secs < 10.0);
}

TEST_CASE("criterion 6: main-theorem shadow") {
  Stopwatch timer;
  Config cfg;
  cfg.primes = {2};
  cfg.psi_cases = 100;
  cfg.only = {"hom-agreement", "psi-composition", "k0-agreement"};
  auto cross = verify::run_suite("cross", cfg);
  cfg.only = {"dim-functor"};
  auto sheaf = verify::run_suite("sheaf", cfg);
  std::string why;
  bool ok = items_pass(cross, {"hom-agreement", "psi-composition", "k0-agreement"}, why) &&
            items_pass(sheaf, {"dim-functor"}, why);
  double secs = timer.seconds();
  report_line(6, "hom agreement on 36 pairs, functoriality, class agreement", ok, secs,
              120);
  INFO(why);
  REQUIRE(ok);
  REQUIRE(secs < 120.0);
}

TEST_CASE("criterion 7: sheaf and boolean axioms") {
  Stopwatch timer;
  Config cantor_cfg;
  cantor_cfg.primes = {2, 3};
  cantor_cfg.boolean_cases = 10000;
  cantor_cfg.only = {"clopen-boolean-laws", "translate-automorphism"};
  auto cantor_report = verify::run_suite("cantor", cantor_cfg);
  Config sheaf_cfg;
  sheaf_cfg.primes = {2};
  sheaf_cfg.clopen_depth = 3;
  sheaf_cfg.only = {"sheaf-gluing", "translate-laws"};
  auto sheaf_report = verify::run_suite("sheaf", sheaf_cfg);
  std::string why;
  bool ok =
      items_pass(cantor_report, {"clopen-boolean-laws", "translate-automorphism"}, why) &&
      items_pass(sheaf_report, {"sheaf-gluing", "translate-laws"}, why);
  double secs = timer.seconds();
  report_line(7, "boolean laws (10^4 cases), gluing, translate automorphism", ok, secs,
              30);
  INFO(why);
  REQUIRE(ok);
  REQUIRE(secs < 30.0);
}

TEST_CASE("criterion 8: refinement soundness and normal forms") {
  Stopwatch timer;
  Config cfg;
  cfg.primes = {2, 3};
  cfg.normalize_cases = 1000;
  cfg.only = {"refinement-soundness", "normalize"};
  auto report = verify::run_suite("loccat", cfg);
  std::string why;
  bool ok = items_pass(report, {"refinement-soundness", "normalize"}, why);
  double secs = timer.seconds();
  report_line(8, "refinements are isomorphisms; normalization is idempotent", ok, secs,
              30);
  INFO(why);
  REQUIRE(ok);
  REQUIRE(secs < 30.0);
}
