#pragma once

// The property suites behind `verify`: every module's invariants at
// configurable bounds, seeded and deterministic, with the first
// counterexample of a failing item carried in the report.  The negative
// controls (least-significant action encoding, skyscraper sheaf reading)
// can be swapped in to demonstrate that the laws really falsify them.

#include <functional>
#include <string>
#include <vector>

#include "catdiv/json_io.hpp"
#include "catdiv/rng.hpp"
#include "catdiv/verify_items.hpp"

namespace catdiv::verify {

inline std::vector<std::string> suite_names() {
  return {"burnside", "cantor", "loccat", "sheaf", "cross"};
}

inline SuiteReport run_suite(const std::string& name, const Config& cfg) {
  SuiteReport report;
  report.suite = name;
  report.config = cfg;
  if (name == "burnside")
    detail::run_burnside(cfg, report);
  else if (name == "cantor")
    detail::run_cantor(cfg, report);
  else if (name == "loccat")
    detail::run_loccat(cfg, report);
  else if (name == "sheaf")
    detail::run_sheaf(cfg, report);
  else if (name == "cross")
    detail::run_cross(cfg, report);
  else
    throw std::invalid_argument("unknown suite: " + name);
  report.sort_items();
  return report;
}

}  // namespace catdiv::verify
