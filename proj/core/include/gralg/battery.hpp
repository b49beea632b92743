#pragma once

#include "gralg/algebra.hpp"
#include "gralg/parallel.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gralg {

using CatalogProvider = std::function<GradedAlgebra(const std::string& spec)>;

struct BatteryContext {
  CatalogProvider catalog;
  std::uint64_t seed = 0;
  const WorkerPool* pool = nullptr;
};

BatteryContext default_battery_context();

struct CheckOutcome {
  bool pass = false;
  std::string detail;
};

struct BatteryCheck {
  std::string id;
  std::vector<std::string> topics;
  std::string citation;
  // Wall-clock budget in seconds.
  double budget = 0;
  std::function<CheckOutcome(const BatteryContext&)> run;
};

const std::vector<BatteryCheck>& battery_checks();

struct BatteryResult {
  std::string id;
  std::string citation;
  bool pass = false;
  bool within_budget = true;
  double seconds = 0;
  std::string detail;
};

// Runs the checks whose id or one of whose topics appears in filter (all checks when filter is empty).
// Exceptions inside a check are reported as failures.
std::vector<BatteryResult> run_battery(const BatteryContext& ctx, const std::vector<std::string>& filter = {});

// "PASS C1 [citation] detail (0.01 s)"
std::string format_result(const BatteryResult& r);

} // namespace gralg
