// Runs every verification check once and prints one PASS/FAIL line per criterion.
// Exits nonzero if any check fails or runs over its time budget.

#include "gralg/battery.hpp"

#include <cstdio>
#include <iostream>

int main()
{
  const gralg::BatteryContext ctx = gralg::default_battery_context();
  const auto results = gralg::run_battery(ctx);
  std::size_t passed = 0;
  for (const auto& r : results) {
    const bool ok = r.pass && r.within_budget;
    passed += ok ? 1 : 0;
    std::cout << gralg::format_result(r) << "\n";
  }
  std::cout << passed << "/" << results.size() << " criteria passed\n";
  return passed == results.size() && results.size() == gralg::battery_checks().size() ? 0 : 1;
}
