#include "gralg/battery.hpp"
#include "gralg/catalog.hpp"

#include <doctest.h>

#include <set>

using namespace gralg;

namespace {

// Doubles the structure constant of (e12,0)(e21,0) wherever that product exists.
GradedAlgebra corrupted(const std::string& spec)
{
  GradedAlgebra a = catalog_algebra(spec);
  if (!a.index_of("(e12,0)") || !a.index_of("(e21,0)"))
    return a;
  auto sm = a.structure();
  const auto i = *a.index_of("(e12,0)");
  const auto j = *a.index_of("(e21,0)");
  sm[{i, j}] = scale(Rational(2), sm[{i, j}]);
  return GradedAlgebra(a.name(), a.semigroup(), a.labels(), a.degrees(), sm, a.declared_unit());
}

} // namespace

TEST_SUITE("battery")
{
  TEST_CASE("check registry")
  {
    const auto& checks = battery_checks();
    CHECK(checks.size() == 13);
    std::set<std::string> ids;
    for (const auto& c : checks) {
      ids.insert(c.id);
      CHECK_FALSE(c.topics.empty());
      CHECK(c.budget > 0);
    }
    CHECK(ids.size() == 13);
  }

  TEST_CASE("filtering by topic and id")
  {
    auto ctx = default_battery_context();
    const auto poly = run_battery(ctx, {"theta"});
    REQUIRE(poly.size() == 1);
    CHECK(poly[0].id == "C10");
    const auto by_id = run_battery(ctx, {"C1", "C11"});
    REQUIRE(by_id.size() == 2);
    CHECK(by_id[0].pass);
    CHECK(by_id[1].pass);
    CHECK(run_battery(ctx, {"no-such-topic"}).empty());
  }

  TEST_CASE("a corrupted catalog makes checks fail")
  {
    BatteryContext ctx = default_battery_context();
    ctx.catalog = corrupted;
    const auto results = run_battery(ctx, {"C2", "C5", "C10"});
    REQUIRE(results.size() == 3);
    std::size_t failures = 0;
    for (const auto& r : results)
      failures += r.pass ? 0 : 1;
    CHECK(failures >= 1);
  }

  TEST_CASE("result formatting")
  {
    BatteryResult r;
    r.id = "C0";
    r.citation = "demo";
    r.pass = true;
    r.detail = "fine";
    r.seconds = 0.5;
    CHECK(format_result(r) == "PASS C0 [demo] fine (0.50 s)");
    r.pass = false;
    r.within_budget = false;
    CHECK(format_result(r) == "FAIL C0 [demo] fine (0.50 s, over budget)");
  }
}
