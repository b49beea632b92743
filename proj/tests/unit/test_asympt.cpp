#include "oracles.hpp"

#include "gralg/asympt.hpp"
#include "gralg/error.hpp"

#include <doctest.h>

#include <cmath>

using namespace gralg;

namespace {

double dist2(const std::vector<double>& a, const std::vector<double>& b)
{
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

// Random point of the lemma polytope: a sorted simplex point pushed into the constraint by moving mass to a_1.
std::vector<double> random_feasible(std::mt19937_64& rng, const Polytope& p)
{
  for (;;) {
    std::vector<double> x(p.q);
    std::exponential_distribution<double> e(1.0);
    double s = 0;
    for (auto& v : x)
      s += v = e(rng);
    for (auto& v : x)
      v /= s;
    std::sort(x.rbegin(), x.rend());
    if (is_feasible(p, x))
      return x;
  }
}

} // namespace

TEST_SUITE("asympt")
{
  TEST_CASE("phi values")
  {
    CHECK(phi({1, 0, 0}) == doctest::Approx(1.0));
    CHECK(phi({0.5, 0.5}) == doctest::Approx(2.0));
    for (int q = 1; q <= 9; ++q)
      CHECK(phi(std::vector<double>(q, 1.0 / q)) == doctest::Approx(q));
    CHECK_THROWS_AS(phi({1.5, -0.5}), Error);
  }

  TEST_CASE("closed-form maximum")
  {
    const double r2 = std::sqrt(2.0);
    CHECK(lemma_max_closed_form(7).value == doctest::Approx(4 + 2 * r2).epsilon(1e-14));
    CHECK(lemma_max_closed_form(6).value == doctest::Approx(3 + 2 * r2).epsilon(1e-14));
    const auto four = lemma_max_closed_form(4);
    CHECK(four.value == doctest::Approx(1 + 2 * r2).epsilon(1e-14));
    double s = 0;
    for (double x : four.point)
      s += x;
    CHECK(s == doctest::Approx(1.0));
    for (std::size_t q = 4; q <= 12; ++q) {
      const auto c = lemma_max_closed_form(q);
      CHECK(is_feasible(lemma_polytope(q), c.point, 1e-12));
      CHECK(phi(c.point) == doctest::Approx(c.value).epsilon(1e-12));
    }
    CHECK_THROWS_AS(lemma_polytope(3), Error);
  }

  TEST_CASE("numerical maximum matches the closed form")
  {
    for (std::size_t q = 4; q <= 10; ++q) {
      CAPTURE(q);
      const auto r = maximize_phi(lemma_polytope(q));
      CHECK(std::abs(r.value - lemma_max_closed_form(q).value) < 1e-9);
      CHECK(r.certified_gap <= 1e-9);
      CHECK(is_feasible(lemma_polytope(q), r.point, 1e-9));
    }
  }

  TEST_CASE("no sampled feasible point beats the closed form")
  {
    std::mt19937_64 rng(51);
    for (std::size_t q : {4, 6, 7}) {
      const auto p = lemma_polytope(q);
      const double best = lemma_max_closed_form(q).value;
      for (int i = 0; i < 2000; ++i)
        CHECK(phi(random_feasible(rng, p)) <= best + 1e-12);
    }
  }

  TEST_CASE("simplex presets")
  {
    const auto r = maximize_phi(simplex_polytope(5));
    CHECK(r.value == doctest::Approx(5.0).epsilon(1e-9));
    for (double x : r.point)
      CHECK(x == doctest::Approx(0.2).epsilon(1e-6));
    auto cut = simplex_polytope(4);
    cut.zero_coordinates = {2};
    CHECK(maximize_phi(cut).value == doctest::Approx(1.0).epsilon(1e-9));
  }

  TEST_CASE("projection properties")
  {
    std::mt19937_64 rng(52);
    std::normal_distribution<double> nd(0.2, 0.5);
    for (std::size_t q : {4, 5, 7}) {
      const auto p = lemma_polytope(q);
      for (int trial = 0; trial < 30; ++trial) {
        std::vector<double> x(q);
        for (auto& v : x)
          v = nd(rng);
        const auto y = project(p, x);
        CHECK(is_feasible(p, y, 1e-9));
        const auto yy = project(p, y);
        CHECK(dist2(y, yy) < 1e-18);
        for (int k = 0; k < 20; ++k)
          CHECK(dist2(x, y) <= dist2(x, random_feasible(rng, p)) + 1e-12);
      }
    }
  }

  TEST_CASE("discrete membership")
  {
    const auto p = lemma_polytope(7);
    CHECK(omega_n_membership(p, Partition({2, 1, 1, 1, 1, 1})));
    CHECK_FALSE(omega_n_membership(p, Partition({1, 1, 1, 1, 1, 1, 1, 1})));
    for (std::size_t n = 1; n <= 8; ++n) {
      CHECK(omega_n_membership(p, Partition({n})));
      CHECK(omega_n_membership(simplex_polytope(3), Partition({n})));
    }
    const auto c = discrete_constraints(p);
    for (std::size_t n = 1; n <= 10; ++n)
      for (const auto& lambda : enumerate_partitions(n))
        CHECK(satisfies(lambda, c) ==
              (lambda.length() <= 7 && lambda[6] + lambda[7] <= lambda[1] + 1));
  }

  TEST_CASE("mu sequences")
  {
    const auto c = lemma_max_closed_form(7);
    const auto mu = mu_sequence(c.point, 100);
    CHECK(mu.n() == 100);
    CHECK(mu.length() == 7);
    CHECK(mu_sequence({1, 0, 0, 0}, 9) == Partition({9}));
    const auto big = mu_sequence(c.point, 10000);
    std::vector<double> ratio;
    for (auto m : big.parts())
      ratio.push_back(m / 10000.0);
    CHECK(std::abs(phi(ratio) - c.value) < 0.01);
  }

  TEST_CASE("bound report")
  {
    const auto rows = bound_report(1.0, 1, 5, {1, 1, 1, 1, 1});
    REQUIRE(rows.size() == 5);
    for (const auto& r : rows) {
      REQUIRE(r.ratio.has_value());
      CHECK(*r.ratio == doctest::Approx(1.0));
    }
    const auto c = lemma_max_closed_form(7);
    const auto hooks = bound_report(c.value, 1, 20, {}, c.point);
    for (const auto& r : hooks) {
      REQUIRE(r.hook_lower.has_value());
      CHECK(*r.hook_lower == hook_dim(mu_sequence(c.point, r.n)));
    }
    const std::string csv = bound_csv(bound_report(2.0, 1, 2, {3, 5}));
    CHECK(csv.rfind("n,d_pow_n,c_n,hook_lower\n", 0) == 0);
    CHECK(csv.find("\n1,") != std::string::npos);
  }
}
