#include "oracles.hpp"

#include "gralg/catalog.hpp"
#include "gralg/codim.hpp"
#include "gralg/error.hpp"
#include "gralg/parallel.hpp"

#include <doctest.h>

#include <cmath>

using namespace gralg;

namespace {

CodimOptions exact_mode()
{
  CodimOptions o;
  o.mode = RankMode::exact_rational;
  return o;
}

} // namespace

TEST_SUITE("codim")
{
  TEST_CASE("monomial evaluation in matrix units")
  {
    const auto m = catalog_algebra("full_matrix(2)");
    const auto i = [&](const char* l) { return *m.index_of(l); };
    const GradedMonomial x1x2{{0, 1}, {0, 0}};
    const GradedMonomial x2x1{{1, 0}, {0, 0}};
    CHECK(is_zero(evaluate_monomial(m, x1x2, {i("e11"), i("e22")})));
    CHECK(is_zero(evaluate_monomial(m, x2x1, {i("e11"), i("e22")})));
    CHECK(evaluate_monomial(m, x1x2, {i("e12"), i("e21")}) == m.basis_vector(i("e11")));
    const GradedMonomial single{{0}, {0}};
    CHECK(evaluate_monomial(m, single, {i("e21")}) == m.basis_vector(i("e21")));
  }

  TEST_CASE("graded codimensions agree with the brute-force oracle")
  {
    for (const std::string spec : {"exampleT1(2)", "thm_T3_fractional", "utk_column_graded(2)",
                                   "mk_column_graded(2)", "mk_zhalf_graded", "full_matrix(2)", "upper_triangular(2)",
                                   "exampleT2(1)"}) {
      const auto a = catalog_algebra(spec);
      for (std::size_t n = 1; n <= 3; ++n) {
        CAPTURE(spec);
        CAPTURE(n);
        const std::size_t expect = oracle::graded_codim(a, n);
        const auto exact = graded_codim(a, n, exact_mode());
        CHECK(exact.value == expect);
        CHECK(exact.certification == "exact");
        CHECK(graded_codim(a, n).value == expect);
      }
    }
  }

  TEST_CASE("small closed forms")
  {
    const auto f = catalog_algebra("field");
    for (std::size_t n = 1; n <= 6; ++n)
      CHECK(graded_codim(f, n).value == 1);
    for (long k : {2, 3}) {
      const auto mk = catalog_algebra("mk_column_graded(" + std::to_string(k) + ")");
      CHECK(graded_codim(mk, 1, exact_mode()).value == k);
      CHECK(ordinary_codim(mk, 1, exact_mode()).value == 1);
      CHECK(ordinary_codim(catalog_algebra("full_matrix(" + std::to_string(k) + ")"), 1).value == 1);
    }
    CHECK(ordinary_codim(catalog_algebra("full_matrix(2)"), 2, exact_mode()).value == 2);
    // A nilpotent algebra with A^2 = 0 has c_n = 0 from n = 2 on.
    const auto z = catalog_algebra("zero(2)");
    CHECK(graded_codim(z, 1).value == 1);
    for (std::size_t n = 2; n <= 5; ++n)
      CHECK(graded_codim(z, n).value == 0);
  }

  TEST_CASE("T1 and T2 fractional examples share codimensions")
  {
    const auto a1 = catalog_algebra("thm_T1_fractional");
    const auto a2 = catalog_algebra("thm_T2_fractional");
    for (std::size_t n = 1; n <= 3; ++n)
      CHECK(graded_codim(a1, n, exact_mode()).value == graded_codim(a2, n, exact_mode()).value);
    const auto r1 = graded_codim(a1, 4);
    const auto r2 = graded_codim(a2, 4);
    CHECK(r1.value == r2.value);
    for (const auto& b : r1.blocks) {
      REQUIRE(b.modular_ranks.size() >= 2);
      CHECK(b.modular_ranks[0].second == b.modular_ranks[1].second);
    }
    CHECK(graded_codim(a1, 5).value == graded_codim(a2, 5).value);
  }

  TEST_CASE("modular ranks never exceed exact ranks")
  {
    const auto a = catalog_algebra("thm_T3_fractional");
    CodimOptions o;
    o.primes = {3, 5};
    o.exact_check_entries = 0;
    for (std::size_t n = 1; n <= 3; ++n)
      CHECK(graded_codim(a, n, o).value <= graded_codim(a, n, exact_mode()).value);
  }

  TEST_CASE("codimensions respect the shape bound and grow monotonically for unital algebras")
  {
    const auto a = catalog_algebra("exampleT1(2)");
    Integer prev = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto c = graded_codim(a, n).value;
      CHECK(c <= codim_shape_bound(a, n));
      CHECK(c >= prev);
      prev = c;
    }
  }

  TEST_CASE("results are independent of the thread count")
  {
    const auto a = catalog_algebra("thm_T1_fractional");
    const WorkerPool one(1), three(3);
    CodimOptions o1, o3;
    o1.pool = &one;
    o3.pool = &three;
    const auto s1 = codim_sequence(a, 4, o1);
    const auto s3 = codim_sequence(a, 4, o3);
    CHECK(codim_csv(s1, false) == codim_csv(s3, false));
    CHECK(codim_csv(s1, false) == codim_csv(codim_sequence(a, 4, o1), false));
  }

  TEST_CASE("csv layout")
  {
    const auto rows = codim_sequence(catalog_algebra("field"), 3, exact_mode());
    CHECK(codim_csv(rows, false) == "n,c_n,certification,seconds\n"
                                    "1,1,exact,0.000000\n"
                                    "2,1,exact,0.000000\n"
                                    "3,1,exact,0.000000\n");
  }

  TEST_CASE("caps and parameters")
  {
    const auto a = catalog_algebra("thm_T1_fractional");
    CodimOptions o;
    o.max_block_entries = 10;
    try {
      graded_codim(a, 3, o);
      FAIL("cap not enforced");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ResourceLimit);
    }
    CHECK_THROWS_AS(graded_codim(a, 0), Error);
    CHECK(parse_rank_mode("exact") == RankMode::exact_rational);
    CHECK(parse_rank_mode("modular") == RankMode::modular);
    CHECK_THROWS_AS(parse_rank_mode("fast"), Error);
  }

  TEST_CASE("exponent estimates")
  {
    const auto ones = exponent_estimate(std::vector<double>{1, 1, 1, 1});
    for (double r : ones.roots)
      CHECK(r == doctest::Approx(1.0));
    CHECK(ones.slope == doctest::Approx(0.0));
    std::vector<double> geo;
    for (int n = 1; n <= 6; ++n)
      geo.push_back(std::pow(3.0, n));
    const auto g = exponent_estimate(geo);
    for (double r : g.roots)
      CHECK(r == doctest::Approx(3.0));
    CHECK(g.slope == doctest::Approx(std::log(3.0)));
    CHECK_THROWS_AS(exponent_estimate(std::vector<double>{}), Error);
    CHECK(exponent_estimate(std::vector<Integer>{2, 8, 48}).roots.size() == 3);
  }
}
