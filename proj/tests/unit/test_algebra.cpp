#include "oracles.hpp"

#include "gralg/algebra_io.hpp"
#include "gralg/catalog.hpp"
#include "gralg/error.hpp"

#include <doctest.h>

#include <fstream>

using namespace gralg;

namespace {

std::vector<std::string> catalog_specs()
{
  std::vector<std::string> out;
  for (const auto& e : catalog_names()) {
    if (e.param_count == 0) {
      out.push_back(e.name);
    } else {
      out.push_back(e.name + "(2)");
      out.push_back(e.name + "(3)");
    }
  }
  return out;
}

Vec basis(const GradedAlgebra& a, const std::string& label)
{
  const auto i = a.index_of(label);
  REQUIRE(i.has_value());
  return a.basis_vector(*i);
}

ErrorKind kind_of(const std::function<void()>& f)
{
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::BadParam;
}

} // namespace

TEST_SUITE("algebra")
{
  TEST_CASE("every catalog entry validates and is associative on random vectors")
  {
    std::mt19937_64 rng(21);
    for (const auto& spec : catalog_specs()) {
      CAPTURE(spec);
      const auto a = catalog_algebra(spec);
      CHECK(validate(a).ok());
      CHECK(oracle::associative(a.semigroup().table()));
      for (int trial = 0; trial < 5; ++trial) {
        const Vec u = oracle::random_vec(rng, a.dim());
        const Vec v = oracle::random_vec(rng, a.dim());
        const Vec w = oracle::random_vec(rng, a.dim());
        CHECK(a.multiply(a.multiply(u, v), w) == a.multiply(u, a.multiply(v, w)));
      }
    }
  }

  TEST_CASE("catalog shapes")
  {
    const auto t1 = catalog_algebra("thm_T1_fractional");
    CHECK(t1.dim() == 7);
    CHECK(component(t1, 0).dim() == 4);
    CHECK(component(t1, 1).dim() == 3);
    CHECK(catalog_algebra("thm_T3_fractional").dim() == 6);
    const auto mk = catalog_algebra("mk_column_graded(2)");
    CHECK(is_right_zero_band(mk.semigroup()));
    CHECK(support(mk).size() == 2);
    for (auto t : support(mk))
      CHECK(component(mk, t).dim() == 2);
    CHECK(support(catalog_algebra("mk_column_graded(3)")).size() == 3);
    CHECK(support(catalog_algebra("exampleT1(2)")).size() == 2);
    CHECK(support(catalog_algebra("full_matrix(2)")).size() == 1);
    CHECK(kind_of([] { catalog_algebra("nonexistent"); }) == ErrorKind::UnknownName);
    CHECK(kind_of([] { catalog_algebra("full_matrix"); }) == ErrorKind::BadParam);
  }

  TEST_CASE("grading violations are reported")
  {
    const auto z = catalog_algebra("mk_zhalf_graded");
    CHECK(validate(z).ok());
    auto degrees = z.degrees();
    degrees[*z.index_of("e12")] = 0;
    const GradedAlgebra bad("bad", z.semigroup(), z.labels(), degrees, z.structure(), z.declared_unit());
    CHECK_FALSE(validate(bad).grading_violations.empty());
    CHECK(validate(catalog_algebra("zero(3)")).ok());
  }

  TEST_CASE("matrix unit products")
  {
    const auto m = catalog_algebra("full_matrix(2)");
    CHECK(m.multiply(basis(m, "e11"), basis(m, "e12")) == basis(m, "e12"));
    CHECK(is_zero(m.multiply(basis(m, "e12"), basis(m, "e12"))));
    CHECK(find_unit(m) == add(basis(m, "e11"), basis(m, "e22")));
    CHECK_FALSE(find_unit(catalog_algebra("thm_T3_fractional")).has_value());
    CHECK_FALSE(find_unit(catalog_algebra("zero(2)")).has_value());
  }

  TEST_CASE("direct sum multiplies componentwise")
  {
    const auto m = catalog_algebra("full_matrix(2)");
    const auto s = direct_sum(m, m);
    CHECK(s.dim() == 8);
    std::mt19937_64 rng(22);
    const Vec a = oracle::random_vec(rng, 4), b = oracle::random_vec(rng, 4);
    const Vec c = oracle::random_vec(rng, 4), d = oracle::random_vec(rng, 4);
    Vec ab = a, cd = c;
    ab.insert(ab.end(), b.begin(), b.end());
    cd.insert(cd.end(), d.begin(), d.end());
    Vec expect = m.multiply(a, c);
    const Vec second = m.multiply(b, d);
    expect.insert(expect.end(), second.begin(), second.end());
    CHECK(s.multiply(ab, cd) == expect);
    const auto op = opposite(m);
    CHECK(op.multiply(a, c) == m.multiply(c, a));
  }

  TEST_CASE("adjoining a unit")
  {
    const auto z = adjoin_unit(catalog_algebra("zero(1)"));
    CHECK(z.dim() == 2);
    CHECK(find_unit(z).has_value());
    const auto m = adjoin_unit(catalog_algebra("full_matrix(2)"));
    CHECK(m.dim() == 5);
    const auto u = find_unit(m);
    REQUIRE(u.has_value());
    CHECK(validate(m).ok());
  }

  TEST_CASE("subspace arithmetic")
  {
    const auto m = catalog_algebra("full_matrix(2)");
    const auto e11 = Subspace::span(4, {basis(m, "e11")});
    const auto e12 = Subspace::span(4, {basis(m, "e12")});
    CHECK(subspace_product(m, e11, e12) == e12);
    CHECK(subspace_product(m, e12, e12).is_zero());
    CHECK(ideal_generated(m, {basis(m, "e12")}).dim() == 4);
    CHECK(ideal_generated(m, {}).is_zero());
    const auto ut = catalog_algebra("upper_triangular(2)");
    CHECK(ideal_generated(ut, {basis(ut, "e12")}) == Subspace::span(3, {basis(ut, "e12")}));

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
      Matrix s, t;
      for (std::size_t i = rng() % 4; i > 0; --i)
        s.push_back(oracle::random_vec(rng, 5));
      for (std::size_t i = rng() % 4; i > 0; --i)
        t.push_back(oracle::random_vec(rng, 5));
      const auto S = Subspace::span(5, s), T = Subspace::span(5, t);
      CHECK(subspace_sum(S, T).dim() + subspace_intersect(S, T).dim() == S.dim() + T.dim());
      CHECK(subspace_sum(S, T).contains(S));
      CHECK(S.contains(subspace_intersect(S, T)));
      for (const auto& v : S.basis())
        CHECK(contains(S, v));
    }
  }

  TEST_CASE("graded subspaces")
  {
    const auto a = catalog_algebra("exampleT1(2)");
    for (auto t : support(a))
      CHECK(is_graded_subspace(a, component(a, t)));
    CHECK(is_graded_subspace(a, Subspace(a.dim())));
    CHECK(is_graded_subspace(a, Subspace::whole(a.dim())));
    const Vec j = sub(basis(a, "(e12,e12)"), basis(a, "(e12,0)"));
    CHECK_FALSE(is_graded_subspace(a, Subspace::span(a.dim(), {j})));
    CHECK(component_project(a, 1, j) == basis(a, "(e12,e12)"));
  }

  TEST_CASE("definition files round trip")
  {
    for (const auto& spec : catalog_specs()) {
      CAPTURE(spec);
      const auto a = catalog_algebra(spec);
      const auto b = parse_algebra(to_text(a));
      CHECK(b.labels() == a.labels());
      CHECK(b.degrees() == a.degrees());
      CHECK(b.structure() == a.structure());
      CHECK(b.semigroup().table() == a.semigroup().table());
    }
    const std::string path = "roundtrip_test_algebra.txt";
    {
      std::ofstream f(path);
      f << "# upper triangular, column graded\n" << to_text(catalog_algebra("utk_column_graded(2)"));
    }
    CHECK(resolve_algebra(path).dim() == 3);
    CHECK(resolve_algebra("catalog:full_matrix(2)").dim() == 4);
    std::remove(path.c_str());
  }

  TEST_CASE("malformed definition files are rejected")
  {
    CHECK(kind_of([] { parse_algebra("algebra x\nbasis a\n"); }) == ErrorKind::ParseError);
    // a.a = a in degree 1 of Z2 violates the grading
    const std::string graded_bad = "algebra x\nsemigroup inline 0 1\nrow 0 1\nrow 1 0\nbasis a\ndegrees 1\n"
                                   "products\n0 0 0 1\nend\n";
    CHECK_THROWS_AS(parse_algebra(graded_bad), Error);
    // Nilpotent Jordan block with a.b = a, b.a = 0, b.b = b, a.a = b fails associativity.
    const std::string assoc_bad = "algebra x\nsemigroup T1\nbasis a b\ndegrees 0 0\nproducts\n"
                                  "0 0 1 1\n0 1 0 1\n1 1 1 1\nend\n";
    CHECK_THROWS_AS(parse_algebra(assoc_bad), Error);
    CHECK_THROWS_AS(load_algebra_file("/nonexistent/file.txt"), Error);
  }
}
