#include "oracles.hpp"

#include "gralg/catalog.hpp"
#include "gralg/error.hpp"
#include "gralg/structure.hpp"

#include <doctest.h>

using namespace gralg;

namespace {

Vec basis(const GradedAlgebra& a, const std::string& label)
{
  const auto i = a.index_of(label);
  REQUIRE(i.has_value());
  return a.basis_vector(*i);
}

// A nilpotent ideal J with A/J having no nonzero nilpotent ideal is the radical; this checks the first half
// directly: J is an ideal and J^k = 0 for some k <= dim A.
bool nilpotent_ideal(const GradedAlgebra& a, const Subspace& j)
{
  if (!is_two_sided_ideal(a, j))
    return false;
  Subspace p = j;
  for (std::size_t k = 0; k <= a.dim() && !p.is_zero(); ++k)
    p = subspace_product(a, p, j);
  return p.is_zero();
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

TEST_SUITE("structure")
{
  TEST_CASE("radicals of the basic examples")
  {
    const auto ut = catalog_algebra("upper_triangular(2)");
    const auto j = jacobson_radical(ut);
    CHECK(j == Subspace::span(3, {basis(ut, "e12")}));
    CHECK(quotient(ut, j).algebra.dim() == 2);
    CHECK(jacobson_radical(catalog_algebra("full_matrix(3)")).is_zero());

    for (long k : {1, 2}) {
      const auto a = catalog_algebra("exampleT2(" + std::to_string(k) + ")");
      Matrix v;
      for (std::size_t i = 0; i < a.dim(); ++i)
        if (a.label(i).find(",0)") == std::string::npos) {
          const std::string m = a.label(i).substr(1, a.label(i).find(',') - 1);
          v.push_back(sub(a.basis_vector(i), basis(a, "(" + m + ",0)")));
        }
      // (0, V) written in the pair basis
      CHECK(jacobson_radical(a) == Subspace::span(a.dim(), v));
    }
  }

  TEST_CASE("radicals are nilpotent ideals with semisimple quotient")
  {
    for (const std::string spec : {"exampleT1(2)", "exampleT2(2)", "exampleT3(2)", "thm_T1_fractional",
                                   "thm_T2_fractional", "thm_T3_fractional", "utk_column_graded(3)",
                                   "upper_triangular(3)"}) {
      CAPTURE(spec);
      const auto a = catalog_algebra(spec);
      const auto j = jacobson_radical(a);
      CHECK(nilpotent_ideal(a, j));
      const auto q = quotient(a, j);
      CHECK(jacobson_radical(q.algebra).is_zero());
    }
  }

  TEST_CASE("radical gradedness")
  {
    for (const std::string spec : {"exampleT1(2)", "exampleT2(2)", "exampleT3(2)"}) {
      CAPTURE(spec);
      const auto a = catalog_algebra(spec);
      CHECK_FALSE(is_radical_graded(a));
      const auto j = jacobson_radical(a);
      for (auto t : support(a))
        CHECK(subspace_intersect(j, component(a, t)).is_zero());
    }
    CHECK(is_radical_graded(catalog_algebra("utk_column_graded(2)")));
  }

  TEST_CASE("ideals of unital zero-band graded algebras are graded")
  {
    CHECK(all_ideals_graded_zeroband(catalog_algebra("utk_column_graded(2)")).all_graded);
    CHECK(all_ideals_graded_zeroband(catalog_algebra("mk_column_graded(3)")).all_graded);
    CHECK(kind_of([] { all_ideals_graded_zeroband(catalog_algebra("exampleT3(2)")); }) ==
          ErrorKind::PreconditionFailed);
  }

  TEST_CASE("Wedderburn decomposition")
  {
    const auto mm = direct_sum(catalog_algebra("full_matrix(2)"), catalog_algebra("full_matrix(2)"));
    const auto w = wedderburn_decompose(mm);
    REQUIRE(w.simple_ideals.size() == 2);
    for (const auto& s : w.simple_ideals)
      CHECK(s.dim() == 4);
    Vec sum = zero_vec(mm.dim());
    for (const auto& e : w.central_idempotents) {
      CHECK(mm.multiply(e, e) == e);
      sum = add(sum, e);
    }
    CHECK(sum == *find_unit(mm));

    const auto diag = quotient(catalog_algebra("upper_triangular(3)"),
                               jacobson_radical(catalog_algebra("upper_triangular(3)")));
    const auto wd = wedderburn_decompose(diag.algebra);
    REQUIRE(wd.simple_ideals.size() == 3);
    for (const auto& s : wd.simple_ideals)
      CHECK(s.dim() == 1);

    const auto t1 = catalog_algebra("thm_T1_fractional");
    const auto q = quotient(t1, jacobson_radical(t1));
    std::vector<std::size_t> dims;
    for (const auto& s : wedderburn_decompose(q.algebra).simple_ideals)
      dims.push_back(s.dim());
    std::sort(dims.begin(), dims.end());
    CHECK(dims == std::vector<std::size_t>{1, 1, 4});
  }

  TEST_CASE("Mal'cev complements")
  {
    const auto ut = catalog_algebra("upper_triangular(2)");
    const auto d = malcev_complement(ut);
    CHECK(d.complement.dim() == 2);
    CHECK(is_subalgebra(ut, d.complement));
    CHECK(subspace_intersect(d.complement, d.radical).is_zero());
    const auto m = catalog_algebra("full_matrix(2)");
    const auto dm = malcev_complement(m);
    CHECK(dm.complement.dim() == 4);
    CHECK(dm.radical.is_zero());
    const auto t2 = catalog_algebra("exampleT2(1)");
    const auto d2 = malcev_complement(t2);
    CHECK(d2.complement.dim() == 1);
    CHECK(d2.radical == jacobson_radical(t2));
  }

  TEST_CASE("graded splitting over zero bands")
  {
    for (long k : {2, 3, 4}) {
      const auto a = catalog_algebra("utk_column_graded(" + std::to_string(k) + ")");
      const auto d = graded_malcev_zeroband(a);
      CHECK(d.complement.dim() == static_cast<std::size_t>(k));
      CHECK(d.radical.dim() == static_cast<std::size_t>(k * (k - 1) / 2));
      CHECK(is_graded_subspace(a, d.complement));
      CHECK(is_subalgebra(a, d.complement));
      CHECK(d.complement.dim() + d.radical.dim() == a.dim());
      CHECK(subspace_intersect(d.complement, d.radical).is_zero());
    }
    const auto mk = catalog_algebra("mk_column_graded(2)");
    const auto dm = graded_malcev_zeroband(mk);
    CHECK(dm.complement.dim() == 4);
    CHECK(dm.correction_log.empty());
  }

  TEST_CASE("graded simplicity")
  {
    CHECK(is_graded_simple(catalog_algebra("thm_T3_fractional")).verdict == SimplicityVerdict::certified_true);
    for (long k : {2, 3}) {
      const auto b = catalog_algebra("t1_semisimple(" + std::to_string(k) + ")");
      const auto r = is_graded_simple(b);
      CHECK(r.verdict == SimplicityVerdict::certified_false);
      REQUIRE(r.witness.has_value());
      CHECK(r.witness->dim() == static_cast<std::size_t>(k * k));
      CHECK(is_two_sided_ideal(b, *r.witness));
      CHECK(is_graded_subspace(b, *r.witness));
      // (M_k, 0) sits in the degree-0 component
      CHECK(component(b, 0).contains(*r.witness));
    }
    CHECK(is_graded_simple(catalog_algebra("zero(1)")).verdict == SimplicityVerdict::certified_false);
    CHECK(is_graded_simple(catalog_algebra("mk_column_graded(2)")).verdict == SimplicityVerdict::certified_true);
  }

  TEST_CASE("exponents")
  {
    CHECK(graded_exponent_d(catalog_algebra("utk_column_graded(2)")) == 2);
    CHECK(graded_exponent_d(catalog_algebra("mk_column_graded(2)")) == 4);
    CHECK(kind_of([] { graded_exponent_d(catalog_algebra("thm_T1_fractional")); }) ==
          ErrorKind::RadicalNotGraded);
    CHECK(ordinary_exponent(catalog_algebra("full_matrix(2)")) == 4);
    CHECK(ordinary_exponent(catalog_algebra("upper_triangular(2)")) == 2);
    CHECK(ordinary_exponent(catalog_algebra("upper_triangular(3)")) == 3);
    for (const std::string spec : {"utk_column_graded(2)", "utk_column_graded(3)", "mk_column_graded(2)",
                                   "mk_column_graded(3)"}) {
      CAPTURE(spec);
      const auto a = catalog_algebra(spec);
      CHECK(graded_exponent_d(a) == ordinary_exponent(a));
    }
  }
}
