#include "gralg/catalog.hpp"

#include "gralg/error.hpp"

#include <cctype>
#include <map>

namespace gralg {

std::string matrix_unit_label(std::size_t k, std::size_t i, std::size_t j)
{
  if (k < 10)
    return "e" + std::to_string(i + 1) + std::to_string(j + 1);
  return "e" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

namespace {

std::string suffix(std::size_t k, std::size_t i, std::size_t j)
{
  return matrix_unit_label(k, i, j).substr(1);
}

struct MatrixUnit {
  std::size_t i, j;
};

// Algebras whose basis is a family of k x k matrix units with the usual product.
GradedAlgebra matrix_unit_algebra(std::string name, std::size_t k, const std::vector<MatrixUnit>& units,
                                  FiniteSemigroup sg, const std::vector<std::size_t>& degrees)
{
  const std::size_t n = units.size();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  std::vector<std::string> labels;
  for (std::size_t b = 0; b < n; ++b) {
    index[{units[b].i, units[b].j}] = b;
    labels.push_back(matrix_unit_label(k, units[b].i, units[b].j));
  }
  StructureMap m;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (units[a].j == units[b].i)
        m[{a, b}] = unit_vec(n, index.at({units[a].i, units[b].j}));
  std::optional<Vec> unit;
  bool has_diagonal = true;
  Vec u = zero_vec(n);
  for (std::size_t i = 0; i < k; ++i) {
    auto it = index.find({i, i});
    if (it == index.end())
      has_diagonal = false;
    else
      u[it->second] = 1;
  }
  if (has_diagonal)
    unit = u;
  return make_algebra(std::move(name), std::move(sg), std::move(labels), degrees, m, unit);
}

std::vector<MatrixUnit> all_units(std::size_t k)
{
  std::vector<MatrixUnit> u;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      u.push_back({i, j});
  return u;
}

std::vector<MatrixUnit> upper_units(std::size_t k)
{
  std::vector<MatrixUnit> u;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j)
      u.push_back({i, j});
  return u;
}

// Product rule for pairs (a,b)(c,d) in M_k (+) W where W is a copy of (part of) M_k.
enum class PairRule {
  DirectSum,    // (ac, bd)
  SquareZero,   // (ac, 0)
  LeftModule,   // (ac, a d)
};

struct PairElem {
  std::size_t i, j;
  bool paired;
};

GradedAlgebra pair_algebra(std::string name, std::size_t k, PairRule rule, const std::vector<MatrixUnit>& partners,
                           const std::string& partner_letter, FiniteSemigroup sg, std::size_t plain_degree,
                           std::size_t paired_degree)
{
  std::vector<PairElem> elems;
  for (const auto& u : all_units(k))
    elems.push_back({u.i, u.j, false});
  for (const auto& u : partners)
    elems.push_back({u.i, u.j, true});
  const std::size_t n = elems.size();
  std::map<std::tuple<std::size_t, std::size_t, bool>, std::size_t> index;
  std::vector<std::string> labels;
  std::vector<std::size_t> degrees;
  for (std::size_t b = 0; b < n; ++b) {
    const auto& e = elems[b];
    index[{e.i, e.j, e.paired}] = b;
    const std::string first = matrix_unit_label(k, e.i, e.j);
    labels.push_back("(" + first + "," + (e.paired ? partner_letter + suffix(k, e.i, e.j) : "0") + ")");
    degrees.push_back(e.paired ? paired_degree : plain_degree);
  }
  StructureMap m;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto& x = elems[a];
      const auto& y = elems[b];
      if (x.j != y.i)
        continue;
      bool second = false;
      switch (rule) {
      case PairRule::DirectSum: second = x.paired && y.paired; break;
      case PairRule::SquareZero: second = false; break;
      case PairRule::LeftModule: second = y.paired; break;
      }
      const auto it = index.find({x.i, y.j, second});
      if (it == index.end())
        raise(ErrorKind::BadParam, name + ": product leaves the span of the basis");
      Vec v = zero_vec(n);
      v[it->second] = 1;
      m[{a, b}] = std::move(v);
    }
  return make_algebra(std::move(name), std::move(sg), std::move(labels), std::move(degrees), m);
}

long param(const std::vector<long>& p, std::size_t i, const std::string& name, long min)
{
  if (p.size() <= i)
    raise(ErrorKind::BadParam, name + " expects a parameter");
  if (p[i] < min)
    raise(ErrorKind::BadParam, name + " parameter must be at least " + std::to_string(min));
  if (p[i] > 12)
    raise(ErrorKind::BadParam, name + " parameter capped at 12");
  return p[i];
}

void expect_params(const std::vector<long>& p, std::size_t count, const std::string& name)
{
  if (p.size() != count)
    raise(ErrorKind::BadParam, name + " expects " + std::to_string(count) + " parameter(s), got " +
                                 std::to_string(p.size()));
}

std::string with_param(const std::string& name, long k)
{
  return name + "(" + std::to_string(k) + ")";
}

} // namespace

const std::vector<CatalogEntry>& catalog_names()
{
  static const std::vector<CatalogEntry> names = {
    {"exampleT1", 1, "M_k + UT_k, T1-graded by (M_k,0) and {(a,a) : a upper triangular}; k >= 2"},
    {"exampleT2", 1, "M_k + V with V^2 = 0, T2-graded by (M_k,0) and {(a,a)}; k >= 1"},
    {"exampleT3", 1, "M_k + V with V a left M_k-module, T3-graded; k >= 1"},
    {"thm_T1_fractional", 0, "M_2 + UT_2 with the T1-grading (same as exampleT1(2))"},
    {"thm_T2_fractional", 0, "M_2 + <j11,j12,j22> with zero squares, T2-graded"},
    {"thm_T3_fractional", 0, "M_2 + I with I = <e12,e22> as a left module, T3-graded"},
    {"mk_column_graded", 1, "M_k graded by the k-element right zero band through columns"},
    {"utk_column_graded", 1, "UT_k graded by the k-element right zero band through columns"},
    {"mk_zhalf_graded", 0, "M_2 with the Z2-grading diagonal / antidiagonal"},
    {"full_matrix", 1, "M_k, trivial grading"},
    {"upper_triangular", 1, "UT_k, trivial grading"},
    {"t1_semisimple", 1, "M_k + M_k, T1-graded by (M_k,0) and {(a,a)}"},
    {"zero", 1, "n-dimensional algebra with zero product, trivial grading"},
    {"field", 0, "the one-dimensional unital algebra"},
  };
  return names;
}

GradedAlgebra paper_catalog(std::string_view name_view, const std::vector<long>& p)
{
  const std::string name(name_view);
  if (name == "exampleT1") {
    expect_params(p, 1, name);
    const auto k = static_cast<std::size_t>(param(p, 0, name, 2));
    return pair_algebra(with_param(name, long(k)), k, PairRule::DirectSum, upper_units(k), "e",
                        catalog_semigroup(SemigroupTag::T1), 0, 1);
  }
  if (name == "exampleT2") {
    expect_params(p, 1, name);
    const auto k = static_cast<std::size_t>(param(p, 0, name, 1));
    return pair_algebra(with_param(name, long(k)), k, PairRule::SquareZero, all_units(k), "v",
                        catalog_semigroup(SemigroupTag::T2), 0, 1);
  }
  if (name == "exampleT3") {
    expect_params(p, 1, name);
    const auto k = static_cast<std::size_t>(param(p, 0, name, 1));
    return pair_algebra(with_param(name, long(k)), k, PairRule::LeftModule, all_units(k), "v",
                        catalog_semigroup(SemigroupTag::T3), 0, 1);
  }
  if (name == "thm_T1_fractional") {
    expect_params(p, 0, name);
    return pair_algebra(name, 2, PairRule::DirectSum, upper_units(2), "e", catalog_semigroup(SemigroupTag::T1), 0, 1);
  }
  if (name == "thm_T2_fractional") {
    expect_params(p, 0, name);
    return pair_algebra(name, 2, PairRule::SquareZero, upper_units(2), "j", catalog_semigroup(SemigroupTag::T2), 0, 1);
  }
  if (name == "thm_T3_fractional") {
    expect_params(p, 0, name);
    return pair_algebra(name, 2, PairRule::LeftModule, {{0, 1}, {1, 1}}, "e", catalog_semigroup(SemigroupTag::T3), 0,
                        1);
  }
  if (name == "mk_column_graded" || name == "utk_column_graded") {
    expect_params(p, 1, name);
    const auto k = static_cast<std::size_t>(param(p, 0, name, 1));
    const auto units = name == "mk_column_graded" ? all_units(k) : upper_units(k);
    std::vector<std::size_t> degrees;
    for (const auto& u : units)
      degrees.push_back(u.j);
    return matrix_unit_algebra(with_param(name, long(k)), k, units, right_zero_band(k), degrees);
  }
  if (name == "mk_zhalf_graded") {
    expect_params(p, 0, name);
    const auto units = all_units(2);
    std::vector<std::size_t> degrees;
    for (const auto& u : units)
      degrees.push_back(u.i == u.j ? 0 : 1);
    return matrix_unit_algebra(name, 2, units, catalog_semigroup(SemigroupTag::Z2), degrees);
  }
  if (name == "full_matrix" || name == "upper_triangular") {
    expect_params(p, 1, name);
    const auto k = static_cast<std::size_t>(param(p, 0, name, 1));
    const auto units = name == "full_matrix" ? all_units(k) : upper_units(k);
    return matrix_unit_algebra(with_param(name, long(k)), k, units, trivial_semigroup(),
                               std::vector<std::size_t>(units.size(), 0));
  }
  if (name == "t1_semisimple") {
    expect_params(p, 1, name);
    const auto k = static_cast<std::size_t>(param(p, 0, name, 1));
    return pair_algebra(with_param(name, long(k)), k, PairRule::DirectSum, all_units(k), "e",
                        catalog_semigroup(SemigroupTag::T1), 0, 1);
  }
  if (name == "zero") {
    expect_params(p, 1, name);
    const auto n = static_cast<std::size_t>(param(p, 0, name, 1));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
      labels.push_back("z" + std::to_string(i + 1));
    return make_algebra(with_param(name, long(n)), trivial_semigroup(), std::move(labels),
                        std::vector<std::size_t>(n, 0), {});
  }
  if (name == "field") {
    expect_params(p, 0, name);
    return make_algebra(name, trivial_semigroup(), {"1"}, {0}, {{{0, 0}, Vec{Rational(1)}}}, Vec{Rational(1)});
  }
  raise(ErrorKind::UnknownName, "unknown catalog algebra '" + name + "'");
}

GradedAlgebra catalog_algebra(std::string_view spec)
{
  std::string s(spec);
  if (s.rfind("catalog:", 0) == 0)
    s = s.substr(8);
  std::vector<long> params;
  std::string name = s;
  const auto open = s.find('(');
  if (open != std::string::npos) {
    if (s.back() != ')')
      raise(ErrorKind::BadParam, "malformed catalog reference '" + std::string(spec) + "'");
    name = s.substr(0, open);
    const std::string inner = s.substr(open + 1, s.size() - open - 2);
    std::size_t pos = 0;
    while (pos < inner.size()) {
      auto comma = inner.find(',', pos);
      if (comma == std::string::npos)
        comma = inner.size();
      std::string tok = inner.substr(pos, comma - pos);
      while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back())))
        tok.pop_back();
      while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front())))
        tok.erase(tok.begin());
      if (tok.empty())
        raise(ErrorKind::BadParam, "empty catalog parameter in '" + std::string(spec) + "'");
      for (char c : tok)
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '-')
          raise(ErrorKind::BadParam, "non-integer catalog parameter '" + tok + "'");
      params.push_back(std::stol(tok));
      pos = comma + 1;
    }
  }
  return paper_catalog(name, params);
}

} // namespace gralg
