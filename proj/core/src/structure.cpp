#include "gralg/structure.hpp"

#include "gralg/error.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace gralg {

namespace {

Subspace dickson_radical(const GradedAlgebra& a)
{
  const std::size_t n = a.dim();
  Vec traces = zero_vec(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t m = 0; m < n; ++m)
      for (const auto& [idx, c] : a.product(k, m))
        if (idx == m)
          traces[k] += c;
  // Row j: x -> trace of left multiplication by x*y_j on A+, with y_0 = 1 and y_j = b_j.
  Matrix rows;
  rows.push_back(traces);
  for (std::size_t j = 0; j < n; ++j) {
    Vec row = zero_vec(n);
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [k, c] : a.product(i, j))
        row[i] += c * traces[k];
    rows.push_back(std::move(row));
  }
  return Subspace::span(n, kernel(rows, n));
}

bool is_nilpotent_subspace(const GradedAlgebra& a, const Subspace& s)
{
  Subspace p = s;
  for (std::size_t k = 0; k <= a.dim() + 1; ++k) {
    if (p.is_zero())
      return true;
    p = subspace_product(a, p, s);
  }
  return p.is_zero();
}

Vec vector_in(const Matrix& basis, const Vec& coords, std::size_t n)
{
  Vec v = zero_vec(n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    axpy(v, coords[i], basis[i]);
  return v;
}

// For each quotient basis vector, the unique element of the complement lifting it.
Matrix section_from_complement(const GradedAlgebra& a, const Quotient& q, const Subspace& complement)
{
  const std::size_t m = q.representatives.size();
  if (complement.dim() != m)
    raise(ErrorKind::PreconditionFailed, "complement dimension does not match the quotient");
  Matrix images;
  for (const auto& b : complement.basis())
    images.push_back(q.project(b));
  const auto inv = inverse(images);
  if (!inv)
    raise(ErrorKind::PreconditionFailed, "complement meets the radical");
  Matrix section;
  for (std::size_t l = 0; l < m; ++l)
    section.push_back(vector_in(complement.basis(), (*inv)[l], a.dim()));
  return section;
}

bool is_zero_band(const FiniteSemigroup& s)
{
  return is_left_zero_band(s) || is_right_zero_band(s);
}

} // namespace

Subspace jacobson_radical(const GradedAlgebra& a)
{
  Subspace j = dickson_radical(a);
  if (!is_two_sided_ideal(a, j) || !is_nilpotent_subspace(a, j))
    raise(ErrorKind::PreconditionFailed, a.name() + ": trace-form radical is not a nilpotent ideal");
  if (!j.is_zero()) {
    const Quotient q = quotient(a, j);
    if (!dickson_radical(q.algebra).is_zero())
      raise(ErrorKind::PreconditionFailed, a.name() + ": quotient by the computed radical is not semisimple");
  }
  return j;
}

bool is_radical_graded(const GradedAlgebra& a)
{
  return is_graded_subspace(a, jacobson_radical(a));
}

std::vector<Subspace> radical_powers(const GradedAlgebra& a, const Subspace& radical)
{
  std::vector<Subspace> powers;
  Subspace p = radical;
  while (!p.is_zero()) {
    powers.push_back(p);
    p = subspace_product(a, p, radical);
  }
  return powers;
}

IdealGradingReport all_ideals_graded_zeroband(const GradedAlgebra& a)
{
  if (!is_zero_band(a.semigroup()))
    raise(ErrorKind::PreconditionFailed, a.name() + ": grading semigroup is not a left or right zero band");
  const auto unit = find_unit(a);
  if (!unit)
    raise(ErrorKind::PreconditionFailed, a.name() + ": algebra has no unit");
  IdealGradingReport r;
  const auto supp = support(a);
  for (auto t : supp)
    r.unit_components.push_back(component_project(a, t, *unit));
  const bool right = is_right_zero_band(a.semigroup());

  std::vector<Subspace> ideals;
  const Subspace rad = jacobson_radical(a);
  for (const auto& p : radical_powers(a, rad))
    ideals.push_back(p);
  for (std::size_t i = 0; i < a.dim(); ++i)
    ideals.push_back(ideal_generated(a, {a.basis_vector(i)}));

  for (const auto& ideal : ideals) {
    ++r.ideals_checked;
    bool ok = is_graded_subspace(a, ideal);
    // The mechanism: x = sum_t x e_t (right zero band) or sum_t e_t x (left), each term homogeneous and in I.
    for (const auto& x : ideal.basis()) {
      Vec total = zero_vec(a.dim());
      for (std::size_t c = 0; c < supp.size() && ok; ++c) {
        const Vec part = right ? a.multiply(x, r.unit_components[c]) : a.multiply(r.unit_components[c], x);
        if (!ideal.contains(part) || component_project(a, supp[c], part) != part)
          ok = false;
        total = add(total, part);
      }
      if (ok && total != x)
        ok = false;
    }
    if (!ok) {
      r.all_graded = false;
      r.witness = ideal;
      break;
    }
  }
  return r;
}

WedderburnData wedderburn_decompose(const GradedAlgebra& s)
{
  const std::size_t n = s.dim();
  WedderburnData w;
  w.quotient_dim = n;
  if (n == 0)
    return w;
  if (!dickson_radical(s).is_zero())
    raise(ErrorKind::NotSemisimple, s.name() + ": radical is nonzero");
  const auto unit = find_unit(s);
  if (!unit)
    raise(ErrorKind::NotSemisimple, s.name() + ": semisimple algebra without unit");

  Matrix conditions;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t m = 0; m < n; ++m) {
      Vec row = zero_vec(n);
      for (std::size_t k = 0; k < n; ++k) {
        for (const auto& [idx, c] : s.product(k, i))
          if (idx == m)
            row[k] += c;
        for (const auto& [idx, c] : s.product(i, k))
          if (idx == m)
            row[k] -= c;
      }
      conditions.push_back(std::move(row));
    }
  const Subspace center = Subspace::span(n, kernel(conditions, n));

  std::vector<Vec> pending{*unit};
  std::vector<Vec> primitive;
  std::mt19937_64 rng(0x5eed);
  while (!pending.empty()) {
    const Vec e = pending.back();
    pending.pop_back();
    Matrix ez_gen;
    for (const auto& z : center.basis())
      ez_gen.push_back(s.multiply(e, z));
    const Subspace ez = Subspace::span(n, std::move(ez_gen));
    if (ez.dim() <= 1) {
      primitive.push_back(e);
      continue;
    }
    bool split = false;
    for (std::size_t attempt = 0; attempt < ez.dim() + 32 && !split; ++attempt) {
      Vec z;
      if (attempt < ez.dim()) {
        z = ez.basis()[attempt];
      } else {
        z = zero_vec(n);
        for (const auto& b : ez.basis())
          axpy(z, Rational(static_cast<long>(rng() % 7) - 3), b);
      }
      const std::size_t m = ez.dim();
      Matrix op(m, zero_vec(m));
      for (std::size_t r = 0; r < m; ++r)
        op[r] = ez.coordinates(s.multiply(z, ez.basis()[r]));
      const Vec poly = characteristic_polynomial(op);
      const auto roots = rational_roots(poly);
      std::size_t total = 0;
      if (roots)
        for (const auto& rt : *roots)
          total += rt.multiplicity;
      if (!roots || total < m)
        raise(ErrorKind::NonSplit, s.name() + ": center does not split over the rationals (characteristic polynomial " +
                                     to_string(poly) + ")");
      if (roots->size() < 2)
        continue;
      for (std::size_t i = 0; i < roots->size(); ++i) {
        Vec idem = e;
        for (std::size_t j = 0; j < roots->size(); ++j) {
          if (j == i)
            continue;
          const Rational lj = (*roots)[j].value;
          const Rational denom = (*roots)[i].value - lj;
          Vec factor = sub(z, scale(lj, e));
          idem = scale(1 / denom, s.multiply(idem, factor));
        }
        pending.push_back(std::move(idem));
      }
      split = true;
    }
    if (!split)
      raise(ErrorKind::NonSplit, s.name() + ": could not separate the center by rational eigenvalues");
  }
  std::sort(primitive.begin(), primitive.end(), [](const Vec& x, const Vec& y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      const bool xs = sgn(x[i]) != 0, ys = sgn(y[i]) != 0;
      if (xs != ys)
        return xs;
    }
    return false;
  });
  for (const auto& e : primitive) {
    Matrix gens;
    for (std::size_t k = 0; k < n; ++k)
      gens.push_back(s.multiply(s.basis_vector(k), e));
    w.simple_ideals.push_back(Subspace::span(n, std::move(gens)));
    w.central_idempotents.push_back(e);
    Matrix cz;
    for (const auto& z : center.basis())
      cz.push_back(s.multiply(e, z));
    w.center_dims.push_back(Subspace::span(n, std::move(cz)).dim());
  }
  return w;
}

SplittingData malcev_complement(const GradedAlgebra& a)
{
  const std::size_t n = a.dim();
  SplittingData out;
  out.radical = jacobson_radical(a);
  const Quotient q = quotient(a, out.radical);
  const std::size_t m = q.representatives.size();
  Matrix section;
  for (auto r : q.representatives)
    section.push_back(a.basis_vector(r));

  const auto powers = radical_powers(a, out.radical);
  for (std::size_t level = 0; level < powers.size(); ++level) {
    const Subspace& cur = powers[level];
    const Subspace next = level + 1 < powers.size() ? powers[level + 1] : Subspace(n);
    const Matrix& wbasis = cur.basis();
    const std::size_t w = wbasis.size();
    const std::size_t unknowns = m * w;
    std::vector<std::vector<Vec>> left(m, std::vector<Vec>(w)), right(m, std::vector<Vec>(w));
    std::vector<Vec> wr(w);
    for (std::size_t r = 0; r < w; ++r) {
      wr[r] = next.reduce(wbasis[r]);
      for (std::size_t i = 0; i < m; ++i) {
        left[i][r] = next.reduce(a.multiply(section[i], wbasis[r]));
        right[i][r] = next.reduce(a.multiply(wbasis[r], section[i]));
      }
    }
    Matrix rows;
    Vec rhs;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        Vec defect = a.multiply(section[i], section[j]);
        for (const auto& [l, c] : q.algebra.product(i, j))
          axpy(defect, -c, section[l]);
        defect = next.reduce(defect);
        // defect + s_i d(j) + d(i) s_j - d(ij) = 0 modulo the next power.
        std::vector<Vec> coeff(n, zero_vec(unknowns));
        for (std::size_t r = 0; r < w; ++r) {
          for (std::size_t x = 0; x < n; ++x) {
            coeff[x][j * w + r] += left[i][r][x];
            coeff[x][i * w + r] += right[j][r][x];
          }
          for (const auto& [l, c] : q.algebra.product(i, j))
            for (std::size_t x = 0; x < n; ++x)
              coeff[x][l * w + r] -= c * wr[r][x];
        }
        for (std::size_t x = 0; x < n; ++x) {
          if (is_zero(coeff[x]) && sgn(defect[x]) == 0)
            continue;
          rows.push_back(std::move(coeff[x]));
          rhs.push_back(-defect[x]);
        }
      }
    if (rows.empty())
      continue;
    const auto sol = solve(rows, rhs, unknowns);
    if (!sol)
      raise(ErrorKind::NonSplit, a.name() + ": no multiplicative lift through radical power " +
                                   std::to_string(level + 1));
    for (std::size_t l = 0; l < m; ++l)
      for (std::size_t r = 0; r < w; ++r)
        axpy(section[l], (*sol)[l * w + r], wbasis[r]);
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vec expected = zero_vec(n);
      for (const auto& [l, c] : q.algebra.product(i, j))
        axpy(expected, c, section[l]);
      if (a.multiply(section[i], section[j]) != expected)
        raise(ErrorKind::NonSplit, a.name() + ": lifted section is not multiplicative");
    }
  out.complement = Subspace::span(n, section);
  out.section = std::move(section);
  return out;
}

SplittingData graded_malcev_square_zero(const GradedAlgebra& a, const Matrix& section_in)
{
  const std::size_t n = a.dim();
  if (!is_right_zero_band(a.semigroup()))
    raise(ErrorKind::PreconditionFailed, a.name() + ": square-zero step expects a right zero band grading");
  const auto unit = find_unit(a);
  if (!unit)
    raise(ErrorKind::PreconditionFailed, a.name() + ": algebra has no unit");
  SplittingData out;
  out.radical = jacobson_radical(a);
  if (!subspace_product(a, out.radical, out.radical).is_zero())
    raise(ErrorKind::PreconditionFailed, a.name() + ": radical does not square to zero");
  const Quotient q = quotient(a, out.radical);
  Matrix section = section_in;
  const Vec one = *unit;
  for (auto t : support(a)) {
    const Vec et = component_project(a, t, one);
    const Vec image = vector_in(section, q.project(et), n);
    if (image == et)
      continue;
    const Vec j = sub(image, et);
    const Vec ej = a.multiply(et, j), je = a.multiply(j, et);
    const Vec u = add(one, sub(ej, je));
    const Vec uinv = add(sub(one, ej), je);
    for (auto& s : section)
      s = a.multiply(a.multiply(u, s), uinv);
    out.correction_log.push_back({0, t, j});
  }
  out.complement = Subspace::span(n, section);
  if (!is_graded_subspace(a, out.complement))
    raise(ErrorKind::PreconditionFailed, a.name() + ": corrected complement is not graded");
  out.section = std::move(section);
  return out;
}

namespace {

SplittingData graded_malcev_right(const GradedAlgebra& a, std::size_t level)
{
  const std::size_t n = a.dim();
  const Subspace rad = jacobson_radical(a);
  if (rad.is_zero()) {
    SplittingData out;
    out.radical = rad;
    out.complement = Subspace::whole(n);
    out.section = identity(n);
    return out;
  }
  const Subspace rad2 = subspace_product(a, rad, rad);
  if (rad2.is_zero()) {
    SplittingData base = malcev_complement(a);
    SplittingData out = graded_malcev_square_zero(a, base.section);
    for (auto& c : out.correction_log)
      c.level = level;
    return out;
  }
  const Quotient q = quotient(a, rad2);
  if (!q.graded)
    raise(ErrorKind::PreconditionFailed, a.name() + ": square of the radical is not graded");
  SplittingData top = graded_malcev_right(q.algebra, level);
  Matrix gens;
  for (const auto& b : top.complement.basis())
    gens.push_back(q.lift(b));
  for (const auto& b : rad2.basis())
    gens.push_back(b);
  const Subspace preimage = Subspace::span(n, std::move(gens));
  const Subalgebra sub = subalgebra(a, preimage);
  if (!sub.graded)
    raise(ErrorKind::PreconditionFailed, a.name() + ": preimage of the graded complement is not graded");
  SplittingData inner = graded_malcev_right(sub.algebra, level + 1);

  SplittingData out;
  out.radical = rad;
  Matrix comp;
  for (const auto& b : inner.complement.basis())
    comp.push_back(sub.to_ambient(b));
  out.complement = Subspace::span(n, std::move(comp));
  for (auto c : top.correction_log) {
    c.j = q.lift(c.j);
    out.correction_log.push_back(std::move(c));
  }
  for (auto c : inner.correction_log) {
    c.j = sub.to_ambient(c.j);
    out.correction_log.push_back(std::move(c));
  }
  out.section = section_from_complement(a, quotient(a, rad), out.complement);
  return out;
}

} // namespace

SplittingData graded_malcev_zeroband(const GradedAlgebra& a)
{
  if (!find_unit(a))
    raise(ErrorKind::PreconditionFailed, a.name() + ": algebra has no unit");
  if (is_right_zero_band(a.semigroup())) {
    SplittingData out = graded_malcev_right(a, 0);
    if (!is_graded_subspace(a, out.complement) || !is_subalgebra(a, out.complement))
      raise(ErrorKind::PreconditionFailed, a.name() + ": graded splitting failed verification");
    return out;
  }
  if (is_left_zero_band(a.semigroup())) {
    const GradedAlgebra op = opposite(a);
    SplittingData out = graded_malcev_right(op, 0);
    out.section = section_from_complement(a, quotient(a, out.radical), out.complement);
    if (!is_graded_subspace(a, out.complement) || !is_subalgebra(a, out.complement))
      raise(ErrorKind::PreconditionFailed, a.name() + ": graded splitting failed verification");
    return out;
  }
  raise(ErrorKind::PreconditionFailed, a.name() + ": grading semigroup is not a left or right zero band");
}

std::string_view to_string(SimplicityVerdict v)
{
  switch (v) {
  case SimplicityVerdict::certified_true: return "certified_true";
  case SimplicityVerdict::certified_false: return "certified_false";
  case SimplicityVerdict::probable_true: return "probable_true";
  }
  return "?";
}

namespace {

// Univariate polynomials over Q, coefficients from the constant term upward.
using Poly = std::vector<Rational>;

void trim(Poly& p)
{
  while (!p.empty() && sgn(p.back()) == 0)
    p.pop_back();
}

int degree(const Poly& p)
{
  return p.empty() ? -1 : static_cast<int>(p.size()) - 1;
}

Poly poly_sub(const Poly& a, const Poly& b)
{
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i)
    r[i] -= b[i];
  trim(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b)
{
  if (a.empty() || b.empty())
    return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// Quotient of a by b (b nonzero).
Poly poly_div(Poly a, const Poly& b)
{
  trim(a);
  const int db = degree(b);
  if (degree(a) < db)
    return {};
  Poly q(static_cast<std::size_t>(degree(a) - db + 1), Rational(0));
  while (degree(a) >= db) {
    const std::size_t shift = static_cast<std::size_t>(degree(a) - db);
    const Rational c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[i + shift] -= c * b[i];
    trim(a);
  }
  return q;
}

// Greatest common divisor of the maximal minors of a polynomial matrix, via Hermite elimination.
std::optional<Poly> maximal_minor_gcd(std::vector<std::vector<Poly>> m, std::size_t ncols)
{
  Poly product{Rational(1)};
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols; ++c) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < m.size(); ++i)
        if (!m[i][c].empty() && (!best || degree(m[i][c]) < degree(m[*best][c])))
          best = i;
      if (!best)
        return std::nullopt;
      std::swap(m[r], m[*best]);
      bool others = false;
      for (std::size_t i = r + 1; i < m.size(); ++i) {
        if (m[i][c].empty())
          continue;
        const Poly f = poly_div(m[i][c], m[r][c]);
        for (std::size_t j = c; j < ncols; ++j)
          m[i][j] = poly_sub(m[i][j], poly_mul(f, m[r][j]));
        if (!m[i][c].empty())
          others = true;
      }
      if (!others)
        break;
    }
    product = poly_mul(product, m[r][c]);
    ++r;
  }
  return product;
}

// Basis of the unital algebra generated by the given operators (n x n matrices flattened row-major),
// computed over a prime field.
std::size_t generated_algebra_dim_mod_p(const std::vector<Matrix>& gens, std::size_t n, std::uint32_t p)
{
  const PrimeField f(p);
  using Row = std::vector<std::uint32_t>;
  auto flatten = [&](const std::vector<Row>& mat) {
    Row r(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        r[i * n + j] = mat[i][j];
    return r;
  };
  std::vector<std::vector<Row>> g;
  for (const auto& m : gens) {
    std::vector<Row> mm(n, Row(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        mm[i][j] = f.from_rational(m[i][j]);
    g.push_back(std::move(mm));
  }
  IncrementalEchelon<PrimeField> ech(f, n * n);
  std::vector<std::vector<Row>> frontier;
  std::vector<Row> id(n, Row(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    id[i][i] = 1;
  if (ech.insert(flatten(id)))
    frontier.push_back(id);
  for (const auto& m : g)
    if (ech.insert(flatten(m)))
      frontier.push_back(m);
  while (!frontier.empty() && !ech.full()) {
    std::vector<std::vector<Row>> next;
    for (const auto& w : frontier)
      for (const auto& m : g) {
        std::vector<Row> prod(n, Row(n, 0));
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t k = 0; k < n; ++k) {
            if (w[i][k] == 0)
              continue;
            for (std::size_t j = 0; j < n; ++j)
              prod[i][j] = f.add(prod[i][j], f.mul(w[i][k], m[k][j]));
          }
        if (ech.insert(flatten(prod)))
          next.push_back(std::move(prod));
        if (ech.full())
          break;
      }
    frontier = std::move(next);
  }
  return ech.rank();
}

Matrix left_mult(const GradedAlgebra& a, std::size_t b)
{
  const std::size_t n = a.dim();
  Matrix m(n, zero_vec(n));
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [k, c] : a.product(b, j))
      m[k][j] += c;
  return m;
}

Matrix right_mult(const GradedAlgebra& a, std::size_t b)
{
  const std::size_t n = a.dim();
  Matrix m(n, zero_vec(n));
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [k, c] : a.product(j, b))
      m[k][j] += c;
  return m;
}

Matrix enveloping_basis(const GradedAlgebra& a)
{
  // Basis (as matrices) of the unital algebra generated by all left and right multiplications.
  const std::size_t n = a.dim();
  std::vector<Matrix> gens;
  for (std::size_t b = 0; b < n; ++b) {
    gens.push_back(left_mult(a, b));
    gens.push_back(right_mult(a, b));
  }
  auto flatten = [&](const Matrix& m) {
    Vec v;
    v.reserve(n * n);
    for (const auto& row : m)
      v.insert(v.end(), row.begin(), row.end());
    return v;
  };
  Matrix found;
  Subspace span(n * n);
  std::vector<Matrix> frontier;
  auto try_add = [&](const Matrix& m) {
    const Vec v = flatten(m);
    if (span.contains(v))
      return false;
    found.push_back(v);
    span = Subspace::span(n * n, found);
    return true;
  };
  const Matrix id = identity(n);
  if (try_add(id))
    frontier.push_back(id);
  for (const auto& g : gens)
    if (try_add(g))
      frontier.push_back(g);
  while (!frontier.empty()) {
    std::vector<Matrix> next;
    for (const auto& w : frontier)
      for (const auto& g : gens) {
        Matrix prod = multiply(w, g);
        if (try_add(prod))
          next.push_back(std::move(prod));
      }
    frontier = std::move(next);
  }
  return found;
}

bool symbolic_component_certified(const GradedAlgebra& a, const Matrix& envelope, const Vec& u1, const Vec& u2)
{
  const std::size_t n = a.dim();
  std::vector<std::vector<Poly>> rows;
  for (const auto& flat : envelope) {
    std::vector<Poly> row(n);
    for (std::size_t i = 0; i < n; ++i) {
      Rational c0 = 0, c1 = 0;
      for (std::size_t j = 0; j < n; ++j) {
        c0 += flat[i * n + j] * u2[j];
        c1 += flat[i * n + j] * u1[j];
      }
      Poly p{c0, c1};
      trim(p);
      row[i] = std::move(p);
    }
    rows.push_back(std::move(row));
  }
  const auto g = maximal_minor_gcd(std::move(rows), n);
  return g && degree(*g) == 0;
}

} // namespace

SimplicityResult is_graded_simple(const GradedAlgebra& a, const SimplicityOptions& options)
{
  const std::size_t n = a.dim();
  SimplicityResult r;
  const Subspace whole = Subspace::whole(n);
  const Subspace square = algebra_square(a);
  if (square.is_zero()) {
    r.verdict = SimplicityVerdict::certified_false;
    r.method = "A^2 = 0";
    return r;
  }
  if (square.dim() < n) {
    r.verdict = SimplicityVerdict::certified_false;
    r.method = "A^2 is a proper graded ideal";
    r.witness = square;
    return r;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Subspace ideal = ideal_generated(a, {a.basis_vector(i)});
    if (ideal.dim() < n) {
      r.verdict = SimplicityVerdict::certified_false;
      r.method = "basis element " + a.label(i) + " generates a proper graded ideal";
      r.witness = ideal;
      return r;
    }
  }
  const auto supp = support(a);
  std::vector<Subspace> comps;
  bool small = true;
  for (auto t : supp) {
    comps.push_back(component(a, t));
    if (comps.back().dim() > 2)
      small = false;
  }
  if (small) {
    const Matrix envelope = enveloping_basis(a);
    bool all = true;
    for (const auto& c : comps)
      if (c.dim() == 2 && !symbolic_component_certified(a, envelope, c.basis()[0], c.basis()[1]))
        all = false;
    if (all) {
      r.verdict = SimplicityVerdict::certified_true;
      r.method = "symbolic maximal-minor gcd on every two-dimensional component";
      return r;
    }
  }
  {
    std::vector<Matrix> gens;
    for (std::size_t b = 0; b < n; ++b) {
      gens.push_back(left_mult(a, b));
      gens.push_back(right_mult(a, b));
    }
    for (auto t : supp) {
      Matrix p(n, zero_vec(n));
      for (std::size_t i = 0; i < n; ++i)
        if (a.degree(i) == t)
          p[i][i] = 1;
      gens.push_back(std::move(p));
    }
    const std::uint32_t prime = prime_from_seed(options.seed ^ 0x9e3779b97f4a7c15ULL);
    bool representable = true;
    const PrimeField f(prime);
    for (const auto& g : gens)
      for (const auto& row : g)
        for (const auto& x : row)
          representable = representable && f.represents(x);
    if (representable && generated_algebra_dim_mod_p(gens, n, prime) == n * n) {
      r.verdict = SimplicityVerdict::certified_true;
      r.method = "multiplications and component projections generate all linear endomorphisms";
      return r;
    }
  }
  std::mt19937_64 rng(options.seed);
  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    const Subspace& c = comps[rng() % comps.size()];
    Vec v = zero_vec(n);
    while (is_zero(v)) {
      for (const auto& b : c.basis())
        axpy(v, Rational(static_cast<long>(rng() % 7) - 3), b);
    }
    const Subspace ideal = ideal_generated(a, {v});
    ++r.trials;
    if (ideal.dim() < n) {
      r.verdict = SimplicityVerdict::certified_false;
      r.method = "sampled homogeneous element generates a proper graded ideal";
      r.witness = ideal;
      return r;
    }
  }
  r.verdict = SimplicityVerdict::probable_true;
  r.method = "randomized sampling of homogeneous elements";
  return r;
}

ExponentResult graded_exponent(const GradedAlgebra& a)
{
  const std::size_t n = a.dim();
  const Subspace rad = jacobson_radical(a);
  if (!is_graded_subspace(a, rad))
    raise(ErrorKind::RadicalNotGraded, a.name() + ": the Jacobson radical is not graded");
  if (rad.dim() == n)
    raise(ErrorKind::NilpotentAlgebra, a.name() + ": algebra is nilpotent");
  const Quotient q = quotient(a, rad);
  const WedderburnData w = wedderburn_decompose(q.algebra);
  for (std::size_t i = 0; i < w.simple_ideals.size(); ++i)
    if (!is_graded_subspace(q.algebra, w.simple_ideals[i]))
      raise(ErrorKind::PreconditionFailed, a.name() + ": simple summand " + std::to_string(i + 1) + " is not graded");

  ExponentResult res;
  SplittingData split;
  if (find_unit(a) && (is_left_zero_band(a.semigroup()) || is_right_zero_band(a.semigroup()))) {
    split = graded_malcev_zeroband(a);
    res.graded_complement = true;
  } else {
    split = malcev_complement(a);
  }
  const auto supp = support(a);
  std::vector<Subspace> summands;
  for (const auto& b : w.simple_ideals) {
    Matrix gens;
    for (const auto& v : b.basis()) {
      const Vec lifted = vector_in(split.section, v, n);
      for (auto t : supp) {
        Vec p = component_project(a, t, lifted);
        if (!is_zero(p))
          gens.push_back(std::move(p));
      }
    }
    summands.push_back(Subspace::span(n, std::move(gens)));
    res.summand_dims.push_back(b.dim());
  }
  const Subspace algebra_space = Subspace::whole(n);
  std::vector<std::size_t> seq;
  std::vector<bool> used(summands.size(), false);
  std::function<void(const Subspace&, std::size_t)> dfs = [&](const Subspace& chain, std::size_t total) {
    if (total > res.d) {
      res.d = total;
      res.best_sequence = seq;
    }
    const Subspace extended = subspace_sum(chain, subspace_product(a, chain, algebra_space));
    for (std::size_t i = 0; i < summands.size(); ++i) {
      if (used[i])
        continue;
      const Subspace next = subspace_product(a, extended, summands[i]);
      if (next.is_zero())
        continue;
      used[i] = true;
      seq.push_back(i);
      dfs(next, total + res.summand_dims[i]);
      seq.pop_back();
      used[i] = false;
    }
  };
  for (std::size_t i = 0; i < summands.size(); ++i) {
    if (summands[i].is_zero())
      continue;
    used[i] = true;
    seq.push_back(i);
    dfs(summands[i], res.summand_dims[i]);
    seq.pop_back();
    used[i] = false;
  }
  return res;
}

std::size_t graded_exponent_d(const GradedAlgebra& a)
{
  return graded_exponent(a).d;
}

std::size_t ordinary_exponent(const GradedAlgebra& a)
{
  return graded_exponent(trivially_graded(a)).d;
}

} // namespace gralg
