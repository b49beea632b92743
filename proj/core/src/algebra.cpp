#include "gralg/algebra.hpp"

#include "gralg/error.hpp"

#include <algorithm>
#include <limits>

namespace gralg {

namespace {

std::string triple_name(const GradedAlgebra& a, std::size_t i, std::size_t j, std::size_t k)
{
  return "(" + a.label(i) + ", " + a.label(j) + ", " + a.label(k) + ")";
}

void accumulate(Vec& out, const Rational& c, const SparseVec& s)
{
  for (const auto& [k, v] : s)
    out[k] += c * v;
}

} // namespace

GradedAlgebra::GradedAlgebra(std::string name, FiniteSemigroup semigroup, std::vector<std::string> labels,
                             std::vector<std::size_t> degrees, const StructureMap& structure,
                             std::optional<Vec> declared_unit)
  : name_(std::move(name)), semigroup_(std::move(semigroup)), labels_(std::move(labels)), degrees_(std::move(degrees)),
    unit_(std::move(declared_unit))
{
  const std::size_t n = labels_.size();
  if (degrees_.size() != n)
    raise(ErrorKind::DimensionMismatch, "expected " + std::to_string(n) + " degrees, got " +
                                          std::to_string(degrees_.size()));
  for (auto d : degrees_)
    if (d >= semigroup_.size())
      raise(ErrorKind::BadParam, "degree index " + std::to_string(d) + " outside the semigroup");
  if (unit_ && unit_->size() != n)
    raise(ErrorKind::DimensionMismatch, "unit vector has wrong length");
  table_.assign(n * n, SparseVec{});
  for (const auto& [key, vec] : structure) {
    const auto [i, j] = key;
    if (i >= n || j >= n)
      raise(ErrorKind::BadParam, "structure constant index out of range");
    if (vec.size() != n)
      raise(ErrorKind::DimensionMismatch, "structure vector has wrong length");
    table_[i * n + j] = to_sparse(vec);
  }
}

std::optional<std::size_t> GradedAlgebra::index_of(const std::string& label) const
{
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label)
      return i;
  return std::nullopt;
}

StructureMap GradedAlgebra::structure() const
{
  StructureMap m;
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!product(i, j).empty())
        m[{i, j}] = to_dense(product(i, j), n);
  return m;
}

Vec GradedAlgebra::multiply(const Vec& u, const Vec& v) const
{
  const std::size_t n = dim();
  Vec out = zero_vec(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(u[i]) == 0)
      continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(v[j]) == 0)
        continue;
      const auto& p = product(i, j);
      if (p.empty())
        continue;
      accumulate(out, u[i] * v[j], p);
    }
  }
  return out;
}

ValidationReport validate(const GradedAlgebra& a)
{
  ValidationReport r;
  const std::size_t n = a.dim();
  const auto& sg = a.semigroup();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t target = sg.mul(a.degree(i), a.degree(j));
      for (const auto& [k, c] : a.product(i, j))
        if (a.degree(k) != target)
          r.grading_violations.push_back(a.label(i) + "*" + a.label(j) + " has a component along " + a.label(k) +
                                         " of degree " + sg.label(a.degree(k)) + ", expected " + sg.label(target));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec left = zero_vec(n), right = zero_vec(n);
        for (const auto& [m, c] : a.product(i, j))
          accumulate(left, c, a.product(m, k));
        for (const auto& [m, c] : a.product(j, k))
          accumulate(right, c, a.product(i, m));
        if (left != right)
          r.associativity_violations.push_back(triple_name(a, i, j, k));
      }
  if (const auto& u = a.declared_unit()) {
    for (std::size_t i = 0; i < n; ++i) {
      const Vec b = a.basis_vector(i);
      if (a.multiply(*u, b) != b || a.multiply(b, *u) != b)
        r.unit_violations.push_back("declared unit fails on " + a.label(i));
    }
  }
  return r;
}

void require_valid(const GradedAlgebra& a)
{
  const ValidationReport r = validate(a);
  if (!r.associativity_violations.empty())
    raise(ErrorKind::NotAssociative, a.name() + ": basis triple " + r.associativity_violations.front() +
                                       " is not associative");
  if (!r.grading_violations.empty())
    raise(ErrorKind::GradingViolation, a.name() + ": " + r.grading_violations.front());
  if (!r.unit_violations.empty())
    raise(ErrorKind::BadParam, a.name() + ": " + r.unit_violations.front());
}

GradedAlgebra make_algebra(std::string name, FiniteSemigroup semigroup, std::vector<std::string> labels,
                           std::vector<std::size_t> degrees, const StructureMap& structure,
                           std::optional<Vec> declared_unit)
{
  GradedAlgebra a(std::move(name), std::move(semigroup), std::move(labels), std::move(degrees), structure,
                  std::move(declared_unit));
  require_valid(a);
  return a;
}

Subspace Subspace::span(std::size_t ambient, Matrix vectors)
{
  for (const auto& v : vectors)
    if (v.size() != ambient)
      raise(ErrorKind::DimensionMismatch, "vector length does not match the ambient dimension");
  Echelon e = row_reduce(std::move(vectors), ambient);
  Subspace s(ambient);
  s.basis_ = std::move(e.rows);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::whole(std::size_t ambient)
{
  return span(ambient, identity(ambient));
}

Vec Subspace::reduce(const Vec& v) const
{
  Vec r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational c = r[pivots_[i]];
    if (sgn(c) != 0)
      axpy(r, -c, basis_[i]);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const
{
  return gralg::is_zero(reduce(v));
}

Vec Subspace::coordinates(const Vec& v) const
{
  Vec c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i)
    c[i] = v[pivots_[i]];
  return c;
}

bool Subspace::contains(const Subspace& other) const
{
  for (const auto& v : other.basis())
    if (!contains(v))
      return false;
  return true;
}

bool Subspace::operator==(const Subspace& other) const
{
  return ambient_ == other.ambient_ && basis_ == other.basis_;
}

Subspace subspace_sum(const Subspace& s, const Subspace& t)
{
  Matrix m = s.basis();
  m.insert(m.end(), t.basis().begin(), t.basis().end());
  return Subspace::span(s.ambient_dim(), std::move(m));
}

Subspace subspace_intersect(const Subspace& s, const Subspace& t)
{
  const std::size_t n = s.ambient_dim();
  if (s.is_zero() || t.is_zero())
    return Subspace(n);
  const Matrix ann = kernel(s.basis(), n);
  if (ann.empty())
    return t;
  Matrix cond(ann.size(), zero_vec(t.dim()));
  for (std::size_t f = 0; f < ann.size(); ++f)
    for (std::size_t k = 0; k < t.dim(); ++k) {
      Rational acc = 0;
      for (std::size_t i = 0; i < n; ++i)
        acc += ann[f][i] * t.basis()[k][i];
      cond[f][k] = acc;
    }
  Matrix out;
  for (const auto& c : kernel(cond, t.dim())) {
    Vec v = zero_vec(n);
    for (std::size_t k = 0; k < t.dim(); ++k)
      axpy(v, c[k], t.basis()[k]);
    out.push_back(std::move(v));
  }
  return Subspace::span(n, std::move(out));
}

Subspace subspace_product(const GradedAlgebra& a, const Subspace& s, const Subspace& t)
{
  Matrix m;
  for (const auto& x : s.basis())
    for (const auto& y : t.basis()) {
      Vec p = a.multiply(x, y);
      if (!is_zero(p))
        m.push_back(std::move(p));
    }
  return Subspace::span(a.dim(), std::move(m));
}

bool contains(const Subspace& s, const Vec& v)
{
  return s.contains(v);
}

Subspace component(const GradedAlgebra& a, std::size_t t)
{
  Matrix m;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.degree(i) == t)
      m.push_back(a.basis_vector(i));
  return Subspace::span(a.dim(), std::move(m));
}

Vec component_project(const GradedAlgebra& a, std::size_t t, const Vec& v)
{
  Vec r = v;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.degree(i) != t)
      r[i] = 0;
  return r;
}

std::vector<std::size_t> support(const GradedAlgebra& a)
{
  std::vector<std::size_t> s;
  for (std::size_t t = 0; t < a.semigroup().size(); ++t)
    if (std::find(a.degrees().begin(), a.degrees().end(), t) != a.degrees().end())
      s.push_back(t);
  return s;
}

bool is_graded_subspace(const GradedAlgebra& a, const Subspace& s)
{
  std::size_t total = 0;
  for (std::size_t t = 0; t < a.semigroup().size(); ++t)
    total += subspace_intersect(s, component(a, t)).dim();
  return total == s.dim();
}

Subspace algebra_square(const GradedAlgebra& a)
{
  Matrix m;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!a.product(i, j).empty())
        m.push_back(to_dense(a.product(i, j), a.dim()));
  return Subspace::span(a.dim(), std::move(m));
}

std::optional<Vec> find_unit(const GradedAlgebra& a)
{
  const std::size_t n = a.dim();
  if (n == 0)
    return std::nullopt;
  // Unknown u: sum_k u_k (b_k b_i) = b_i and sum_k u_k (b_i b_k) = b_i for every i.
  Matrix rows;
  Vec rhs;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix left(n, zero_vec(n)), right(n, zero_vec(n));
    for (std::size_t k = 0; k < n; ++k) {
      for (const auto& [m, c] : a.product(k, i))
        left[m][k] += c;
      for (const auto& [m, c] : a.product(i, k))
        right[m][k] += c;
    }
    for (std::size_t m = 0; m < n; ++m) {
      rows.push_back(left[m]);
      rhs.push_back(m == i ? 1 : 0);
      rows.push_back(right[m]);
      rhs.push_back(m == i ? 1 : 0);
    }
  }
  return solve(rows, rhs, n);
}

GradedAlgebra adjoin_unit(const GradedAlgebra& a)
{
  const std::size_t n = a.dim() + 1;
  std::vector<std::string> labels{"1"};
  labels.insert(labels.end(), a.labels().begin(), a.labels().end());
  StructureMap m;
  for (std::size_t i = 0; i < n; ++i) {
    m[{0, i}] = unit_vec(n, i);
    m[{i, 0}] = unit_vec(n, i);
  }
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const auto& p = a.product(i, j);
      if (p.empty())
        continue;
      Vec v = zero_vec(n);
      for (const auto& [k, c] : p)
        v[k + 1] = c;
      m[{i + 1, j + 1}] = std::move(v);
    }
  return GradedAlgebra(a.name() + "+", trivial_semigroup(), std::move(labels), std::vector<std::size_t>(n, 0), m,
                       unit_vec(n, 0));
}

Subspace ideal_generated(const GradedAlgebra& a, const Matrix& vectors)
{
  const std::size_t n = a.dim();
  Subspace cur = Subspace::span(n, vectors);
  for (;;) {
    Matrix m = cur.basis();
    for (const auto& v : cur.basis())
      for (std::size_t i = 0; i < n; ++i) {
        const Vec b = a.basis_vector(i);
        m.push_back(a.multiply(b, v));
        m.push_back(a.multiply(v, b));
      }
    Subspace next = Subspace::span(n, std::move(m));
    if (next.dim() == cur.dim())
      return cur;
    cur = std::move(next);
  }
}

bool is_two_sided_ideal(const GradedAlgebra& a, const Subspace& s)
{
  for (const auto& v : s.basis())
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const Vec b = a.basis_vector(i);
      if (!s.contains(a.multiply(b, v)) || !s.contains(a.multiply(v, b)))
        return false;
    }
  return true;
}

bool is_subalgebra(const GradedAlgebra& a, const Subspace& s)
{
  for (const auto& x : s.basis())
    for (const auto& y : s.basis())
      if (!s.contains(a.multiply(x, y)))
        return false;
  return true;
}

GradedAlgebra direct_sum(const GradedAlgebra& a, const GradedAlgebra& b)
{
  if (!(a.semigroup() == b.semigroup()))
    raise(ErrorKind::SemigroupMismatch, "direct sum needs both summands graded by the same semigroup");
  const std::size_t n = a.dim() + b.dim();
  std::vector<std::string> labels;
  std::vector<std::size_t> degrees;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    labels.push_back("(" + a.label(i) + ",0)");
    degrees.push_back(a.degree(i));
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    labels.push_back("(0," + b.label(i) + ")");
    degrees.push_back(b.degree(i));
  }
  StructureMap m;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!a.product(i, j).empty()) {
        Vec v = zero_vec(n);
        for (const auto& [k, c] : a.product(i, j))
          v[k] = c;
        m[{i, j}] = std::move(v);
      }
  const std::size_t off = a.dim();
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      if (!b.product(i, j).empty()) {
        Vec v = zero_vec(n);
        for (const auto& [k, c] : b.product(i, j))
          v[k + off] = c;
        m[{i + off, j + off}] = std::move(v);
      }
  return GradedAlgebra(a.name() + "+" + b.name(), a.semigroup(), std::move(labels), std::move(degrees), m);
}

GradedAlgebra opposite(const GradedAlgebra& a)
{
  StructureMap m;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!a.product(j, i).empty())
        m[{i, j}] = to_dense(a.product(j, i), a.dim());
  return GradedAlgebra(a.name() + "^op", a.semigroup().opposite(), a.labels(), a.degrees(), m, a.declared_unit());
}

GradedAlgebra trivially_graded(const GradedAlgebra& a)
{
  return GradedAlgebra(a.name(), trivial_semigroup(), a.labels(), std::vector<std::size_t>(a.dim(), 0), a.structure(),
                       a.declared_unit());
}

GradedAlgebra change_basis(const GradedAlgebra& a, const Matrix& p)
{
  const std::size_t n = a.dim();
  if (p.size() != n)
    raise(ErrorKind::DimensionMismatch, "change of basis needs a square matrix");
  const auto pinv = inverse(p);
  if (!pinv)
    raise(ErrorKind::BadParam, "change of basis matrix is singular");
  std::vector<std::size_t> degrees(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<std::size_t> deg;
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(p[i][j]) != 0) {
        if (deg && *deg != a.degree(j))
          raise(ErrorKind::GradingViolation, "new basis vector " + std::to_string(i) + " is not homogeneous");
        deg = a.degree(j);
      }
    degrees[i] = *deg;
  }
  auto to_new = [&](const Vec& old) {
    Vec c = zero_vec(n);
    for (std::size_t k = 0; k < n; ++k)
      if (sgn(old[k]) != 0)
        axpy(c, old[k], (*pinv)[k]);
    return c;
  };
  StructureMap m;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec prod = a.multiply(p[i], p[j]);
      if (!is_zero(prod))
        m[{i, j}] = to_new(prod);
    }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    labels.push_back("b" + std::to_string(i + 1));
  std::optional<Vec> unit;
  if (a.declared_unit())
    unit = to_new(*a.declared_unit());
  return GradedAlgebra(a.name(), a.semigroup(), std::move(labels), std::move(degrees), m, unit);
}

bool is_isomorphism(const GradedAlgebra& from, const GradedAlgebra& to, const Matrix& images)
{
  const std::size_t n = from.dim();
  if (to.dim() != n || images.size() != n)
    return false;
  if (rank(images, n) != n)
    return false;
  auto map = [&](const Vec& v) {
    Vec out = zero_vec(n);
    for (std::size_t i = 0; i < n; ++i)
      axpy(out, v[i], images[i]);
    return out;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (map(to_dense(from.product(i, j), n)) != to.multiply(images[i], images[j]))
        return false;
  return true;
}

Vec Quotient::project(const Vec& v) const
{
  const Vec r = ideal.reduce(v);
  Vec q(representatives.size());
  for (std::size_t i = 0; i < representatives.size(); ++i)
    q[i] = r[representatives[i]];
  return q;
}

Vec Quotient::lift(const Vec& q) const
{
  Vec v = zero_vec(ideal.ambient_dim());
  for (std::size_t i = 0; i < representatives.size(); ++i)
    v[representatives[i]] = q[i];
  return v;
}

Quotient quotient(const GradedAlgebra& a, const Subspace& ideal)
{
  if (!is_two_sided_ideal(a, ideal))
    raise(ErrorKind::PreconditionFailed, "quotient requires a two-sided ideal");
  Quotient q;
  q.ideal = ideal;
  std::vector<bool> is_pivot(a.dim(), false);
  for (auto p : ideal.pivots())
    is_pivot[p] = true;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!is_pivot[i])
      q.representatives.push_back(i);
  q.graded = is_graded_subspace(a, ideal);
  const std::size_t m = q.representatives.size();
  std::vector<std::string> labels;
  std::vector<std::size_t> degrees;
  for (auto r : q.representatives) {
    labels.push_back(a.label(r));
    degrees.push_back(q.graded ? a.degree(r) : 0);
  }
  StructureMap sm;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const auto& p = a.product(q.representatives[i], q.representatives[j]);
      if (p.empty())
        continue;
      Vec v = q.project(to_dense(p, a.dim()));
      if (!is_zero(v))
        sm[{i, j}] = std::move(v);
    }
  q.algebra = GradedAlgebra(a.name() + "/I", q.graded ? a.semigroup() : trivial_semigroup(), std::move(labels),
                            std::move(degrees), sm);
  return q;
}

Vec Subalgebra::to_ambient(const Vec& coords) const
{
  Vec v = zero_vec(embedding.empty() ? 0 : embedding[0].size());
  for (std::size_t i = 0; i < embedding.size(); ++i)
    axpy(v, coords[i], embedding[i]);
  return v;
}

Subalgebra subalgebra(const GradedAlgebra& a, const Subspace& s)
{
  if (!is_subalgebra(a, s))
    raise(ErrorKind::PreconditionFailed, "subspace is not closed under multiplication");
  Subalgebra sub;
  sub.embedding = s.basis();
  sub.graded = is_graded_subspace(a, s);
  const std::size_t m = s.dim();
  std::vector<std::string> labels;
  std::vector<std::size_t> degrees;
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back("s" + std::to_string(i + 1));
    degrees.push_back(sub.graded ? a.degree(s.pivots()[i]) : 0);
  }
  StructureMap sm;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Vec p = a.multiply(s.basis()[i], s.basis()[j]);
      if (!is_zero(p))
        sm[{i, j}] = s.coordinates(p);
    }
  sub.algebra = GradedAlgebra(a.name() + "|S", sub.graded ? a.semigroup() : trivial_semigroup(), std::move(labels),
                              std::move(degrees), sm);
  return sub;
}

std::optional<MonomialTable> monomial_table(const GradedAlgebra& a)
{
  MonomialTable t;
  t.dim = a.dim();
  t.target.assign(t.dim * t.dim, -1);
  t.coeff.assign(t.dim * t.dim, 0);
  for (std::size_t i = 0; i < t.dim; ++i)
    for (std::size_t j = 0; j < t.dim; ++j) {
      const auto& p = a.product(i, j);
      if (p.empty())
        continue;
      if (p.size() != 1)
        return std::nullopt;
      const Rational& c = p.front().second;
      if (c.get_den() != 1 || !c.get_num().fits_slong_p())
        return std::nullopt;
      t.target[i * t.dim + j] = static_cast<std::int32_t>(p.front().first);
      t.coeff[i * t.dim + j] = c.get_num().get_si();
    }
  return t;
}

Vec evaluate_word(const GradedAlgebra& a, const std::vector<std::size_t>& word)
{
  const std::size_t n = a.dim();
  if (word.empty())
    raise(ErrorKind::BadParam, "empty word");
  SparseVec cur{{word[0], Rational(1)}};
  for (std::size_t p = 1; p < word.size() && !cur.empty(); ++p) {
    Vec next = zero_vec(n);
    for (const auto& [m, c] : cur)
      accumulate(next, c, a.product(m, word[p]));
    cur = to_sparse(next);
  }
  return to_dense(cur, n);
}

} // namespace gralg
