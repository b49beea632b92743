#pragma once

#include "gralg/linalg.hpp"
#include "gralg/rational.hpp"
#include "gralg/semigroup.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gralg {

using StructureMap = std::map<std::pair<std::size_t, std::size_t>, Vec>;

class GradedAlgebra {
public:
  GradedAlgebra() = default;
  // Unchecked; use make_algebra or validate() to enforce the axioms.
  GradedAlgebra(std::string name, FiniteSemigroup semigroup, std::vector<std::string> labels,
                std::vector<std::size_t> degrees, const StructureMap& structure,
                std::optional<Vec> declared_unit = std::nullopt);

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  std::size_t dim() const { return labels_.size(); }
  const FiniteSemigroup& semigroup() const { return semigroup_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::optional<std::size_t> index_of(const std::string& label) const;
  std::size_t degree(std::size_t i) const { return degrees_[i]; }
  const std::vector<std::size_t>& degrees() const { return degrees_; }
  const std::optional<Vec>& declared_unit() const { return unit_; }

  const SparseVec& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  StructureMap structure() const;

  Vec multiply(const Vec& u, const Vec& v) const;
  Vec basis_vector(std::size_t i) const { return unit_vec(dim(), i); }

private:
  std::string name_;
  FiniteSemigroup semigroup_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> degrees_;
  std::vector<SparseVec> table_;
  std::optional<Vec> unit_;
};

struct ValidationReport {
  std::vector<std::string> associativity_violations;
  std::vector<std::string> grading_violations;
  std::vector<std::string> unit_violations;
  bool ok() const
  {
    return associativity_violations.empty() && grading_violations.empty() && unit_violations.empty();
  }
};

ValidationReport validate(const GradedAlgebra& a);
// Throws NotAssociative or GradingViolation with the first offending entry.
void require_valid(const GradedAlgebra& a);
GradedAlgebra make_algebra(std::string name, FiniteSemigroup semigroup, std::vector<std::string> labels,
                           std::vector<std::size_t> degrees, const StructureMap& structure,
                           std::optional<Vec> declared_unit = std::nullopt);

class Subspace {
public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace span(std::size_t ambient, Matrix vectors);
  static Subspace whole(std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  // Remainder of v after eliminating pivot coordinates; zero iff v lies in the subspace.
  Vec reduce(const Vec& v) const;
  // Coordinates of a member v with respect to basis().
  Vec coordinates(const Vec& v) const;
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace& other) const;

private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& s, const Subspace& t);
Subspace subspace_intersect(const Subspace& s, const Subspace& t);
Subspace subspace_product(const GradedAlgebra& a, const Subspace& s, const Subspace& t);
bool contains(const Subspace& s, const Vec& v);

Subspace component(const GradedAlgebra& a, std::size_t t);
Vec component_project(const GradedAlgebra& a, std::size_t t, const Vec& v);
std::vector<std::size_t> support(const GradedAlgebra& a);
bool is_graded_subspace(const GradedAlgebra& a, const Subspace& s);
Subspace algebra_square(const GradedAlgebra& a);

std::optional<Vec> find_unit(const GradedAlgebra& a);
// A+ = F*1 + A over the trivial semigroup; basis index 0 is the adjoined unit.
GradedAlgebra adjoin_unit(const GradedAlgebra& a);

Subspace ideal_generated(const GradedAlgebra& a, const Matrix& vectors);
bool is_two_sided_ideal(const GradedAlgebra& a, const Subspace& s);
bool is_subalgebra(const GradedAlgebra& a, const Subspace& s);

GradedAlgebra direct_sum(const GradedAlgebra& a, const GradedAlgebra& b);
GradedAlgebra opposite(const GradedAlgebra& a);
GradedAlgebra trivially_graded(const GradedAlgebra& a);
// New basis b'_i = sum_j p[i][j] b_j; rows of p must be homogeneous of degree degrees[i].
GradedAlgebra change_basis(const GradedAlgebra& a, const Matrix& p);

// images[i] = image of basis element i; checks bijectivity and multiplicativity.
bool is_isomorphism(const GradedAlgebra& from, const GradedAlgebra& to, const Matrix& images);

struct Quotient {
  GradedAlgebra algebra;
  Subspace ideal;
  std::vector<std::size_t> representatives;
  bool graded = false;

  Vec project(const Vec& v) const;
  Vec lift(const Vec& q) const;
};

// Basis of A/I given by the standard basis vectors at the non-pivot coordinates of I.
Quotient quotient(const GradedAlgebra& a, const Subspace& ideal);

struct Subalgebra {
  GradedAlgebra algebra;
  Matrix embedding;
  bool graded = false;

  Vec to_ambient(const Vec& coords) const;
};

Subalgebra subalgebra(const GradedAlgebra& a, const Subspace& s);

// Product of basis elements is zero or an integer multiple of one basis element.
struct MonomialTable {
  std::size_t dim = 0;
  std::vector<std::int32_t> target;
  std::vector<std::int64_t> coeff;

  std::int32_t target_of(std::size_t i, std::size_t j) const { return target[i * dim + j]; }
  std::int64_t coeff_of(std::size_t i, std::size_t j) const { return coeff[i * dim + j]; }
};

std::optional<MonomialTable> monomial_table(const GradedAlgebra& a);

// Product of a word of basis elements, left to right.
Vec evaluate_word(const GradedAlgebra& a, const std::vector<std::size_t>& word);

} // namespace gralg
