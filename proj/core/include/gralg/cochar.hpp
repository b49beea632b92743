#pragma once

#include "gralg/algebra.hpp"
#include "gralg/parallel.hpp"
#include "gralg/partition.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gralg {

// x_{vars[0]}^{(degrees[0])} x_{vars[1]}^{(degrees[1])} ...; each variable occurs at most once.
struct GradedWord {
  std::vector<std::size_t> vars;
  std::vector<std::size_t> degrees;

  auto operator<=>(const GradedWord& other) const = default;
};

class GradedPolynomial {
public:
  explicit GradedPolynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  std::size_t num_vars() const { return num_vars_; }
  const std::map<GradedWord, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Sorted variables occurring in some term.
  std::vector<std::size_t> variables() const;

  void add(const GradedWord& w, const Rational& c);
  GradedPolynomial& operator+=(const GradedPolynomial& other);
  GradedPolynomial scaled(const Rational& c) const;
  // sigma . x_i = x_{sigma(i)}
  GradedPolynomial permuted(const std::vector<std::size_t>& sigma) const;
  // Concatenation of words; the variable sets must be disjoint.
  GradedPolynomial operator*(const GradedPolynomial& other) const;

  bool operator==(const GradedPolynomial& other) const = default;

private:
  std::size_t num_vars_;
  std::map<GradedWord, Rational> terms_;
};

// sum over sigma in Sym(vars) of sign(sigma) x_{sigma(vars[p_1])}^{(d_1)} ..., pattern[k] = (p_k, d_k) with
// p_k a 0-based position in vars.
GradedPolynomial alternating_block(std::size_t num_vars, const std::vector<std::size_t>& vars,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& pattern);

// Product of polynomials in pairwise disjoint variable sets.
struct FactoredPolynomial {
  std::size_t num_vars = 0;
  std::vector<GradedPolynomial> factors;

  GradedPolynomial expand() const;
};

// x_v^{(h)} evaluated at a homogeneous basis element of degree other than h is zero.
Vec evaluate(const GradedAlgebra& a, const GradedPolynomial& f, const std::vector<std::size_t>& subst);
Vec evaluate(const GradedAlgebra& a, const FactoredPolynomial& f, const std::vector<std::size_t>& subst);

// Permutations of {0..n-1} preserving the rows (resp. columns) of t; column entries carry their sign.
std::vector<std::vector<std::size_t>> row_group(const YoungTableau& t);
std::vector<std::pair<std::vector<std::size_t>, int>> column_group(const YoungTableau& t);

bool is_column_alternating(const FactoredPolynomial& f, const YoungTableau& t);

enum class SymmetrizerConvention { e, e_star };

struct SymmetrizerOptions {
  SymmetrizerConvention convention = SymmetrizerConvention::e;
  bool allow_shortcut = true;
  std::size_t max_terms = 50'000'000;
  const WorkerPool* pool = nullptr;
};

struct SymmetrizerResult {
  Vec value;
  bool shortcut_used = false;
  std::size_t terms = 0;
};

// (e_T f)(tau) where tau[v] is the basis index substituted for variable v.
SymmetrizerResult apply_symmetrizer(const GradedAlgebra& a, const YoungTableau& t, const FactoredPolynomial& f,
                                    const std::vector<std::size_t>& tau, const SymmetrizerOptions& options = {});

// theta(e_ij, *) = j - i for 2x2 matrix-unit pair labels; throws UnsupportedAlgebra.
int theta(const GradedAlgebra& a, std::size_t basis_index);

struct ThetaScanReport {
  std::size_t words = 0;
  std::size_t nonzero = 0;
  int min_sum = 0;
  int max_sum = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

ThetaScanReport theta_scan(const GradedAlgebra& a, std::size_t n_max);

enum class WitnessVariant { T1, T3 };

std::string_view to_string(WitnessVariant v);
WitnessVariant parse_witness_variant(std::string_view text);

// Shape parameters for the witness: q = 7 for T1, 6 for T3. full_columns is lambda_q; beta[i] for i = 2..
// (12 for T1, 10 for T3). unpaired is 1 on the boundary stratum lambda_{q-1} + lambda_q = lambda_1 + 1.
struct BetaDecomposition {
  WitnessVariant variant = WitnessVariant::T1;
  std::size_t full_columns = 0;
  std::map<std::size_t, std::size_t> beta;
  std::size_t unpaired = 0;
};

std::size_t witness_q(WitnessVariant v);
// Throws HypothesisViolated unless lambda_{q+1} = 0 and lambda_{q-1} + lambda_q <= lambda_1 (+1 if allow_boundary).
BetaDecomposition choose_beta(WitnessVariant v, const Partition& lambda, bool allow_boundary = false);
// Throws BetaInvalid unless b satisfies the block equations for lambda.
void check_beta(const Partition& lambda, const BetaDecomposition& b);

enum class UnpairedPlacement { front, back };

struct Witness {
  WitnessVariant variant;
  Partition shape;
  BetaDecomposition beta;
  YoungTableau tableau;
  FactoredPolynomial f;
  // Per column of the tableau: the block it belongs to (1 for the full columns).
  std::vector<std::size_t> column_block;
  // tau_labels[v] is the basis label substituted for variable v.
  std::vector<std::string> tau_labels;
  // Factor names in product order, e.g. "f1", "f3".
  std::vector<std::string> factor_names;
};

Witness build_witness(WitnessVariant v, const Partition& lambda, std::optional<BetaDecomposition> beta = std::nullopt,
                      bool allow_boundary = false, UnpairedPlacement placement = UnpairedPlacement::front);

// Basis indices of tau in a; throws UnsupportedAlgebra if a label or the grading does not fit.
std::vector<std::size_t> resolve_tau(const GradedAlgebra& a, const Witness& w);

std::string witness_report(const Witness& w, const std::optional<Vec>& value = std::nullopt,
                           const GradedAlgebra* a = nullptr);

struct CertificateResult {
  bool nonzero = false;
  bool boundary = false;
  std::optional<Witness> witness;
  Vec value;
  std::string note;
};

// Sufficient certificate for m(A, lambda) != 0: a false result means the certificate failed, not m = 0.
CertificateResult multiplicity_nonzero_certificate(const GradedAlgebra& a, WitnessVariant v, const Partition& lambda,
                                                   const SymmetrizerOptions& options = {});

struct MultiplicityOptions {
  std::size_t max_n = 5;
  std::size_t max_work = 200'000'000;
};

// Rank of { e_T m : m a graded monomial of P_n } evaluated on all basis substitutions.
std::size_t multiplicity_exact(const GradedAlgebra& a, const Partition& lambda, const MultiplicityOptions& options = {});

struct VanishingReport {
  std::size_t trials = 0;
  std::size_t zero = 0;
  std::vector<std::string> counterexamples;
  bool ok() const { return counterexamples.empty() && zero == trials; }
};

// Full alternation of random graded monomials on random degree-respecting substitutions; requires n > dim A.
VanishingReport alternation_vanishing_check(const GradedAlgebra& a, std::size_t n, std::size_t trials,
                                            std::uint64_t seed);

} // namespace gralg
