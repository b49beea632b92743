#pragma once

#include "gralg/parallel.hpp"
#include "gralg/partition.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gralg {

// Product of a_i^{-a_i} with 0^0 = 1; throws NegativeCoordinate.
double phi(const std::vector<double>& alpha);

// Continuous version: sum_j gamma[i][j] a_j + offset_weight * gamma[i][0] >= 0, plus optional ordering
// a_1 >= ... >= a_q >= 0, optional simplex sum a = 1 and a_j = 0 for j in zero_coordinates (1-based).
// Discrete version: sum_j gamma[i][j] lambda_j + gamma[i][0] >= 0, lambda_k <= theta_caps[k] for q < k <= r,
// lambda_{r+1} = 0.
struct Polytope {
  std::string name;
  std::size_t q = 0;
  std::vector<std::vector<Rational>> gamma;
  bool include_ordering = true;
  bool include_simplex = true;
  std::map<std::size_t, std::size_t> theta_caps;
  std::size_t r = 0;
  std::vector<std::size_t> zero_coordinates;
  double offset_weight = 0;

  // Copy with the continuous constraints shifted by gamma[i][0] / n.
  Polytope inflated(std::size_t n) const;
};

// a_1 + 1 >= a_{q-1} + a_q in the discrete version, a_1 >= a_{q-1} + a_q in the continuous one; throws QTooSmall.
Polytope lemma_polytope(std::size_t q);
// Ordered simplex of dimension q with no further constraints.
Polytope simplex_polytope(std::size_t q);

PartitionConstraints discrete_constraints(const Polytope& p);
bool omega_n_membership(const Polytope& p, const Partition& lambda);
bool is_feasible(const Polytope& p, const std::vector<double>& alpha, double tolerance = 1e-12);

struct OptimizationResult {
  std::vector<double> point;
  double value = 0;
  std::string method;
  double certified_gap = 0;
  std::size_t start_index = 0;
};

OptimizationResult lemma_max_closed_form(std::size_t q);

struct MaximizeOptions {
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  std::size_t starts = 16;
  std::size_t probes = 2000;
  std::size_t max_iterations = 20000;
  const WorkerPool* pool = nullptr;
};

// Projected-gradient ascent from several starts, polished by Newton steps on the active face.
// certified_gap is the largest phi(probe) - value over sampled feasible probes; throws Infeasible, NoConvergence.
OptimizationResult maximize_phi(const Polytope& p, const MaximizeOptions& options = {});

// Euclidean projection onto the continuous polytope; throws Infeasible, NoConvergence.
std::vector<double> project(const Polytope& p, const std::vector<double>& x);

// mu_i = floor(a_i n) for i >= 2, mu_1 = n - sum_{i>=2} mu_i; repaired to be weakly decreasing if needed.
Partition mu_sequence(const std::vector<double>& alpha, std::size_t n, bool* repaired = nullptr);

struct BoundRow {
  std::size_t n = 0;
  double d_pow_n = 0;
  std::optional<Integer> c_n;
  std::optional<Integer> hook_lower;
  std::optional<double> ratio;
};

// c_values[i] is c_{n_min + i}; hook_lower uses hook_dim(mu_sequence(alpha, n)).
std::vector<BoundRow> bound_report(double d, std::size_t n_min, std::size_t n_max,
                                   const std::vector<Integer>& c_values = {},
                                   const std::optional<std::vector<double>>& alpha = std::nullopt);

// Header "n,d_pow_n,c_n,hook_lower"; missing values are empty fields.
std::string bound_csv(const std::vector<BoundRow>& rows);

} // namespace gralg
