#pragma once

#include "gralg/algebra.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gralg {

Subspace jacobson_radical(const GradedAlgebra& a);
bool is_radical_graded(const GradedAlgebra& a);
// J, J^2, ... down to the first zero power (the zero power is not included).
std::vector<Subspace> radical_powers(const GradedAlgebra& a, const Subspace& radical);

struct IdealGradingReport {
  bool all_graded = true;
  // Components of 1 = sum_t e_t, indexed like support(A).
  std::vector<Vec> unit_components;
  std::size_t ideals_checked = 0;
  std::optional<Subspace> witness;
};

IdealGradingReport all_ideals_graded_zeroband(const GradedAlgebra& a);

struct WedderburnData {
  std::vector<Subspace> simple_ideals;
  std::vector<Vec> central_idempotents;
  std::size_t quotient_dim = 0;
  std::vector<std::size_t> center_dims;
};

WedderburnData wedderburn_decompose(const GradedAlgebra& semisimple);

struct Correction {
  std::size_t level = 0;
  std::size_t component = 0;
  Vec j;
};

struct SplittingData {
  Subspace complement;
  Subspace radical;
  std::vector<Correction> correction_log;
  // Images in A of the quotient basis (quotient coordinates as in quotient(A, radical)).
  Matrix section;
};

SplittingData malcev_complement(const GradedAlgebra& a);
SplittingData graded_malcev_zeroband(const GradedAlgebra& a);
// Square-zero radical step: corrects a given multiplicative section into a graded one.
SplittingData graded_malcev_square_zero(const GradedAlgebra& a, const Matrix& section);

enum class SimplicityVerdict { certified_true, certified_false, probable_true };

std::string_view to_string(SimplicityVerdict v);

struct SimplicityOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
};

struct SimplicityResult {
  SimplicityVerdict verdict = SimplicityVerdict::probable_true;
  std::string method;
  std::optional<Subspace> witness;
  std::size_t trials = 0;
};

SimplicityResult is_graded_simple(const GradedAlgebra& a, const SimplicityOptions& options = {});

struct ExponentResult {
  std::size_t d = 0;
  std::vector<std::size_t> best_sequence;
  std::vector<std::size_t> summand_dims;
  bool graded_complement = false;
};

ExponentResult graded_exponent(const GradedAlgebra& a);
std::size_t graded_exponent_d(const GradedAlgebra& a);
std::size_t ordinary_exponent(const GradedAlgebra& a);

} // namespace gralg
