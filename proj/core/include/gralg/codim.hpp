#pragma once

#include "gralg/algebra.hpp"
#include "gralg/parallel.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gralg {

// x_{word[0]} x_{word[1]} ... with variable v carrying degree degrees[v].
struct GradedMonomial {
  std::vector<std::size_t> word;
  std::vector<std::size_t> degrees;

  std::size_t size() const { return word.size(); }
  bool operator==(const GradedMonomial& other) const = default;
  bool operator<(const GradedMonomial& other) const
  {
    return word != other.word ? word < other.word : degrees < other.degrees;
  }
};

// subst[v] is the basis index substituted for variable v; throws DegreeMismatch.
Vec evaluate_monomial(const GradedAlgebra& a, const GradedMonomial& m, const std::vector<std::size_t>& subst);

enum class RankMode { modular, exact_rational };

std::string_view to_string(RankMode mode);
RankMode parse_rank_mode(std::string_view text);

struct CodimOptions {
  RankMode mode = RankMode::modular;
  // Empty: two primes per block derived from seed and the assignment index.
  std::vector<std::uint32_t> primes;
  std::uint64_t seed = 0;
  std::size_t max_block_entries = 10'000'000;
  // In modular mode, blocks with at most this many entries are also ranked over Q.
  std::size_t exact_check_entries = 10'000;
  const WorkerPool* pool = nullptr;
};

struct BlockRank {
  std::vector<std::size_t> assignment;
  std::size_t rows = 0;
  std::size_t columns = 0;
  std::size_t rank = 0;
  std::vector<std::pair<std::uint32_t, std::size_t>> modular_ranks;
  std::optional<std::size_t> exact_rank;
};

struct CodimResult {
  std::size_t n = 0;
  Integer value = 0;
  std::string certification;
  double seconds = 0;
  std::vector<BlockRank> blocks;
};

// Lexicographic list of variable degree assignments over support(A).
std::vector<std::vector<std::size_t>> degree_assignments(const GradedAlgebra& a, std::size_t n);

BlockRank block_rank(const GradedAlgebra& a, const std::vector<std::size_t>& assignment, std::size_t block_index,
                     const CodimOptions& options);
CodimResult graded_codim(const GradedAlgebra& a, std::size_t n, const CodimOptions& options = {});
CodimResult ordinary_codim(const GradedAlgebra& a, std::size_t n, const CodimOptions& options = {});
std::vector<CodimResult> codim_sequence(const GradedAlgebra& a, std::size_t n_max, const CodimOptions& options = {});

// Sum over assignments of min(n!, dim A * prod_v dim A^(t_v)).
Integer codim_shape_bound(const GradedAlgebra& a, std::size_t n);

struct ExponentEstimate {
  std::vector<double> roots;
  double slope = 0;
};

ExponentEstimate exponent_estimate(const std::vector<Integer>& sequence);
ExponentEstimate exponent_estimate(const std::vector<double>& sequence);

std::string codim_csv(const std::vector<CodimResult>& rows, bool include_timing = true);

} // namespace gralg
