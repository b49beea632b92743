#pragma once

#include "gralg/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gralg {

class Partition {
public:
  Partition() = default;
  // Throws BadParam unless the parts are positive and weakly decreasing.
  explicit Partition(std::vector<std::size_t> parts);

  const std::vector<std::size_t>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  std::size_t n() const { return n_; }
  // 1-based; zero past the last part.
  std::size_t operator[](std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }
  // Column heights of the diagram, left to right.
  std::vector<std::size_t> conjugate() const;

  bool operator==(const Partition& other) const = default;
  auto operator<=>(const Partition& other) const = default;

private:
  std::vector<std::size_t> parts_;
  std::size_t n_ = 0;
};

std::string to_string(const Partition& p);
// Accepts "2,1,1", "(2,1,1)" and exponent shorthand such as "2^6,1".
Partition parse_partition(std::string_view text);

Integer hook_dim(const Partition& p);

// Row i reads gamma[i][0] + sum_j gamma[i][j] * lambda_j >= 0.
struct PartitionConstraints {
  std::vector<std::vector<Rational>> gamma;
  // lambda_i <= caps[i]
  std::map<std::size_t, std::size_t> caps;
  // lambda_{r+1} = 0
  std::optional<std::size_t> max_parts;
};

bool satisfies(const Partition& p, const PartitionConstraints& c);

// All partitions of n satisfying c, in decreasing lexicographic order.
std::vector<Partition> enumerate_partitions(std::size_t n, const PartitionConstraints& c = {});

struct DimBounds {
  Integer upper;
  Rational lower;
};

// upper = n!/(lambda_1!...lambda_r!), lower = n!/((lambda_1+q-1)!...(lambda_q+q-1)!); throws TooManyParts.
DimBounds dim_bounds(const Partition& p, std::size_t q);

class YoungTableau {
public:
  // rows[i][j] is the entry in row i, column j (entries 1..n).
  YoungTableau(Partition shape, std::vector<std::vector<std::size_t>> rows);
  // Column-major filling: top to bottom, then left to right.
  static YoungTableau standard(const Partition& shape);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<std::size_t>>& rows() const { return rows_; }
  std::vector<std::vector<std::size_t>> columns() const;
  std::size_t at(std::size_t row, std::size_t col) const { return rows_[row][col]; }

private:
  Partition shape_;
  std::vector<std::vector<std::size_t>> rows_;
};

} // namespace gralg
