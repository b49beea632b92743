#pragma once

#include "gralg/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace gralg {

using Matrix = std::vector<Vec>;

struct Echelon {
  Matrix rows;
  std::vector<std::size_t> pivots;
};

// Reduced row echelon form; zero rows are dropped.
Echelon row_reduce(Matrix rows, std::size_t ncols);
std::size_t rank(const Matrix& rows, std::size_t ncols);

// Basis of {x : r . x = 0 for every row r}.
Matrix kernel(const Matrix& rows, std::size_t ncols);

// Some x with rows . x = rhs, if one exists.
std::optional<Vec> solve(const Matrix& rows, const Vec& rhs, std::size_t ncols);

std::optional<Matrix> inverse(const Matrix& m);
Matrix identity(std::size_t n);
Matrix multiply(const Matrix& a, const Matrix& b);
Vec apply(const Matrix& m, const Vec& v);
Matrix transpose(const Matrix& m, std::size_t ncols);

// Monic characteristic polynomial, coefficients from the constant term upward.
Vec characteristic_polynomial(const Matrix& m);

struct RationalRoot {
  Rational value;
  std::size_t multiplicity = 0;
};

// Rational roots with multiplicity; returns nullopt when a candidate search bound is exceeded.
std::optional<std::vector<RationalRoot>> rational_roots(const Vec& poly);

class PrimeField {
public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }
  value_type add(value_type a, value_type b) const;
  value_type sub(value_type a, value_type b) const;
  value_type neg(value_type a) const;
  value_type mul(value_type a, value_type b) const;
  value_type inv(value_type a) const;
  value_type from_int(long long a) const;
  // Throws DimensionMismatch if the denominator vanishes mod p.
  value_type from_rational(const Rational& q) const;
  bool represents(const Rational& q) const;

private:
  std::uint32_t p_;
};

class RationalField {
public:
  using value_type = Rational;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const { return 1 / a; }
  value_type from_int(long long a) const { return Rational(static_cast<long>(a)); }
  value_type from_rational(const Rational& q) const { return q; }
};

// Rows are kept in semi-echelon form: each stored row has a unit pivot and zeros
// at the pivots of all earlier rows.
template <class Field>
class IncrementalEchelon {
public:
  using value_type = typename Field::value_type;

  IncrementalEchelon(Field field, std::size_t ncols) : field_(std::move(field)), ncols_(ncols) {}

  bool insert(std::vector<value_type> v)
  {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const value_type c = v[pivots_[r]];
      if (field_.is_zero(c))
        continue;
      const auto& row = rows_[r];
      for (std::size_t j = pivots_[r]; j < ncols_; ++j)
        if (!field_.is_zero(row[j]))
          v[j] = field_.sub(v[j], field_.mul(c, row[j]));
    }
    std::size_t piv = 0;
    while (piv < ncols_ && field_.is_zero(v[piv]))
      ++piv;
    if (piv == ncols_)
      return false;
    const value_type s = field_.inv(v[piv]);
    for (std::size_t j = piv; j < ncols_; ++j)
      v[j] = field_.mul(v[j], s);
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  bool full() const { return rows_.size() == ncols_; }
  const std::vector<std::vector<value_type>>& rows() const { return rows_; }

private:
  Field field_;
  std::size_t ncols_;
  std::vector<std::vector<value_type>> rows_;
  std::vector<std::size_t> pivots_;
};

bool is_prime(std::uint64_t n);
// Deterministic prime in [2^(bits-1), 2^bits) drawn from the given seed.
std::uint32_t prime_from_seed(std::uint64_t seed, unsigned bits = 30);

} // namespace gralg
