#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gralg {

using Rational = mpq_class;
using Integer = mpz_class;
using Vec = std::vector<Rational>;
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);
std::string to_string(const Vec& v);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
std::size_t support_size(const Vec& v);

// y += a * x
void axpy(Vec& y, const Rational& a, const Vec& x);
Vec add(const Vec& x, const Vec& y);
Vec sub(const Vec& x, const Vec& y);
Vec scale(const Rational& a, const Vec& x);

SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& v, std::size_t n);

Integer factorial(unsigned n);
Integer lcm_of_denominators(const Vec& v);

} // namespace gralg
