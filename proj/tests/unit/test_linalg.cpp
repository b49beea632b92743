#include "oracles.hpp"

#include "gralg/linalg.hpp"

#include <doctest.h>

using namespace gralg;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, std::size_t rank_hint)
{
  Matrix base;
  for (std::size_t i = 0; i < rank_hint; ++i)
    base.push_back(oracle::random_vec(rng, c));
  Matrix m;
  for (std::size_t i = 0; i < r; ++i) {
    Vec v = zero_vec(c);
    for (const auto& b : base)
      axpy(v, Rational(static_cast<long>(rng() % 5) - 2), b);
    m.push_back(v);
  }
  return m;
}

} // namespace

TEST_SUITE("linalg")
{
  TEST_CASE("rank and kernel agree with the reference elimination")
  {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6, h = rng() % 5;
      const Matrix m = random_matrix(rng, r, c, h);
      const std::size_t rk = rank(m, c);
      CHECK(rk == oracle::rank(m));
      const Matrix k = kernel(m, c);
      CHECK(rk + k.size() == c);
      for (const auto& v : k)
        CHECK(is_zero(gralg::apply(m, v)));
    }
  }

  TEST_CASE("solve and inverse")
  {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = 1 + rng() % 5;
      Matrix m;
      for (std::size_t i = 0; i < n; ++i)
        m.push_back(oracle::random_vec(rng, n));
      const auto inv = inverse(m);
      if (oracle::rank(m) < n) {
        CHECK_FALSE(inv.has_value());
        continue;
      }
      REQUIRE(inv.has_value());
      CHECK(multiply(m, *inv) == identity(n));
      const Vec x = oracle::random_vec(rng, n);
      const auto y = solve(m, gralg::apply(m, x), n);
      REQUIRE(y.has_value());
      CHECK(*y == x);
    }
    const Matrix singular{Vec{Rational(1), Rational(1)}, Vec{Rational(2), Rational(2)}};
    CHECK_FALSE(solve(singular, Vec{Rational(1), Rational(3)}, 2).has_value());
  }

  TEST_CASE("characteristic polynomial satisfies Cayley-Hamilton")
  {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 1 + rng() % 4;
      Matrix m;
      for (std::size_t i = 0; i < n; ++i)
        m.push_back(oracle::random_vec(rng, n));
      const Vec c = characteristic_polynomial(m);
      REQUIRE(c.size() == n + 1);
      CHECK(c[n] == 1);
      Matrix acc(n, zero_vec(n));
      Matrix power = identity(n);
      for (std::size_t k = 0; k <= n; ++k) {
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            acc[i][j] += c[k] * power[i][j];
        power = multiply(power, m);
      }
      for (const auto& row : acc)
        CHECK(is_zero(row));
    }
  }

  TEST_CASE("rational roots of a product of linear factors")
  {
    // (x - 1/2)^2 (x + 3) x = x^4 + 2x^3 - 11/4 x^2 + 3/4 x
    const Vec poly{Rational(0), Rational(3, 4), Rational(-11, 4), Rational(2), Rational(1)};
    const auto roots = rational_roots(poly);
    REQUIRE(roots.has_value());
    std::map<Rational, std::size_t> got;
    for (const auto& r : *roots)
      got[r.value] = r.multiplicity;
    CHECK(got == std::map<Rational, std::size_t>{{Rational(-3), 1}, {Rational(0), 1}, {Rational(1, 2), 2}});
    const auto none = rational_roots({Rational(-2), Rational(0), Rational(1)});
    REQUIRE(none.has_value());
    CHECK(none->empty());
  }

  TEST_CASE("prime field arithmetic")
  {
    const PrimeField f(101);
    for (long long a = -205; a < 205; a += 7) {
      const auto x = f.from_int(a);
      CHECK(x < 101);
      if (x)
        CHECK(f.mul(x, f.inv(x)) == 1);
      CHECK(f.add(x, f.neg(x)) == 0);
      CHECK(f.sub(x, x) == 0);
    }
    CHECK(f.from_rational(Rational(1, 2)) == 51);
    CHECK_FALSE(f.represents(Rational(1, 101)));
  }

  TEST_CASE("primality and seeded primes")
  {
    for (std::uint64_t n = 0; n < 2000; ++n) {
      bool trial = n >= 2;
      for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
          trial = false;
      CHECK(is_prime(n) == trial);
    }
    CHECK(is_prime(2147483647ULL));
    CHECK_FALSE(is_prime(2147483647ULL * 3));
    const auto p = prime_from_seed(5, 31);
    CHECK(p == prime_from_seed(5, 31));
    CHECK(is_prime(p));
    CHECK(p >= (1u << 30));
  }

  TEST_CASE("incremental echelon over a prime field matches rational rank for small entries")
  {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
      const Matrix m = random_matrix(rng, r, c, rng() % 5);
      const PrimeField f(2147483629u);
      IncrementalEchelon<PrimeField> e(f, c);
      for (const auto& row : m) {
        std::vector<std::uint32_t> v;
        for (const auto& x : row)
          v.push_back(f.from_rational(x));
        e.insert(v);
      }
      CHECK(e.rank() <= oracle::rank(m));
    }
  }
}
