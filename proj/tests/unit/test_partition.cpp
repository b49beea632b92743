#include "oracles.hpp"

#include "gralg/error.hpp"
#include "gralg/partition.hpp"

#include <doctest.h>

using namespace gralg;

TEST_SUITE("partition")
{
  TEST_CASE("construction and parsing")
  {
    const Partition p({3, 1, 1});
    CHECK(p.n() == 5);
    CHECK(p.length() == 3);
    CHECK(p[1] == 3);
    CHECK(p[4] == 0);
    CHECK(p.conjugate() == std::vector<std::size_t>{3, 1, 1});
    CHECK(to_string(p) == "(3,1,1)");
    CHECK(parse_partition("3,1,1") == p);
    CHECK(parse_partition("(3,1,1)") == p);
    CHECK(parse_partition("2^6,1") == Partition({2, 2, 2, 2, 2, 2, 1}));
    CHECK_THROWS_AS(Partition({1, 2}), Error);
    CHECK_THROWS_AS(Partition({2, 0}), Error);
    CHECK_THROWS_AS(parse_partition("2,x"), Error);
  }

  TEST_CASE("conjugation is an involution")
  {
    for (std::size_t n = 1; n <= 10; ++n)
      for (const auto& p : enumerate_partitions(n)) {
        const Partition c(p.conjugate());
        CHECK(c.n() == n);
        CHECK(Partition(c.conjugate()) == p);
      }
  }

  TEST_CASE("hook dimensions count standard tableaux")
  {
    CHECK(hook_dim(Partition({5})) == 1);
    CHECK(hook_dim(Partition({1, 1, 1, 1})) == 1);
    CHECK(hook_dim(Partition({2, 1})) == 2);
    for (std::size_t n = 1; n <= 10; ++n)
      for (const auto& p : enumerate_partitions(n))
        CHECK(hook_dim(p) == oracle::syt_count(p.parts()));
  }

  TEST_CASE("sum of squared dimensions is n!")
  {
    for (std::size_t n = 1; n <= 9; ++n) {
      Integer sum = 0;
      for (const auto& p : enumerate_partitions(n))
        sum += hook_dim(p) * hook_dim(p);
      CHECK(sum == oracle::factorial(n));
    }
  }

  TEST_CASE("enumeration")
  {
    for (std::size_t n = 1; n <= 15; ++n) {
      const auto all = enumerate_partitions(n);
      CHECK(all.size() == oracle::partition_count(n));
      for (std::size_t i = 1; i < all.size(); ++i)
        CHECK(all[i - 1] > all[i]);
    }
    PartitionConstraints one_row;
    one_row.max_parts = 1;
    CHECK(enumerate_partitions(4, one_row) == std::vector<Partition>{Partition({4})});

    // lambda_8 = 0 and lambda_6 + lambda_7 <= lambda_1
    PartitionConstraints c;
    c.max_parts = 7;
    std::vector<Rational> row(8, Rational(0));
    row[1] = 1;
    row[6] = -1;
    row[7] = -1;
    c.gamma.push_back(row);
    const auto list = enumerate_partitions(7, c);
    CHECK(std::find(list.begin(), list.end(), Partition({2, 1, 1, 1, 1, 1})) != list.end());
    CHECK(std::find(list.begin(), list.end(), Partition({1, 1, 1, 1, 1, 1, 1})) == list.end());
    for (const auto& p : enumerate_partitions(7))
      CHECK(satisfies(p, c) == (p.length() <= 7 && p[6] + p[7] <= p[1]));
  }

  TEST_CASE("dimension bounds")
  {
    const auto b = dim_bounds(Partition({2, 1}), 2);
    CHECK(b.upper == 3);
    CHECK(b.lower == Rational(1, 2));
    CHECK(dim_bounds(Partition({6}), 1).upper == 1);
    CHECK_THROWS_AS(dim_bounds(Partition({1, 1, 1}), 2), Error);
    for (std::size_t n = 1; n <= 12; ++n)
      for (const auto& p : enumerate_partitions(n)) {
        if (p.length() > 7)
          continue;
        for (std::size_t q = p.length(); q <= 7; ++q) {
          const auto d = dim_bounds(p, q);
          const Integer h = hook_dim(p);
          CHECK(d.lower <= Rational(h));
          CHECK(h <= d.upper);
        }
      }
  }

  TEST_CASE("tableaux")
  {
    const auto t = YoungTableau::standard(Partition({2, 1, 1}));
    CHECK(t.rows() == std::vector<std::vector<std::size_t>>{{1, 4}, {2}, {3}});
    CHECK(t.columns() == std::vector<std::vector<std::size_t>>{{1, 2, 3}, {4}});
    CHECK_THROWS_AS(YoungTableau(Partition({2, 1}), {{1, 1}, {2}}), Error);
    CHECK_THROWS_AS(YoungTableau(Partition({2, 1}), {{1, 2}}), Error);
  }
}
