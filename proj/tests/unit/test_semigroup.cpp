#include "oracles.hpp"

#include "gralg/error.hpp"
#include "gralg/semigroup.hpp"

#include <doctest.h>

#include <set>

using namespace gralg;

TEST_SUITE("semigroup")
{
  TEST_CASE("make validates associativity")
  {
    const auto t1 = FiniteSemigroup::make({"0", "1"}, {{0, 0}, {0, 1}});
    CHECK(classify_order2(t1) == SemigroupTag::T1);
    const auto rz = FiniteSemigroup::make({"a", "b"}, {{0, 1}, {0, 1}});
    CHECK(is_right_zero_band(rz));
    // a.b = a, b.a = b, a.a = b, b.b = a: (a a) a = b a = b but a (a a) = a b = a
    CHECK_THROWS_AS(FiniteSemigroup::make({"a", "b"}, {{1, 0}, {1, 0}}), Error);
    try {
      FiniteSemigroup::make({"a", "b"}, {{1, 0}, {1, 0}});
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotAssociative);
    }
    CHECK_THROWS_AS(FiniteSemigroup::make({"a"}, {{1}}), Error);
    CHECK_THROWS_AS(FiniteSemigroup::make({"a", "a"}, {{0, 0}, {0, 0}}), Error);
  }

  TEST_CASE("zero bands and cancellativity")
  {
    CHECK(is_right_zero_band(catalog_semigroup(SemigroupTag::T3)));
    CHECK_FALSE(is_left_zero_band(catalog_semigroup(SemigroupTag::T3)));
    CHECK(is_left_zero_band(catalog_semigroup(SemigroupTag::T3op)));
    const auto one = trivial_semigroup();
    CHECK(is_left_zero_band(one));
    CHECK(is_right_zero_band(one));
    CHECK_FALSE(is_left_zero_band(catalog_semigroup(SemigroupTag::T1)));
    CHECK_FALSE(is_right_zero_band(catalog_semigroup(SemigroupTag::T1)));
    CHECK(is_cancellative(catalog_semigroup(SemigroupTag::Z2)));
    CHECK_FALSE(is_cancellative(catalog_semigroup(SemigroupTag::T2)));
    CHECK_FALSE(is_cancellative(catalog_semigroup(SemigroupTag::T3)));
  }

  TEST_CASE("catalog tables")
  {
    const auto t1 = catalog_semigroup(SemigroupTag::T1);
    CHECK(t1.table() == SemigroupTable{{0, 0}, {0, 1}});
    CHECK(catalog_semigroup(SemigroupTag::Trivial).size() == 1);
    const auto t3 = catalog_semigroup(SemigroupTag::T3);
    const auto t3op = catalog_semigroup(SemigroupTag::T3op);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        CHECK(t3op.mul(i, j) == t3.mul(j, i));
    CHECK(classify_order2(FiniteSemigroup::make({"0", "v"}, {{0, 0}, {0, 0}})) == SemigroupTag::T2);
    CHECK(classify_order2(left_zero_band(2)) == SemigroupTag::T3op);
    CHECK(classify_order2(catalog_semigroup("Z2")) == SemigroupTag::Z2);
    CHECK_THROWS_AS(catalog_semigroup("T9"), Error);
  }

  TEST_CASE("order 2 enumeration against brute force")
  {
    std::size_t brute = 0;
    for (unsigned code = 0; code < 16; ++code) {
      std::vector<std::vector<std::size_t>> t{{code & 1, (code >> 1) & 1}, {(code >> 2) & 1, (code >> 3) & 1}};
      brute += oracle::associative(t) ? 1 : 0;
    }
    const auto list = enumerate_semigroups(2);
    CHECK(list.size() == brute);
    const auto classes = isomorphism_classes(list);
    REQUIRE(classes.size() == 5);
    std::set<std::string> tags;
    for (const auto& c : classes)
      tags.insert(std::string(to_string(classify_order2(list[c.front()]))));
    CHECK(tags == std::set<std::string>{"T1", "T2", "T3", "T3op", "Z2"});
    std::size_t cancellative_classes = 0;
    for (const auto& c : classes)
      if (is_cancellative(list[c.front()])) {
        ++cancellative_classes;
        CHECK(classify_order2(list[c.front()]) == SemigroupTag::Z2);
      }
    CHECK(cancellative_classes == 1);
  }

  TEST_CASE("orders 1 and 3")
  {
    CHECK(enumerate_semigroups(1).size() == 1);
    std::size_t brute = 0;
    for (unsigned code = 0; code < 19683; ++code) {
      std::vector<std::vector<std::size_t>> t(3, std::vector<std::size_t>(3));
      unsigned c = code;
      for (auto& row : t)
        for (auto& e : row) {
          e = c % 3;
          c /= 3;
        }
      brute += oracle::associative(t) ? 1 : 0;
    }
    const auto list = enumerate_semigroups(3);
    CHECK(list.size() == brute);
    // Semigroups of order 3 up to isomorphism.
    CHECK(isomorphism_classes(list).size() == 24);
    CHECK_THROWS_AS(enumerate_semigroups(5), Error);
  }

  TEST_CASE("isomorphism is respected by relabelling")
  {
    std::mt19937_64 rng(7);
    const auto list = enumerate_semigroups(3);
    for (int trial = 0; trial < 50; ++trial) {
      const auto& s = list[rng() % list.size()];
      std::vector<std::size_t> p{0, 1, 2};
      std::shuffle(p.begin(), p.end(), rng);
      SemigroupTable t(3, std::vector<std::size_t>(3));
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          t[p[i]][p[j]] = p[s.mul(i, j)];
      const auto r = FiniteSemigroup::make({"a", "b", "c"}, t);
      const auto iso = find_isomorphism(s, r);
      REQUIRE(iso.has_value());
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          CHECK((*iso)[s.mul(i, j)] == r.mul((*iso)[i], (*iso)[j]));
      CHECK(oracle::associative(s.opposite().table()));
    }
  }
}
