#pragma once

// Brute-force reference computations, written independently of the library internals.

#include "gralg/algebra.hpp"
#include "gralg/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Row = std::vector<Q>;

inline std::size_t rank(std::vector<Row> m)
{
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0)
      ++p;
    if (p == m.size())
      continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0)
        continue;
      const Q f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j)
        m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

inline int sign(const std::vector<std::size_t>& p)
{
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j])
        s = -s;
  return s;
}

// Product of basis elements read straight off the structure map.
inline Row word_value(const gralg::GradedAlgebra& a, const std::vector<std::size_t>& word)
{
  const auto sm = a.structure();
  Row cur(a.dim());
  cur[word[0]] = 1;
  for (std::size_t k = 1; k < word.size(); ++k) {
    Row next(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (cur[i] == 0)
        continue;
      auto it = sm.find({i, word[k]});
      if (it == sm.end())
        continue;
      for (std::size_t t = 0; t < a.dim(); ++t)
        next[t] += cur[i] * it->second[t];
    }
    cur = std::move(next);
  }
  return cur;
}

// Sum over degree assignments of the rank of the matrix whose rows are the permuted monomials and whose
// columns are all degree-respecting basis substitutions.
inline std::size_t graded_codim(const gralg::GradedAlgebra& a, std::size_t n)
{
  std::vector<std::size_t> supp;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (std::find(supp.begin(), supp.end(), a.degree(i)) == supp.end())
      supp.push_back(a.degree(i));
  std::size_t total = 0;
  std::vector<std::size_t> g(n, 0);
  for (;;) {
    std::vector<std::vector<std::size_t>> choices(n);
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t b = 0; b < a.dim(); ++b)
        if (a.degree(b) == supp[g[v]])
          choices[v].push_back(b);
    std::vector<std::vector<std::size_t>> substs{{}};
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::vector<std::size_t>> next;
      for (const auto& s : substs)
        for (auto b : choices[v]) {
          auto t = s;
          t.push_back(b);
          next.push_back(t);
        }
      substs = std::move(next);
    }
    std::vector<Row> rows;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      Row r;
      for (const auto& s : substs) {
        std::vector<std::size_t> word;
        for (auto v : perm)
          word.push_back(s[v]);
        const Row val = word_value(a, word);
        r.insert(r.end(), val.begin(), val.end());
      }
      rows.push_back(std::move(r));
    } while (std::next_permutation(perm.begin(), perm.end()));
    total += rank(std::move(rows));
    std::size_t k = 0;
    while (k < n && ++g[k] == supp.size())
      g[k++] = 0;
    if (k == n)
      break;
  }
  return total;
}

// Standard Young tableaux counted by removing the largest entry from a corner.
inline std::size_t syt_count(std::vector<std::size_t> shape)
{
  static std::map<std::vector<std::size_t>, std::size_t> memo;
  while (!shape.empty() && shape.back() == 0)
    shape.pop_back();
  if (shape.empty())
    return 1;
  if (auto it = memo.find(shape); it != memo.end())
    return it->second;
  std::size_t total = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    const std::size_t below = i + 1 < shape.size() ? shape[i + 1] : 0;
    if (shape[i] > below) {
      auto s = shape;
      --s[i];
      total += syt_count(s);
    }
  }
  memo[shape] = total;
  return total;
}

inline std::size_t partition_count(std::size_t n)
{
  std::vector<std::size_t> p(n + 1, 0);
  p[0] = 1;
  for (std::size_t part = 1; part <= n; ++part)
    for (std::size_t m = part; m <= n; ++m)
      p[m] += p[m - part];
  return p[n];
}

inline std::size_t factorial(std::size_t n)
{
  return n <= 1 ? 1 : n * factorial(n - 1);
}

inline bool associative(const std::vector<std::vector<std::size_t>>& t)
{
  const std::size_t n = t.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]])
          return false;
  return true;
}

inline gralg::Vec random_vec(std::mt19937_64& rng, std::size_t n)
{
  std::uniform_int_distribution<int> d(-4, 4);
  gralg::Vec v(n);
  for (auto& x : v)
    x = gralg::Rational(d(rng), 1 + (rng() % 3));
  for (auto& x : v)
    x.canonicalize();
  return v;
}

} // namespace oracle
