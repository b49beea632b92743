#include "gralg/semigroup.hpp"

#include "gralg/error.hpp"

#include <algorithm>
#include <numeric>

namespace gralg {

std::optional<AssociativityViolation> find_associativity_violation(const SemigroupTable& t)
{
  const std::size_t n = t.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]])
          return AssociativityViolation{a, b, c};
  return std::nullopt;
}

FiniteSemigroup FiniteSemigroup::make(std::vector<std::string> labels, SemigroupTable table)
{
  const std::size_t n = labels.size();
  if (n == 0)
    raise(ErrorKind::BadParam, "semigroup must have at least one element");
  if (table.size() != n)
    raise(ErrorKind::BadParam, "table has " + std::to_string(table.size()) + " rows, expected " + std::to_string(n));
  for (const auto& row : table) {
    if (row.size() != n)
      raise(ErrorKind::BadParam, "table row of wrong length");
    for (auto e : row)
      if (e >= n)
        raise(ErrorKind::BadParam, "table entry " + std::to_string(e) + " out of range");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (labels[i] == labels[j])
        raise(ErrorKind::BadParam, "duplicate semigroup label '" + labels[i] + "'");
  if (auto v = find_associativity_violation(table)) {
    const auto& t = table;
    raise(ErrorKind::NotAssociative,
          "(" + labels[v->a] + "*" + labels[v->b] + ")*" + labels[v->c] + " = " + labels[t[t[v->a][v->b]][v->c]] +
            " but " + labels[v->a] + "*(" + labels[v->b] + "*" + labels[v->c] + ") = " +
            labels[t[v->a][t[v->b][v->c]]]);
  }
  FiniteSemigroup s;
  s.labels_ = std::move(labels);
  s.table_ = std::move(table);
  return s;
}

std::optional<std::size_t> FiniteSemigroup::index_of(std::string_view label) const
{
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label)
      return i;
  return std::nullopt;
}

FiniteSemigroup FiniteSemigroup::opposite() const
{
  FiniteSemigroup s;
  s.labels_ = labels_;
  s.table_ = table_;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      s.table_[i][j] = table_[j][i];
  return s;
}

bool is_left_zero_band(const FiniteSemigroup& s)
{
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b)
      if (s.mul(a, b) != a)
        return false;
  return true;
}

bool is_right_zero_band(const FiniteSemigroup& s)
{
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b)
      if (s.mul(a, b) != b)
        return false;
  return true;
}

bool is_cancellative(const FiniteSemigroup& s)
{
  const std::size_t n = s.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b)
        continue;
      for (std::size_t c = 0; c < n; ++c)
        if (s.mul(a, c) == s.mul(b, c) || s.mul(c, a) == s.mul(c, b))
          return false;
    }
  return true;
}

bool is_commutative(const FiniteSemigroup& s)
{
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (s.mul(a, b) != s.mul(b, a))
        return false;
  return true;
}

std::string_view to_string(SemigroupTag tag)
{
  switch (tag) {
  case SemigroupTag::T1: return "T1";
  case SemigroupTag::T2: return "T2";
  case SemigroupTag::T3: return "T3";
  case SemigroupTag::T3op: return "T3op";
  case SemigroupTag::Z2: return "Z2";
  case SemigroupTag::Trivial: return "Trivial";
  }
  return "?";
}

SemigroupTag parse_semigroup_tag(std::string_view name)
{
  for (auto tag : {SemigroupTag::T1, SemigroupTag::T2, SemigroupTag::T3, SemigroupTag::T3op, SemigroupTag::Z2,
                   SemigroupTag::Trivial})
    if (to_string(tag) == name)
      return tag;
  raise(ErrorKind::UnknownTag, "unknown semigroup tag '" + std::string(name) + "'");
}

FiniteSemigroup catalog_semigroup(SemigroupTag tag)
{
  switch (tag) {
  case SemigroupTag::T1: return FiniteSemigroup::make({"0", "1"}, {{0, 0}, {0, 1}});
  case SemigroupTag::T2: return FiniteSemigroup::make({"0", "v"}, {{0, 0}, {0, 0}});
  case SemigroupTag::T3: return FiniteSemigroup::make({"e1", "e2"}, {{0, 1}, {0, 1}});
  case SemigroupTag::T3op: return FiniteSemigroup::make({"e1", "e2"}, {{0, 0}, {1, 1}});
  case SemigroupTag::Z2: return FiniteSemigroup::make({"0", "1"}, {{0, 1}, {1, 0}});
  case SemigroupTag::Trivial: return trivial_semigroup();
  }
  raise(ErrorKind::UnknownTag, "unknown semigroup tag");
}

FiniteSemigroup catalog_semigroup(std::string_view name)
{
  return catalog_semigroup(parse_semigroup_tag(name));
}

FiniteSemigroup right_zero_band(std::size_t k)
{
  if (k == 0)
    raise(ErrorKind::BadParam, "zero band needs at least one element");
  std::vector<std::string> labels;
  SemigroupTable t(k, std::vector<std::size_t>(k));
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back("t" + std::to_string(i + 1));
    for (std::size_t j = 0; j < k; ++j)
      t[i][j] = j;
  }
  return FiniteSemigroup::make(std::move(labels), std::move(t));
}

FiniteSemigroup left_zero_band(std::size_t k)
{
  return right_zero_band(k).opposite();
}

FiniteSemigroup trivial_semigroup()
{
  return FiniteSemigroup::make({"e"}, {{0}});
}

std::optional<std::vector<std::size_t>> find_isomorphism(const FiniteSemigroup& a, const FiniteSemigroup& b)
{
  const std::size_t n = a.size();
  if (n != b.size())
    return std::nullopt;
  std::vector<std::size_t> phi(n);
  std::iota(phi.begin(), phi.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        ok = phi[a.mul(i, j)] == b.mul(phi[i], phi[j]);
    if (ok)
      return phi;
  } while (std::next_permutation(phi.begin(), phi.end()));
  return std::nullopt;
}

bool are_isomorphic(const FiniteSemigroup& a, const FiniteSemigroup& b)
{
  return find_isomorphism(a, b).has_value();
}

SemigroupTag classify_order2(const FiniteSemigroup& s)
{
  if (s.size() != 2)
    raise(ErrorKind::WrongOrder, "classification needs exactly 2 elements, got " + std::to_string(s.size()));
  for (auto tag : {SemigroupTag::T1, SemigroupTag::T2, SemigroupTag::T3, SemigroupTag::T3op, SemigroupTag::Z2})
    if (are_isomorphic(s, catalog_semigroup(tag)))
      return tag;
  raise(ErrorKind::NotAssociative, "2-element table matches no semigroup");
}

namespace {

// Checks every triple whose three products are already filled in.
bool partial_consistent(const std::vector<int>& t, std::size_t n)
{
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const int ab = t[a * n + b];
      if (ab < 0)
        continue;
      for (std::size_t c = 0; c < n; ++c) {
        const int bc = t[b * n + c];
        if (bc < 0)
          continue;
        const int l = t[std::size_t(ab) * n + c];
        const int r = t[a * n + std::size_t(bc)];
        if (l >= 0 && r >= 0 && l != r)
          return false;
      }
    }
  return true;
}

void enumerate_rec(std::vector<int>& t, std::size_t pos, std::size_t n, std::vector<FiniteSemigroup>& out)
{
  if (pos == n * n) {
    SemigroupTable table(n, std::vector<std::size_t>(n));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back(std::to_string(i));
      for (std::size_t j = 0; j < n; ++j)
        table[i][j] = static_cast<std::size_t>(t[i * n + j]);
    }
    out.push_back(FiniteSemigroup::make(std::move(labels), std::move(table)));
    return;
  }
  for (std::size_t v = 0; v < n; ++v) {
    t[pos] = static_cast<int>(v);
    if (partial_consistent(t, n))
      enumerate_rec(t, pos + 1, n, out);
  }
  t[pos] = -1;
}

} // namespace

std::vector<FiniteSemigroup> enumerate_semigroups(std::size_t order)
{
  if (order > 4)
    raise(ErrorKind::OrderTooLarge, "enumeration is capped at order 4, got " + std::to_string(order));
  if (order == 0)
    raise(ErrorKind::BadParam, "order must be positive");
  std::vector<int> t(order * order, -1);
  std::vector<FiniteSemigroup> out;
  enumerate_rec(t, 0, order, out);
  return out;
}

std::vector<std::vector<std::size_t>> isomorphism_classes(const std::vector<FiniteSemigroup>& list)
{
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < list.size(); ++i) {
    bool placed = false;
    for (auto& cls : classes)
      if (are_isomorphic(list[cls.front()], list[i])) {
        cls.push_back(i);
        placed = true;
        break;
      }
    if (!placed)
      classes.push_back({i});
  }
  return classes;
}

} // namespace gralg
