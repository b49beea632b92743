#include "gralg/partition.hpp"

#include "gralg/error.hpp"

#include <algorithm>
#include <functional>

namespace gralg {

Partition::Partition(std::vector<std::size_t> parts) : parts_(std::move(parts))
{
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0)
      raise(ErrorKind::BadParam, "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      raise(ErrorKind::BadParam, "partition parts must be weakly decreasing");
    n_ += parts_[i];
  }
}

std::vector<std::size_t> Partition::conjugate() const
{
  std::vector<std::size_t> c(parts_.empty() ? 0 : parts_[0], 0);
  for (auto p : parts_)
    for (std::size_t j = 0; j < p; ++j)
      ++c[j];
  return c;
}

std::string to_string(const Partition& p)
{
  std::string s = "(";
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i)
      s += ",";
    s += std::to_string(p.parts()[i]);
  }
  return s + ")";
}

Partition parse_partition(std::string_view text)
{
  std::string s(text);
  if (!s.empty() && s.front() == '(' && s.back() == ')')
    s = s.substr(1, s.size() - 2);
  std::vector<std::size_t> parts;
  std::size_t pos = 0;
  auto number = [&](const std::string& tok) -> std::size_t {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
      raise(ErrorKind::ParseError, "bad partition '" + std::string(text) + "'");
    return std::stoul(tok);
  };
  while (pos <= s.size() && !s.empty()) {
    auto comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
    auto caret = tok.find('^');
    if (caret == std::string::npos) {
      parts.push_back(number(tok));
    } else {
      const auto v = number(tok.substr(0, caret));
      const auto k = number(tok.substr(caret + 1));
      parts.insert(parts.end(), k, v);
    }
    if (comma == std::string::npos)
      break;
    pos = comma + 1;
  }
  if (parts.empty())
    raise(ErrorKind::ParseError, "empty partition");
  try {
    return Partition(std::move(parts));
  } catch (const Error& e) {
    raise(ErrorKind::ParseError, e.detail());
  }
}

Integer hook_dim(const Partition& p)
{
  const auto conj = p.conjugate();
  Integer hooks = 1;
  for (std::size_t i = 0; i < p.length(); ++i)
    for (std::size_t j = 0; j < p.parts()[i]; ++j)
      hooks *= static_cast<unsigned long>((p.parts()[i] - j - 1) + (conj[j] - i - 1) + 1);
  return factorial(static_cast<unsigned>(p.n())) / hooks;
}

bool satisfies(const Partition& p, const PartitionConstraints& c)
{
  if (c.max_parts && p.length() > *c.max_parts)
    return false;
  for (const auto& [i, cap] : c.caps)
    if (p[i] > cap)
      return false;
  for (const auto& row : c.gamma) {
    Rational s = row.empty() ? Rational(0) : row[0];
    for (std::size_t j = 1; j < row.size(); ++j)
      s += row[j] * static_cast<unsigned long>(p[j]);
    if (s < 0)
      return false;
  }
  return true;
}

std::vector<Partition> enumerate_partitions(std::size_t n, const PartitionConstraints& c)
{
  std::vector<Partition> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t rest, std::size_t max_part) {
    if (rest == 0) {
      Partition p(cur);
      if (satisfies(p, c))
        out.push_back(std::move(p));
      return;
    }
    if (c.max_parts && cur.size() >= *c.max_parts)
      return;
    for (std::size_t part = std::min(rest, max_part); part >= 1; --part) {
      cur.push_back(part);
      rec(rest - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

DimBounds dim_bounds(const Partition& p, std::size_t q)
{
  if (p.length() > q)
    raise(ErrorKind::TooManyParts, to_string(p) + " has more than " + std::to_string(q) + " parts");
  const Integer nf = factorial(static_cast<unsigned>(p.n()));
  Integer denom_upper = 1, denom_lower = 1;
  for (std::size_t i = 1; i <= q; ++i) {
    denom_upper *= factorial(static_cast<unsigned>(p[i]));
    denom_lower *= factorial(static_cast<unsigned>(p[i] + q - 1));
  }
  DimBounds b;
  b.upper = nf / denom_upper;
  b.lower = Rational(nf, denom_lower);
  b.lower.canonicalize();
  return b;
}

YoungTableau::YoungTableau(Partition shape, std::vector<std::vector<std::size_t>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows))
{
  if (rows_.size() != shape_.length())
    raise(ErrorKind::SizeMismatch, "tableau rows do not match the shape");
  std::vector<bool> seen(shape_.n() + 1, false);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].size() != shape_.parts()[i])
      raise(ErrorKind::SizeMismatch, "tableau row length does not match the shape");
    for (auto v : rows_[i]) {
      if (v < 1 || v > shape_.n() || seen[v])
        raise(ErrorKind::BadParam, "tableau filling is not a bijection onto 1..n");
      seen[v] = true;
    }
  }
}

YoungTableau YoungTableau::standard(const Partition& shape)
{
  std::vector<std::vector<std::size_t>> rows(shape.length());
  for (std::size_t i = 0; i < shape.length(); ++i)
    rows[i].resize(shape.parts()[i]);
  std::size_t next = 1;
  const auto conj = shape.conjugate();
  for (std::size_t j = 0; j < conj.size(); ++j)
    for (std::size_t i = 0; i < conj[j]; ++i)
      rows[i][j] = next++;
  return YoungTableau(shape, std::move(rows));
}

std::vector<std::vector<std::size_t>> YoungTableau::columns() const
{
  const auto conj = shape_.conjugate();
  std::vector<std::vector<std::size_t>> cols(conj.size());
  for (std::size_t j = 0; j < conj.size(); ++j)
    for (std::size_t i = 0; i < conj[j]; ++i)
      cols[j].push_back(rows_[i][j]);
  return cols;
}

} // namespace gralg
