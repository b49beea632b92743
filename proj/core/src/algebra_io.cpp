#include "gralg/algebra_io.hpp"

#include "gralg/catalog.hpp"
#include "gralg/error.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace gralg {

namespace {

std::vector<std::string> tokenize(const std::string& line)
{
  std::string body = line.substr(0, line.find('#'));
  std::istringstream in(body);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok)
    tokens.push_back(tok);
  return tokens;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg)
{
  raise(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::size_t parse_index(const std::string& tok, std::size_t line)
{
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    fail(line, "expected a non-negative index, got '" + tok + "'");
  return static_cast<std::size_t>(std::stoull(tok));
}

} // namespace

GradedAlgebra parse_algebra(std::string_view text)
{
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::string name;
  std::optional<FiniteSemigroup> sg;
  std::vector<std::string> sg_labels;
  std::vector<std::vector<std::string>> sg_rows;
  bool inline_sg = false;
  std::vector<std::string> basis;
  std::vector<std::string> degree_labels;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational, std::size_t>> entries;
  std::optional<std::vector<std::string>> unit_tokens;
  bool in_products = false, products_seen = false;

  while (std::getline(in, line)) {
    ++lineno;
    const auto tok = tokenize(line);
    if (tok.empty())
      continue;
    if (in_products) {
      if (tok.size() == 1 && tok[0] == "end") {
        in_products = false;
        continue;
      }
      if (tok.size() != 4)
        fail(lineno, "structure constant lines need 'i j k p/q'");
      Rational c;
      try {
        c = parse_rational(tok[3]);
      } catch (const Error& e) {
        fail(lineno, e.detail());
      }
      entries.emplace_back(parse_index(tok[0], lineno), parse_index(tok[1], lineno), parse_index(tok[2], lineno), c,
                           lineno);
      continue;
    }
    const std::string& key = tok[0];
    if (key == "algebra") {
      if (tok.size() != 2)
        fail(lineno, "'algebra' takes exactly one name");
      name = tok[1];
    } else if (key == "semigroup") {
      if (tok.size() == 2) {
        try {
          sg = catalog_semigroup(tok[1]);
        } catch (const Error& e) {
          fail(lineno, e.detail());
        }
      } else if (tok.size() >= 3 && tok[1] == "inline") {
        inline_sg = true;
        sg_labels.assign(tok.begin() + 2, tok.end());
      } else {
        fail(lineno, "expected 'semigroup <tag>' or 'semigroup inline <labels>'");
      }
    } else if (key == "row") {
      if (!inline_sg)
        fail(lineno, "'row' is only valid after 'semigroup inline'");
      sg_rows.emplace_back(tok.begin() + 1, tok.end());
    } else if (key == "basis") {
      basis.assign(tok.begin() + 1, tok.end());
    } else if (key == "degrees") {
      degree_labels.assign(tok.begin() + 1, tok.end());
    } else if (key == "products") {
      in_products = true;
      products_seen = true;
    } else if (key == "unit") {
      unit_tokens = std::vector<std::string>(tok.begin() + 1, tok.end());
    } else {
      fail(lineno, "unknown keyword '" + key + "'");
    }
  }
  if (in_products)
    fail(lineno, "missing 'end' after products");
  if (name.empty())
    raise(ErrorKind::ParseError, "missing 'algebra <name>'");
  if (inline_sg) {
    if (sg_rows.size() != sg_labels.size())
      raise(ErrorKind::ParseError, "inline semigroup needs one row per element");
    SemigroupTable table;
    for (const auto& row : sg_rows) {
      if (row.size() != sg_labels.size())
        raise(ErrorKind::ParseError, "inline semigroup row has wrong length");
      std::vector<std::size_t> r;
      for (const auto& l : row) {
        auto it = std::find(sg_labels.begin(), sg_labels.end(), l);
        if (it == sg_labels.end())
          raise(ErrorKind::ParseError, "unknown semigroup element '" + l + "' in table");
        r.push_back(static_cast<std::size_t>(it - sg_labels.begin()));
      }
      table.push_back(std::move(r));
    }
    sg = FiniteSemigroup::make(sg_labels, std::move(table));
  }
  if (!sg)
    raise(ErrorKind::ParseError, "missing 'semigroup'");
  if (basis.empty())
    raise(ErrorKind::ParseError, "missing or empty 'basis'");
  if (degree_labels.size() != basis.size())
    raise(ErrorKind::ParseError, "'degrees' must list one semigroup element per basis label");
  if (!products_seen)
    raise(ErrorKind::ParseError, "missing 'products' section");
  std::vector<std::size_t> degrees;
  for (const auto& d : degree_labels) {
    auto idx = sg->index_of(d);
    if (!idx)
      raise(ErrorKind::ParseError, "degree '" + d + "' is not a semigroup element");
    degrees.push_back(*idx);
  }
  const std::size_t n = basis.size();
  StructureMap m;
  for (const auto& [i, j, k, c, ln] : entries) {
    if (i >= n || j >= n || k >= n)
      fail(ln, "basis index out of range");
    auto& v = m[{i, j}];
    if (v.empty())
      v = zero_vec(n);
    v[k] += c;
  }
  for (auto it = m.begin(); it != m.end();)
    it = is_zero(it->second) ? m.erase(it) : std::next(it);
  std::optional<Vec> unit;
  if (unit_tokens) {
    if (unit_tokens->size() != n)
      raise(ErrorKind::ParseError, "unit vector must have one coefficient per basis label");
    Vec u;
    for (const auto& t : *unit_tokens)
      u.push_back(parse_rational(t));
    unit = std::move(u);
  }
  return make_algebra(name, *sg, basis, degrees, m, unit);
}

GradedAlgebra load_algebra_file(const std::string& path)
{
  std::ifstream f(path);
  if (!f)
    raise(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_algebra(ss.str());
}

std::string to_text(const GradedAlgebra& a)
{
  std::ostringstream out;
  out << "algebra " << a.name() << "\n";
  const auto& sg = a.semigroup();
  out << "semigroup inline";
  for (const auto& l : sg.labels())
    out << ' ' << l;
  out << "\n";
  for (std::size_t i = 0; i < sg.size(); ++i) {
    out << "row";
    for (std::size_t j = 0; j < sg.size(); ++j)
      out << ' ' << sg.label(sg.mul(i, j));
    out << "\n";
  }
  out << "basis";
  for (const auto& l : a.labels())
    out << ' ' << l;
  out << "\ndegrees";
  for (std::size_t i = 0; i < a.dim(); ++i)
    out << ' ' << sg.label(a.degree(i));
  out << "\nproducts\n";
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (const auto& [k, c] : a.product(i, j))
        out << i << ' ' << j << ' ' << k << ' ' << c.get_str() << "\n";
  out << "end\n";
  if (a.declared_unit()) {
    out << "unit";
    for (const auto& c : *a.declared_unit())
      out << ' ' << c.get_str();
    out << "\n";
  }
  return out.str();
}

GradedAlgebra resolve_algebra(const std::string& ref)
{
  if (ref.rfind("catalog:", 0) == 0)
    return catalog_algebra(ref);
  return load_algebra_file(ref);
}

} // namespace gralg
