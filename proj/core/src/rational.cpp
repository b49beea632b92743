#include "gralg/rational.hpp"

#include "gralg/error.hpp"

#include <cctype>

namespace gralg {

Rational parse_rational(std::string_view text)
{
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start])))
    ++start;
  s = s.substr(start);
  if (s.empty())
    raise(ErrorKind::ParseError, "empty rational literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_digit = false, seen_slash = false, digit_after_slash = false;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      seen_digit = true;
      if (seen_slash)
        digit_after_slash = true;
    } else if (c == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
    } else {
      raise(ErrorKind::ParseError, "malformed rational '" + s + "'");
    }
  }
  if (!seen_digit || (seen_slash && !digit_after_slash))
    raise(ErrorKind::ParseError, "malformed rational '" + s + "'");
  if (s[0] == '+')
    s = s.substr(1);
  Rational q;
  q.set_str(s, 10);
  if (q.get_den() == 0)
    raise(ErrorKind::ParseError, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value)
{
  return value.get_str();
}

std::string to_string(const Integer& value)
{
  return value.get_str();
}

std::string to_string(const Vec& v)
{
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      out += ", ";
    out += v[i].get_str();
  }
  return out + "]";
}

Vec zero_vec(std::size_t n)
{
  return Vec(n, Rational(0));
}

Vec unit_vec(std::size_t n, std::size_t i)
{
  Vec v(n, Rational(0));
  v[i] = 1;
  return v;
}

bool is_zero(const Vec& v)
{
  for (const auto& x : v)
    if (sgn(x) != 0)
      return false;
  return true;
}

std::size_t support_size(const Vec& v)
{
  std::size_t c = 0;
  for (const auto& x : v)
    if (sgn(x) != 0)
      ++c;
  return c;
}

void axpy(Vec& y, const Rational& a, const Vec& x)
{
  if (sgn(a) == 0)
    return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0)
      y[i] += a * x[i];
}

Vec add(const Vec& x, const Vec& y)
{
  Vec r = x;
  for (std::size_t i = 0; i < y.size(); ++i)
    r[i] += y[i];
  return r;
}

Vec sub(const Vec& x, const Vec& y)
{
  Vec r = x;
  for (std::size_t i = 0; i < y.size(); ++i)
    r[i] -= y[i];
  return r;
}

Vec scale(const Rational& a, const Vec& x)
{
  Vec r = x;
  for (auto& e : r)
    e *= a;
  return r;
}

SparseVec to_sparse(const Vec& v)
{
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0)
      s.emplace_back(i, v[i]);
  return s;
}

Vec to_dense(const SparseVec& v, std::size_t n)
{
  Vec d = zero_vec(n);
  for (const auto& [i, c] : v)
    d[i] += c;
  return d;
}

Integer factorial(unsigned n)
{
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer lcm_of_denominators(const Vec& v)
{
  Integer l = 1;
  for (const auto& x : v)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

} // namespace gralg
