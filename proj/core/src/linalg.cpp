#include "gralg/linalg.hpp"

#include "gralg/error.hpp"

#include <random>
#include <set>

namespace gralg {

Echelon row_reduce(Matrix rows, std::size_t ncols)
{
  Echelon e;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && sgn(rows[piv][col]) == 0)
      ++piv;
    if (piv == rows.size())
      continue;
    std::swap(rows[r], rows[piv]);
    const Rational inv = 1 / rows[r][col];
    for (std::size_t j = col; j < ncols; ++j)
      rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][col]) == 0)
        continue;
      const Rational c = rows[i][col];
      for (std::size_t j = col; j < ncols; ++j)
        if (sgn(rows[r][j]) != 0)
          rows[i][j] -= c * rows[r][j];
    }
    e.pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  e.rows = std::move(rows);
  return e;
}

std::size_t rank(const Matrix& rows, std::size_t ncols)
{
  return row_reduce(rows, ncols).rows.size();
}

Matrix kernel(const Matrix& rows, std::size_t ncols)
{
  const Echelon e = row_reduce(rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : e.pivots)
    is_pivot[p] = true;
  Matrix basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f])
      continue;
    Vec v = unit_vec(ncols, f);
    for (std::size_t r = 0; r < e.rows.size(); ++r)
      v[e.pivots[r]] = -e.rows[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& rows, const Vec& rhs, std::size_t ncols)
{
  Matrix aug;
  aug.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Vec r = rows[i];
    r.resize(ncols);
    r.push_back(rhs[i]);
    aug.push_back(std::move(r));
  }
  const Echelon e = row_reduce(std::move(aug), ncols + 1);
  Vec x = zero_vec(ncols);
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    if (e.pivots[r] == ncols)
      return std::nullopt;
    x[e.pivots[r]] = e.rows[r][ncols];
  }
  return x;
}

Matrix identity(std::size_t n)
{
  Matrix m(n, zero_vec(n));
  for (std::size_t i = 0; i < n; ++i)
    m[i][i] = 1;
  return m;
}

std::optional<Matrix> inverse(const Matrix& m)
{
  const std::size_t n = m.size();
  if (n == 0)
    return Matrix{};
  Matrix aug;
  for (std::size_t i = 0; i < n; ++i) {
    Vec r = m[i];
    r.resize(2 * n);
    r[n + i] = 1;
    aug.push_back(std::move(r));
  }
  const Echelon e = row_reduce(std::move(aug), 2 * n);
  if (e.rows.size() < n || e.pivots[n - 1] >= n)
    return std::nullopt;
  Matrix inv(n, zero_vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv[i][j] = e.rows[i][n + j];
  return inv;
}

Matrix multiply(const Matrix& a, const Matrix& b)
{
  if (a.empty())
    return {};
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  Matrix c(a.size(), zero_vec(cols));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (sgn(a[i][k]) == 0)
        continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (sgn(b[k][j]) != 0)
          c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

Vec apply(const Matrix& m, const Vec& v)
{
  Vec out = zero_vec(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (sgn(m[i][j]) != 0 && sgn(v[j]) != 0)
        out[i] += m[i][j] * v[j];
  return out;
}

Matrix transpose(const Matrix& m, std::size_t ncols)
{
  Matrix t(ncols, zero_vec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < ncols; ++j)
      t[j][i] = m[i][j];
  return t;
}

Vec characteristic_polynomial(const Matrix& m)
{
  const std::size_t n = m.size();
  Vec c = zero_vec(n + 1);
  c[n] = 1;
  Matrix mk(n, zero_vec(n));
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next = multiply(m, mk);
    for (std::size_t i = 0; i < n; ++i)
      next[i][i] += c[n - k + 1];
    Matrix am = multiply(m, next);
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      tr += am[i][i];
    c[n - k] = -tr / static_cast<long>(k);
    mk = std::move(next);
  }
  return c;
}

namespace {

std::optional<std::vector<Integer>> divisors(Integer v)
{
  v = abs(v);
  if (v == 0)
    return std::vector<Integer>{};
  if (v > Integer("1000000000000"))
    return std::nullopt;
  std::vector<Integer> out;
  Integer d = 1;
  for (; d * d <= v; ++d)
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v)
        out.push_back(v / d);
    }
  return out;
}

Rational horner(const Vec& poly, const Rational& x)
{
  Rational acc = 0;
  for (std::size_t i = poly.size(); i-- > 0;)
    acc = acc * x + poly[i];
  return acc;
}

// Divides by (x - r); caller guarantees r is a root.
Vec deflate(const Vec& poly, const Rational& r)
{
  const std::size_t d = poly.size() - 1;
  Vec q = zero_vec(d);
  Rational carry = 0;
  for (std::size_t i = d; i-- > 0;) {
    carry = poly[i + 1] + carry * r;
    q[i] = carry;
  }
  return q;
}

} // namespace

std::optional<std::vector<RationalRoot>> rational_roots(const Vec& poly_in)
{
  Vec poly = poly_in;
  while (poly.size() > 1 && sgn(poly.back()) == 0)
    poly.pop_back();
  std::vector<RationalRoot> roots;
  std::size_t zero_mult = 0;
  while (poly.size() > 1 && sgn(poly[0]) == 0) {
    poly.erase(poly.begin());
    ++zero_mult;
  }
  if (zero_mult)
    roots.push_back({Rational(0), zero_mult});
  if (poly.size() <= 1)
    return roots;
  const Integer l = lcm_of_denominators(poly);
  const Integer a0 = Rational(poly.front() * l).get_num();
  const Integer ad = Rational(poly.back() * l).get_num();
  const auto ps = divisors(a0);
  const auto qs = divisors(ad);
  if (!ps || !qs)
    return std::nullopt;
  std::set<Rational> candidates;
  for (const auto& p : *ps)
    for (const auto& q : *qs) {
      Rational c(p, q);
      c.canonicalize();
      candidates.insert(c);
      candidates.insert(-c);
    }
  for (const auto& c : candidates) {
    std::size_t mult = 0;
    while (poly.size() > 1 && sgn(horner(poly, c)) == 0) {
      poly = deflate(poly, c);
      ++mult;
    }
    if (mult)
      roots.push_back({c, mult});
  }
  return roots;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {}

PrimeField::value_type PrimeField::add(value_type a, value_type b) const
{
  const std::uint64_t s = std::uint64_t(a) + b;
  return static_cast<value_type>(s >= p_ ? s - p_ : s);
}

PrimeField::value_type PrimeField::sub(value_type a, value_type b) const
{
  return a >= b ? a - b : static_cast<value_type>(std::uint64_t(a) + p_ - b);
}

PrimeField::value_type PrimeField::neg(value_type a) const
{
  return a == 0 ? 0 : p_ - a;
}

PrimeField::value_type PrimeField::mul(value_type a, value_type b) const
{
  return static_cast<value_type>(std::uint64_t(a) * b % p_);
}

PrimeField::value_type PrimeField::inv(value_type a) const
{
  std::uint64_t result = 1, base = a, e = p_ - 2;
  while (e) {
    if (e & 1)
      result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<value_type>(result);
}

PrimeField::value_type PrimeField::from_int(long long a) const
{
  long long r = a % static_cast<long long>(p_);
  if (r < 0)
    r += p_;
  return static_cast<value_type>(r);
}

bool PrimeField::represents(const Rational& q) const
{
  return mpz_fdiv_ui(q.get_den_mpz_t(), p_) != 0;
}

PrimeField::value_type PrimeField::from_rational(const Rational& q) const
{
  const unsigned long den = mpz_fdiv_ui(q.get_den_mpz_t(), p_);
  if (den == 0)
    raise(ErrorKind::DimensionMismatch, "denominator vanishes modulo " + std::to_string(p_));
  const unsigned long num = mpz_fdiv_ui(q.get_num_mpz_t(), p_);
  return mul(static_cast<value_type>(num), inv(static_cast<value_type>(den)));
}

__extension__ typedef unsigned __int128 U128;

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0)
      return n == p;
  }
  auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<U128>(a) * b % m);
  };
  auto powmod = [&](std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    b %= m;
    while (e) {
      if (e & 1)
        r = mulmod(r, b, m);
      b = mulmod(b, b, m);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

std::uint32_t prime_from_seed(std::uint64_t seed, unsigned bits)
{
  if (bits < 3 || bits > 31)
    raise(ErrorKind::BadParam, "prime bit size must lie in [3, 31]");
  std::mt19937_64 rng(seed);
  const std::uint64_t lo = 1ULL << (bits - 1);
  const std::uint64_t span = lo;
  for (;;) {
    std::uint64_t c = lo + rng() % span;
    c |= 1;
    if (is_prime(c))
      return static_cast<std::uint32_t>(c);
  }
}

} // namespace gralg
