#include "gralg/codim.hpp"

#include "gralg/error.hpp"

#include <chrono>
#include <cmath>
#include <algorithm>
#include <cstdio>
#include <functional>
#include <sstream>
#include <unordered_set>

namespace gralg {

Vec evaluate_monomial(const GradedAlgebra& a, const GradedMonomial& m, const std::vector<std::size_t>& subst)
{
  if (subst.size() != m.degrees.size())
    raise(ErrorKind::SizeMismatch, "substitution length does not match the number of variables");
  for (std::size_t v = 0; v < subst.size(); ++v) {
    if (subst[v] >= a.dim())
      raise(ErrorKind::BadParam, "substituted basis index out of range");
    if (a.degree(subst[v]) != m.degrees[v])
      raise(ErrorKind::DegreeMismatch, "variable " + std::to_string(v + 1) + " has degree " +
                                         a.semigroup().label(m.degrees[v]) + " but " + a.label(subst[v]) +
                                         " has degree " + a.semigroup().label(a.degree(subst[v])));
  }
  std::vector<std::size_t> word;
  for (auto v : m.word)
    word.push_back(subst[v]);
  return evaluate_word(a, word);
}

std::string_view to_string(RankMode mode)
{
  return mode == RankMode::modular ? "modular" : "exact";
}

RankMode parse_rank_mode(std::string_view text)
{
  if (text == "modular")
    return RankMode::modular;
  if (text == "exact" || text == "exact_rational")
    return RankMode::exact_rational;
  raise(ErrorKind::BadParam, "unknown rank mode '" + std::string(text) + "'");
}

namespace {

template <class F>
struct FieldTable {
  using value_type = typename F::value_type;
  F field;
  std::size_t dim = 0;
  std::vector<std::vector<std::pair<std::size_t, value_type>>> products;
  bool monomial = false;
  std::vector<std::int32_t> target;
  std::vector<value_type> coeff;
};

template <class F>
FieldTable<F> make_table(const GradedAlgebra& a, F field)
{
  FieldTable<F> t{field, a.dim(), {}, false, {}, {}};
  t.products.resize(t.dim * t.dim);
  for (std::size_t i = 0; i < t.dim; ++i)
    for (std::size_t j = 0; j < t.dim; ++j)
      for (const auto& [k, c] : a.product(i, j)) {
        auto v = field.from_rational(c);
        if (!field.is_zero(v))
          t.products[i * t.dim + j].emplace_back(k, v);
      }
  t.monomial = true;
  t.target.assign(t.dim * t.dim, -1);
  t.coeff.assign(t.dim * t.dim, field.zero());
  for (std::size_t x = 0; x < t.products.size(); ++x) {
    if (t.products[x].size() > 1) {
      t.monomial = false;
      break;
    }
    if (t.products[x].size() == 1) {
      t.target[x] = static_cast<std::int32_t>(t.products[x][0].first);
      t.coeff[x] = t.products[x][0].second;
    }
  }
  return t;
}

std::vector<std::size_t> factorials(std::size_t n)
{
  std::vector<std::size_t> f(n + 1, 1);
  for (std::size_t i = 1; i <= n; ++i)
    f[i] = f[i - 1] * i;
  return f;
}

// values[row * dim + k]: coordinate k of the monomial x_{s(1)}...x_{s(n)} for the row-th permutation s in
// lexicographic order, with variable v replaced by basis element basis_of[v].
template <class F>
void permutation_values(const FieldTable<F>& t, const std::vector<std::size_t>& basis_of,
                        std::vector<typename F::value_type>& values)
{
  using V = typename F::value_type;
  const std::size_t n = basis_of.size();
  const std::size_t dim = t.dim;
  const auto fact = factorials(n);
  values.assign(fact[n] * dim, t.field.zero());
  std::vector<bool> used(n, false);
  if (t.monomial) {
    std::function<void(std::size_t, std::size_t, std::int32_t, V)> rec = [&](std::size_t depth, std::size_t row,
                                                                             std::int32_t idx, V coef) {
      if (depth == n) {
        values[row * dim + static_cast<std::size_t>(idx)] = coef;
        return;
      }
      std::size_t k = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (used[v])
          continue;
        const std::size_t sub_row = row + k * fact[n - 1 - depth];
        ++k;
        const std::size_t b = basis_of[v];
        std::int32_t next;
        V c;
        if (depth == 0) {
          next = static_cast<std::int32_t>(b);
          c = t.field.one();
        } else {
          const std::size_t key = static_cast<std::size_t>(idx) * dim + b;
          next = t.target[key];
          if (next < 0)
            continue;
          c = t.field.mul(coef, t.coeff[key]);
        }
        used[v] = true;
        rec(depth + 1, sub_row, next, c);
        used[v] = false;
      }
    };
    rec(0, 0, -1, t.field.one());
    return;
  }
  std::vector<std::vector<V>> prefix(n + 1, std::vector<V>(dim, t.field.zero()));
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t row) {
    if (depth == n) {
      for (std::size_t k = 0; k < dim; ++k)
        values[row * dim + k] = prefix[n][k];
      return;
    }
    std::size_t k = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v])
        continue;
      const std::size_t sub_row = row + k * fact[n - 1 - depth];
      ++k;
      const std::size_t b = basis_of[v];
      auto& next = prefix[depth + 1];
      std::fill(next.begin(), next.end(), t.field.zero());
      bool nonzero = false;
      if (depth == 0) {
        next[b] = t.field.one();
        nonzero = true;
      } else {
        for (std::size_t m = 0; m < dim; ++m) {
          if (t.field.is_zero(prefix[depth][m]))
            continue;
          for (const auto& [tk, c] : t.products[m * dim + b]) {
            next[tk] = t.field.add(next[tk], t.field.mul(prefix[depth][m], c));
            nonzero = true;
          }
        }
      }
      if (!nonzero)
        continue;
      used[v] = true;
      rec(depth + 1, sub_row);
      used[v] = false;
    }
  };
  rec(0, 0);
}

struct ColumnHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const
  {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : v) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

template <class F>
std::size_t rank_block(const FieldTable<F>& t, const std::vector<std::vector<std::size_t>>& candidates,
                       std::size_t n)
{
  using V = typename F::value_type;
  const std::size_t rows = factorials(n)[n];
  IncrementalEchelon<F> ech(t.field, rows);
  std::unordered_set<std::vector<std::uint32_t>, ColumnHash> seen;
  std::vector<std::size_t> digit(n, 0), basis_of(n);
  std::vector<V> values;
  for (;;) {
    for (std::size_t v = 0; v < n; ++v)
      basis_of[v] = candidates[v][digit[v]];
    permutation_values(t, basis_of, values);
    for (std::size_t k = 0; k < t.dim && !ech.full(); ++k) {
      std::vector<V> col(rows);
      bool nonzero = false;
      for (std::size_t r = 0; r < rows; ++r) {
        col[r] = values[r * t.dim + k];
        nonzero = nonzero || !t.field.is_zero(col[r]);
      }
      if (!nonzero)
        continue;
      if constexpr (std::is_same_v<V, std::uint32_t>) {
        if (!seen.insert(col).second)
          continue;
      }
      ech.insert(std::move(col));
    }
    if (ech.full())
      break;
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++digit[pos] < candidates[pos].size())
        break;
      digit[pos] = 0;
      if (pos == 0) {
        pos = n + 1;
        break;
      }
    }
    if (pos == n + 1 || n == 0)
      break;
  }
  return ech.rank();
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b)
{
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool field_represents(const GradedAlgebra& a, std::uint32_t p)
{
  const PrimeField f(p);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (const auto& [k, c] : a.product(i, j))
        if (!f.represents(c))
          return false;
  return true;
}

std::vector<std::uint32_t> block_primes(const GradedAlgebra& a, std::size_t block_index, const CodimOptions& o)
{
  if (!o.primes.empty()) {
    for (auto p : o.primes)
      if (!is_prime(p))
        raise(ErrorKind::BadParam, std::to_string(p) + " is not prime");
    return o.primes;
  }
  std::vector<std::uint32_t> out;
  std::uint64_t salt = 0;
  while (out.size() < 2) {
    const std::uint32_t p = prime_from_seed(mix(mix(o.seed, block_index), salt++));
    if (std::find(out.begin(), out.end(), p) == out.end() && field_represents(a, p))
      out.push_back(p);
  }
  return out;
}

std::string assignment_name(const GradedAlgebra& a, const std::vector<std::size_t>& assignment)
{
  std::string s = "(";
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (i)
      s += ",";
    s += a.semigroup().label(assignment[i]);
  }
  return s + ")";
}

} // namespace

std::vector<std::vector<std::size_t>> degree_assignments(const GradedAlgebra& a, std::size_t n)
{
  const auto supp = support(a);
  std::vector<std::vector<std::size_t>> out;
  if (supp.empty())
    return out;
  std::vector<std::size_t> digit(n, 0);
  for (;;) {
    std::vector<std::size_t> asg(n);
    for (std::size_t i = 0; i < n; ++i)
      asg[i] = supp[digit[i]];
    out.push_back(std::move(asg));
    std::size_t pos = n;
    bool done = true;
    while (pos > 0) {
      --pos;
      if (++digit[pos] < supp.size()) {
        done = false;
        break;
      }
      digit[pos] = 0;
    }
    if (done)
      break;
  }
  return out;
}

BlockRank block_rank(const GradedAlgebra& a, const std::vector<std::size_t>& assignment, std::size_t block_index,
                     const CodimOptions& options)
{
  const std::size_t n = assignment.size();
  BlockRank br;
  br.assignment = assignment;
  std::vector<std::vector<std::size_t>> candidates(n);
  std::size_t cols = a.dim();
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t b = 0; b < a.dim(); ++b)
      if (a.degree(b) == assignment[v])
        candidates[v].push_back(b);
    cols *= candidates[v].size();
  }
  br.rows = factorials(n)[n];
  br.columns = cols;
  if (cols == 0)
    return br;
  const double entries = static_cast<double>(br.rows) * static_cast<double>(br.columns);
  if (entries > static_cast<double>(options.max_block_entries))
    raise(ErrorKind::ResourceLimit, "block for degree assignment " + assignment_name(a, assignment) + " has " +
                                      std::to_string(br.rows) + "x" + std::to_string(br.columns) +
                                      " entries, above the cap of " + std::to_string(options.max_block_entries));
  if (options.mode == RankMode::exact_rational) {
    br.exact_rank = rank_block(make_table(a, RationalField{}), candidates, n);
    br.rank = *br.exact_rank;
    return br;
  }
  for (auto p : block_primes(a, block_index, options))
    br.modular_ranks.emplace_back(p, rank_block(make_table(a, PrimeField(p)), candidates, n));
  br.rank = 0;
  for (const auto& [p, r] : br.modular_ranks)
    br.rank = std::max(br.rank, r);
  if (entries <= static_cast<double>(options.exact_check_entries))
    br.exact_rank = rank_block(make_table(a, RationalField{}), candidates, n);
  return br;
}

CodimResult graded_codim(const GradedAlgebra& a, std::size_t n, const CodimOptions& options)
{
  if (n == 0)
    raise(ErrorKind::BadParam, "codimension index must be at least 1");
  if (n > 12)
    raise(ErrorKind::ResourceLimit, "n = " + std::to_string(n) + " exceeds the supported range");
  const auto start = std::chrono::steady_clock::now();
  CodimResult res;
  res.n = n;
  const auto assignments = degree_assignments(a, n);
  // Check caps up front so the reported offending block does not depend on scheduling.
  {
    const std::size_t rows = factorials(n)[n];
    for (const auto& asg : assignments) {
      double cols = static_cast<double>(a.dim());
      for (auto t : asg)
        cols *= static_cast<double>(component(a, t).dim());
      if (static_cast<double>(rows) * cols > static_cast<double>(options.max_block_entries))
        raise(ErrorKind::ResourceLimit, "block for degree assignment " + assignment_name(a, asg) + " has " +
                                          std::to_string(rows) + "x" + std::to_string(static_cast<std::size_t>(cols)) +
                                          " entries, above the cap of " + std::to_string(options.max_block_entries));
    }
  }
  res.blocks.resize(assignments.size());
  auto body = [&](std::size_t i) { res.blocks[i] = block_rank(a, assignments[i], i, options); };
  if (options.pool)
    options.pool->parallel_for(assignments.size(), body);
  else
    for (std::size_t i = 0; i < assignments.size(); ++i)
      body(i);

  bool agree = true, exact_mismatch = false;
  for (auto& b : res.blocks) {
    for (const auto& [p, r] : b.modular_ranks)
      if (r != b.modular_ranks.front().second)
        agree = false;
    if (options.mode == RankMode::modular && b.exact_rank && *b.exact_rank != b.rank) {
      exact_mismatch = true;
      b.rank = *b.exact_rank;
    }
    res.value += static_cast<unsigned long>(b.rank);
  }
  if (options.mode == RankMode::exact_rational) {
    res.certification = "exact";
  } else {
    std::size_t primes = 0;
    for (const auto& b : res.blocks)
      primes = std::max(primes, b.modular_ranks.size());
    if (exact_mismatch)
      res.certification = "modular lower bound, exact cross-check disagrees";
    else if (!agree)
      res.certification = "modular lower bound, primes disagree";
    else if (primes >= 2)
      res.certification = "modular lower bound, stable across " + std::to_string(primes) + " primes";
    else
      res.certification = "modular lower bound, single prime";
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

CodimResult ordinary_codim(const GradedAlgebra& a, std::size_t n, const CodimOptions& options)
{
  return graded_codim(trivially_graded(a), n, options);
}

std::vector<CodimResult> codim_sequence(const GradedAlgebra& a, std::size_t n_max, const CodimOptions& options)
{
  std::vector<CodimResult> out;
  for (std::size_t n = 1; n <= n_max; ++n)
    out.push_back(graded_codim(a, n, options));
  return out;
}

Integer codim_shape_bound(const GradedAlgebra& a, std::size_t n)
{
  const Integer nf = factorial(static_cast<unsigned>(n));
  Integer total = 0;
  for (const auto& asg : degree_assignments(a, n)) {
    Integer cols = static_cast<unsigned long>(a.dim());
    for (auto t : asg)
      cols *= static_cast<unsigned long>(component(a, t).dim());
    total += cols < nf ? cols : nf;
  }
  return total;
}

ExponentEstimate exponent_estimate(const std::vector<double>& seq)
{
  if (seq.empty())
    raise(ErrorKind::EmptySequence, "exponent estimate needs at least one term");
  ExponentEstimate e;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!(seq[i] > 0))
      raise(ErrorKind::BadParam, "sequence entries must be positive");
    e.roots.push_back(std::pow(seq[i], 1.0 / static_cast<double>(i + 1)));
  }
  if (seq.size() < 2)
    return e;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const double x = static_cast<double>(i + 1), y = std::log(seq[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  e.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return e;
}

ExponentEstimate exponent_estimate(const std::vector<Integer>& seq)
{
  std::vector<double> d;
  for (const auto& x : seq)
    d.push_back(x.get_d());
  return exponent_estimate(d);
}

std::string codim_csv(const std::vector<CodimResult>& rows, bool include_timing)
{
  std::ostringstream out;
  out << "n,c_n,certification,seconds\n";
  for (const auto& r : rows) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", include_timing ? r.seconds : 0.0);
    std::string cert = r.certification;
    if (cert.find_first_of(",\"") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : cert)
        quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
      cert = quoted + "\"";
    }
    out << r.n << ',' << r.value.get_str() << ',' << cert << ',' << buf << "\n";
  }
  return out.str();
}

} // namespace gralg
