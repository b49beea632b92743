#include "gralg/cochar.hpp"

#include "gralg/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

namespace gralg {

std::vector<std::size_t> GradedPolynomial::variables() const
{
  std::vector<std::size_t> out;
  for (const auto& [w, c] : terms_)
    out.insert(out.end(), w.vars.begin(), w.vars.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void GradedPolynomial::add(const GradedWord& w, const Rational& c)
{
  if (w.vars.size() != w.degrees.size())
    raise(ErrorKind::SizeMismatch, "graded word has mismatched variable and degree lists");
  for (auto v : w.vars)
    if (v >= num_vars_)
      raise(ErrorKind::BadParam, "variable index out of range");
  if (sgn(c) == 0)
    return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0)
      terms_.erase(it);
  }
}

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& other)
{
  num_vars_ = std::max(num_vars_, other.num_vars_);
  for (const auto& [w, c] : other.terms_)
    add(w, c);
  return *this;
}

GradedPolynomial GradedPolynomial::scaled(const Rational& c) const
{
  GradedPolynomial out(num_vars_);
  if (sgn(c) == 0)
    return out;
  for (const auto& [w, x] : terms_)
    out.terms_.emplace(w, x * c);
  return out;
}

GradedPolynomial GradedPolynomial::permuted(const std::vector<std::size_t>& sigma) const
{
  if (sigma.size() != num_vars_)
    raise(ErrorKind::SizeMismatch, "permutation size does not match the number of variables");
  GradedPolynomial out(num_vars_);
  for (const auto& [w, c] : terms_) {
    GradedWord nw{w.vars, w.degrees};
    for (auto& v : nw.vars)
      v = sigma[v];
    out.add(nw, c);
  }
  return out;
}

GradedPolynomial GradedPolynomial::operator*(const GradedPolynomial& other) const
{
  GradedPolynomial out(std::max(num_vars_, other.num_vars_));
  const auto mine = variables(), theirs = other.variables();
  std::vector<std::size_t> common;
  std::set_intersection(mine.begin(), mine.end(), theirs.begin(), theirs.end(), std::back_inserter(common));
  if (!common.empty())
    raise(ErrorKind::BadParam, "product of polynomials sharing a variable is not multilinear");
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : other.terms_) {
      GradedWord w{w1.vars, w1.degrees};
      w.vars.insert(w.vars.end(), w2.vars.begin(), w2.vars.end());
      w.degrees.insert(w.degrees.end(), w2.degrees.begin(), w2.degrees.end());
      out.add(w, c1 * c2);
    }
  return out;
}

namespace {

int permutation_sign(const std::vector<std::size_t>& p)
{
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j])
        s = -s;
  return s;
}

std::size_t factorial_size(std::size_t n)
{
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i)
    f *= i;
  return f;
}

// Evaluates words of basis elements, through the monomial table when the algebra has one.
class WordEvaluator {
public:
  explicit WordEvaluator(const GradedAlgebra& a) : a_(a), table_(monomial_table(a)) {}

  // Adds c * b_{word[0]} ... b_{word[k-1]} to acc.
  void accumulate(const std::vector<std::size_t>& word, const Rational& c, Vec& acc) const
  {
    if (word.empty())
      raise(ErrorKind::BadParam, "empty word");
    if (table_) {
      std::int64_t coef = 1;
      std::size_t cur = word[0];
      for (std::size_t p = 1; p < word.size(); ++p) {
        const auto t = table_->target_of(cur, word[p]);
        if (t < 0)
          return;
        coef *= table_->coeff_of(cur, word[p]);
        cur = static_cast<std::size_t>(t);
      }
      acc[cur] += c * Rational(static_cast<long>(coef));
      return;
    }
    axpy(acc, c, evaluate_word(a_, word));
  }

private:
  const GradedAlgebra& a_;
  std::optional<MonomialTable> table_;
};

Vec evaluate_with(const GradedAlgebra& a, const WordEvaluator& ev, const GradedPolynomial& f,
                  const std::vector<std::size_t>& subst)
{
  Vec acc = zero_vec(a.dim());
  std::vector<std::size_t> word;
  for (const auto& [w, c] : f.terms()) {
    word.clear();
    bool ok = true;
    for (std::size_t p = 0; p < w.vars.size(); ++p) {
      const std::size_t b = subst[w.vars[p]];
      if (a.degree(b) != w.degrees[p]) {
        ok = false;
        break;
      }
      word.push_back(b);
    }
    if (ok)
      ev.accumulate(word, c, acc);
  }
  return acc;
}

Vec evaluate_factored(const GradedAlgebra& a, const WordEvaluator& ev, const FactoredPolynomial& f,
                      const std::vector<std::size_t>& subst)
{
  if (f.factors.empty())
    raise(ErrorKind::BadParam, "empty product has no value in a non-unital algebra");
  Vec cur;
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    Vec v = evaluate_with(a, ev, f.factors[i], subst);
    cur = i == 0 ? std::move(v) : a.multiply(cur, v);
    if (is_zero(cur))
      return zero_vec(a.dim());
  }
  return cur;
}

void check_subst(const GradedAlgebra& a, std::size_t num_vars, const std::vector<std::size_t>& subst)
{
  if (subst.size() != num_vars)
    raise(ErrorKind::SizeMismatch, "substitution length does not match the number of variables");
  for (auto b : subst)
    if (b >= a.dim())
      raise(ErrorKind::BadParam, "substituted basis index out of range");
}

std::vector<std::vector<std::size_t>> all_permutations(std::vector<std::size_t> items)
{
  std::vector<std::vector<std::size_t>> out;
  std::sort(items.begin(), items.end());
  do
    out.push_back(items);
  while (std::next_permutation(items.begin(), items.end()));
  return out;
}

std::vector<std::size_t> compose(const std::vector<std::size_t>& p, const std::vector<std::size_t>& q)
{
  std::vector<std::size_t> r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i)
    r[i] = p[q[i]];
  return r;
}

} // namespace

GradedPolynomial alternating_block(std::size_t num_vars, const std::vector<std::size_t>& vars,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& pattern)
{
  if (pattern.size() != vars.size())
    raise(ErrorKind::SizeMismatch, "pattern length must equal the number of alternated variables");
  std::vector<bool> seen(vars.size(), false);
  for (const auto& [p, d] : pattern) {
    if (p >= vars.size() || seen[p])
      raise(ErrorKind::BadParam, "pattern positions must be a permutation of the column");
    seen[p] = true;
  }
  GradedPolynomial out(num_vars);
  std::vector<std::size_t> sigma(vars.size());
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    GradedWord w;
    for (const auto& [p, d] : pattern) {
      w.vars.push_back(vars[sigma[p]]);
      w.degrees.push_back(d);
    }
    out.add(w, permutation_sign(sigma));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

GradedPolynomial FactoredPolynomial::expand() const
{
  GradedPolynomial out(num_vars);
  if (factors.empty())
    return out;
  out = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i)
    out = out * factors[i];
  return out;
}

Vec evaluate(const GradedAlgebra& a, const GradedPolynomial& f, const std::vector<std::size_t>& subst)
{
  check_subst(a, f.num_vars(), subst);
  return evaluate_with(a, WordEvaluator(a), f, subst);
}

Vec evaluate(const GradedAlgebra& a, const FactoredPolynomial& f, const std::vector<std::size_t>& subst)
{
  check_subst(a, f.num_vars, subst);
  return evaluate_factored(a, WordEvaluator(a), f, subst);
}

std::vector<std::vector<std::size_t>> row_group(const YoungTableau& t)
{
  const std::size_t n = t.shape().n();
  std::vector<std::size_t> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<std::size_t>> out{id};
  for (const auto& row : t.rows()) {
    if (row.size() < 2)
      continue;
    std::vector<std::size_t> cells;
    for (auto v : row)
      cells.push_back(v - 1);
    const auto perms = all_permutations(cells);
    std::vector<std::vector<std::size_t>> next;
    next.reserve(out.size() * perms.size());
    for (const auto& base : out)
      for (const auto& p : perms) {
        auto g = base;
        for (std::size_t k = 0; k < cells.size(); ++k)
          g[cells[k]] = p[k];
        next.push_back(std::move(g));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<std::pair<std::vector<std::size_t>, int>> column_group(const YoungTableau& t)
{
  const std::size_t n = t.shape().n();
  std::vector<std::size_t> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::pair<std::vector<std::size_t>, int>> out{{id, 1}};
  for (const auto& col : t.columns()) {
    if (col.size() < 2)
      continue;
    std::vector<std::size_t> cells;
    for (auto v : col)
      cells.push_back(v - 1);
    std::vector<std::size_t> idx(cells.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<std::pair<std::vector<std::size_t>, int>> perms;
    do {
      std::vector<std::size_t> p(cells.size());
      for (std::size_t k = 0; k < cells.size(); ++k)
        p[k] = cells[idx[k]];
      perms.emplace_back(std::move(p), permutation_sign(idx));
    } while (std::next_permutation(idx.begin(), idx.end()));
    std::vector<std::pair<std::vector<std::size_t>, int>> next;
    next.reserve(out.size() * perms.size());
    for (const auto& [base, s] : out)
      for (const auto& [p, sp] : perms) {
        auto g = base;
        for (std::size_t k = 0; k < cells.size(); ++k)
          g[cells[k]] = p[k];
        next.emplace_back(std::move(g), s * sp);
      }
    out = std::move(next);
  }
  return out;
}

bool is_column_alternating(const FactoredPolynomial& f, const YoungTableau& t)
{
  const std::size_t n = t.shape().n();
  if (f.num_vars != n)
    return false;
  std::vector<std::vector<std::size_t>> factor_vars;
  for (const auto& g : f.factors)
    factor_vars.push_back(g.variables());
  for (const auto& col : t.columns()) {
    if (col.size() < 2)
      continue;
    std::optional<std::size_t> owner;
    for (std::size_t i = 0; i < f.factors.size() && !owner; ++i)
      if (std::all_of(col.begin(), col.end(), [&](std::size_t v) {
            return std::binary_search(factor_vars[i].begin(), factor_vars[i].end(), v - 1);
          }))
        owner = i;
    if (!owner)
      return false;
    const auto& g = f.factors[*owner];
    const auto negated = g.scaled(-1);
    for (std::size_t k = 0; k + 1 < col.size(); ++k) {
      std::vector<std::size_t> swap(n);
      std::iota(swap.begin(), swap.end(), 0);
      std::swap(swap[col[k] - 1], swap[col[k + 1] - 1]);
      if (!(g.permuted(swap) == negated))
        return false;
    }
  }
  return true;
}

SymmetrizerResult apply_symmetrizer(const GradedAlgebra& a, const YoungTableau& t, const FactoredPolynomial& f,
                                    const std::vector<std::size_t>& tau, const SymmetrizerOptions& options)
{
  const std::size_t n = t.shape().n();
  if (f.num_vars != n)
    raise(ErrorKind::SizeMismatch, "polynomial degree " + std::to_string(f.num_vars) + " does not match |lambda| = " +
                                     std::to_string(n));
  check_subst(a, n, tau);
  const WordEvaluator ev(a);
  const auto rows = row_group(t);
  SymmetrizerResult res;
  res.value = zero_vec(a.dim());

  auto sum_over = [&](std::size_t count, const std::function<Vec(std::size_t)>& term) {
    std::vector<Vec> partial(count);
    auto body = [&](std::size_t i) { partial[i] = term(i); };
    if (options.pool)
      options.pool->parallel_for(count, body);
    else
      for (std::size_t i = 0; i < count; ++i)
        body(i);
    Vec total = zero_vec(a.dim());
    for (const auto& p : partial)
      axpy(total, 1, p);
    return total;
  };

  if (options.convention == SymmetrizerConvention::e && options.allow_shortcut && is_column_alternating(f, t)) {
    Integer scalar = 1;
    for (const auto& col : t.columns())
      scalar *= factorial(static_cast<unsigned>(col.size()));
    res.shortcut_used = true;
    res.terms = rows.size();
    Vec total = sum_over(rows.size(), [&](std::size_t i) {
      std::vector<std::size_t> s(n);
      for (std::size_t v = 0; v < n; ++v)
        s[v] = tau[rows[i][v]];
      return evaluate_factored(a, ev, f, s);
    });
    res.value = scale(Rational(scalar), total);
    return res;
  }

  const auto cols = column_group(t);
  const double work = static_cast<double>(rows.size()) * static_cast<double>(cols.size());
  if (work > static_cast<double>(options.max_terms))
    raise(ErrorKind::ResourceLimit, "symmetrizer has " + std::to_string(rows.size()) + "x" +
                                      std::to_string(cols.size()) + " terms, above the cap");
  res.terms = rows.size() * cols.size();
  const bool star = options.convention == SymmetrizerConvention::e_star;
  res.value = sum_over(rows.size(), [&](std::size_t i) {
    Vec acc = zero_vec(a.dim());
    std::vector<std::size_t> s(n);
    for (const auto& [g, sign] : cols) {
      const auto rho = star ? compose(g, rows[i]) : compose(rows[i], g);
      for (std::size_t v = 0; v < n; ++v)
        s[v] = tau[rho[v]];
      axpy(acc, sign, evaluate_factored(a, ev, f, s));
    }
    return acc;
  });
  return res;
}

int theta(const GradedAlgebra& a, std::size_t basis_index)
{
  if (basis_index >= a.dim())
    raise(ErrorKind::BadParam, "basis index out of range");
  const auto& l = a.label(basis_index);
  if (l.size() < 6 || l[0] != '(' || l[1] != 'e' || l[4] != ',' || l[2] < '1' || l[2] > '2' || l[3] < '1' ||
      l[3] > '2')
    raise(ErrorKind::UnsupportedAlgebra, "label '" + l + "' is not a 2x2 matrix-unit pair");
  return (l[3] - '0') - (l[2] - '0');
}

ThetaScanReport theta_scan(const GradedAlgebra& a, std::size_t n_max)
{
  std::vector<int> th(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    th[i] = theta(a, i);
  ThetaScanReport rep;
  std::vector<std::size_t> word;
  std::function<void(const Vec&, int)> rec = [&](const Vec& value, int sum) {
    ++rep.words;
    if (is_zero(value))
      return;
    ++rep.nonzero;
    rep.min_sum = std::min(rep.min_sum, sum);
    rep.max_sum = std::max(rep.max_sum, sum);
    bool bad = sum < -1 || sum > 1;
    for (std::size_t k = 0; k < value.size(); ++k)
      if (sgn(value[k]) != 0 && th[k] != sum)
        bad = true;
    if (bad) {
      std::string w;
      for (auto b : word)
        w += a.label(b);
      rep.violations.push_back(w + " has theta sum " + std::to_string(sum));
    }
    if (word.size() == n_max)
      return;
    for (std::size_t b = 0; b < a.dim(); ++b) {
      word.push_back(b);
      rec(a.multiply(value, a.basis_vector(b)), sum + th[b]);
      word.pop_back();
    }
  };
  if (n_max == 0)
    return rep;
  for (std::size_t b = 0; b < a.dim(); ++b) {
    word.push_back(b);
    rec(a.basis_vector(b), th[b]);
    word.pop_back();
  }
  return rep;
}

std::string_view to_string(WitnessVariant v)
{
  return v == WitnessVariant::T1 ? "T1" : "T3";
}

WitnessVariant parse_witness_variant(std::string_view text)
{
  if (text == "T1")
    return WitnessVariant::T1;
  if (text == "T3")
    return WitnessVariant::T3;
  raise(ErrorKind::UnknownTag, "unknown witness variant '" + std::string(text) + "'");
}

namespace {

using Pattern = std::vector<std::pair<std::size_t, std::size_t>>;

// Entries (tuple position counted from 1, degree) in product order; degree 0 is h_0 / h_{e_1}.
const std::map<std::size_t, Pattern>& patterns(WitnessVariant v)
{
  static const std::map<std::size_t, Pattern> t1{
      {1, {{3, 0}, {2, 1}, {6, 0}, {4, 1}, {5, 0}, {1, 0}, {7, 1}}},
      {2, {{3, 0}, {2, 1}, {6, 0}, {4, 1}, {5, 0}, {1, 0}}},
      {3, {{5, 0}, {4, 1}, {1, 0}, {2, 1}, {3, 0}}},
      {4, {{2, 1}, {3, 0}, {5, 1}, {4, 1}, {1, 0}}},
      {5, {{4, 1}, {1, 0}, {2, 1}, {3, 0}}},
      {6, {{2, 1}, {3, 1}, {4, 1}, {1, 0}}},
      {7, {{1, 0}, {2, 1}, {3, 0}}},
      {8, {{2, 1}, {3, 1}, {1, 0}}},
      {9, {{1, 0}, {2, 1}}},
      {10, {{2, 0}, {1, 0}}},
      {11, {{1, 0}}},
      {12, {{1, 1}}},
  };
  static const std::map<std::size_t, Pattern> t3{
      {1, {{3, 0}, {5, 1}, {4, 0}, {2, 1}, {1, 0}, {6, 0}}},
      {2, {{1, 0}, {3, 0}, {5, 1}, {2, 1}, {4, 0}}},
      {3, {{4, 0}, {2, 1}, {1, 0}, {3, 0}}},
      {4, {{1, 0}, {3, 0}, {4, 1}, {2, 1}}},
      {5, {{2, 1}, {1, 0}, {3, 0}}},
      {6, {{2, 1}, {1, 0}, {3, 1}}},
      {7, {{2, 1}, {1, 0}}},
      {8, {{1, 0}, {2, 0}}},
      {9, {{1, 0}}},
      {10, {{1, 1}}},
  };
  return v == WitnessVariant::T1 ? t1 : t3;
}

// tau rows: entry [r][b-1] is the label in row r of every column of block b.
const std::vector<std::vector<std::string>>& tau_table(WitnessVariant v)
{
  static const std::vector<std::vector<std::string>> t1{
      {"(e21,0)", "(e21,0)", "(e21,0)", "(e21,0)", "(e21,0)", "(e21,0)", "(e21,0)", "(e21,0)", "(e21,0)", "(e21,0)",
       "(e21,0)", "(e11,e11)"},
      {"(e11,e11)", "(e11,e11)", "(e11,e11)", "(e11,e11)", "(e11,e11)", "(e11,e11)", "(e11,e11)", "(e11,e11)",
       "(e11,e11)", "(e12,0)"},
      {"(e11,0)", "(e11,0)", "(e11,0)", "(e11,0)", "(e11,0)", "(e12,e12)", "(e11,0)", "(e12,e12)"},
      {"(e22,e22)", "(e22,e22)", "(e22,e22)", "(e22,e22)", "(e22,e22)", "(e22,e22)"},
      {"(e22,0)", "(e22,0)", "(e22,0)", "(e12,e12)"},
      {"(e12,0)", "(e12,0)"},
      {"(e12,e12)"},
  };
  static const std::vector<std::vector<std::string>> t3{
      {"(e21,0)", "(e21,0)", "(e21,0)", "(e21,0)", "(e21,0)", "(e21,0)", "(e21,0)", "(e21,0)", "(e21,0)",
       "(e22,e22)"},
      {"(e22,e22)", "(e22,e22)", "(e22,e22)", "(e22,e22)", "(e22,e22)", "(e22,e22)", "(e22,e22)", "(e12,0)"},
      {"(e11,0)", "(e11,0)", "(e11,0)", "(e11,0)", "(e11,0)", "(e12,e12)"},
      {"(e22,0)", "(e22,0)", "(e22,0)", "(e12,e12)"},
      {"(e12,e12)", "(e12,e12)"},
      {"(e12,0)"},
  };
  return v == WitnessVariant::T1 ? t1 : t3;
}

std::size_t block_count(WitnessVariant v)
{
  return v == WitnessVariant::T1 ? 12 : 10;
}

// Height of the columns in block b.
std::size_t block_height(WitnessVariant v, std::size_t b)
{
  const std::size_t q = witness_q(v);
  if (b == 1)
    return q;
  if (b == 2)
    return q - 1;
  return q - 1 - (b - 1) / 2;
}

std::vector<std::string> degree_labels(WitnessVariant v)
{
  return v == WitnessVariant::T1 ? std::vector<std::string>{"0", "1"} : std::vector<std::string>{"e1", "e2"};
}

} // namespace

std::size_t witness_q(WitnessVariant v)
{
  return v == WitnessVariant::T1 ? 7 : 6;
}

BetaDecomposition choose_beta(WitnessVariant v, const Partition& lambda, bool allow_boundary)
{
  const std::size_t q = witness_q(v);
  if (lambda[q + 1] != 0)
    raise(ErrorKind::HypothesisViolated, to_string(lambda) + " has more than " + std::to_string(q) + " parts");
  const std::size_t top = lambda[q - 1] + lambda[q];
  BetaDecomposition b;
  b.variant = v;
  b.full_columns = lambda[q];
  if (top == lambda[1] + 1 && allow_boundary) {
    b.unpaired = 1;
  } else if (top > lambda[1]) {
    raise(ErrorKind::HypothesisViolated, to_string(lambda) + " violates lambda_" + std::to_string(q - 1) +
                                           " + lambda_" + std::to_string(q) + " <= lambda_1");
  }
  b.beta[2] = lambda[q - 1] - lambda[q];
  std::size_t need = b.full_columns - b.unpaired;
  for (std::size_t odd = 3; odd < block_count(v); odd += 2) {
    const std::size_t row = q - 1 - (odd - 1) / 2;
    const std::size_t gap = lambda[row] - lambda[row + 1];
    b.beta[odd] = std::min(need, gap);
    b.beta[odd + 1] = gap - b.beta[odd];
    need -= b.beta[odd];
  }
  if (need != 0)
    raise(ErrorKind::HypothesisViolated, "not enough compensating columns for " + to_string(lambda));
  return b;
}

void check_beta(const Partition& lambda, const BetaDecomposition& b)
{
  const std::size_t q = witness_q(b.variant);
  auto fail = [&](const std::string& why) { raise(ErrorKind::BetaInvalid, why); };
  if (lambda[q + 1] != 0)
    fail("shape has too many parts");
  if (b.full_columns != lambda[q])
    fail("full column count must equal lambda_" + std::to_string(q));
  if (b.unpaired > 1 || b.unpaired > b.full_columns)
    fail("at most one unpaired full column");
  for (std::size_t i = 2; i <= block_count(b.variant); ++i)
    if (!b.beta.count(i))
      fail("missing beta_" + std::to_string(i));
  if (b.beta.size() != block_count(b.variant) - 1)
    fail("unexpected beta index");
  if (b.beta.at(2) != lambda[q - 1] - lambda[q])
    fail("beta_2 must equal lambda_" + std::to_string(q - 1) + " - lambda_" + std::to_string(q));
  std::size_t odd_sum = 0;
  for (std::size_t odd = 3; odd < block_count(b.variant); odd += 2) {
    const std::size_t row = q - 1 - (odd - 1) / 2;
    if (b.beta.at(odd) + b.beta.at(odd + 1) != lambda[row] - lambda[row + 1])
      fail("beta_" + std::to_string(odd) + " + beta_" + std::to_string(odd + 1) + " must equal lambda_" +
           std::to_string(row) + " - lambda_" + std::to_string(row + 1));
    odd_sum += b.beta.at(odd);
  }
  if (odd_sum + b.unpaired != b.full_columns)
    fail("compensating columns must pair with the full columns");
}

Witness build_witness(WitnessVariant v, const Partition& lambda, std::optional<BetaDecomposition> beta,
                      bool allow_boundary, UnpairedPlacement placement)
{
  const auto canonical = choose_beta(v, lambda, allow_boundary);
  if (beta) {
    if (beta->variant != v)
      raise(ErrorKind::BetaInvalid, "decomposition belongs to another variant");
    check_beta(lambda, *beta);
    if (beta->unpaired && !allow_boundary)
      raise(ErrorKind::HypothesisViolated, "unpaired column requires the boundary extension");
  }
  const BetaDecomposition b = beta ? *beta : canonical;
  const std::size_t n = lambda.n();
  auto tableau = YoungTableau::standard(lambda);
  const auto cols = tableau.columns();

  std::vector<std::size_t> column_block;
  for (std::size_t i = 0; i < b.full_columns; ++i)
    column_block.push_back(1);
  for (std::size_t k = 2; k <= block_count(v); ++k)
    for (std::size_t i = 0; i < b.beta.at(k); ++i)
      column_block.push_back(k);
  if (column_block.size() != cols.size())
    raise(ErrorKind::BetaInvalid, "column blocks do not cover the diagram");
  for (std::size_t c = 0; c < cols.size(); ++c)
    if (cols[c].size() != block_height(v, column_block[c]))
      raise(ErrorKind::BetaInvalid, "column height does not match its block");

  const auto& pats = patterns(v);
  auto factor_for = [&](std::size_t c) {
    std::vector<std::size_t> vars;
    for (auto x : cols[c])
      vars.push_back(x - 1);
    Pattern p;
    for (const auto& [pos, d] : pats.at(column_block[c]))
      p.emplace_back(pos - 1, d);
    return alternating_block(n, vars, p);
  };

  std::map<std::size_t, std::vector<std::size_t>> by_block;
  for (std::size_t c = 0; c < cols.size(); ++c)
    by_block[column_block[c]].push_back(c);

  Witness w{v, lambda, b, tableau, FactoredPolynomial{n, {}}, column_block, {}, {}};
  std::vector<std::pair<GradedPolynomial, std::string>> seq;
  std::size_t next_full = 0;
  const auto& full = by_block[1];
  for (std::size_t k = 3; k < block_count(v); k += 2)
    for (auto c : by_block[k]) {
      auto f1 = std::make_pair(factor_for(full[next_full++]), std::string("f1"));
      auto fk = std::make_pair(factor_for(c), "f" + std::to_string(k));
      if (v == WitnessVariant::T1) {
        seq.push_back(std::move(f1));
        seq.push_back(std::move(fk));
      } else {
        seq.push_back(std::move(fk));
        seq.push_back(std::move(f1));
      }
    }
  for (std::size_t k = 2; k <= block_count(v); k += 2)
    for (auto c : by_block[k])
      seq.emplace_back(factor_for(c), "f" + std::to_string(k));
  if (b.unpaired) {
    auto lone = std::make_pair(factor_for(full[next_full++]), std::string("f1"));
    if (placement == UnpairedPlacement::front)
      seq.insert(seq.begin(), std::move(lone));
    else
      seq.push_back(std::move(lone));
  }
  for (auto& [g, name] : seq) {
    w.f.factors.push_back(std::move(g));
    w.factor_names.push_back(name);
  }

  const auto& table = tau_table(v);
  w.tau_labels.assign(n, "");
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < cols[c].size(); ++r)
      w.tau_labels[cols[c][r] - 1] = table[r][column_block[c] - 1];
  return w;
}

std::vector<std::size_t> resolve_tau(const GradedAlgebra& a, const Witness& w)
{
  const auto expected = degree_labels(w.variant);
  if (a.semigroup().labels() != expected)
    raise(ErrorKind::UnsupportedAlgebra, a.name() + " is not graded by " + std::string(to_string(w.variant)) +
                                           " with the expected component labels");
  std::vector<std::size_t> tau;
  for (const auto& l : w.tau_labels) {
    const auto idx = a.index_of(l);
    if (!idx)
      raise(ErrorKind::UnsupportedAlgebra, a.name() + " has no basis element " + l);
    tau.push_back(*idx);
  }
  return tau;
}

std::string witness_report(const Witness& w, const std::optional<Vec>& value, const GradedAlgebra* a)
{
  std::ostringstream out;
  out << "variant: " << to_string(w.variant) << "\n";
  out << "lambda: " << to_string(w.shape) << "\n";
  out << "beta: full=" << w.beta.full_columns;
  for (const auto& [i, x] : w.beta.beta)
    out << " b" << i << "=" << x;
  if (w.beta.unpaired)
    out << " unpaired=" << w.beta.unpaired;
  out << "\n";
  out << "f =";
  for (const auto& name : w.factor_names)
    out << " " << name;
  out << "\n";
  out << "tau:\n";
  for (const auto& row : w.tableau.rows()) {
    out << " ";
    for (auto v : row)
      out << " " << w.tau_labels[v - 1];
    out << "\n";
  }
  if (value) {
    out << "value:";
    bool any = false;
    for (std::size_t k = 0; k < value->size(); ++k)
      if (sgn((*value)[k]) != 0) {
        out << " " << to_string((*value)[k]) << "*" << (a ? a->label(k) : "b" + std::to_string(k + 1));
        any = true;
      }
    if (!any)
      out << " 0";
    out << "\n";
    out << "verdict: " << (any ? "nonzero" : "zero") << "\n";
  }
  return out.str();
}

CertificateResult multiplicity_nonzero_certificate(const GradedAlgebra& a, WitnessVariant v, const Partition& lambda,
                                                   const SymmetrizerOptions& options)
{
  CertificateResult res;
  bool boundary = false;
  try {
    choose_beta(v, lambda, false);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::HypothesisViolated)
      throw;
    choose_beta(v, lambda, true);
    boundary = true;
  }
  res.boundary = boundary;
  std::vector<UnpairedPlacement> placements{UnpairedPlacement::front};
  if (boundary)
    placements.push_back(UnpairedPlacement::back);
  for (auto placement : placements) {
    auto w = build_witness(v, lambda, std::nullopt, boundary, placement);
    const auto tau = resolve_tau(a, w);
    auto r = apply_symmetrizer(a, w.tableau, w.f, tau, options);
    res.value = r.value;
    res.nonzero = !is_zero(r.value);
    res.witness = std::move(w);
    if (boundary)
      res.note = std::string("boundary stratum, unpaired column at the ") +
                 (placement == UnpairedPlacement::front ? "front" : "back");
    if (res.nonzero)
      break;
  }
  return res;
}

namespace {

// Exact row echelon over Q with sparse rows keyed by column.
class SparseEchelon {
public:
  using Row = std::map<std::uint64_t, Rational>;

  void insert(Row row)
  {
    while (!row.empty()) {
      const auto col = row.begin()->first;
      auto it = pivots_.find(col);
      if (it == pivots_.end()) {
        const Rational inv = 1 / row.begin()->second;
        for (auto& [k, x] : row)
          x *= inv;
        pivots_.emplace(col, std::move(row));
        return;
      }
      const Rational c = row.begin()->second;
      for (const auto& [k, x] : it->second) {
        auto& y = row[k];
        y -= c * x;
        if (sgn(y) == 0)
          row.erase(k);
      }
    }
  }

  std::size_t rank() const { return pivots_.size(); }

private:
  std::map<std::uint64_t, Row> pivots_;
};

} // namespace

std::size_t multiplicity_exact(const GradedAlgebra& a, const Partition& lambda, const MultiplicityOptions& options)
{
  const std::size_t n = lambda.n();
  if (n == 0)
    raise(ErrorKind::BadParam, "empty partition");
  if (n > options.max_n)
    raise(ErrorKind::ResourceLimit, "multiplicity at n = " + std::to_string(n) + " exceeds the cap n <= " +
                                      std::to_string(options.max_n));
  const auto supp = support(a);
  const std::size_t dim = a.dim();
  if (supp.empty())
    return 0;
  std::vector<std::vector<std::size_t>> comp(a.semigroup().size());
  for (std::size_t b = 0; b < dim; ++b)
    comp[a.degree(b)].push_back(b);
  std::size_t max_comp = 0;
  for (auto t : supp)
    max_comp = std::max(max_comp, comp[t].size());

  const auto t = YoungTableau::standard(lambda);
  const auto rows = row_group(t);
  const auto cols = column_group(t);
  std::map<std::vector<std::size_t>, Rational> ops;
  for (const auto& r : rows)
    for (const auto& [g, sign] : cols)
      ops[compose(r, g)] += sign;

  double work = static_cast<double>(factorial_size(n)) * static_cast<double>(ops.size());
  for (std::size_t i = 0; i < n; ++i)
    work *= static_cast<double>(supp.size()) * static_cast<double>(max_comp);
  if (work > static_cast<double>(options.max_work))
    raise(ErrorKind::ResourceLimit, "multiplicity computation for " + to_string(lambda) + " exceeds the work cap");
  double columns = static_cast<double>(dim);
  for (std::size_t i = 0; i < n; ++i)
    columns *= static_cast<double>(dim);
  if (columns > 1.8e19)
    raise(ErrorKind::ResourceLimit, "column index overflow");

  const WordEvaluator ev(a);
  SparseEchelon ech;
  std::vector<std::size_t> d(n, 0), word(n), need(n), s(n), basis_word(n);
  std::vector<std::size_t> dig(n, 0);
  for (;;) {
    std::iota(word.begin(), word.end(), 0);
    do {
      SparseEchelon::Row row;
      Vec acc = zero_vec(dim);
      for (const auto& [rho, c] : ops) {
        for (std::size_t v = 0; v < n; ++v)
          need[rho[v]] = supp[d[v]];
        bool empty = false;
        for (std::size_t u = 0; u < n; ++u)
          if (comp[need[u]].empty())
            empty = true;
        if (empty)
          continue;
        std::fill(dig.begin(), dig.end(), 0);
        for (;;) {
          std::uint64_t key = 0;
          for (std::size_t u = n; u-- > 0;) {
            s[u] = comp[need[u]][dig[u]];
            key = key * dim + s[u];
          }
          for (std::size_t p = 0; p < n; ++p)
            basis_word[p] = s[rho[word[p]]];
          std::fill(acc.begin(), acc.end(), 0);
          ev.accumulate(basis_word, c, acc);
          for (std::size_t k = 0; k < dim; ++k)
            if (sgn(acc[k]) != 0) {
              auto& y = row[key * dim + k];
              y += acc[k];
              if (sgn(y) == 0)
                row.erase(key * dim + k);
            }
          std::size_t pos = 0;
          while (pos < n && ++dig[pos] == comp[need[pos]].size())
            dig[pos++] = 0;
          if (pos == n)
            break;
        }
      }
      ech.insert(std::move(row));
    } while (std::next_permutation(word.begin(), word.end()));
    std::size_t pos = 0;
    while (pos < n && ++d[pos] == supp.size())
      d[pos++] = 0;
    if (pos == n)
      break;
  }
  return ech.rank();
}

VanishingReport alternation_vanishing_check(const GradedAlgebra& a, std::size_t n, std::size_t trials,
                                            std::uint64_t seed)
{
  if (n <= a.dim())
    raise(ErrorKind::BadParam, "alternation check needs n > dim A = " + std::to_string(a.dim()));
  const auto supp = support(a);
  if (supp.empty())
    raise(ErrorKind::BadParam, "algebra has no homogeneous basis elements");
  std::vector<std::vector<std::size_t>> comp(a.semigroup().size());
  for (std::size_t b = 0; b < a.dim(); ++b)
    comp[a.degree(b)].push_back(b);
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t bound) { return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng); };

  VanishingReport rep;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<std::size_t> word(n), d(n), s(n);
    std::iota(word.begin(), word.end(), 0);
    std::shuffle(word.begin(), word.end(), rng);
    for (std::size_t v = 0; v < n; ++v) {
      d[v] = supp[pick(supp.size())];
      s[v] = comp[d[v]][pick(comp[d[v]].size())];
    }
    const int word_sign = permutation_sign(word);
    Vec total = zero_vec(a.dim());
    std::vector<bool> used(n, false);
    std::function<void(std::size_t, const Vec&, int)> rec = [&](std::size_t p, const Vec& prefix, int sign) {
      if (p == n) {
        axpy(total, sign * word_sign, prefix);
        return;
      }
      const std::size_t var = word[p];
      for (std::size_t u = 0; u < n; ++u) {
        if (used[u] || a.degree(s[u]) != d[var])
          continue;
        int flips = 0;
        for (std::size_t x = u + 1; x < n; ++x)
          if (used[x])
            ++flips;
        Vec next = p == 0 ? a.basis_vector(s[u]) : a.multiply(prefix, a.basis_vector(s[u]));
        if (is_zero(next))
          continue;
        used[u] = true;
        rec(p + 1, next, flips % 2 ? -sign : sign);
        used[u] = false;
      }
    };
    rec(0, Vec{}, 1);
    ++rep.trials;
    if (is_zero(total)) {
      ++rep.zero;
    } else {
      std::string desc = "word";
      for (auto v : word)
        desc += " x" + std::to_string(v + 1) + "^" + a.semigroup().label(d[v]);
      desc += " at";
      for (auto b : s)
        desc += " " + a.label(b);
      rep.counterexamples.push_back(desc);
    }
  }
  return rep;
}

} // namespace gralg
