#include "gralg/asympt.hpp"

#include "gralg/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

namespace gralg {

double phi(const std::vector<double>& alpha)
{
  double s = 0;
  for (double a : alpha) {
    if (a < 0)
      raise(ErrorKind::NegativeCoordinate, "phi needs nonnegative coordinates");
    if (a > 0)
      s -= a * std::log(a);
  }
  return std::exp(s);
}

Polytope Polytope::inflated(std::size_t n) const
{
  Polytope p = *this;
  p.name = name + " inflated by 1/" + std::to_string(n);
  p.offset_weight = 1.0 / static_cast<double>(n);
  return p;
}

Polytope lemma_polytope(std::size_t q)
{
  if (q < 4)
    raise(ErrorKind::QTooSmall, "the lemma polytope needs q >= 4, got " + std::to_string(q));
  Polytope p;
  p.name = "lemma(q=" + std::to_string(q) + ")";
  p.q = q;
  p.r = q;
  std::vector<Rational> row(q + 1, 0);
  row[0] = 1;
  row[1] = 1;
  row[q - 1] = -1;
  row[q] = -1;
  p.gamma.push_back(row);
  return p;
}

Polytope simplex_polytope(std::size_t q)
{
  if (q == 0)
    raise(ErrorKind::BadParam, "polytope dimension must be positive");
  Polytope p;
  p.name = "simplex(q=" + std::to_string(q) + ")";
  p.q = q;
  p.r = q;
  return p;
}

PartitionConstraints discrete_constraints(const Polytope& p)
{
  PartitionConstraints c;
  c.gamma = p.gamma;
  for (const auto& [k, cap] : p.theta_caps)
    if (k > p.q && k <= p.r)
      c.caps[k] = cap;
  c.max_parts = std::max(p.r, p.q);
  return c;
}

bool omega_n_membership(const Polytope& p, const Partition& lambda)
{
  return satisfies(lambda, discrete_constraints(p));
}

namespace {

struct Linear {
  Eigen::VectorXd a;
  double b;
  bool equality;
};

std::vector<Linear> constraints_of(const Polytope& p)
{
  const auto q = static_cast<Eigen::Index>(p.q);
  std::vector<Linear> out;
  if (p.include_simplex)
    out.push_back({Eigen::VectorXd::Ones(q), 1.0, true});
  for (Eigen::Index j = 0; j < q; ++j) {
    Eigen::VectorXd a = Eigen::VectorXd::Zero(q);
    a[j] = 1;
    out.push_back({a, 0.0, false});
  }
  if (p.include_ordering)
    for (Eigen::Index j = 0; j + 1 < q; ++j) {
      Eigen::VectorXd a = Eigen::VectorXd::Zero(q);
      a[j] = 1;
      a[j + 1] = -1;
      out.push_back({a, 0.0, false});
    }
  for (const auto& row : p.gamma) {
    if (row.size() != p.q + 1)
      raise(ErrorKind::SizeMismatch, "constraint row must have q + 1 entries");
    Eigen::VectorXd a(q);
    for (Eigen::Index j = 0; j < q; ++j)
      a[j] = row[static_cast<std::size_t>(j) + 1].get_d();
    out.push_back({a, -p.offset_weight * row[0].get_d(), false});
  }
  for (auto j : p.zero_coordinates) {
    if (j < 1 || j > p.q)
      raise(ErrorKind::BadParam, "zero coordinate out of range");
    Eigen::VectorXd a = Eigen::VectorXd::Zero(q);
    a[static_cast<Eigen::Index>(j) - 1] = 1;
    out.push_back({a, 0.0, true});
  }
  return out;
}

double violation(const std::vector<Linear>& cs, const Eigen::VectorXd& x)
{
  double worst = 0;
  for (const auto& c : cs) {
    const double s = c.a.dot(x) - c.b;
    worst = std::max(worst, c.equality ? std::abs(s) : -s);
  }
  return worst;
}

// Lawson-Hanson: min |M u - v| subject to u >= 0.
Eigen::VectorXd nnls(const Eigen::MatrixXd& M, const Eigen::VectorXd& v)
{
  const auto k = M.cols();
  Eigen::VectorXd u = Eigen::VectorXd::Zero(k);
  std::vector<bool> passive(static_cast<std::size_t>(k), false);
  for (int outer = 0; outer < 3 * k + 10; ++outer) {
    const Eigen::VectorXd w = M.transpose() * (v - M * u);
    Eigen::Index best = -1;
    double best_w = 1e-14;
    for (Eigen::Index i = 0; i < k; ++i)
      if (!passive[static_cast<std::size_t>(i)] && w[i] > best_w) {
        best_w = w[i];
        best = i;
      }
    if (best < 0)
      break;
    passive[static_cast<std::size_t>(best)] = true;
    for (int inner = 0; inner < 3 * k + 10; ++inner) {
      std::vector<Eigen::Index> idx;
      for (Eigen::Index i = 0; i < k; ++i)
        if (passive[static_cast<std::size_t>(i)])
          idx.push_back(i);
      Eigen::MatrixXd Mp(M.rows(), static_cast<Eigen::Index>(idx.size()));
      for (std::size_t c = 0; c < idx.size(); ++c)
        Mp.col(static_cast<Eigen::Index>(c)) = M.col(idx[c]);
      const Eigen::VectorXd z = Mp.completeOrthogonalDecomposition().solve(v);
      if (z.minCoeff() > 0) {
        u.setZero();
        for (std::size_t c = 0; c < idx.size(); ++c)
          u[idx[c]] = z[static_cast<Eigen::Index>(c)];
        break;
      }
      double alpha = 1;
      for (std::size_t c = 0; c < idx.size(); ++c) {
        const double zc = z[static_cast<Eigen::Index>(c)];
        if (zc <= 0) {
          const double uc = u[idx[c]];
          alpha = std::min(alpha, uc / (uc - zc));
        }
      }
      for (std::size_t c = 0; c < idx.size(); ++c)
        u[idx[c]] += alpha * (z[static_cast<Eigen::Index>(c)] - u[idx[c]]);
      for (std::size_t c = 0; c < idx.size(); ++c)
        if (u[idx[c]] <= 1e-15) {
          u[idx[c]] = 0;
          passive[static_cast<std::size_t>(idx[c])] = false;
        }
    }
  }
  return u;
}

// Exact projection of y onto the face where the given rows hold with equality, if it satisfies the KKT
// conditions of the projection onto the whole polytope.
std::optional<Eigen::VectorXd> face_projection(const std::vector<Linear>& cs, const std::vector<std::size_t>& active,
                                               const Eigen::VectorXd& y)
{
  if (active.empty())
    return violation(cs, y) <= 1e-13 ? std::optional<Eigen::VectorXd>(y) : std::nullopt;
  const auto q = y.size();
  const auto m = static_cast<Eigen::Index>(active.size());
  Eigen::MatrixXd A(m, q);
  Eigen::VectorXd b(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    A.row(i) = cs[active[static_cast<std::size_t>(i)]].a.transpose();
    b[i] = cs[active[static_cast<std::size_t>(i)]].b;
  }
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(A * A.transpose());
  const Eigen::VectorXd x = y + A.transpose() * cod.solve(b - A * y);
  if ((A * x - b).cwiseAbs().maxCoeff() > 1e-12 || violation(cs, x) > 1e-13)
    return std::nullopt;
  // x - y must be a nonnegative combination of inequality normals plus any combination of equality normals.
  std::vector<Eigen::VectorXd> cols;
  for (auto i : active) {
    cols.push_back(cs[i].a);
    if (cs[i].equality)
      cols.push_back(-cs[i].a);
  }
  Eigen::MatrixXd M(q, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    M.col(static_cast<Eigen::Index>(c)) = cols[c];
  const Eigen::VectorXd target = x - y;
  const Eigen::VectorXd u = nnls(M, target);
  if ((M * u - target).norm() > 1e-10 * std::max(1.0, target.norm()))
    return std::nullopt;
  return x;
}

Eigen::VectorXd project_onto(const std::vector<Linear>& cs, const Eigen::VectorXd& y)
{
  Eigen::VectorXd x = y;
  std::vector<Eigen::VectorXd> corr(cs.size(), Eigen::VectorXd::Zero(y.size()));
  const int max_sweeps = 20000;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const Eigen::VectorXd z = x + corr[i];
      const double s = cs[i].a.dot(z) - cs[i].b;
      Eigen::VectorXd nx = z;
      if (cs[i].equality || s < 0)
        nx = z - (s / cs[i].a.squaredNorm()) * cs[i].a;
      corr[i] = z - nx;
      x = nx;
    }
    if (sweep < 8 || sweep % 16 == 15) {
      std::vector<std::size_t> last;
      for (double tol : {1e-12, 1e-9, 1e-6, 1e-4, 1e-2}) {
        std::vector<std::size_t> active;
        for (std::size_t i = 0; i < cs.size(); ++i)
          if (cs[i].equality || cs[i].a.dot(x) - cs[i].b < tol * std::max(1.0, cs[i].a.norm()))
            active.push_back(i);
        if (active == last)
          continue;
        last = active;
        if (auto exact = face_projection(cs, active, y))
          return *exact;
      }
    }
  }
  const double v = violation(cs, x);
  if (v > 1e-6)
    raise(ErrorKind::Infeasible, "no feasible point found");
  if (v > 1e-9)
    raise(ErrorKind::NoConvergence, "projection did not converge");
  return x;
}

double entropy(const Eigen::VectorXd& x)
{
  double s = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (x[i] > 0)
      s -= x[i] * std::log(x[i]);
  return s;
}

std::vector<double> to_std(const Eigen::VectorXd& x)
{
  std::vector<double> v(static_cast<std::size_t>(x.size()));
  for (Eigen::Index i = 0; i < x.size(); ++i)
    v[static_cast<std::size_t>(i)] = std::max(0.0, x[i]);
  return v;
}

Eigen::VectorXd gradient(const Eigen::VectorXd& x)
{
  Eigen::VectorXd g(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i)
    g[i] = -(std::log(std::max(x[i], 1e-300)) + 1);
  return g;
}

Eigen::VectorXd ascend(const std::vector<Linear>& cs, Eigen::VectorXd x, std::size_t max_iterations)
{
  double step = 0.05;
  double fx = entropy(x);
  for (std::size_t it = 0; it < max_iterations && step > 1e-16; ++it) {
    const Eigen::VectorXd y = project_onto(cs, x + step * gradient(x));
    const double fy = entropy(y);
    if (fy > fx) {
      const double moved = (y - x).norm();
      x = y;
      fx = fy;
      step *= 1.5;
      if (moved < 1e-15)
        break;
    } else {
      step *= 0.5;
    }
  }
  return x;
}

// Newton iterations for the entropy on the face of constraints active at x.
std::optional<Eigen::VectorXd> polish(const std::vector<Linear>& cs, const Eigen::VectorXd& x, double active_tol)
{
  const auto q = x.size();
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (cs[i].equality || cs[i].a.dot(x) - cs[i].b < active_tol)
      active.push_back(i);
  Eigen::MatrixXd A(static_cast<Eigen::Index>(active.size()), q);
  Eigen::VectorXd b(static_cast<Eigen::Index>(active.size()));
  for (std::size_t i = 0; i < active.size(); ++i) {
    A.row(static_cast<Eigen::Index>(i)) = cs[active[i]].a.transpose();
    b[static_cast<Eigen::Index>(i)] = cs[active[i]].b;
  }
  Eigen::MatrixXd N;
  Eigen::VectorXd x0 = x;
  if (active.empty()) {
    N = Eigen::MatrixXd::Identity(q, q);
  } else {
    Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
    N = lu.kernel();
    if (lu.rank() == q)
      N = Eigen::MatrixXd::Zero(q, 0);
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(A * A.transpose());
    x0 = x + A.transpose() * cod.solve(b - A * x);
    if ((A * x0 - b).cwiseAbs().maxCoeff() > 1e-10)
      return std::nullopt;
  }
  if (N.cols() == 0)
    return violation(cs, x0) <= 1e-12 ? std::optional<Eigen::VectorXd>(x0) : std::nullopt;
  std::vector<bool> free(static_cast<std::size_t>(q), false);
  for (Eigen::Index i = 0; i < q; ++i)
    free[static_cast<std::size_t>(i)] = N.row(i).norm() > 1e-12;
  for (Eigen::Index i = 0; i < q; ++i) {
    if (!free[static_cast<std::size_t>(i)])
      x0[i] = std::abs(x0[i]) < 1e-13 ? 0.0 : x0[i];
    else if (x0[i] <= 0)
      return std::nullopt;
  }
  Eigen::VectorXd cur = x0;
  for (int it = 0; it < 100; ++it) {
    Eigen::VectorXd g = Eigen::VectorXd::Zero(q);
    Eigen::VectorXd h = Eigen::VectorXd::Zero(q);
    for (Eigen::Index i = 0; i < q; ++i)
      if (free[static_cast<std::size_t>(i)]) {
        g[i] = -(std::log(cur[i]) + 1);
        h[i] = -1.0 / cur[i];
      }
    const Eigen::VectorXd gz = N.transpose() * g;
    if (gz.norm() < 1e-15)
      break;
    const Eigen::MatrixXd H = N.transpose() * h.asDiagonal() * N;
    const Eigen::VectorXd dz = H.ldlt().solve(-gz);
    const Eigen::VectorXd dx = N * dz;
    double t = 1;
    const double f0 = entropy(cur);
    bool moved = false;
    for (int k = 0; k < 60; ++k, t *= 0.5) {
      const Eigen::VectorXd nx = cur + t * dx;
      bool positive = true;
      for (Eigen::Index i = 0; i < q; ++i)
        if (free[static_cast<std::size_t>(i)] && nx[i] <= 0)
          positive = false;
      if (positive && entropy(nx) >= f0 - 1e-16) {
        cur = nx;
        moved = true;
        break;
      }
    }
    if (!moved || (t * dx).norm() < 1e-16)
      break;
  }
  if (violation(cs, cur) > 1e-12)
    return std::nullopt;
  return cur;
}

Eigen::VectorXd from_std(const std::vector<double>& v)
{
  Eigen::VectorXd x(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i)
    x[static_cast<Eigen::Index>(i)] = v[i];
  return x;
}

struct StartResult {
  Eigen::VectorXd x;
  double value = -1;
  std::string method;
};

StartResult run_start(const std::vector<Linear>& cs, std::size_t q, std::size_t index, const MaximizeOptions& o)
{
  std::mt19937_64 rng(o.seed * 0x9e3779b97f4a7c15ULL + index);
  Eigen::VectorXd y(static_cast<Eigen::Index>(q));
  if (index == 0) {
    y.setConstant(1.0 / static_cast<double>(q));
  } else {
    std::exponential_distribution<double> ex(1.0);
    for (Eigen::Index i = 0; i < y.size(); ++i)
      y[i] = ex(rng);
    y /= y.sum();
    std::sort(y.data(), y.data() + y.size(), std::greater<>());
  }
  Eigen::VectorXd x = ascend(cs, project_onto(cs, y), o.max_iterations);
  StartResult best{x, entropy(x), "projected-gradient"};
  for (double tol : {1e-6, 1e-8, 1e-5, 1e-4}) {
    auto p = polish(cs, x, tol);
    if (!p)
      continue;
    const double v = entropy(*p);
    if (v > best.value) {
      best = {*p, v, "projected-gradient+newton"};
    }
  }
  return best;
}

} // namespace

bool is_feasible(const Polytope& p, const std::vector<double>& alpha, double tolerance)
{
  if (alpha.size() != p.q)
    return false;
  return violation(constraints_of(p), from_std(alpha)) <= tolerance;
}

std::vector<double> project(const Polytope& p, const std::vector<double>& x)
{
  if (x.size() != p.q)
    raise(ErrorKind::SizeMismatch, "point dimension does not match the polytope");
  return to_std(project_onto(constraints_of(p), from_std(x)));
}

OptimizationResult lemma_max_closed_form(std::size_t q)
{
  if (q < 4)
    raise(ErrorKind::QTooSmall, "the closed form needs q >= 4, got " + std::to_string(q));
  const double s2 = std::sqrt(2.0);
  const double denom = 4 + static_cast<double>(q - 3) * s2;
  OptimizationResult r;
  r.point.assign(q, s2 / denom);
  r.point[0] = 2 / denom;
  r.point[q - 2] = 1 / denom;
  r.point[q - 1] = 1 / denom;
  r.value = static_cast<double>(q - 3) + 2 * s2;
  r.method = "closed-form";
  return r;
}

OptimizationResult maximize_phi(const Polytope& p, const MaximizeOptions& options)
{
  if (p.q == 0)
    raise(ErrorKind::BadParam, "polytope dimension must be positive");
  const auto cs = constraints_of(p);
  const std::size_t starts = std::max<std::size_t>(1, options.starts);
  std::vector<StartResult> results(starts);
  auto body = [&](std::size_t i) { results[i] = run_start(cs, p.q, i, options); };
  if (options.pool)
    options.pool->parallel_for(starts, body);
  else
    for (std::size_t i = 0; i < starts; ++i)
      body(i);
  std::size_t best = 0;
  for (std::size_t i = 1; i < starts; ++i)
    if (results[i].value > results[best].value)
      best = i;

  OptimizationResult r;
  r.point = to_std(results[best].x);
  r.value = phi(r.point);
  r.method = results[best].method;
  r.start_index = best;

  std::mt19937_64 rng(options.seed ^ 0x5bd1e995ULL);
  std::exponential_distribution<double> ex(1.0);
  std::normal_distribution<double> nd(0.0, 1.0);
  double gap = -std::numeric_limits<double>::infinity();
  for (const auto& s : results)
    gap = std::max(gap, phi(to_std(s.x)) - r.value);
  for (std::size_t k = 0; k < options.probes; ++k) {
    Eigen::VectorXd y(static_cast<Eigen::Index>(p.q));
    if (k % 2 == 0) {
      for (Eigen::Index i = 0; i < y.size(); ++i)
        y[i] = ex(rng);
      y /= y.sum();
    } else {
      const double radius = std::pow(10.0, -1.0 - static_cast<double>(k % 7));
      for (Eigen::Index i = 0; i < y.size(); ++i)
        y[i] = r.point[static_cast<std::size_t>(i)] + radius * nd(rng);
    }
    gap = std::max(gap, phi(to_std(project_onto(cs, y))) - r.value);
  }
  r.certified_gap = gap;
  return r;
}

Partition mu_sequence(const std::vector<double>& alpha, std::size_t n, bool* repaired)
{
  if (alpha.empty())
    raise(ErrorKind::BadParam, "empty point");
  std::vector<long long> mu(alpha.size(), 0);
  long long rest = static_cast<long long>(n);
  for (std::size_t i = 1; i < alpha.size(); ++i) {
    mu[i] = static_cast<long long>(std::floor(std::max(0.0, alpha[i]) * static_cast<double>(n) + 1e-9));
    rest -= mu[i];
  }
  mu[0] = rest;
  if (mu[0] < 0)
    raise(ErrorKind::BadParam, "coordinates sum above 1");
  bool fixed = false;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 1; i < mu.size(); ++i)
      if (mu[i] > mu[i - 1]) {
        --mu[i];
        ++mu[i - 1];
        changed = fixed = true;
      }
  }
  if (repaired)
    *repaired = fixed;
  std::vector<std::size_t> parts;
  for (auto m : mu)
    if (m > 0)
      parts.push_back(static_cast<std::size_t>(m));
  return Partition(std::move(parts));
}

std::vector<BoundRow> bound_report(double d, std::size_t n_min, std::size_t n_max, const std::vector<Integer>& c_values,
                                   const std::optional<std::vector<double>>& alpha)
{
  if (!(d > 0))
    raise(ErrorKind::BadParam, "d must be positive");
  std::vector<BoundRow> rows;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    BoundRow row;
    row.n = n;
    row.d_pow_n = std::pow(d, static_cast<double>(n));
    const std::size_t i = n - n_min;
    if (i < c_values.size()) {
      row.c_n = c_values[i];
      row.ratio = c_values[i].get_d() / row.d_pow_n;
    }
    if (alpha && n > 0)
      row.hook_lower = hook_dim(mu_sequence(*alpha, n));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string bound_csv(const std::vector<BoundRow>& rows)
{
  std::ostringstream out;
  out << "n,d_pow_n,c_n,hook_lower\n";
  for (const auto& r : rows) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", r.d_pow_n);
    out << r.n << ',' << buf << ',' << (r.c_n ? r.c_n->get_str() : "") << ','
        << (r.hook_lower ? r.hook_lower->get_str() : "") << "\n";
  }
  return out.str();
}

} // namespace gralg
