#include "gralg/battery.hpp"

#include "gralg/asympt.hpp"
#include "gralg/catalog.hpp"
#include "gralg/cochar.hpp"
#include "gralg/codim.hpp"
#include "gralg/error.hpp"
#include "gralg/partition.hpp"
#include "gralg/semigroup.hpp"
#include "gralg/structure.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace gralg {

BatteryContext default_battery_context()
{
  BatteryContext ctx;
  ctx.catalog = [](const std::string& spec) { return catalog_algebra(spec); };
  return ctx;
}

namespace {

// (e_ij, partner_ij) - (e_ij, 0) for every paired matrix unit, restricted to i < j if strictly_upper.
Subspace displayed_radical(const GradedAlgebra& a, bool strictly_upper)
{
  Matrix gens;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const auto& l = a.label(i);
    const auto comma = l.find(',');
    if (comma == std::string::npos || l.substr(comma + 1) == "0)")
      continue;
    const auto base = a.index_of(l.substr(0, comma) + ",0)");
    if (!base || (strictly_upper && l[2] >= l[3]))
      continue;
    Vec v = a.basis_vector(i);
    v[*base] -= 1;
    gens.push_back(std::move(v));
  }
  return Subspace::span(a.dim(), gens);
}

CheckOutcome check_semigroups(const BatteryContext&)
{
  const auto all = enumerate_semigroups(2);
  const auto classes = isomorphism_classes(all);
  std::set<std::string> tags;
  for (const auto& cls : classes)
    tags.insert(std::string(to_string(classify_order2(all[cls.front()]))));
  const std::set<std::string> expected{"T1", "T2", "T3", "T3op", "Z2"};
  std::ostringstream d;
  d << all.size() << " associative tables, " << classes.size() << " classes:";
  for (const auto& t : tags)
    d << " " << t;
  return {classes.size() == 5 && tags == expected, d.str()};
}

CheckOutcome check_radicals(const BatteryContext& ctx)
{
  bool ok = true;
  std::ostringstream d;
  for (const char* name : {"exampleT1(2)", "exampleT2(2)", "exampleT3(2)"}) {
    const auto a = ctx.catalog(name);
    const auto j = jacobson_radical(a);
    const bool match = j == displayed_radical(a, std::string(name).find("T1") != std::string::npos);
    const bool graded = is_radical_graded(a);
    bool zero_meets = true;
    for (auto t : support(a))
      if (subspace_intersect(j, component(a, t)).dim() != 0)
        zero_meets = false;
    ok = ok && match && !graded && zero_meets && j.dim() > 0;
    d << name << ": dim J=" << j.dim() << (match ? " matches" : " differs") << (graded ? " graded" : " not graded")
      << (zero_meets ? " trivial intersections; " : " nontrivial intersection; ");
  }
  return {ok, d.str()};
}

CheckOutcome check_splitting(const BatteryContext& ctx)
{
  bool ok = true;
  std::ostringstream d;
  for (const char* name : {"utk_column_graded(2)", "utk_column_graded(3)"}) {
    const auto a = ctx.catalog(name);
    const auto s = graded_malcev_zeroband(a);
    const bool graded = is_graded_subspace(a, s.complement);
    const bool closed = is_subalgebra(a, s.complement);
    const bool additive = s.complement.dim() + s.radical.dim() == a.dim() &&
                          subspace_intersect(s.complement, s.radical).dim() == 0;
    ok = ok && graded && closed && additive;
    d << name << ": dim B=" << s.complement.dim() << " dim J=" << s.radical.dim() << (graded ? " graded" : " ungraded")
      << (closed ? " closed" : " not closed") << (additive ? " additive; " : " not additive; ");
  }
  return {ok, d.str()};
}

CheckOutcome check_simplicity(const BatteryContext& ctx)
{
  const auto a = ctx.catalog("thm_T3_fractional");
  const auto r = is_graded_simple(a, {1000, ctx.seed});
  const auto b = ctx.catalog("t1_semisimple(2)");
  const auto s = is_graded_simple(b, {1000, ctx.seed});
  Matrix mk;
  for (std::size_t i = 0; i < b.dim(); ++i)
    if (b.label(i).size() > 3 && b.label(i).substr(b.label(i).size() - 3) == ",0)")
      mk.push_back(b.basis_vector(i));
  const bool witness_ok = s.witness && *s.witness == Subspace::span(b.dim(), mk);
  std::ostringstream d;
  d << "thm_T3_fractional: " << to_string(r.verdict) << " (" << r.method << "); t1_semisimple(2): "
    << to_string(s.verdict) << (witness_ok ? " with witness (M_k,0)" : " without the expected witness");
  return {r.verdict == SimplicityVerdict::certified_true && s.verdict == SimplicityVerdict::certified_false &&
              witness_ok,
          d.str()};
}

CheckOutcome check_codim_equality(const BatteryContext& ctx)
{
  const auto a1 = ctx.catalog("thm_T1_fractional");
  const auto a2 = ctx.catalog("thm_T2_fractional");
  CodimOptions mod;
  mod.seed = ctx.seed;
  mod.pool = ctx.pool;
  CodimOptions ex = mod;
  ex.mode = RankMode::exact_rational;
  bool ok = true;
  std::ostringstream d;
  d << "modular:";
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto r1 = graded_codim(a1, n, mod);
    const auto r2 = graded_codim(a2, n, mod);
    const bool stable = r1.certification.find("stable across 2 primes") != std::string::npos &&
                        r2.certification.find("stable across 2 primes") != std::string::npos;
    ok = ok && stable && r1.value == r2.value;
    d << " " << r1.value.get_str() << (r1.value == r2.value ? "=" : "!=") << r2.value.get_str();
  }
  d << "; exact:";
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto r1 = graded_codim(a1, n, ex);
    const auto r2 = graded_codim(a2, n, ex);
    ok = ok && r1.value == r2.value;
    d << " " << r1.value.get_str() << (r1.value == r2.value ? "=" : "!=") << r2.value.get_str();
  }
  return {ok, d.str()};
}

CheckOutcome check_c1(const BatteryContext& ctx)
{
  bool ok = true;
  std::ostringstream d;
  for (std::size_t k : {2, 3}) {
    const auto a = ctx.catalog("mk_column_graded(" + std::to_string(k) + ")");
    CodimOptions o;
    o.mode = RankMode::exact_rational;
    const auto g = graded_codim(a, 1, o).value;
    const auto u = ordinary_codim(a, 1, o).value;
    ok = ok && g == static_cast<unsigned long>(k) && u == 1;
    d << "k=" << k << ": graded " << g.get_str() << ", ordinary " << u.get_str() << "; ";
  }
  return {ok, d.str()};
}

CheckOutcome check_phi(const BatteryContext& ctx)
{
  bool ok = true;
  std::ostringstream d;
  double worst = 0, worst_gap = -1;
  for (std::size_t q = 4; q <= 10; ++q) {
    MaximizeOptions o;
    o.seed = ctx.seed;
    o.pool = ctx.pool;
    o.probes = 500;
    const auto r = maximize_phi(lemma_polytope(q), o);
    const auto c = lemma_max_closed_form(q);
    const double diff = std::abs(r.value - c.value);
    worst = std::max(worst, diff);
    worst_gap = std::max(worst_gap, r.certified_gap);
    ok = ok && diff <= 1e-9 && r.certified_gap <= 1e-9;
    if (q == 6 || q == 7) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "q=%zu: %.12f; ", q, r.value);
      d << buf;
    }
  }
  ok = ok && std::abs(lemma_max_closed_form(7).value - 6.828427124746190) < 1e-12 &&
       std::abs(lemma_max_closed_form(6).value - 5.828427124746190) < 1e-12;
  char buf[96];
  std::snprintf(buf, sizeof buf, "max |numeric - closed form| = %.2e, max gap = %.2e", worst, worst_gap);
  d << buf;
  return {ok, d.str()};
}

CheckOutcome check_witnesses(const BatteryContext& ctx)
{
  const auto t1 = ctx.catalog("thm_T1_fractional");
  const auto t3 = ctx.catalog("thm_T3_fractional");
  struct Case {
    const GradedAlgebra* a;
    WitnessVariant v;
    const char* shape;
  };
  const std::vector<Case> cases{{&t1, WitnessVariant::T1, "2,1,1,1,1,1"},
                                {&t1, WitnessVariant::T1, "2,2,2,2,2,2,1"},
                                {&t3, WitnessVariant::T3, "2,1,1,1,1"},
                                {&t3, WitnessVariant::T3, "2,2,2,2,2,1"}};
  bool ok = true;
  std::ostringstream d;
  SymmetrizerOptions o;
  o.pool = ctx.pool;
  for (const auto& c : cases) {
    const auto lambda = parse_partition(c.shape);
    const auto r = multiplicity_nonzero_certificate(*c.a, c.v, lambda, o);
    ok = ok && r.nonzero;
    d << to_string(c.v) << " " << to_string(lambda) << ": " << (r.nonzero ? "nonzero" : "zero");
    if (r.boundary)
      d << " (" << r.note << ")";
    d << "; ";
  }
  return {ok, d.str()};
}

CheckOutcome check_alternation(const BatteryContext& ctx)
{
  bool ok = true;
  std::ostringstream d;
  for (const char* name : {"thm_T1_fractional", "thm_T3_fractional"}) {
    const auto a = ctx.catalog(name);
    const auto r = alternation_vanishing_check(a, a.dim() + 1, 200, ctx.seed);
    ok = ok && r.ok();
    d << name << ": " << r.zero << "/" << r.trials << " zero; ";
  }
  return {ok, d.str()};
}

CheckOutcome check_theta(const BatteryContext& ctx)
{
  bool ok = true;
  std::ostringstream d;
  for (const char* name : {"thm_T1_fractional", "thm_T3_fractional"}) {
    const auto a = ctx.catalog(name);
    const auto r = theta_scan(a, 4);
    ok = ok && r.ok();
    d << name << ": " << r.nonzero << " nonzero products of " << r.words << ", sums in [" << r.min_sum << ","
      << r.max_sum << "], " << r.violations.size() << " violations; ";
  }
  return {ok, d.str()};
}

CheckOutcome check_exponents(const BatteryContext& ctx)
{
  const auto ut = ctx.catalog("utk_column_graded(2)");
  const auto mk = ctx.catalog("mk_column_graded(2)");
  const auto gu = graded_exponent_d(ut), ou = ordinary_exponent(ut);
  const auto gm = graded_exponent_d(mk), om = ordinary_exponent(mk);
  std::ostringstream d;
  d << "utk_column_graded(2): " << gu << "/" << ou << "; mk_column_graded(2): " << gm << "/" << om;
  return {gu == 2 && ou == 2 && gm == 4 && om == 4, d.str()};
}

CheckOutcome check_hooks(const BatteryContext&)
{
  bool ok = true;
  for (std::size_t n = 1; n <= 8; ++n) {
    Integer s = 0;
    for (const auto& p : enumerate_partitions(n)) {
      const auto h = hook_dim(p);
      s += h * h;
    }
    ok = ok && s == factorial(static_cast<unsigned>(n));
  }
  std::size_t checked = 0;
  PartitionConstraints c;
  c.max_parts = 7;
  for (std::size_t n = 1; n <= 12; ++n)
    for (const auto& p : enumerate_partitions(n, c)) {
      const auto h = hook_dim(p);
      for (std::size_t q = p.length(); q <= 7; ++q) {
        const auto b = dim_bounds(p, q);
        ok = ok && b.lower <= Rational(h) && h <= b.upper;
        ++checked;
      }
    }
  return {ok, "hook sums equal n! for n <= 8; " + std::to_string(checked) + " sandwich instances"};
}

CheckOutcome check_cross_validation(const BatteryContext& ctx)
{
  const auto a = ctx.catalog("thm_T3_fractional");
  bool ok = true;
  std::size_t certified = 0, total = 0;
  std::ostringstream bad;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& p : enumerate_partitions(n)) {
      ++total;
      const auto cert = multiplicity_nonzero_certificate(a, WitnessVariant::T3, p);
      if (!cert.nonzero)
        continue;
      ++certified;
      const auto m = multiplicity_exact(a, p);
      if (m < 1) {
        ok = false;
        bad << " " << to_string(p);
      }
    }
  std::string d = std::to_string(certified) + " of " + std::to_string(total) + " shapes certified";
  if (!ok)
    d += ", zero multiplicity at" + bad.str();
  return {ok && certified > 0, d};
}

} // namespace

const std::vector<BatteryCheck>& battery_checks()
{
  static const std::vector<BatteryCheck> checks{
      {"C1", {"semigroups"}, "two-element semigroups fall into five classes", 1, check_semigroups},
      {"C2", {"radical"}, "radical meets both components trivially", 1, check_radicals},
      {"C3", {"splitting", "wedderburn"}, "graded maximal semisimple subalgebra", 1, check_splitting},
      {"C4", {"simplicity", "wedderburn"}, "T3-graded-simple algebra and semisimple counterexample", 10,
       check_simplicity},
      {"C5", {"codimension"}, "T1 and T2 graded codimensions coincide", 600, check_codim_equality},
      {"C6", {"codimension"}, "c_1 = 1 < c_1^gr = k", 1, check_c1},
      {"C7", {"polytopes"}, "max of Phi equals (q-3)+2sqrt2", 5, check_phi},
      {"C8", {"witnesses"}, "e_T f does not vanish on the witness substitution", 120, check_witnesses},
      {"C9", {"polytopes", "alternation"}, "alternation over more than dim A variables vanishes", 60,
       check_alternation},
      {"C10", {"polytopes", "theta"}, "-1 <= sum of theta <= 1 on nonzero products", 60, check_theta},
      {"C11", {"exponent"}, "graded exponent equals the ordinary PI-exponent", 1, check_exponents},
      {"C12", {"polytopes", "hooks"}, "hook formula and dimension bounds", 10, check_hooks},
      {"C13", {"multiplicity"}, "certified shapes have positive multiplicity", 600, check_cross_validation},
  };
  return checks;
}

std::vector<BatteryResult> run_battery(const BatteryContext& ctx, const std::vector<std::string>& filter)
{
  std::vector<BatteryResult> out;
  for (const auto& c : battery_checks()) {
    if (!filter.empty()) {
      const bool hit = std::any_of(filter.begin(), filter.end(), [&](const std::string& f) {
        return f == c.id || std::find(c.topics.begin(), c.topics.end(), f) != c.topics.end();
      });
      if (!hit)
        continue;
    }
    BatteryResult r;
    r.id = c.id;
    r.citation = c.citation;
    const auto start = std::chrono::steady_clock::now();
    try {
      const auto o = c.run(ctx);
      r.pass = o.pass;
      r.detail = o.detail;
      while (!r.detail.empty() && (r.detail.back() == ' ' || r.detail.back() == ';'))
        r.detail.pop_back();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.within_budget = r.seconds <= c.budget;
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_result(const BatteryResult& r)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", r.seconds);
  return std::string(r.pass ? "PASS " : "FAIL ") + r.id + " [" + r.citation + "] " + r.detail + " (" + buf +
         (r.within_budget ? "" : ", over budget") + ")";
}

} // namespace gralg
