#include "cli.hpp"

#include "gralg/algebra_io.hpp"
#include "gralg/asympt.hpp"
#include "gralg/battery.hpp"
#include "gralg/catalog.hpp"
#include "gralg/cochar.hpp"
#include "gralg/codim.hpp"
#include "gralg/error.hpp"
#include "gralg/parallel.hpp"
#include "gralg/partition.hpp"
#include "gralg/semigroup.hpp"
#include "gralg/structure.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

namespace gralg::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { text, json, csv };

struct Caps {
  std::size_t block_entries = 10'000'000;
  std::size_t exact_check_entries = 10'000;
  std::size_t multiplicity_n = 5;
  std::size_t multiplicity_work = 200'000'000;
  std::size_t symmetrizer_terms = 50'000'000;
};

struct RunConfig {
  std::string command;
  std::string input;
  std::string catalog;
  std::size_t n_max = 4;
  std::size_t n_min = 1;
  std::string mode = "modular";
  std::string primes;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string out;
  std::string caps;
  std::string sections;
  std::size_t threads = 1;
  bool timing = false;

  std::size_t order = 2;
  std::string partition;
  std::string variant;
  bool exact = false;
  bool ordinary = false;
  bool report = false;
  std::size_t q = 7;
  std::string preset = "lemma";
  std::optional<double> d;
  std::size_t trials = 1000;
};

struct Context {
  RunConfig cfg;
  Format format = Format::text;
  Caps caps;
  std::vector<std::uint32_t> primes;
  WorkerPool pool{1};
};

std::vector<std::string> split_list(const std::string& text)
{
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty())
      parts.push_back(item);
  return parts;
}

std::size_t parse_positive(const std::string& key, const std::string& value)
{
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || !(v >= 1) || v != std::floor(v) || v > 1e18)
    throw UsageError("cap '" + key + "' needs a positive integer, got '" + value + "'");
  return static_cast<std::size_t>(v);
}

Caps parse_caps(const std::string& text)
{
  Caps caps;
  for (const auto& item : split_list(text)) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw UsageError("cap '" + item + "' is not of the form key=value");
    const std::string key = item.substr(0, eq);
    const std::size_t v = parse_positive(key, item.substr(eq + 1));
    if (key == "block-entries")
      caps.block_entries = v;
    else if (key == "exact-check-entries")
      caps.exact_check_entries = v;
    else if (key == "multiplicity-n")
      caps.multiplicity_n = v;
    else if (key == "multiplicity-work")
      caps.multiplicity_work = v;
    else if (key == "symmetrizer-terms")
      caps.symmetrizer_terms = v;
    else
      throw UsageError("unknown cap '" + key + "'");
  }
  return caps;
}

std::vector<std::uint32_t> parse_primes(const std::string& text)
{
  std::vector<std::uint32_t> primes;
  for (const auto& item : split_list(text)) {
    const std::size_t v = parse_positive("primes", item);
    if (v > 0xffffffffULL)
      throw UsageError("prime " + item + " does not fit in 32 bits");
    primes.push_back(static_cast<std::uint32_t>(v));
  }
  return primes;
}

Format parse_format(const std::string& text)
{
  if (text == "text")
    return Format::text;
  if (text == "json")
    return Format::json;
  if (text == "csv")
    return Format::csv;
  throw UsageError("unknown format '" + text + "' (expected text, json or csv)");
}

std::string fixed(double v, int digits = 12)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string scientific(double v)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

std::string csv_field(const std::string& s)
{
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"')
      q += '"';
    q += c;
  }
  return q + "\"";
}

json integer_json(const Integer& v)
{
  if (v.fits_slong_p())
    return json(v.get_si());
  return json(to_string(v));
}

std::string element(const GradedAlgebra& a, const Vec& v)
{
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0)
      continue;
    Rational c = v[i];
    const bool neg = sgn(c) < 0;
    if (neg)
      c = -c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (c != 1)
      s += to_string(c) + "*";
    s += a.label(i);
  }
  return s.empty() ? "0" : s;
}

json basis_json(const GradedAlgebra& a, const Subspace& s)
{
  json arr = json::array();
  for (const auto& v : s.basis())
    arr.push_back(element(a, v));
  return arr;
}

void basis_text(std::ostream& os, const GradedAlgebra& a, const Subspace& s)
{
  for (const auto& v : s.basis())
    os << "  " << element(a, v) << "\n";
}

std::string table_string(const FiniteSemigroup& s)
{
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i)
      out += "; ";
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (j)
        out += " ";
      out += s.label(s.mul(i, j));
    }
  }
  return out;
}

void require_no_csv(const Context& ctx)
{
  if (ctx.format == Format::csv)
    throw UsageError("csv output is not available for '" + ctx.cfg.command + "'");
}

GradedAlgebra load_algebra(const RunConfig& cfg)
{
  if (cfg.input.empty() == cfg.catalog.empty())
    throw UsageError("exactly one of --input and --catalog is required");
  if (!cfg.input.empty())
    return load_algebra_file(cfg.input);
  std::string spec = cfg.catalog;
  if (spec.rfind("catalog:", 0) == 0)
    spec = spec.substr(8);
  return catalog_algebra(spec);
}

CodimOptions codim_options(const Context& ctx)
{
  CodimOptions o;
  o.mode = parse_rank_mode(ctx.cfg.mode);
  o.primes = ctx.primes;
  o.seed = ctx.cfg.seed;
  o.max_block_entries = ctx.caps.block_entries;
  o.exact_check_entries = ctx.caps.exact_check_entries;
  o.pool = &ctx.pool;
  return o;
}

int cmd_semigroups(const Context& ctx, std::ostream& os)
{
  const std::size_t order = ctx.cfg.order;
  const auto list = enumerate_semigroups(order);
  const auto classes = isomorphism_classes(list);
  struct Row {
    std::string name;
    std::size_t count;
    std::string table;
  };
  std::vector<Row> rows;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const auto& rep = list[classes[k].front()];
    std::string name = "S" + std::to_string(k + 1);
    if (order == 2)
      name = std::string(to_string(classify_order2(rep)));
    else if (order == 1)
      name = "trivial";
    rows.push_back({name, classes[k].size(), table_string(rep)});
  }
  if (ctx.format == Format::json) {
    json j;
    j["order"] = order;
    j["tables"] = list.size();
    j["classes"] = json::array();
    for (const auto& r : rows)
      j["classes"].push_back({{"name", r.name}, {"count", r.count}, {"table", r.table}});
    os << j.dump(2) << "\n";
  } else if (ctx.format == Format::csv) {
    os << "class,count,table\n";
    for (const auto& r : rows)
      os << r.name << "," << r.count << "," << csv_field(r.table) << "\n";
  } else {
    os << "order " << order << ": " << list.size() << " associative tables, " << rows.size()
       << " isomorphism classes\n";
    for (const auto& r : rows)
      os << r.name << "  tables=" << r.count << "  [" << r.table << "]\n";
  }
  return ok;
}

int cmd_check(const Context& ctx, std::ostream& os)
{
  require_no_csv(ctx);
  const GradedAlgebra a = load_algebra(ctx.cfg);
  const ValidationReport rep = validate(a);
  const auto unit = find_unit(a);
  std::vector<std::string> supp;
  for (auto t : support(a))
    supp.push_back(a.semigroup().label(t));
  if (ctx.format == Format::json) {
    json j;
    j["algebra"] = a.name();
    j["dim"] = a.dim();
    j["semigroup"] = table_string(a.semigroup());
    j["support"] = supp;
    j["unit"] = unit ? json(element(a, *unit)) : json(nullptr);
    j["associativity_violations"] = rep.associativity_violations;
    j["grading_violations"] = rep.grading_violations;
    j["unit_violations"] = rep.unit_violations;
    j["ok"] = rep.ok();
    os << j.dump(2) << "\n";
  } else {
    os << "algebra " << a.name() << "\n";
    os << "dim " << a.dim() << "\n";
    os << "semigroup [" << table_string(a.semigroup()) << "]\n";
    os << "support";
    for (const auto& s : supp)
      os << " " << s;
    os << "\n";
    os << "unit " << (unit ? element(a, *unit) : std::string("none")) << "\n";
    for (const auto& v : rep.associativity_violations)
      os << "associativity: " << v << "\n";
    for (const auto& v : rep.grading_violations)
      os << "grading: " << v << "\n";
    for (const auto& v : rep.unit_violations)
      os << "unit: " << v << "\n";
    os << (rep.ok() ? "ok" : "INVALID") << "\n";
  }
  return rep.ok() ? ok : check_failed;
}

int cmd_radical(const Context& ctx, std::ostream& os)
{
  require_no_csv(ctx);
  const GradedAlgebra a = load_algebra(ctx.cfg);
  const Subspace j = jacobson_radical(a);
  const bool graded = is_graded_subspace(a, j);
  std::vector<std::pair<std::string, std::size_t>> meets;
  for (auto t : support(a))
    meets.emplace_back(a.semigroup().label(t), subspace_intersect(j, component(a, t)).dim());
  if (ctx.format == Format::json) {
    json out;
    out["algebra"] = a.name();
    out["dim"] = j.dim();
    out["basis"] = basis_json(a, j);
    out["graded"] = graded;
    json m = json::object();
    for (const auto& [t, d] : meets)
      m[t] = d;
    out["component_intersections"] = m;
    os << out.dump(2) << "\n";
  } else {
    os << "algebra " << a.name() << "\n";
    os << "radical dim " << j.dim() << "\n";
    basis_text(os, a, j);
    os << "graded " << (graded ? "true" : "false") << "\n";
    for (const auto& [t, d] : meets)
      os << "dim J cap A(" << t << ") = " << d << "\n";
  }
  return ok;
}

int cmd_split(const Context& ctx, std::ostream& os)
{
  require_no_csv(ctx);
  const GradedAlgebra a = load_algebra(ctx.cfg);
  const bool zero_band = is_left_zero_band(a.semigroup()) || is_right_zero_band(a.semigroup());
  const SplittingData d = zero_band ? graded_malcev_zeroband(a) : malcev_complement(a);
  const std::string method = zero_band ? "graded zero-band" : "ungraded";
  const bool graded = is_graded_subspace(a, d.complement);
  const bool closed = is_subalgebra(a, d.complement);
  const bool additive = d.complement.dim() + d.radical.dim() == a.dim();
  if (ctx.format == Format::json) {
    json j;
    j["algebra"] = a.name();
    j["method"] = method;
    j["complement_dim"] = d.complement.dim();
    j["radical_dim"] = d.radical.dim();
    j["complement"] = basis_json(a, d.complement);
    j["graded"] = graded;
    j["subalgebra"] = closed;
    j["dimensions_add_up"] = additive;
    j["corrections"] = d.correction_log.size();
    os << j.dump(2) << "\n";
  } else {
    os << "algebra " << a.name() << "\n";
    os << "method " << method << "\n";
    os << "complement dim " << d.complement.dim() << ", radical dim " << d.radical.dim() << "\n";
    basis_text(os, a, d.complement);
    os << "graded " << (graded ? "true" : "false") << "\n";
    os << "subalgebra " << (closed ? "true" : "false") << "\n";
    os << "dimensions add up " << (additive ? "true" : "false") << "\n";
    os << "corrections " << d.correction_log.size() << "\n";
  }
  return graded || !zero_band ? ok : check_failed;
}

int cmd_simple(const Context& ctx, std::ostream& os)
{
  require_no_csv(ctx);
  const GradedAlgebra a = load_algebra(ctx.cfg);
  SimplicityOptions o;
  o.trials = ctx.cfg.trials;
  o.seed = ctx.cfg.seed;
  const SimplicityResult r = is_graded_simple(a, o);
  if (ctx.format == Format::json) {
    json j;
    j["algebra"] = a.name();
    j["verdict"] = std::string(to_string(r.verdict));
    j["method"] = r.method;
    j["trials"] = r.trials;
    j["witness"] = r.witness ? basis_json(a, *r.witness) : json(nullptr);
    os << j.dump(2) << "\n";
  } else {
    os << "algebra " << a.name() << "\n";
    os << "verdict " << to_string(r.verdict) << "\n";
    os << "method " << r.method << "\n";
    if (r.trials)
      os << "trials " << r.trials << "\n";
    if (r.witness) {
      os << "witness ideal dim " << r.witness->dim() << "\n";
      basis_text(os, a, *r.witness);
    }
  }
  return ok;
}

int cmd_codim(const Context& ctx, std::ostream& os)
{
  const GradedAlgebra a = load_algebra(ctx.cfg);
  const CodimOptions o = codim_options(ctx);
  std::vector<CodimResult> rows;
  if (ctx.cfg.ordinary) {
    for (std::size_t n = 1; n <= ctx.cfg.n_max; ++n)
      rows.push_back(ordinary_codim(a, n, o));
  } else {
    rows = codim_sequence(a, ctx.cfg.n_max, o);
  }
  if (ctx.format == Format::json) {
    json j;
    j["algebra"] = a.name();
    j["kind"] = ctx.cfg.ordinary ? "ordinary" : "graded";
    j["mode"] = std::string(to_string(o.mode));
    j["rows"] = json::array();
    for (const auto& r : rows) {
      json row;
      row["n"] = r.n;
      row["c_n"] = integer_json(r.value);
      row["certification"] = r.certification;
      row["blocks"] = r.blocks.size();
      if (ctx.cfg.timing)
        row["seconds"] = r.seconds;
      j["rows"].push_back(row);
    }
    os << j.dump(2) << "\n";
  } else {
    os << codim_csv(rows, ctx.cfg.timing);
  }
  return ok;
}

int cmd_multiplicity(const Context& ctx, std::ostream& os)
{
  require_no_csv(ctx);
  const GradedAlgebra a = load_algebra(ctx.cfg);
  if (ctx.cfg.partition.empty())
    throw UsageError("--partition is required");
  const Partition lambda = parse_partition(ctx.cfg.partition);
  std::optional<CertificateResult> cert;
  if (!ctx.cfg.variant.empty()) {
    SymmetrizerOptions so;
    so.max_terms = ctx.caps.symmetrizer_terms;
    so.pool = &ctx.pool;
    cert = multiplicity_nonzero_certificate(a, parse_witness_variant(ctx.cfg.variant), lambda, so);
  }
  std::optional<std::size_t> exact;
  if (ctx.cfg.exact || !cert) {
    MultiplicityOptions mo;
    mo.max_n = ctx.caps.multiplicity_n;
    mo.max_work = ctx.caps.multiplicity_work;
    exact = multiplicity_exact(a, lambda, mo);
  }
  if (ctx.format == Format::json) {
    json j;
    j["algebra"] = a.name();
    j["partition"] = to_string(lambda);
    if (cert) {
      json c;
      c["variant"] = ctx.cfg.variant;
      c["nonzero"] = cert->nonzero;
      c["boundary"] = cert->boundary;
      c["note"] = cert->note;
      if (cert->nonzero)
        c["value"] = element(a, cert->value);
      if (cert->witness)
        c["factors"] = cert->witness->factor_names;
      j["certificate"] = c;
    }
    if (exact)
      j["multiplicity"] = *exact;
    os << j.dump(2) << "\n";
  } else {
    os << "algebra " << a.name() << "\n";
    os << "partition " << to_string(lambda) << "\n";
    if (cert) {
      os << "certificate " << (cert->nonzero ? "nonzero" : "inconclusive");
      if (cert->boundary)
        os << " (boundary stratum)";
      os << "\n";
      if (!cert->note.empty())
        os << "note " << cert->note << "\n";
      if (cert->nonzero)
        os << "value " << element(a, cert->value) << "\n";
      if (ctx.cfg.report && cert->witness)
        os << witness_report(*cert->witness, cert->nonzero ? std::optional<Vec>(cert->value) : std::nullopt, &a);
    }
    if (exact)
      os << "multiplicity " << *exact << "\n";
  }
  return ok;
}

Polytope preset_polytope(const RunConfig& cfg)
{
  if (cfg.preset == "lemma")
    return lemma_polytope(cfg.q);
  if (cfg.preset == "simplex")
    return simplex_polytope(cfg.q);
  throw UsageError("unknown preset '" + cfg.preset + "' (expected lemma or simplex)");
}

int cmd_phimax(const Context& ctx, std::ostream& os)
{
  const Polytope p = preset_polytope(ctx.cfg);
  MaximizeOptions o;
  o.seed = ctx.cfg.seed;
  o.pool = &ctx.pool;
  const OptimizationResult r = maximize_phi(p, o);
  std::optional<OptimizationResult> closed;
  if (ctx.cfg.preset == "lemma")
    closed = lemma_max_closed_form(ctx.cfg.q);
  if (ctx.format == Format::json) {
    json j;
    j["polytope"] = p.name;
    j["q"] = p.q;
    j["max"] = r.value;
    j["point"] = r.point;
    j["method"] = r.method;
    j["certified_gap"] = r.certified_gap;
    if (closed) {
      j["closed_form"] = closed->value;
      j["difference"] = std::abs(r.value - closed->value);
    }
    os << j.dump(2) << "\n";
  } else if (ctx.format == Format::csv) {
    os << "j,alpha_j\n";
    for (std::size_t i = 0; i < r.point.size(); ++i)
      os << i + 1 << "," << fixed(r.point[i], 15) << "\n";
  } else {
    os << "polytope " << p.name << "\n";
    os << "max " << fixed(r.value) << "\n";
    if (closed) {
      os << "closed form " << fixed(closed->value) << "\n";
      os << "difference " << scientific(std::abs(r.value - closed->value)) << "\n";
    }
    os << "certified gap " << scientific(r.certified_gap) << "\n";
    os << "method " << r.method << "\n";
    os << "point";
    for (double x : r.point)
      os << " " << fixed(x, 9);
    os << "\n";
  }
  return ok;
}

int cmd_exponent(const Context& ctx, std::ostream& os)
{
  require_no_csv(ctx);
  const GradedAlgebra a = load_algebra(ctx.cfg);
  const ExponentResult g = graded_exponent(a);
  const std::size_t d = ordinary_exponent(a);
  if (ctx.format == Format::json) {
    json j;
    j["algebra"] = a.name();
    j["graded_d"] = g.d;
    j["ordinary_d"] = d;
    j["summand_dims"] = g.summand_dims;
    j["best_sequence"] = g.best_sequence;
    j["graded_complement"] = g.graded_complement;
    os << j.dump(2) << "\n";
  } else {
    os << "algebra " << a.name() << "\n";
    os << "graded d " << g.d << "\n";
    os << "ordinary d " << d << "\n";
    os << "simple summand dims";
    for (auto s : g.summand_dims)
      os << " " << s;
    os << "\n";
  }
  return ok;
}

int cmd_bounds(const Context& ctx, std::ostream& os)
{
  double d = 0;
  std::optional<std::vector<double>> alpha;
  if (ctx.cfg.d) {
    d = *ctx.cfg.d;
  } else {
    const OptimizationResult c = lemma_max_closed_form(ctx.cfg.q);
    d = c.value;
    alpha = c.point;
  }
  if (ctx.cfg.n_min < 1 || ctx.cfg.n_min > ctx.cfg.n_max)
    throw UsageError("need 1 <= --n-min <= --n-max");
  std::vector<Integer> c_values;
  if (!ctx.cfg.input.empty() || !ctx.cfg.catalog.empty()) {
    const GradedAlgebra a = load_algebra(ctx.cfg);
    const CodimOptions o = codim_options(ctx);
    for (std::size_t n = ctx.cfg.n_min; n <= ctx.cfg.n_max; ++n)
      c_values.push_back(graded_codim(a, n, o).value);
  }
  const auto rows = bound_report(d, ctx.cfg.n_min, ctx.cfg.n_max, c_values, alpha);
  if (ctx.format == Format::json) {
    json j;
    j["d"] = d;
    j["rows"] = json::array();
    for (const auto& r : rows) {
      json row;
      row["n"] = r.n;
      row["d_pow_n"] = r.d_pow_n;
      row["c_n"] = r.c_n ? integer_json(*r.c_n) : json(nullptr);
      row["hook_lower"] = r.hook_lower ? integer_json(*r.hook_lower) : json(nullptr);
      j["rows"].push_back(row);
    }
    os << j.dump(2) << "\n";
  } else {
    os << bound_csv(rows);
  }
  return ok;
}

int cmd_theta(const Context& ctx, std::ostream& os)
{
  require_no_csv(ctx);
  const GradedAlgebra a = load_algebra(ctx.cfg);
  const ThetaScanReport r = theta_scan(a, ctx.cfg.n_max);
  if (ctx.format == Format::json) {
    json j;
    j["algebra"] = a.name();
    j["n_max"] = ctx.cfg.n_max;
    j["words"] = r.words;
    j["nonzero"] = r.nonzero;
    j["min_sum"] = r.min_sum;
    j["max_sum"] = r.max_sum;
    j["violations"] = r.violations;
    os << j.dump(2) << "\n";
  } else {
    os << "algebra " << a.name() << "\n";
    os << "words " << r.words << ", nonzero " << r.nonzero << "\n";
    os << "theta sums in [" << r.min_sum << ", " << r.max_sum << "]\n";
    for (const auto& v : r.violations)
      os << "violation " << v << "\n";
    os << (r.ok() ? "ok" : "FAILED") << "\n";
  }
  return r.ok() ? ok : check_failed;
}

int cmd_catalog(const Context& ctx, std::ostream& os)
{
  const auto& names = catalog_names();
  if (ctx.format == Format::json) {
    json j = json::array();
    for (const auto& e : names)
      j.push_back({{"name", e.name}, {"params", e.param_count}, {"description", e.description}});
    os << j.dump(2) << "\n";
  } else if (ctx.format == Format::csv) {
    os << "name,params,description\n";
    for (const auto& e : names)
      os << e.name << "," << e.param_count << "," << csv_field(e.description) << "\n";
  } else {
    for (const auto& e : names)
      os << e.name << (e.param_count ? "(k)" : "") << "  " << e.description << "\n";
  }
  return ok;
}

int cmd_verify(const Context& ctx, std::ostream& os)
{
  BatteryContext bc = default_battery_context();
  bc.seed = ctx.cfg.seed;
  bc.pool = &ctx.pool;
  const auto filter = split_list(ctx.cfg.sections);
  const auto results = run_battery(bc, filter);
  if (results.empty()) {
    std::string topics;
    for (const auto& c : battery_checks())
      for (const auto& t : c.topics)
        if (topics.find(t) == std::string::npos)
          topics += (topics.empty() ? "" : ", ") + t;
    throw UsageError("--sections matches no check; known topics: " + topics);
  }
  std::size_t passed = 0;
  for (const auto& r : results)
    passed += r.pass ? 1 : 0;
  if (ctx.format == Format::json) {
    json j;
    j["results"] = json::array();
    for (const auto& r : results) {
      json row;
      row["id"] = r.id;
      row["citation"] = r.citation;
      row["pass"] = r.pass;
      row["detail"] = r.detail;
      if (ctx.cfg.timing) {
        row["seconds"] = r.seconds;
        row["within_budget"] = r.within_budget;
      }
      j["results"].push_back(row);
    }
    j["passed"] = passed;
    j["total"] = results.size();
    os << j.dump(2) << "\n";
  } else if (ctx.format == Format::csv) {
    os << "id,pass,citation,detail" << (ctx.cfg.timing ? ",seconds" : "") << "\n";
    for (const auto& r : results) {
      os << r.id << "," << (r.pass ? "PASS" : "FAIL") << "," << csv_field(r.citation) << ","
         << csv_field(r.detail);
      if (ctx.cfg.timing)
        os << "," << fixed(r.seconds, 3);
      os << "\n";
    }
  } else {
    for (const auto& r : results) {
      if (ctx.cfg.timing)
        os << format_result(r) << "\n";
      else
        os << (r.pass ? "PASS " : "FAIL ") << r.id << " [" << r.citation << "] " << r.detail << "\n";
    }
    os << passed << "/" << results.size() << " checks passed\n";
  }
  return passed == results.size() ? ok : check_failed;
}

int exit_code_for(ErrorKind kind)
{
  switch (kind) {
  case ErrorKind::ResourceLimit:
  case ErrorKind::OrderTooLarge:
    return resource_limit;
  case ErrorKind::UnknownTag:
  case ErrorKind::UnknownName:
  case ErrorKind::BadParam:
  case ErrorKind::ParseError:
  case ErrorKind::WrongOrder:
  case ErrorKind::TooManyParts:
  case ErrorKind::QTooSmall:
    return usage_error;
  default:
    return check_failed;
  }
}

int report_error(std::ostream& err, const std::string& kind, const std::string& message, int code)
{
  json j;
  j["error"] = kind;
  j["message"] = message;
  j["exit_code"] = code;
  err << j.dump() << "\n";
  return code;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Graded algebras over finite semigroups: structure, codimensions and growth bounds", "gralg"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;

  app.add_option("--seed", cfg.seed, "Seed for every randomized step");
  app.add_option("--format", cfg.format, "Output format: text, json or csv");
  app.add_option("--out", cfg.out, "Write output to this file instead of stdout");
  app.add_option("--caps", cfg.caps,
                 "Resource caps key=value,...: block-entries, exact-check-entries, multiplicity-n, "
                 "multiplicity-work, symmetrizer-terms");
  app.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--timing", cfg.timing, "Include wall-clock timings (output is then not reproducible)");

  auto algebra_opts = [&](CLI::App* sub) {
    sub->add_option("--input", cfg.input, "Algebra definition file");
    sub->add_option("--catalog", cfg.catalog, "Catalog algebra, e.g. exampleT1(2) or catalog:thm_T1_fractional");
  };
  auto codim_opts = [&](CLI::App* sub) {
    sub->add_option("--mode", cfg.mode, "Rank mode: modular or exact");
    sub->add_option("--primes", cfg.primes, "Comma-separated primes for modular mode");
  };

  auto* semigroups = app.add_subcommand("semigroups", "Enumerate and classify semigroups of a given order");
  semigroups->add_option("--order", cfg.order, "Semigroup order");

  auto* check = app.add_subcommand("check", "Validate an algebra definition");
  algebra_opts(check);

  auto* radical = app.add_subcommand("radical", "Jacobson radical and whether it is graded");
  algebra_opts(radical);

  auto* split = app.add_subcommand("split", "Semisimple complement to the radical");
  algebra_opts(split);

  auto* simple = app.add_subcommand("simple", "Graded simplicity test");
  algebra_opts(simple);
  simple->add_option("--trials", cfg.trials, "Random trials for the probabilistic branch");

  auto* codim = app.add_subcommand("codim", "Graded codimension sequence");
  algebra_opts(codim);
  codim_opts(codim);
  codim->add_option("--n-max", cfg.n_max, "Largest n")->check(CLI::Range(1, 12));
  codim->add_flag("--ordinary", cfg.ordinary, "Ordinary codimensions (trivial grading)");

  auto* mult = app.add_subcommand("multiplicity", "Cocharacter multiplicity for a partition");
  algebra_opts(mult);
  mult->add_option("--partition", cfg.partition, "Partition, e.g. 2,1,1 or 2^6,1");
  mult->add_option("--variant", cfg.variant, "Witness family for the nonvanishing certificate: T1 or T3");
  mult->add_flag("--exact", cfg.exact, "Also compute the exact multiplicity");
  mult->add_flag("--report", cfg.report, "Print the witness tableau and substitution");

  auto* phimax = app.add_subcommand("phimax", "Maximize Phi over a polytope");
  phimax->add_option("--q", cfg.q, "Number of coordinates");
  phimax->add_option("--preset", cfg.preset, "Polytope: lemma or simplex");

  auto* exponent = app.add_subcommand("exponent", "Graded and ordinary PI-exponent");
  algebra_opts(exponent);

  auto* bounds = app.add_subcommand("bounds", "Growth bound table d^n against c_n and the hook lower bound");
  algebra_opts(bounds);
  codim_opts(bounds);
  bounds->add_option("--d", cfg.d, "Exponent; defaults to the closed-form maximum for --q");
  bounds->add_option("--q", cfg.q, "Polytope size used when --d is absent");
  bounds->add_option("--n-min", cfg.n_min, "Smallest n");
  bounds->add_option("--n-max", cfg.n_max, "Largest n");

  auto* theta = app.add_subcommand("theta", "Exhaustive theta-invariant scan of nonzero products");
  algebra_opts(theta);
  theta->add_option("--n-max", cfg.n_max, "Longest product");

  app.add_subcommand("catalog", "List catalog algebras");

  auto* verify = app.add_subcommand("verify-paper", "Run the verification battery");
  verify->add_option("--sections", cfg.sections, "Comma-separated check ids or topics");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0)
      return app.exit(e, out, err);
    return report_error(err, "usage", e.what(), usage_error);
  }

  try {
    Context ctx;
    ctx.cfg = cfg;
    ctx.cfg.command = app.get_subcommands().front()->get_name();
    ctx.format = parse_format(cfg.format);
    ctx.caps = parse_caps(cfg.caps);
    ctx.primes = parse_primes(cfg.primes);
    ctx.pool = WorkerPool(cfg.threads);

    std::ostringstream buf;
    int code = ok;
    const std::string& c = ctx.cfg.command;
    if (c == "semigroups")
      code = cmd_semigroups(ctx, buf);
    else if (c == "check")
      code = cmd_check(ctx, buf);
    else if (c == "radical")
      code = cmd_radical(ctx, buf);
    else if (c == "split")
      code = cmd_split(ctx, buf);
    else if (c == "simple")
      code = cmd_simple(ctx, buf);
    else if (c == "codim")
      code = cmd_codim(ctx, buf);
    else if (c == "multiplicity")
      code = cmd_multiplicity(ctx, buf);
    else if (c == "phimax")
      code = cmd_phimax(ctx, buf);
    else if (c == "exponent")
      code = cmd_exponent(ctx, buf);
    else if (c == "bounds")
      code = cmd_bounds(ctx, buf);
    else if (c == "theta")
      code = cmd_theta(ctx, buf);
    else if (c == "catalog")
      code = cmd_catalog(ctx, buf);
    else
      code = cmd_verify(ctx, buf);

    if (cfg.out.empty()) {
      out << buf.str();
    } else {
      std::ofstream f(cfg.out, std::ios::binary);
      if (!f)
        return report_error(err, "usage", "cannot open output file '" + cfg.out + "'", usage_error);
      f << buf.str();
    }
    return code;
  } catch (const UsageError& e) {
    return report_error(err, "usage", e.what(), usage_error);
  } catch (const Error& e) {
    return report_error(err, std::string(to_string(e.kind())), e.detail(), exit_code_for(e.kind()));
  } catch (const std::exception& e) {
    return report_error(err, "internal", e.what(), check_failed);
  }
}

} // namespace gralg::cli
