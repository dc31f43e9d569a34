#include "qcoh/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "qcoh/boundary.hpp"
#include "qcoh/gw_engine.hpp"
#include "qcoh/potential.hpp"

namespace qcoh {

using nlohmann::json;

// ---------------------------------------------------------------------------
// report

bool Report::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void Report::sort_rows() {
  std::sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) { return a.key < b.key; });
}

std::string to_json(const Report& r) {
  json j;
  j["model"] = r.model;
  j["command"] = r.command;
  j["bounds"] = json::object();
  for (const auto& [k, v] : r.bounds) j["bounds"][k] = v;
  j["rows"] = json::array();
  for (const auto& row : r.rows) j["rows"].push_back({{"key", row.key}, {"value", row.value.get_str()}});
  j["checks"] = json::array();
  for (const auto& c : r.checks) j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    Report r;
    r.model = j.at("model").get<std::string>();
    r.command = j.at("command").get<std::string>();
    for (const auto& [k, v] : j.at("bounds").items()) r.bounds[k] = v.get<long>();
    for (const auto& row : j.at("rows")) {
      const json& value = row.at("value");
      if (!value.is_string()) throw std::invalid_argument("row value must be a decimal string");
      r.rows.push_back({row.at("key").get<std::vector<long>>(), parse_int(value.get<std::string>())});
    }
    for (const auto& c : j.at("checks"))
      r.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(), c.at("detail").get<std::string>()});
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

std::vector<std::string> key_columns(const Report& r) {
  std::size_t arity = 0;
  bool uniform = true;
  for (const auto& row : r.rows) {
    if (arity != 0 && row.key.size() != arity) uniform = false;
    arity = std::max(arity, row.key.size());
  }
  std::vector<std::string> names;
  auto numbered = [&](const std::string& stem, long count) {
    for (long i = 1; i <= count; ++i) names.push_back(stem + std::to_string(i));
  };
  if (uniform) {
    if (r.command == "nd") names = {"d"};
    else if (r.command == "fano3") names = {"d", "a", "b"};
    else if (r.command == "wdvv-count") names = {"m"};
    else if (r.command == "qring" && r.bounds.count("gr_p")) names = {"degree"};
    else if (r.command == "qring" && r.bounds.count("divisors")) {
      names = {"i", "j", "f"};
      const long p = r.bounds.at("divisors");
      if (p == 1) names.push_back("q");
      else numbered("q", p);
    } else if (r.command == "solve" && r.bounds.count("divisors")) {
      const long p = r.bounds.at("divisors");
      numbered("d", p);
      numbered("n", static_cast<long>(arity) - p);
    }
  }
  if (names.size() != arity) {
    names.clear();
    numbered("k", static_cast<long>(arity));
  }
  return names;
}

std::string to_csv(const Report& r) {
  std::ostringstream os;
  const auto cols = key_columns(r);
  for (const auto& c : cols) os << c << ",";
  os << "value\n";
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (i < row.key.size()) os << row.key[i];
      os << ",";
    }
    os << row.value.get_str() << "\n";
  }
  return os.str();
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << r.command << " [" << r.model;
  for (const auto& [k, v] : r.bounds) os << " " << k << "=" << v;
  os << "]\n";
  if (!r.rows.empty()) {
    const auto cols = key_columns(r);
    for (const auto& c : cols) os << c << " ";
    os << "value\n";
    for (const auto& row : r.rows) {
      for (long k : row.key) os << k << " ";
      os << row.value.get_str() << "\n";
    }
  }
  for (const auto& c : r.checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  if (!r.checks.empty()) os << (r.ok() ? "all checks passed\n" : "some checks FAILED\n");
  return os.str();
}

// ---------------------------------------------------------------------------
// commands

namespace {

struct Options {
  std::string model = "p2";
  std::string model_file;
  int r = 0;
  int dmax = 0;
  int c1max = 0;
  int trunc = -1;
  std::string space = "q3";
  std::string format = "text";
  std::string suite = "all";
  std::string seeds;
  int m = 7;
  int gr_p = 0, gr_n = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ModelPtr resolve_model(const Options& o) {
  if (!o.model_file.empty()) return load_model(o.model_file);
  if (o.model == "pr") {
    if (o.r < 1) throw UsageError("--model pr needs --r >= 1");
    return projective_space(o.r);
  }
  return builtin_model(o.model, o.r);
}

std::string model_label(const ModelPtr& m) { return m->name(); }

int resolve_c1max(const Options& o, const FanoModel& model, std::optional<int> fallback = std::nullopt) {
  if (o.c1max > 0) return o.c1max;
  if (o.dmax > 0) {
    int top = *std::max_element(model.c1_degrees().begin(), model.c1_degrees().end());
    return o.dmax * top;
  }
  if (fallback) return *fallback;
  throw UsageError("a degree bound is required (--dmax or --c1max)");
}

bool is_projective_space(const FanoModel& m) {
  return m.divisor_count() == 1 && m.m() == m.dimension() && m.c1_degrees()[0] == m.dimension() + 1;
}

/// The model's table through c1_max: the dedicated recursions where they
/// exist, the generic solver otherwise.
GWTable table_for(const ModelPtr& model, int c1_max) {
  const int c = model->c1_degrees()[0];
  if (model->divisor_count() == 1 && c1_max % c == 0 && c1_max >= c) {
    const int d = c1_max / c;
    if (model->name() == "p2") return nd_plane(d);
    if (model->name() == "p3") return fano3_solve(Fano3::p3, d);
    if (model->name() == "q3") return fano3_solve(Fano3::q3, d);
  }
  return wdvv_solve(model, default_seeds(model), c1_max);
}

std::vector<long> key_of(const GWKey& k) {
  std::vector<long> key;
  for (int v : k.beta.values()) key.push_back(v);
  for (int v : k.insertions.values()) key.push_back(v);
  return key;
}

Report cmd_nd(const Options& o) {
  if (o.dmax < 1) throw UsageError("--dmax must be >= 1");
  Report r{"p2", "nd", {{"dmax", o.dmax}}, {}, {}};
  const auto n = plane_curve_numbers(o.dmax);
  for (int d = 1; d <= o.dmax; ++d) r.rows.push_back({{d}, n[static_cast<std::size_t>(d)]});
  return r;
}

Report cmd_fano3(const Options& o) {
  if (o.dmax < 1) throw UsageError("--dmax must be >= 1");
  Fano3 space;
  try {
    space = parse_fano3(o.space);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Report r{o.space, "fano3", {{"dmax", o.dmax}}, {}, {}};
  const GWTable t = fano3_solve(space, o.dmax);
  for (const auto& [k, v] : t.entries()) r.rows.push_back({key_of(k), v});
  const auto bad = fano3_violations(space, t, o.dmax);
  r.checks.push_back({"all six recursions hold", bad.empty(),
                      bad.empty() ? "every instance through d=" + std::to_string(o.dmax)
                                  : "recursion (" + std::to_string(bad.front().recursion) + ") fails at a=" +
                                        std::to_string(bad.front().a) + " b=" + std::to_string(bad.front().b)});
  r.sort_rows();
  return r;
}

Report cmd_wdvv_count(const Options& o) {
  if (o.m < 1) throw UsageError("--m must be >= 1");
  Report r{"-", "wdvv-count", {{"m", o.m}}, {}, {}};
  for (int m = 1; m <= o.m; ++m) r.rows.push_back({{m}, wdvv_count(m)});
  std::string bad;
  for (int m = 1; m <= o.m; ++m)
    if (wdvv_count(m) != wdvv_count_binomial(m) && bad.empty()) bad = "m=" + std::to_string(m);
  r.checks.push_back({"closed form = binomial form", bad.empty(), bad});
  const int enum_max = std::min(o.m, 12);
  bad.clear();
  for (int m = 1; m <= enum_max; ++m)
    if (Int(static_cast<unsigned long>(wdvv_canonical_equations(m).size())) != wdvv_count(m) && bad.empty())
      bad = "m=" + std::to_string(m);
  r.checks.push_back({"symmetry classes enumerated", bad.empty(),
                      bad.empty() ? "m <= " + std::to_string(enum_max) : "count differs at " + bad});
  return r;
}

GWTable read_seeds(const ModelPtr& model, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open seeds file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const Report seeds = report_from_json(ss.str());
  GWTable t(model, 0);
  const auto p = static_cast<std::size_t>(model->divisor_count());
  for (const auto& row : seeds.rows) {
    if (row.key.size() != static_cast<std::size_t>(model->m()))
      throw UsageError("seed key of length " + std::to_string(row.key.size()) + ", expected " + std::to_string(model->m()));
    std::vector<int> beta(row.key.begin(), row.key.begin() + static_cast<long>(p));
    std::vector<int> n(row.key.begin() + static_cast<long>(p), row.key.end());
    t.set(MultiIndex(beta), MultiIndex(n), row.value);
  }
  return t;
}

Report cmd_solve(const Options& o) {
  const ModelPtr model = resolve_model(o);
  const int c1 = resolve_c1max(o, *model);
  const GWTable seeds = o.seeds.empty() ? default_seeds(model) : read_seeds(model, o.seeds);
  WdvvSolveStats stats;
  const GWTable t = wdvv_solve(model, seeds, c1, &stats);
  Report r{model_label(model), "solve", {{"c1max", c1}, {"divisors", model->divisor_count()}}, {}, {}};
  for (const auto& [k, v] : t.entries()) r.rows.push_back({key_of(k), v});
  r.checks.push_back({"solved from seeds", true,
                      std::to_string(stats.unknowns_solved) + " unknowns, " + std::to_string(stats.equations_checked) +
                          " coefficient equations"});
  r.sort_rows();
  return r;
}

// --- verification suites ----------------------------------------------------

std::optional<Truncation> truncation_for(const Options& o, const FanoModel& model, int c1) {
  if (o.trunc < 0) return std::nullopt;
  Truncation t = default_truncation(model, c1);
  t.max_insertions = o.trunc;
  return t;
}

void suite_wdvv(const Options& o, const ModelPtr& model, int c1, Report& r) {
  const GWTable t = table_for(model, c1);
  const PotentialBundle P = build_potential(t, truncation_for(o, *model, c1));
  const auto eqs = wdvv_canonical_equations(model->m());
  for (const auto& eq : eqs) {
    const GWSeries res = wdvv_residual(P, eq.idx[0], eq.idx[1], eq.idx[2], eq.idx[3]);
    r.checks.push_back({"wdvv " + eq.str(), res.is_zero(),
                        res.is_zero() ? "zero through c1=" + std::to_string(P.bounds().max_c1)
                                      : std::to_string(res.size()) + " nonzero coefficients"});
  }
  r.checks.push_back({"wdvv equation count", Int(static_cast<unsigned long>(eqs.size())) == wdvv_count(model->m()),
                      std::to_string(eqs.size()) + " canonical equations"});
}

std::string first_bad_triple(int n, const std::function<bool(int, int, int)>& ok) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!ok(i, j, k)) return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
  return "";
}

void small_ring_checks(const SmallQuantumRing& ring, Report& r) {
  const int n = ring.rank();
  const auto& model = ring.model();
  auto check = [&](const std::string& name, const std::string& bad) { r.checks.push_back({name, bad.empty(), bad}); };
  check("small: commutative", first_bad_triple(n, [&](int i, int j, int) { return ring.product(i, j) == ring.product(j, i); }));
  check("small: unit T0", first_bad_triple(n, [&](int, int j, int) { return ring.product(0, j) == ring.basis(j); }));
  check("small: associative", first_bad_triple(n, [&](int i, int j, int k) {
          return ring.multiply(ring.product(i, j), ring.basis(k)) == ring.multiply(ring.basis(i), ring.product(j, k));
        }));
  check("small: homogeneous", first_bad_triple(n, [&](int i, int j, int) {
          auto d = ring.degree(ring.product(i, j));
          return d && *d == model.codim(i) + model.codim(j);
        }));
  check("small: q=0 is the cup product", first_bad_triple(n, [&](int i, int j, int) {
          auto cl = ring.classical(ring.product(i, j));
          auto cup = cup_product(model, i, j);
          for (int f = 0; f < n; ++f)
            if (cl[static_cast<std::size_t>(f)] != GradedPoly::constant(ring.q_vars(), cup[static_cast<std::size_t>(f)]))
              return false;
          return true;
        }));
}

void suite_rings(const Options& o, const ModelPtr& model, int c1, Report& r) {
  const int n = model->rank();
  {
    const GWTable t = table_for(model, c1);
    const PotentialBundle P = build_potential(t, truncation_for(o, *model, c1));
    auto check = [&](const std::string& name, const std::string& bad) { r.checks.push_back({name, bad.empty(), bad}); };
    check("big: commutative", first_bad_triple(n, [&](int i, int j, int) { return big_product(P, i, j) == big_product(P, j, i); }));
    check("big: unit T0", first_bad_triple(n, [&](int, int j, int) { return big_product(P, 0, j) == big_basis(P, j); }));
    check("big: associators vanish", first_bad_triple(n, [&](int i, int j, int k) { return is_zero(big_associator(P, i, j, k)); }));
    if (model->name() == "p2") {
      try {
        const BigPresentation pres = presentation_from_big(P);
        GWSeries expect = pres.gamma122 + series_mul(pres.gamma111, pres.gamma112);
        r.checks.push_back({"big: cubic relation for T1", true, "residual zero through c1=" + std::to_string(P.bounds().max_c1)});
        r.checks.push_back({"big: T0-part of T1^3", pres.cube[0] == expect, "Gamma_122 + Gamma_111 Gamma_112"});
      } catch (const InconsistencyError& e) {
        r.checks.push_back({"big: cubic relation for T1", false, e.what()});
      }
    }
  }
  {
    const int need = 2 * model->dimension();
    const GWTable t = table_for(model, std::max(need, c1));
    small_ring_checks(SmallQuantumRing(t), r);
  }
  if (is_projective_space(*model))
    for (auto& c : verify_pr_presentation(model->dimension())) r.checks.push_back(std::move(c));
}

void suite_boundary(const Options& o, const ModelPtr& model, Report& r) {
  if (model->name() != "p2") throw UsageError("the boundary suite runs on p2");
  if (o.dmax < 2) throw UsageError("the boundary suite needs --dmax >= 2");
  const GWTable t = nd_plane(o.dmax);
  for (int d = 2; d <= o.dmax; ++d) {
    const auto c = intersection_counts(d, t);
    r.checks.push_back({"boundary d=" + std::to_string(d) + " lhs = rhs", c.lhs == c.rhs,
                        c.lhs.get_str() + " vs " + c.rhs.get_str()});
    r.checks.push_back({"boundary d=" + std::to_string(d) + " closed sums", c.lhs == c.lhs_formula && c.rhs == c.rhs_formula,
                        c.lhs_formula.get_str() + " / " + c.rhs_formula.get_str()});
  }
}

Report grassmannian_report(const Options& o, const std::string& command) {
  if (o.gr_p < 1 || o.gr_n <= o.gr_p) throw UsageError("--p and --n must satisfy 1 <= p < n");
  Report r{"gr(" + std::to_string(o.gr_p) + "," + std::to_string(o.gr_n) + ")", command,
           {{"gr_p", o.gr_p}, {"gr_n", o.gr_n}}, {}, {}};
  std::vector<Check> checks;
  try {
    checks = verify_grassmannian(o.gr_p, o.gr_n);
  } catch (const InconsistencyError& e) {
    r.checks.push_back({"presentation", false, e.what()});
    return r;
  }
  if (command == "qring") {
    const PresentationIdeal ideal = grassmannian_presentation(o.gr_p, o.gr_n);
    std::map<long, long> betti;
    for (const auto& m : ideal.quotient_basis()) betti[m.weighted(ideal.vars().degrees)] += 1;
    for (const auto& [deg, count] : betti) r.rows.push_back({{deg}, Int(count)});
  }
  r.checks = std::move(checks);
  return r;
}

Report cmd_qring(const Options& o) {
  if (o.model == "gr") return grassmannian_report(o, "qring");
  const ModelPtr model = resolve_model(o);
  const int need = 2 * model->dimension();
  const GWTable t = table_for(model, std::max(need, o.c1max));
  const SmallQuantumRing ring(t);
  Report r{model_label(model), "qring", {{"divisors", model->divisor_count()}}, {}, {}};
  const int n = model->rank();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& el = ring.product(i, j);
      for (int f = 0; f < n; ++f)
        for (const auto& [exps, v] : el[static_cast<std::size_t>(f)].terms()) {
          std::vector<long> key{i, j, f};
          for (int e : exps.values()) key.push_back(e);
          r.rows.push_back({key, v});
        }
    }
  small_ring_checks(ring, r);
  if (is_projective_space(*model))
    for (auto& c : verify_pr_presentation(model->dimension())) r.checks.push_back(std::move(c));
  r.sort_rows();
  return r;
}

Report cmd_verify(const Options& o) {
  if (o.model == "gr") return grassmannian_report(o, "verify");
  const ModelPtr model = resolve_model(o);
  // the small ring needs 3-point invariants up to c1 = 2 dim X
  const int c1 = resolve_c1max(o, *model, 2 * model->dimension());
  Report r{model_label(model), "verify", {{"c1max", c1}}, {}, {}};
  if (o.dmax > 0) r.bounds["dmax"] = o.dmax;
  if (o.trunc >= 0) r.bounds["trunc"] = o.trunc;
  const bool all = o.suite == "all";
  auto guarded = [&](const std::string& suite, auto&& fn) {
    try {
      fn();
    } catch (const TableMiss& e) {
      r.checks.push_back({suite + ": table depth", false, e.what()});
    } catch (const InconsistencyError& e) {
      r.checks.push_back({suite, false, e.what()});
    } catch (const UnreachableError& e) {
      r.checks.push_back({suite, false, e.what()});
    }
  };
  if (all || o.suite == "wdvv") guarded("wdvv", [&] { suite_wdvv(o, model, c1, r); });
  if (all || o.suite == "rings") guarded("rings", [&] { suite_rings(o, model, c1, r); });
  if (o.suite == "boundary" || (all && model->name() == "p2" && o.dmax >= 2))
    guarded("boundary", [&] { suite_boundary(o, model, r); });
  return r;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gromov-Witten invariants and quantum cohomology of homogeneous spaces"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  };
  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--model", o.model, "builtin model: p1, p2, p3, pr, q3, p1xp1 (gr for Grassmannians)");
    sub->add_option("--model-file", o.model_file, "model description (JSON)");
    sub->add_option("--r", o.r, "dimension for --model pr")->check(CLI::PositiveNumber);
  };

  auto* nd = app.add_subcommand("nd", "rational plane curves through 3d-1 points");
  nd->add_option("--dmax", o.dmax, "largest degree")->required()->check(CLI::PositiveNumber);
  add_format(nd);

  auto* fano3 = app.add_subcommand("fano3", "N_{a,b} on P3 or Q3");
  fano3->add_option("--space", o.space, "p3 or q3")->check(CLI::IsMember({"p3", "q3"}));
  fano3->add_option("--dmax", o.dmax, "largest degree")->required()->check(CLI::PositiveNumber);
  add_format(fano3);

  auto* count = app.add_subcommand("wdvv-count", "number of WDVV equation classes");
  count->add_option("--m", o.m, "largest m")->check(CLI::PositiveNumber);
  add_format(count);

  auto* solve = app.add_subcommand("solve", "all invariants up to a c1-degree from seed values");
  add_model(solve);
  solve->add_option("--dmax", o.dmax, "degree bound (times the largest c1 of a generator)")->check(CLI::PositiveNumber);
  solve->add_option("--c1max", o.c1max, "c1-degree bound")->check(CLI::PositiveNumber);
  solve->add_option("--seeds", o.seeds, "seed values (report JSON, key = beta then n)");
  add_format(solve);

  auto* qring = app.add_subcommand("qring", "small quantum ring structure constants");
  add_model(qring);
  qring->add_option("--c1max", o.c1max, "c1-degree bound of the table")->check(CLI::PositiveNumber);
  qring->add_option("--p", o.gr_p, "Gr(p,n)")->check(CLI::PositiveNumber);
  qring->add_option("--n", o.gr_n, "Gr(p,n)")->check(CLI::PositiveNumber);
  add_format(qring);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", o.suite, "wdvv, rings, boundary or all")
      ->check(CLI::IsMember({"wdvv", "rings", "boundary", "all"}));
  add_model(verify);
  verify->add_option("--dmax", o.dmax, "degree bound")->check(CLI::PositiveNumber);
  verify->add_option("--c1max", o.c1max, "c1-degree bound")->check(CLI::PositiveNumber);
  verify->add_option("--trunc", o.trunc, "insertion truncation L")->check(CLI::NonNegativeNumber);
  verify->add_option("--p", o.gr_p, "Gr(p,n)")->check(CLI::PositiveNumber);
  verify->add_option("--n", o.gr_n, "Gr(p,n)")->check(CLI::PositiveNumber);
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  Report report;
  try {
    if (nd->parsed()) report = cmd_nd(o);
    else if (fano3->parsed()) report = cmd_fano3(o);
    else if (count->parsed()) report = cmd_wdvv_count(o);
    else if (solve->parsed()) report = cmd_solve(o);
    else if (qring->parsed()) report = cmd_qring(o);
    else report = cmd_verify(o);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const ModelError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "failed: " << e.what() << "\n";
    return exit_failed;
  }

  if (o.format == "json") out << to_json(report);
  else if (o.format == "csv") out << to_csv(report);
  else out << to_text(report);
  return report.ok() ? exit_ok : exit_failed;
}

}  // namespace qcoh
