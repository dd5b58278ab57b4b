#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "bbgroup/bray.hpp"
#include "bbgroup/cartan.hpp"
#include "bbgroup/error.hpp"
#include "bbgroup/group_spec.hpp"
#include "bbgroup/groundtruth.hpp"
#include "bbgroup/oracle.hpp"
#include "bbgroup/powertools.hpp"
#include "bbgroup/sampler.hpp"
#include "bbgroup/tricks.hpp"

namespace bbgroup::cli {

namespace {

using json = nlohmann::ordered_json;

// A flag value that does not parse; reported as a usage error.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string output;
  std::uint64_t seed = 0;
  std::size_t samples = 20;
  std::size_t cell_size = 10;
  std::uint64_t burn_in = 50;
  std::size_t cap = kDefaultCap;
  double tol = kOrthogonalityTolerance;
  std::string element;
  std::string involution;
  std::string i, j, t, s, r;
  std::string matrix;
  bool path = false;
  std::size_t steps = 16;
  std::optional<std::uint32_t> n_hint;
};

struct Session {
  std::shared_ptr<GroupOracle> oracle;
  ExponentData exp;
};

Session open_group(const Options& o) {
  Session s;
  s.oracle = build_backend(load_group_spec(o.input), o.cap);
  s.exp = split_exponent(*s.oracle);
  s.oracle->reset_mult_count();
  return s;
}

std::size_t table_cap(const Options& o) { return std::min(o.cap, FiniteGroup::kTableCap); }

Element parse_flag(const GroupOracle& g, const std::string& text, const char* flag) {
  try {
    return g.parse(text);
  } catch (const Error& e) {
    throw UsageError(std::string("--") + flag + ": " + e.what());
  }
}

json header(const char* command, const Session& s) {
  json j;
  j["command"] = command;
  j["backend"] = s.oracle->backend().kind();
  j["exponent"] = s.exp.E;
  return j;
}

json element_list(const GroupOracle& g, std::span<const Element> es) {
  json a = json::array();
  for (const auto& e : es) a.push_back(g.format(e));
  return a;
}

json matrix_json(const RealMatrix& m) { return m.rows(); }

RealMatrix parse_matrix(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("--matrix: not JSON: ") + e.what());
  }
  if (!doc.is_array()) throw UsageError("--matrix: expected an array of rows");
  std::vector<std::vector<double>> rows;
  for (const auto& row : doc) {
    if (!row.is_array()) throw UsageError("--matrix: expected an array of rows");
    auto& out = rows.emplace_back();
    for (const auto& v : row) {
      if (v.is_number()) {
        out.push_back(v.get<double>());
      } else if (v.is_string()) {
        const auto str = v.get<std::string>();
        char* end = nullptr;
        errno = 0;
        const double d = std::strtod(str.c_str(), &end);
        if (str.empty() || *end != '\0' || errno == ERANGE)
          throw UsageError("--matrix: bad decimal '" + str + "'");
        out.push_back(d);
      } else {
        throw UsageError("--matrix: entries must be numbers or decimal strings");
      }
    }
  }
  try {
    return RealMatrix::from_rows(rows);
  } catch (const Error& e) {
    throw UsageError(std::string("--matrix: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

json run_order(const Options& o) {
  auto s = open_group(o);
  json j = header("order", s);
  j["t"] = s.exp.t;
  j["r"] = s.exp.r;
  j["group_order"] = enumerate(*s.oracle, o.cap).size();
  if (!o.element.empty()) {
    const auto x = parse_flag(*s.oracle, o.element, "element");
    j["element"] = s.oracle->format(x);
    j["element_order"] = element_order(*s.oracle, x);
  }
  j["mult_count"] = s.oracle->mult_count();
  return j;
}

json run_involution(const Options& o) {
  auto s = open_group(o);
  json j = header("involution", s);
  if (!o.element.empty()) {
    const auto x = parse_flag(*s.oracle, o.element, "element");
    j["element"] = s.oracle->format(x);
    j["involution"] = s.oracle->format(extract_involution(*s.oracle, x, s.exp));
    j["mult_count"] = s.oracle->mult_count();
    return j;
  }
  // random search for an element of even order
  auto cell = seed_cell(*s.oracle, o.cell_size, o.burn_in, o.seed);
  for (std::size_t k = 1; k <= o.samples; ++k) {
    const auto x = cell.draw();
    if (has_odd_order(*s.oracle, x, s.exp)) continue;
    j["element"] = s.oracle->format(x);
    j["involution"] = s.oracle->format(extract_involution(*s.oracle, x, s.exp));
    j["draws"] = k;
    j["mult_count"] = s.oracle->mult_count();
    return j;
  }
  throw Error(ErrorKind::Precondition,
              "no element of even order in " + std::to_string(o.samples) + " draws");
}

json run_centralizer(const Options& o) {
  auto s = open_group(o);
  const auto i = parse_flag(*s.oracle, o.involution, "involution");
  auto cell = seed_cell(*s.oracle, o.cell_size, o.burn_in, o.seed);
  const auto samples = centralizer_sample(i, cell, o.samples, s.exp);
  const auto sampling = s.oracle->mult_count();

  FiniteGroup group(*s.oracle, table_cap(o));
  const auto closure = centralizer_closure_check(group, i, samples);

  json j = header("centralizer", s);
  j["involution"] = s.oracle->format(i);
  j["seed"] = o.seed;
  j["samples"] = element_list(*s.oracle, samples);
  j["closure"] = {{"generated_order", closure.generated_order},
                  {"true_order", closure.true_order},
                  {"equal", closure.equal}};
  j["sampling_mult_count"] = sampling;
  j["mult_count"] = s.oracle->mult_count();
  return j;
}

json run_zeta_audit(const Options& o) {
  auto s = open_group(o);
  const auto i = parse_flag(*s.oracle, o.involution, "involution");
  FiniteGroup group(*s.oracle, table_cap(o));
  const auto rep = zeta_distribution_audit(group, i, s.exp);

  auto counts = [&](const std::map<FiniteGroup::Index, std::size_t>& m) {
    json a = json::array();
    for (const auto& [e, n] : m)
      a.push_back({{"element", s.oracle->format(group.element(e))}, {"count", n}});
    return a;
  };
  json j = header("zeta-audit", s);
  j["involution"] = s.oracle->format(i);
  j["group_order"] = rep.group_order;
  j["centralizer_order"] = rep.centralizer_order;
  j["odd_domain_size"] = rep.odd_domain_size;
  j["even_domain_size"] = rep.even_domain_size;
  j["odd_counts"] = counts(rep.odd_counts);
  j["even_counts"] = counts(rep.even_counts);
  j["centralizer_involution_classes"] = rep.centralizer_involution_classes.size();
  j["odd_constant"] = rep.odd_constant;
  j["even_class_constant"] = rep.even_class_constant;
  j["domains_closed"] = rep.domains_closed;
  j["membership"] = rep.membership;
  j["mult_count"] = s.oracle->mult_count();
  return j;
}

json run_tricks(const Options& o) {
  const bool pair = !o.i.empty() || !o.j.empty();
  const bool triple = !o.t.empty() || !o.s.empty() || !o.r.empty();
  if (pair == triple) throw UsageError("tricks: give either --i/--j or --t/--s [--r]");
  if (pair && (o.i.empty() || o.j.empty())) throw UsageError("tricks: --i and --j are both required");
  if (triple && (o.t.empty() || o.s.empty()))
    throw UsageError("tricks: --t and --s are both required");

  auto s = open_group(o);
  const GroupOracle& g = *s.oracle;
  json j = header("tricks", s);
  if (pair) {
    const auto i = parse_flag(g, o.i, "i");
    const auto jj = parse_flag(g, o.j, "j");
    const auto y = conjugate_by_sqrt(g, i, jj, s.exp);
    j["mode"] = "conjugate_by_sqrt";
    j["i"] = g.format(i);
    j["j"] = g.format(jj);
    j["y"] = g.format(y);
  } else {
    const auto t = parse_flag(g, o.t, "t");
    const auto sv = parse_flag(g, o.s, "s");
    std::optional<Element> r;
    bool scanned = false;
    if (!o.r.empty()) {
      r = parse_flag(g, o.r, "r");
    } else {
      const auto all = enumerate(g, o.cap);
      std::vector<Element> invs;
      for (const auto& x : all.elements())
        if (!g.is_identity(x) && g.is_identity(g.mul(x, x))) invs.push_back(x);
      const std::vector<Element> exclude{t, sv};
      r = find_double_conjugation_pivot(g, t, sv, invs, s.exp, exclude);
      scanned = true;
      if (!r) throw Error(ErrorKind::Precondition, "no involution r with o(tr), o(rs) odd");
    }
    const auto b = double_conjugation(g, t, *r, sv, s.exp);
    j["mode"] = "double_conjugation";
    j["t"] = g.format(t);
    j["s"] = g.format(sv);
    j["r"] = g.format(*r);
    j["pivot_scanned"] = scanned;
    j["b"] = g.format(b);
  }
  j["mult_count"] = g.mult_count();
  return j;
}

json run_burnside(const Options& o) {
  auto s = open_group(o);
  FiniteGroup group(*s.oracle, table_cap(o));
  const auto rep = burnside_audit(group, o.n_hint);
  json j = header("burnside", s);
  j["hypothesis_holds"] = rep.hypothesis_holds;
  j["branch"] = to_string(rep.branch);
  j["group_order"] = rep.group_order;
  j["involution_count"] = rep.involution_count;
  j["involution_class_count"] = rep.involution_class_count;
  j["centralizer_elementary_abelian"] = rep.centralizer_elementary_abelian;
  j["sylow_order"] = rep.sylow_order;
  j["sylow_count"] = rep.sylow_count;
  j["n"] = rep.n;
  j["n_hint"] = rep.n_hint ? json(*rep.n_hint) : json(nullptr);
  j["n_hint_mismatch"] = rep.n_hint_mismatch;
  j["sylow_normal"] = rep.sylow_normal;
  j["sylow_TI"] = rep.sylow_TI;
  j["fusion_controlled"] = rep.fusion_controlled;
  j["normalizer_order"] = rep.normalizer_order;
  j["mu"] = rep.mu;
  j["normalizer_order_holds"] = rep.normalizer_order_holds;
  j["order_formula_holds"] = rep.order_formula_holds;
  j["coset_count"] = rep.coset_count;
  j["three_transitive"] = rep.three_transitive ? json(*rep.three_transitive) : json(nullptr);
  j["all_checks_pass"] = rep.all_checks_pass;
  j["mult_count"] = s.oracle->mult_count();
  return j;
}

json run_polar(const Options& o) {
  const auto x = parse_matrix(o.matrix);
  const auto pd = polar_decompose(x, o.tol);
  json j;
  j["command"] = "polar";
  j["dim"] = x.dim();
  j["z"] = matrix_json(pd.z);
  j["p"] = matrix_json(pd.p);
  j["orthogonality_residual"] = pd.orthogonality_residual;
  j["reconstruction_residual"] = pd.reconstruction_residual;
  j["cartan_zeta_distance"] = (cartan_zeta(x, o.tol) - pd.z).frobenius();
  if (o.path) {
    // a path from I to the orthogonal factor; needs det(x) > 0
    json path = json::array();
    for (const auto& m : connectedness_path(pd.z, o.steps, o.tol)) path.push_back(matrix_json(m));
    j["path"] = std::move(path);
  }
  j["mult_count"] = 0;
  return j;
}

json run_enumerate(const Options& o) {
  auto s = open_group(o);
  const auto all = enumerate(*s.oracle, o.cap);
  json j = header("enumerate", s);
  j["group_order"] = all.size();
  j["elements"] = element_list(*s.oracle, all.elements());
  j["mult_count"] = s.oracle->mult_count();
  return j;
}

void error_object(std::ostream& err, const std::string& kind, const std::string& message) {
  err << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Black-box group algorithms: centralizers of involutions and related tools",
               "bbgroup"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  auto add_group = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "Group specification file (JSON)")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--cap", o.cap, "Enumeration cap")->check(CLI::PositiveNumber);
    sub->add_option("--output", o.output, "Write the report to this file");
  };
  auto add_sampler = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Sampler seed");
    sub->add_option("--cell-size", o.cell_size, "Product replacement cell size");
    sub->add_option("--burn-in", o.burn_in, "Product replacement burn-in steps");
    sub->add_option("--samples", o.samples, "Number of draws");
  };

  auto* order = app.add_subcommand("order", "Group order, exponent split, element order");
  add_group(order);
  order->add_option("--element", o.element, "Element in generator notation");

  auto* involution = app.add_subcommand("involution", "Involution from an even-order element");
  add_group(involution);
  add_sampler(involution);
  involution->add_option("--element", o.element, "Element (otherwise drawn at random)");

  auto* centralizer = app.add_subcommand("centralizer", "Sample C(i) through zeta");
  add_group(centralizer);
  add_sampler(centralizer);
  centralizer->add_option("--involution", o.involution, "Involution i")->required();

  auto* audit = app.add_subcommand("zeta-audit", "Exhaustive zeta distribution audit");
  add_group(audit);
  audit->add_option("--involution", o.involution, "Involution i")->required();

  auto* tricks = app.add_subcommand("tricks", "Conjugation tricks");
  add_group(tricks);
  tricks->add_option("--i", o.i, "conjugate_by_sqrt: first involution");
  tricks->add_option("--j", o.j, "conjugate_by_sqrt: second involution");
  tricks->add_option("--t", o.t, "double_conjugation: source involution");
  tricks->add_option("--s", o.s, "double_conjugation: target involution");
  tricks->add_option("--r", o.r, "double_conjugation: pivot (scanned if omitted)");

  auto* burnside = app.add_subcommand("burnside", "Structure audit of an involution-centralizer group");
  add_group(burnside);
  burnside->add_option("--n-hint", o.n_hint, "Expected log2 of the Sylow 2-subgroup order");

  auto* polar = app.add_subcommand("polar", "Polar decomposition of a real matrix");
  polar->add_option("--matrix", o.matrix, "JSON array of rows (numbers or decimal strings)")
      ->required();
  polar->add_option("--tol", o.tol, "Orthogonality tolerance")->check(CLI::PositiveNumber);
  polar->add_flag("--path", o.path, "Also emit a path from I to the orthogonal factor");
  polar->add_option("--steps", o.steps, "Path steps")->check(CLI::PositiveNumber);
  polar->add_option("--output", o.output, "Write the report to this file");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List all elements");
  add_group(enumerate_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    json report;
    if (*order) report = run_order(o);
    else if (*involution) report = run_involution(o);
    else if (*centralizer) report = run_centralizer(o);
    else if (*audit) report = run_zeta_audit(o);
    else if (*tricks) report = run_tricks(o);
    else if (*burnside) report = run_burnside(o);
    else if (*polar) report = run_polar(o);
    else report = run_enumerate(o);

    const std::string text = report.dump(2) + "\n";
    if (o.output.empty()) {
      out << text;
    } else {
      std::ofstream f(o.output, std::ios::binary);
      if (!(f << text)) {
        error_object(err, "io", "cannot write " + o.output);
        return 1;
      }
    }
    return 0;
  } catch (const UsageError& e) {
    err << e.what() << '\n' << "Run with --help for more information.\n";
    return 2;
  } catch (const Error& e) {
    error_object(err, to_string(e.kind()), e.what());
    return 1;
  } catch (const std::exception& e) {
    error_object(err, "internal", e.what());
    return 1;
  }
}

}  // namespace bbgroup::cli
