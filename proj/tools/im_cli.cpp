// Command-line front end: models + random sets + analyses -> CSV/JSON.
#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "im/confcurve.hpp"
#include "im/engine.hpp"
#include "im/fiducial.hpp"
#include "im/model.hpp"
#include "im/randomset.hpp"
#include "im/validate.hpp"

using json = nlohmann::json;

namespace {

struct Options {
  std::string subcommand;
  std::string model = "normal-location";
  std::vector<double> data;
  std::string randomset = "two-sided";
  std::string gamma_table;  // CSV path of (u, gamma) pairs
  std::string functional;   // two-normal: mu-x | mu-y | ratio
  std::string assertion;
  std::vector<double> window = {-10.0, 10.0};
  int grid_points = 2001;
  std::vector<double> levels;
  std::vector<double> alphas;
  long n_mc = 100000;
  long n_rep = 10000;
  std::uint64_t seed = 0;
  double epsilon = 0.0;
  long n_draws = 10000;
  std::string norm = "l2";
  std::string tie_rule = "leftmost";
  std::string mode = "cc";  // validate: cc | belief
  std::vector<double> theta0;
  std::string out = "";
  std::string config_path;
};

json to_json(const Options& o) {
  json j;
  j["subcommand"] = o.subcommand;
  j["model"] = o.model;
  j["data"] = o.data;
  j["randomset"] = o.randomset;
  j["gamma_table"] = o.gamma_table;
  j["functional"] = o.functional;
  j["assertion"] = o.assertion;
  j["window"] = o.window;
  j["grid_points"] = o.grid_points;
  j["levels"] = o.levels;
  j["alphas"] = o.alphas;
  j["n_mc"] = o.n_mc;
  j["n_rep"] = o.n_rep;
  j["seed"] = o.seed;
  j["epsilon"] = o.epsilon;
  j["n_draws"] = o.n_draws;
  j["norm"] = o.norm;
  j["tie_rule"] = o.tie_rule;
  j["mode"] = o.mode;
  j["theta0"] = o.theta0;
  j["out"] = o.out;
  return j;
}

// The config document overrides any flag it names.
void apply_config(Options& o) {
  if (o.config_path.empty()) return;
  std::ifstream in(o.config_path);
  if (!in) throw CLI::ValidationError("--config", "cannot open " + o.config_path);
  json j = json::parse(in);
  auto get = [&](const char* key, auto& slot) {
    if (j.contains(key)) slot = j[key].template get<std::decay_t<decltype(slot)>>();
  };
  get("model", o.model);
  get("data", o.data);
  get("randomset", o.randomset);
  get("gamma_table", o.gamma_table);
  get("functional", o.functional);
  get("assertion", o.assertion);
  get("window", o.window);
  get("grid_points", o.grid_points);
  get("levels", o.levels);
  get("alphas", o.alphas);
  get("n_mc", o.n_mc);
  get("n_rep", o.n_rep);
  get("seed", o.seed);
  get("epsilon", o.epsilon);
  get("n_draws", o.n_draws);
  get("norm", o.norm);
  get("tie_rule", o.tie_rule);
  get("mode", o.mode);
  get("theta0", o.theta0);
  get("out", o.out);
}

im::NestedFamily resolve_randomset(const Options& o, const im::Model& model) {
  if (!o.gamma_table.empty()) {
    std::ifstream in(o.gamma_table);
    if (!in) throw std::runtime_error("cannot open gamma table " + o.gamma_table);
    std::vector<std::pair<double, double>> table;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::stringstream ss(line);
      std::string a, b;
      if (std::getline(ss, a, ',') && std::getline(ss, b)) {
        table.emplace_back(std::stod(a), std::stod(b));
      }
    }
    return im::randomset_from_table(table);
  }
  if (model.is_discrete())
    return im::builtin_discrete_randomset(o.randomset, model.aux.support_size());
  return im::builtin_randomset(o.randomset);
}

std::string fmt9(double v) {
  std::ostringstream os;
  os << std::setprecision(9) << v;
  return os.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::vector<double> default_alphas() {
  std::vector<double> a;
  for (int i = 1; i <= 19; ++i) a.push_back(0.05 * i);
  return a;
}

json coverage_to_json(const im::CoverageReport& rep) {
  json rows = json::array();
  for (const auto& r : rep.rows)
    rows.push_back({{"alpha", r.alpha},
                    {"empirical", r.empirical},
                    {"se", r.se},
                    {"pass", r.pass},
                    {"rule", r.rule}});
  return {{"n_rep", rep.n_rep}, {"rows", rows}, {"all_pass", rep.all_pass()}};
}

int run_cc(const Options& o) {
  im::Model model = im::builtin_model(o.model);
  std::vector<double> grid = im::linspace(o.window[0], o.window[1], o.grid_points);
  im::ConfidenceCurve cc;
  if (model.param_dim == 2) {
    if (o.data.size() != 2) throw std::runtime_error("two-normal needs --data x y");
    if (o.functional == "ratio") {
      cc = im::fieller_cc(o.data[0], o.data[1], grid);
    } else if (o.functional == "mu-x" || o.functional == "mu-y") {
      im::Model loc = im::make_normal_location();
      im::Vec y = {o.functional == "mu-x" ? o.data[0] : o.data[1]};
      cc = im::cc_from_im(loc, y, im::builtin_randomset(o.randomset), grid, true);
    } else {
      throw std::runtime_error("two-normal needs --functional mu-x|mu-y|ratio");
    }
  } else {
    if (o.data.empty()) throw std::runtime_error("cc: --data required");
    im::NestedFamily fam = resolve_randomset(o, model);
    cc = im::cc_from_im(model, {o.data[0]}, fam, grid, fam.nested());
  }
  std::string prefix = o.out.empty() ? "cc" : o.out;
  std::ostringstream csv;
  csv << "theta,cc\n";
  for (std::size_t i = 0; i < cc.grid.size(); ++i)
    csv << fmt9(cc.grid[i]) << "," << fmt9(cc.values[i]) << "\n";
  write_text(prefix + ".csv", csv.str());
  json side;
  side["kind"] = cc.kind == im::CurveKind::Exact ? "exact" : "conservative";
  side["provenance"] = cc.provenance;
  json sets = json::array();
  for (double a : o.levels) {
    im::ParamSet s = im::confidence_set(cc, a);
    sets.push_back({{"alpha", a}, {"set", s.to_string()}});
  }
  side["confidence_sets"] = sets;
  side["config"] = to_json(o);
  write_text(prefix + ".json", side.dump(2) + "\n");
  std::cout << "cc: wrote " << prefix << ".csv and " << prefix << ".json ("
            << cc.grid.size() << " grid points)\n";
  return 0;
}

int run_belief(const Options& o) {
  im::Model model = im::builtin_model(o.model);
  if (o.data.empty()) throw std::runtime_error("belief: --data required");
  if (o.assertion.empty()) throw std::runtime_error("belief: --assertion required");
  im::NestedFamily fam = resolve_randomset(o, model);
  im::ParamSet a = im::parse_param_set(o.assertion);
  im::Rng rng(o.seed);
  im::BeliefReport rep = im::belief(model, {o.data[0]}, fam, a, o.n_mc, rng);
  json j;
  j["belief"] = rep.belief;
  j["plausibility"] = rep.plausibility;
  j["se_belief"] = rep.se_belief;
  j["se_plausibility"] = rep.se_plausibility;
  j["n_empty"] = rep.n_empty;
  j["method"] = rep.method;
  j["config"] = to_json(o);
  write_text(o.out, j.dump(2) + "\n");
  if (!o.out.empty())
    std::cout << "belief=" << rep.belief << " plausibility=" << rep.plausibility
              << " (" << rep.method << ")\n";
  return 0;
}

int run_fiducial(const Options& o) {
  im::Model model = im::builtin_model(o.model);
  if (o.data.empty()) throw std::runtime_error("fiducial: --data required");
  im::Rng rng(o.seed);
  im::FiducialSample sample =
      im::sample_gfd(model, {o.data[0]}, o.n_draws, o.epsilon, rng);
  std::ostringstream csv;
  csv << "# seed=" << o.seed << " epsilon=" << sample.epsilon
      << " acceptance_rate=" << fmt9(sample.acceptance_rate)
      << " tie_rule=" << sample.tie_rule << "\n";
  csv << "theta\n";
  for (double t : sample.draws) csv << fmt9(t) << "\n";
  write_text(o.out, csv.str());
  if (!o.out.empty())
    std::cout << "fiducial: " << sample.draws.size() << " draws, acceptance "
              << sample.acceptance_rate << "\n";
  return 0;
}

int run_validate(const Options& o) {
  im::Model model = im::builtin_model(o.model);
  if (o.theta0.empty()) throw std::runtime_error("validate: --theta0 required");
  std::vector<double> alphas = o.alphas.empty() ? default_alphas() : o.alphas;
  im::NestedFamily fam = resolve_randomset(o, model);
  im::CoverageReport rep;
  if (o.mode == "cc") {
    std::vector<double> grid = im::linspace(o.window[0], o.window[1], o.grid_points);
    auto builder = [&](const im::Vec& y) {
      return im::cc_from_im(model, y, fam, grid, fam.nested());
    };
    rep = im::cc_coverage_sim(model, o.theta0, builder, o.n_rep, alphas, o.seed,
                              fam.nested() ? im::CoverageRule::Exact
                                           : im::CoverageRule::Conservative);
  } else if (o.mode == "belief") {
    if (o.assertion.empty())
      throw std::runtime_error("validate --mode belief: --assertion required");
    im::ParamSet a = im::parse_param_set(o.assertion);
    rep = im::belief_validity_sim(model, o.theta0, fam, a, o.n_rep, alphas, o.seed);
  } else {
    throw std::runtime_error("validate: --mode must be cc or belief");
  }
  json j = coverage_to_json(rep);
  j["mode"] = o.mode;
  j["config"] = to_json(o);
  write_text(o.out, j.dump(2) + "\n");
  std::cout << "validate(" << o.mode << "): " << (rep.all_pass() ? "PASS" : "FAIL")
            << " over " << rep.rows.size() << " levels\n";
  return rep.all_pass() ? 0 : 1;
}

int run_oracle(const Options& o) {
  im::Model model = im::builtin_model(o.model);
  if (!model.is_discrete())
    throw std::runtime_error("oracle: needs a discrete-shift model");
  if (o.data.empty()) throw std::runtime_error("oracle: --data required");
  const int n = model.aux.support_size();
  double y = o.data[0];
  std::vector<double> window;
  for (int i = 0; i < n; ++i) window.push_back(y - (n - 1) + i);
  std::vector<im::NestedFamily> fams;
  for (const char* name : {"left", "right", "two-sided", "offset"})
    fams.push_back(im::builtin_discrete_randomset(name, n));
  json tables = json::array();
  for (const auto& fam : fams) {
    im::OracleTable t = im::build_oracle(model, {y}, fam, window, o.seed);
    json rows = json::array();
    for (const auto& r : t.rows)
      rows.push_back({{"assertion", r.assertion},
                      {"bel", r.bel},
                      {"fid", r.fid},
                      {"pl", r.pl}});
    tables.push_back({{"family", t.family_name},
                      {"exhaustive", t.exhaustive},
                      {"rows", rows}});
  }
  im::TheoremReport rep = im::check_theorems(model, {y}, fams, window, o.seed);
  json j;
  j["model"] = model.name;
  j["y"] = y;
  j["window"] = window;
  j["tables"] = tables;
  j["rows_checked"] = rep.rows_checked;
  j["violations"] = rep.violations;
  j["config"] = to_json(o);
  write_text(o.out, j.dump(2) + "\n");
  std::cout << "oracle: " << rep.rows_checked << " rows, " << rep.violations.size()
            << " violations\n";
  return rep.ok() ? 0 : 1;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--model", o.model, "built-in model name");
  sub->add_option("--data", o.data, "observed data");
  sub->add_option("--randomset", o.randomset, "predictive random set family");
  sub->add_option("--gamma-table", o.gamma_table, "CSV of (u,gamma) pairs");
  sub->add_option("--out", o.out, "output path or prefix");
  sub->add_option("--config", o.config_path, "JSON config overriding flags");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"inferential models, fiducial sampling and confidence curves"};
  app.require_subcommand(1);
  Options o;

  CLI::App* cc = app.add_subcommand("cc", "emit a confidence curve");
  add_common(cc, o);
  cc->add_option("--functional", o.functional, "two-normal functional: mu-x|mu-y|ratio");
  cc->add_option("--window", o.window, "parameter window lo hi")->expected(2);
  cc->add_option("--grid-points", o.grid_points, "evaluation grid size");
  cc->add_option("--levels", o.levels, "confidence levels to extract");

  CLI::App* bel = app.add_subcommand("belief", "belief/plausibility of an assertion");
  add_common(bel, o);
  bel->add_option("--assertion", o.assertion, "interval-union or {finite} assertion");
  bel->add_option("--n-mc", o.n_mc, "Monte Carlo draws");
  bel->add_option("--seed", o.seed, "rng seed")->required();

  CLI::App* fid = app.add_subcommand("fiducial", "sample the fiducial distribution");
  add_common(fid, o);
  fid->add_option("--n", o.n_draws, "number of draws");
  fid->add_option("--epsilon", o.epsilon, "truncation radius");
  fid->add_option("--norm", o.norm, "residual norm: l2|linf");
  fid->add_option("--tie-rule", o.tie_rule, "minimizer tie rule");
  fid->add_option("--seed", o.seed, "rng seed")->required();

  CLI::App* val = app.add_subcommand("validate", "coverage / validity simulation");
  add_common(val, o);
  val->add_option("--mode", o.mode, "cc | belief");
  val->add_option("--theta0", o.theta0, "true parameter");
  val->add_option("--assertion", o.assertion, "false assertion (belief mode)");
  val->add_option("--window", o.window, "parameter window lo hi")->expected(2);
  val->add_option("--grid-points", o.grid_points, "grid size for curve building");
  val->add_option("--n-rep", o.n_rep, "replications");
  val->add_option("--alphas", o.alphas, "levels to test");
  val->add_option("--seed", o.seed, "rng seed")->required();

  CLI::App* ora = app.add_subcommand("oracle", "exact enumeration oracle + theorem checks");
  add_common(ora, o);
  ora->add_option("--seed", o.seed, "rng seed for randomized assertion sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    apply_config(o);
    if (cc->parsed()) {
      o.subcommand = "cc";
      return run_cc(o);
    }
    if (bel->parsed()) {
      o.subcommand = "belief";
      return run_belief(o);
    }
    if (fid->parsed()) {
      o.subcommand = "fiducial";
      return run_fiducial(o);
    }
    if (val->parsed()) {
      o.subcommand = "validate";
      return run_validate(o);
    }
    if (ora->parsed()) {
      o.subcommand = "oracle";
      return run_oracle(o);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
