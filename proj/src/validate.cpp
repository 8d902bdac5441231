#include "im/validate.hpp"

#include <cmath>
#include <stdexcept>

#include "im/fiducial.hpp"

namespace im {

namespace {

double binom_se(double p, long n) {
  return std::sqrt(std::max(p * (1.0 - p), 1e-12) / n);
}

}  // namespace

CoverageReport cc_coverage_sim(const Model& model, const Vec& theta0,
                               const std::function<ConfidenceCurve(const Vec&)>& builder,
                               long n_rep, const std::vector<double>& alphas,
                               std::uint64_t seed, CoverageRule rule) {
  if (n_rep < 1000)
    throw std::invalid_argument("cc_coverage_sim: n_rep must be >= 10^3");
  Rng root(seed);
  std::vector<double> cc_at_truth(n_rep);
  for (long i = 0; i < n_rep; ++i) {
    Rng rng = root.substream(i);
    Vec y = simulate_data(model, theta0, rng);
    ConfidenceCurve cc = builder(y);
    cc_at_truth[i] = cc.evaluate(theta0[0]);
  }
  CoverageReport rep;
  rep.n_rep = n_rep;
  for (double a : alphas) {
    CoverageRow row;
    row.alpha = a;
    long hits = 0;
    for (double c : cc_at_truth)
      if (c < a) ++hits;
    row.empirical = static_cast<double>(hits) / n_rep;
    row.se = binom_se(row.empirical, n_rep);
    if (rule == CoverageRule::Exact) {
      row.rule = "exact-match";
      row.pass = std::abs(row.empirical - a) <= 3.0 * row.se;
    } else {
      row.rule = "conservative-bound";
      row.pass = row.empirical >= a - 3.0 * row.se;
    }
    rep.rows.push_back(row);
  }
  return rep;
}

CoverageReport belief_validity_sim(const Model& model, const Vec& theta0,
                                   const NestedFamily& fam, const ParamSet& A,
                                   long n_rep, const std::vector<double>& alphas,
                                   std::uint64_t seed) {
  if (A.contains(theta0[0]))
    throw std::invalid_argument("belief_validity_sim: theta0 must lie outside A");
  CoverageReport rep;
  std::vector<std::pair<double, double>> bels;  // (weight, bel value)
  if (model.is_discrete()) {
    // exact: enumerate the auxiliary support instead of simulating
    const int n = model.aux.support_size();
    for (double u : model.aux.support()) {
      Vec y = model.dge({u}, theta0);
      Rng rng(seed);
      bels.emplace_back(1.0 / n, belief(model, y, fam, A, 10000, rng).belief);
    }
    rep.n_rep = n;
  } else {
    if (n_rep < 1000)
      throw std::invalid_argument("belief_validity_sim: n_rep must be >= 10^3");
    Rng root(seed);
    for (long i = 0; i < n_rep; ++i) {
      Rng rng = root.substream(i);
      Vec y = simulate_data(model, theta0, rng);
      bels.emplace_back(1.0 / n_rep, belief(model, y, fam, A, 10000, rng).belief);
    }
    rep.n_rep = n_rep;
  }
  for (double a : alphas) {
    CoverageRow row;
    row.alpha = a;
    double p = 0.0;
    for (const auto& [w, b] : bels)
      if (b >= 1.0 - a) p += w;
    row.empirical = p;
    row.se = model.is_discrete() ? 0.0 : binom_se(p, rep.n_rep);
    row.rule = "validity-bound";
    row.pass = row.empirical <= a + 3.0 * row.se;
    rep.rows.push_back(row);
  }
  return rep;
}

namespace {

ParamSet subset_from_mask(const std::vector<double>& window, std::uint64_t mask) {
  std::vector<double> pts;
  for (std::size_t i = 0; i < window.size(); ++i)
    if (mask & (1ull << i)) pts.push_back(window[i]);
  return ParamSet::finite(std::move(pts));
}

OracleRow oracle_row(const Model& model, const Vec& y, const NestedFamily& fam,
                     const std::vector<double>& window, std::uint64_t mask) {
  ParamSet a = subset_from_mask(window, mask);
  OracleRow row;
  row.assertion = a.as_finite();
  Rng dummy(0);
  BeliefReport b = belief(model, y, fam, a, 0, dummy, BeliefMethod::Exact);
  row.bel = b.belief;
  row.pl = b.plausibility;
  row.fid = fid_probability(model, y, a, 0, 0.0, dummy).value;
  return row;
}

}  // namespace

OracleTable build_oracle(const Model& model, const Vec& y, const NestedFamily& fam,
                         const std::vector<double>& window, std::uint64_t seed) {
  if (!model.is_discrete())
    throw std::logic_error("build_oracle: discrete models only");
  OracleTable table;
  table.model_name = model.name;
  table.family_name = fam.name();
  table.y = y;
  table.window = window;
  const std::size_t k = window.size();
  if (k <= 12) {
    table.exhaustive = true;
    for (std::uint64_t mask = 0; mask < (1ull << k); ++mask)
      table.rows.push_back(oracle_row(model, y, fam, window, mask));
  } else {
    table.exhaustive = false;
    Rng rng(seed);
    for (int i = 0; i < 1000; ++i) {
      std::uint64_t mask = 0;
      for (std::size_t j = 0; j < k; ++j)
        if (rng.uniform01() < 0.5) mask |= 1ull << j;
      table.rows.push_back(oracle_row(model, y, fam, window, mask));
    }
  }
  return table;
}

TheoremReport check_theorems(const Model& model, const Vec& y,
                             const std::vector<NestedFamily>& fams,
                             const std::vector<double>& window, std::uint64_t seed) {
  TheoremReport rep;
  Rng dummy(0);
  for (const NestedFamily& fam : fams) {
    OracleTable table = build_oracle(model, y, fam, window, seed);

    // does the family always intersect itself? (plausibility gap hypothesis)
    bool intersecting = true;
    const auto& reals = fam.realizations();
    for (std::size_t i = 0; i < reals.size() && intersecting; ++i)
      for (std::size_t j = i; j < reals.size(); ++j)
        if (!reals[i].second.is_empty() && !reals[j].second.is_empty() &&
            !reals[i].second.intersects(reals[j].second)) {
          intersecting = false;
          break;
        }

    NestedFamily nesting = NestedFamily::discrete_from_gamma(
        fam.gamma_table(), fam.name() + "-nested");
    bool nesting_never_empty = true;
    for (const auto& [p, s] : nesting.realizations())
      if (p > 0.0 && model.map_aux_set(y, s).is_empty()) nesting_never_empty = false;

    for (const OracleRow& row : table.rows) {
      ++rep.rows_checked;
      ParamSet a = ParamSet::finite(row.assertion);
      if (row.bel > row.fid + 1e-12 || row.fid > row.pl + 1e-12)
        rep.violations.push_back("sandwich violated: " + fam.name() + " A=" +
                                 a.to_string());
      if (nesting_never_empty) {
        double bel_nested = belief(model, y, nesting, a, 0, dummy,
                                   BeliefMethod::Exact).belief;
        if (row.bel > bel_nested + 1e-12)
          rep.violations.push_back("nested dominance violated: " + fam.name() +
                                   " A=" + a.to_string());
      }
      if (intersecting && row.bel > 1e-12 && row.pl < 1.0 - 1e-12)
        rep.violations.push_back("plausibility gap violated: " + fam.name() + " A=" +
                                 a.to_string());
      NestedFamily matching = matching_randomset(model, y, a);
      double bel_match = belief(model, y, matching, a, 0, dummy,
                                BeliefMethod::Exact).belief;
      if (std::abs(bel_match - row.fid) > 1e-12)
        rep.violations.push_back("attainment violated: " + fam.name() + " A=" +
                                 a.to_string());
    }
  }
  return rep;
}

}  // namespace im
