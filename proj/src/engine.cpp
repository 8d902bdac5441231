#include "im/engine.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace im {

namespace {

bool whole_line_window(const Model& model) {
  return model.param_range == IntervalUnion::whole_line();
}

bool exact_path_available(const Model& model, const NestedFamily& fam) {
  if (model.is_discrete()) return true;
  if (!fam.nested()) return false;
  if (model.aux_set_mapper) return true;
  return model.theta_of_u && whole_line_window(model);
}

BeliefReport belief_exact_discrete(const Model& model, const Vec& y,
                                   const NestedFamily& fam, const ParamSet& A) {
  double p_sub = 0.0, p_int = 0.0, p_empty = 0.0;
  long n_empty = 0;
  for (const auto& [p, s] : fam.realizations()) {
    ParamSet theta = model.map_aux_set(y, s);
    if (theta.is_empty()) {
      p_empty += p;
      ++n_empty;
      continue;
    }
    if (theta.subset_of(A)) p_sub += p;
    if (theta.intersects(A)) p_int += p;
  }
  if (p_empty >= 1.0 - 1e-15)
    throw std::runtime_error("belief: every realization of Theta_y(S) is empty");
  BeliefReport rep;
  rep.belief = p_sub / (1.0 - p_empty);
  rep.plausibility = p_int / (1.0 - p_empty);
  rep.n_empty = n_empty;
  rep.method = "exact";
  return rep;
}

// Threshold in U* below which the monotone indicator holds; pred must be
// nonincreasing (or nondecreasing with flipped = true) over [lo0, hi0].
double indicator_threshold(const std::function<bool(double)>& pred, double lo0,
                           double hi0) {
  if (!pred(lo0)) return lo0;
  if (pred(hi0)) return hi0;
  double lo = lo0, hi = hi0;
  for (int it = 0; it < 80; ++it) {
    double mid = 0.5 * (lo + hi);
    (pred(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

BeliefReport belief_exact_continuous(const Model& model, const Vec& y,
                                     const NestedFamily& fam, const ParamSet& A) {
  const double lo0 = 1e-12, hi0 = 1.0 - 1e-12;
  auto theta_at = [&](double beta) { return model.map_aux_set(y, fam.level_set(beta)); };
  // realizations grow with U*, so emptiness is an initial segment
  auto empty_at = [&](double beta) { return theta_at(beta).is_empty(); };
  if (empty_at(hi0))
    throw std::runtime_error("belief: every realization of Theta_y(S) is empty");
  double p_empty = indicator_threshold(empty_at, lo0, hi0);
  double start = std::min(hi0, p_empty + 1e-12);
  // past the empty segment, containment in a target is nonincreasing in U*
  auto prob_contained = [&](const ParamSet& target) {
    auto pred = [&](double beta) {
      ParamSet theta = theta_at(beta);
      return !theta.is_empty() && theta.subset_of(target);
    };
    double t = indicator_threshold(pred, start, hi0);
    return std::max(0.0, t - p_empty) / (1.0 - p_empty);
  };
  BeliefReport rep;
  rep.belief = prob_contained(A);
  rep.plausibility = 1.0 - prob_contained(A.complement());
  rep.method = "exact";
  return rep;
}

BeliefReport belief_monte_carlo(const Model& model, const Vec& y, const NestedFamily& fam,
                                const ParamSet& A, long n_mc, Rng& rng) {
  if (n_mc < 10000)
    throw std::invalid_argument("belief: Monte Carlo path requires n_mc >= 10^4");
  long n_sub = 0, n_int = 0, n_empty = 0;
  for (long i = 0; i < n_mc; ++i) {
    ParamSet theta = model.map_aux_set(y, fam.draw(rng));
    if (theta.is_empty()) {
      ++n_empty;
      continue;
    }
    if (theta.subset_of(A)) ++n_sub;
    if (theta.intersects(A)) ++n_int;
  }
  long n_eff = n_mc - n_empty;
  if (n_eff == 0)
    throw std::runtime_error("belief: every realization of Theta_y(S) is empty");
  BeliefReport rep;
  rep.belief = static_cast<double>(n_sub) / n_eff;
  rep.plausibility = static_cast<double>(n_int) / n_eff;
  rep.se_belief = std::sqrt(std::max(rep.belief * (1.0 - rep.belief), 1e-12) / n_eff);
  rep.se_plausibility =
      std::sqrt(std::max(rep.plausibility * (1.0 - rep.plausibility), 1e-12) / n_eff);
  rep.n_empty = n_empty;
  rep.method = "monte-carlo";
  return rep;
}

}  // namespace

ParamSet realize_theta_set(const Model& model, const Vec& y, const NestedFamily& fam,
                           Rng& rng) {
  return model.map_aux_set(y, fam.draw(rng));
}

BeliefReport belief(const Model& model, const Vec& y, const NestedFamily& fam,
                    const ParamSet& A, long n_mc, Rng& rng, BeliefMethod method) {
  bool exact = method == BeliefMethod::Exact ||
               (method == BeliefMethod::Auto && exact_path_available(model, fam));
  if (exact) {
    if (!exact_path_available(model, fam))
      throw std::logic_error("belief: exact path unavailable for this model/family");
    if (model.is_discrete()) return belief_exact_discrete(model, y, fam, A);
    return belief_exact_continuous(model, y, fam, A);
  }
  return belief_monte_carlo(model, y, fam, A, n_mc, rng);
}

std::vector<double> point_plausibility_curve(const Model& model, const Vec& y,
                                             const NestedFamily& fam,
                                             const std::vector<double>& grid) {
  std::vector<double> out;
  out.reserve(grid.size());
  for (double theta : grid) {
    if (!model.aux_solver) throw std::logic_error("point plausibility needs an aux solver");
    auto u = model.aux_solver(y, {theta});
    out.push_back(u ? fam.gamma((*u)[0]) : 0.0);
  }
  return out;
}

ParamSet principle_assertion(const Model& model, const Vec& y, const NestedFamily& fam,
                             double alpha) {
  return model.map_aux_set(y, principle_nested_set(fam, alpha));
}

double belief_via_principle(const Model& model, const Vec& y, const NestedFamily& fam,
                            const ParamSet& A) {
  if (model.is_discrete()) {
    // bel = 1 - max{gamma(u) : Theta_y(u) not inside A}
    double worst = 0.0;
    for (double u : model.aux.support()) {
      ParamSet theta = model.theta_solver(y, {u});
      if (theta.is_empty() || theta.subset_of(A)) continue;
      worst = std::max(worst, fam.gamma(u));
    }
    return 1.0 - worst;
  }
  auto holds = [&](double alpha) {
    ParamSet assertion = principle_assertion(model, y, fam, alpha);
    return !assertion.is_empty() && assertion.subset_of(A);
  };
  if (!holds(1e-12)) return 0.0;
  if (holds(1.0 - 1e-12)) return 1.0;
  double lo = 1e-12, hi = 1.0 - 1e-12;
  for (int it = 0; it < 60; ++it) {
    double mid = 0.5 * (lo + hi);
    (holds(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace im
