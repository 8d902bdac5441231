#include "im/fiducial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace im {

namespace {

constexpr double kExactResidualTol = 1e-10;

double window_lo(const IntervalUnion& w) { return w.parts().front().lo; }
double window_hi(const IntervalUnion& w) { return w.parts().back().hi; }

double golden_refine(const std::function<double(double)>& f, double a, double b) {
  const double phi = 0.6180339887498949;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 200 && b - a > 1e-13 * (1.0 + std::abs(a)); ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? x1 : x2;
}

}  // namespace

double pseudo_solve(const Model& model, const Vec& y, const Vec& u, ResidualNorm,
                    TieRule tie) {
  ParamSet sol = model.theta_solver(y, u);
  if (!sol.is_empty()) {
    if (sol.kind() == ParamSet::Kind::Finite) {
      const auto& pts = sol.as_finite();
      return tie == TieRule::Leftmost ? pts.front() : pts.back();
    }
    if (sol.kind() == ParamSet::Kind::Intervals)
      return sol.as_intervals().parts().front().lo;
    throw std::logic_error("pseudo_solve: 1-D parameters only");
  }
  // no exact solution inside the window: minimize the residual
  auto residual = [&](double theta) {
    return std::abs(model.association(y, {theta}, u));
  };
  if (model.param_range.is_empty())
    throw std::runtime_error("pseudo_solve: empty parameter window");
  if (model.theta_of_u) {
    // monotone association: the residual grows with distance from the
    // unconstrained root, so the minimizer is its projection on the window
    double t0 = model.theta_of_u(y, u[0]);
    double best = 0.0, best_dist = kInf;
    bool found = false;
    for (const Interval& part : model.param_range.parts()) {
      double c = std::clamp(t0, part.lo, part.hi);
      if (!std::isfinite(c)) continue;
      double dist = std::abs(c - t0);
      bool better = dist < best_dist ||
                    (dist == best_dist && (tie == TieRule::Leftmost) == (c < best));
      if (!found || better) {
        best = c;
        best_dist = dist;
        found = true;
      }
    }
    if (found) return best;
  }
  double lo = window_lo(model.param_range);
  double hi = window_hi(model.param_range);
  double center = 0.0;
  if (model.theta_of_u) center = model.theta_of_u(y, u[0]);
  if (!std::isfinite(center)) center = 0.5 * (std::max(lo, -1e3) + std::min(hi, 1e3));
  const double span = 50.0;
  lo = std::max(lo, center - span);
  hi = std::min(hi, center + span);
  if (!(hi > lo)) return std::clamp(center, window_lo(model.param_range),
                                    window_hi(model.param_range));
  const int n_grid = 4096;
  int best = 0;
  double best_val = residual(lo);
  for (int i = 1; i <= n_grid; ++i) {
    double t = lo + (hi - lo) * i / n_grid;
    double v = residual(t);
    if (v < best_val - 1e-15 ||
        (tie == TieRule::Leftmost ? false : std::abs(v - best_val) <= 1e-15)) {
      best_val = v;
      best = i;
    }
  }
  double a = lo + (hi - lo) * std::max(0, best - 1) / n_grid;
  double b = lo + (hi - lo) * std::min(n_grid, best + 1) / n_grid;
  double theta = golden_refine(residual, a, b);
  // the boundary can beat the interior minimum
  if (residual(lo) <= residual(theta)) theta = lo;
  if (residual(hi) < residual(theta)) theta = hi;
  return theta;
}

FiducialSample sample_gfd(const Model& model, const Vec& y, long n, double epsilon,
                          Rng& rng, double acceptance_floor) {
  if (n < 1) throw std::invalid_argument("sample_gfd: n must be >= 1");
  if (epsilon < 0.0) throw std::invalid_argument("sample_gfd: epsilon must be >= 0");
  FiducialSample out;
  out.epsilon = epsilon;
  const double tol = std::max(epsilon, kExactResidualTol);
  long proposed = 0;
  const long max_proposals =
      static_cast<long>(static_cast<double>(n) / acceptance_floor) + 64;
  while (static_cast<long>(out.draws.size()) < n) {
    if (proposed > max_proposals)
      throw std::runtime_error("sample_gfd: acceptance rate below floor");
    Vec u = model.sample_aux(rng);
    ++proposed;
    double theta = pseudo_solve(model, y, u);
    if (std::abs(model.association(y, {theta}, u)) <= tol) out.draws.push_back(theta);
  }
  out.acceptance_rate = static_cast<double>(out.draws.size()) / proposed;
  return out;
}

FidEstimate fid_probability(const Model& model, const Vec& y, const ParamSet& A, long n,
                            double epsilon, Rng& rng) {
  FidEstimate est;
  if (model.is_discrete()) {
    const double tol = std::max(epsilon, kExactResidualTol);
    long in_set = 0, in_manifold = 0;
    for (double u : model.aux.support()) {
      double theta = pseudo_solve(model, y, {u});
      if (std::abs(model.association(y, {theta}, {u})) > tol) continue;
      ++in_manifold;
      if (A.contains(theta)) ++in_set;
    }
    if (in_manifold == 0)
      throw std::runtime_error("fid_probability: empty truncation set");
    est.value = static_cast<double>(in_set) / in_manifold;
    est.exact = true;
    return est;
  }
  FiducialSample sample = sample_gfd(model, y, n, epsilon, rng);
  long hits = 0;
  for (double t : sample.draws)
    if (A.contains(t)) ++hits;
  est.value = static_cast<double>(hits) / n;
  est.se = std::sqrt(std::max(est.value * (1.0 - est.value), 1e-12) / n);
  return est;
}

NestedFamily matching_randomset(const Model& model, const Vec& y, const ParamSet& A) {
  if (!model.is_discrete())
    throw std::logic_error("matching_randomset: discrete auxiliaries only");
  const int n = model.aux.support_size();
  std::vector<int> inside, outside;
  for (int u = 0; u < n; ++u) {
    ParamSet theta = model.theta_solver(y, {static_cast<double>(u)});
    bool in = !theta.is_empty() && theta.subset_of(A);
    (in ? inside : outside).push_back(u);
  }
  std::vector<int> order = inside;
  order.insert(order.end(), outside.begin(), outside.end());
  std::vector<std::pair<double, AuxSet>> reals;
  std::vector<int> prefix;
  for (int m = 0; m < n; ++m) {
    prefix.push_back(order[m]);
    reals.emplace_back(1.0 / n, AuxSet::discrete(prefix));
  }
  return NestedFamily::discrete("matching", std::move(reals), true, n);
}

}  // namespace im
