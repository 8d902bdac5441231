#include "im/confcurve.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "im/special.hpp"

namespace im {

namespace {

void cache_values(ConfidenceCurve& cc) {
  cc.values.resize(cc.grid.size());
  for (std::size_t i = 0; i < cc.grid.size(); ++i) cc.values[i] = cc.evaluate(cc.grid[i]);
}

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

}  // namespace

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 2) throw std::invalid_argument("linspace: need at least two points");
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
  return g;
}

ConfidenceCurve cc_from_cd(std::function<double(double)> H, std::vector<double> grid) {
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (H(grid[i]) < H(grid[i - 1]) - 1e-12)
      throw std::invalid_argument("cc_from_cd: distribution function is not monotone");
  ConfidenceCurve cc;
  cc.evaluate = [H = std::move(H)](double theta) {
    return clamp01(2.0 * std::abs(H(theta) - 0.5));
  };
  cc.grid = std::move(grid);
  cc.kind = CurveKind::Exact;
  cc.provenance = "cd";
  cache_values(cc);
  return cc;
}

ConfidenceCurve cc_from_im(const Model& model, const Vec& y, const NestedFamily& fam,
                           std::vector<double> grid, bool gamma_uniform_certified) {
  ConfidenceCurve cc;
  if (model.is_discrete()) {
    cc.evaluate = [model, y, fam](double theta) {
      double best = 0.0;
      for (double u : model.aux.support()) {
        ParamSet sol = model.theta_solver(y, {u});
        if (sol.contains(theta)) best = std::max(best, fam.gamma(u));
      }
      return 1.0 - best;
    };
  } else {
    cc.evaluate = [model, y, fam](double theta) {
      auto member = [&](double alpha) {
        return principle_assertion(model, y, fam, alpha).contains(theta);
      };
      if (member(1e-12)) return 0.0;
      if (!member(1.0 - 1e-12)) return 1.0;
      double lo = 1e-12, hi = 1.0 - 1e-12;
      for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        (member(mid) ? hi : lo) = mid;
      }
      return 0.5 * (lo + hi);
    };
  }
  cc.grid = std::move(grid);
  cc.kind = (fam.nested() && gamma_uniform_certified) ? CurveKind::Exact
                                                      : CurveKind::Conservative;
  cc.provenance = "im";
  cache_values(cc);
  return cc;
}

ConfidenceCurve recalibrate_exact(const ConfidenceCurve& cc, const Model& model,
                                  const Vec& y, const NestedFamily& fam, long n,
                                  Rng& rng) {
  ConfidenceCurve out;
  out.grid = cc.grid;
  out.kind = CurveKind::Exact;
  out.provenance = "fiducial-recalibrated";
  if (model.is_discrete()) {
    auto base = cc.evaluate;
    out.evaluate = [model, y, fam, base, n, seed = rng.next_u64()](double theta) {
      double alpha = base(theta);
      if (alpha <= 0.0) return 0.0;  // the level-0 assertion is degenerate
      ParamSet a = principle_assertion(model, y, fam, alpha);
      Rng local(seed);
      double fid = fid_probability(model, y, a, n, 0.0, local).value;
      return std::max(alpha, fid);
    };
  } else {
    auto sample = std::make_shared<FiducialSample>(sample_gfd(model, y, n, 0.0, rng));
    auto base = cc.evaluate;
    out.evaluate = [model, y, fam, base, sample](double theta) {
      double alpha = base(theta);
      ParamSet a = principle_assertion(model, y, fam, alpha);
      long hits = 0;
      for (double t : sample->draws)
        if (a.contains(t)) ++hits;
      double fid = static_cast<double>(hits) / sample->draws.size();
      return std::max(alpha, fid);  // theory gives fid >= alpha; clamp MC noise
    };
  }
  cache_values(out);
  return out;
}

ParamSet confidence_set(const ConfidenceCurve& cc, double alpha) {
  const auto& g = cc.grid;
  const auto& v = cc.values;
  if (g.size() < 2) throw std::runtime_error("confidence_set: grid too coarse");
  auto crossing = [&](double lo, double hi) {
    // cc - alpha changes sign on [lo, hi]
    bool lo_below = cc.evaluate(lo) <= alpha;
    for (int it = 0; it < 60 && hi - lo > 1e-14 * (1.0 + std::abs(lo)); ++it) {
      double mid = 0.5 * (lo + hi);
      ((cc.evaluate(mid) <= alpha) == lo_below ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };
  std::vector<Interval> parts;
  bool inside = v.front() <= alpha;
  double start = inside ? -kInf : 0.0;  // unbounded when the boundary is below level
  for (std::size_t i = 1; i < g.size(); ++i) {
    bool next = v[i] <= alpha;
    if (next == inside) continue;
    double c = crossing(g[i - 1], g[i]);
    if (inside)
      parts.push_back(Interval::closed(start, c));
    else
      start = c;
    inside = next;
  }
  if (inside) parts.push_back(Interval::closed(start, kInf));
  return ParamSet::intervals(IntervalUnion(std::move(parts)));
}

double cc_belief(const ConfidenceCurve& cc, const ParamSet& A) {
  auto held = [&](double alpha) {
    ParamSet s = confidence_set(cc, alpha);
    return !s.is_empty() && s.subset_of(A);
  };
  if (!held(1e-9)) return 0.0;
  if (held(1.0 - 1e-9)) return 1.0;
  double lo = 1e-9, hi = 1.0 - 1e-9;
  for (int it = 0; it < 50; ++it) {
    double mid = 0.5 * (lo + hi);
    (held(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double cc_plausibility(const ConfidenceCurve& cc, const ParamSet& A) {
  if (A.kind() == ParamSet::Kind::Finite) {
    double best = 1.0;
    for (double t : A.as_finite()) best = std::min(best, cc.evaluate(t));
    return best;
  }
  const IntervalUnion& iv = A.as_intervals();
  double best = 1.0;
  double best_theta = cc.grid.front();
  auto consider = [&](double t) {
    double v = cc.evaluate(t);
    if (v < best) {
      best = v;
      best_theta = t;
    }
  };
  for (const Interval& part : iv.parts()) {
    double lo = std::max(part.lo, cc.grid.front());
    double hi = std::min(part.hi, cc.grid.back());
    if (lo > hi) continue;
    consider(lo);
    consider(hi);
    for (double t : cc.grid)
      if (part.contains(t)) consider(t);
  }
  // local refinement around the best grid candidate
  double h = cc.grid.size() > 1 ? cc.grid[1] - cc.grid[0] : 1e-3;
  double a = best_theta - h, b = best_theta + h;
  for (int it = 0; it < 100 && b - a > 1e-12 * (1.0 + std::abs(a)); ++it) {
    double m1 = a + (b - a) / 3.0, m2 = b - (b - a) / 3.0;
    if (cc.evaluate(m1) <= cc.evaluate(m2))
      b = m2;
    else
      a = m1;
  }
  double refined = 0.5 * (a + b);
  if (A.contains(refined)) consider(refined);
  return best;
}

ConfidenceCurve fieller_cc(double x, double y, std::vector<double> grid) {
  ConfidenceCurve cc;
  cc.evaluate = [x, y](double rho) {
    double z = std::abs(x - rho * y) / std::sqrt(1.0 + rho * rho);
    return clamp01(2.0 * normal_cdf(z) - 1.0);
  };
  cc.grid = std::move(grid);
  cc.kind = CurveKind::Exact;
  cc.provenance = "fieller";
  cache_values(cc);
  return cc;
}

ImFromCc im_from_cc(const ConfidenceCurve& cc) {
  ImFromCc out{Model{}, builtin_randomset("left")};
  Model& m = out.model;
  m.name = "cc-im";
  m.aux = AuxDistribution::uniform01();
  auto curve = cc;  // value copy keeps the returned model self-contained
  m.association = [curve](const Vec&, const Vec& theta, const Vec& u) {
    return curve.evaluate(theta[0]) - u[0];
  };
  m.theta_solver = [curve](const Vec&, const Vec& u) {
    ParamSet s = confidence_set(curve, u[0]);
    // the exact boundary of the sublevel set, not a solver residual set;
    // good enough for membership queries on the curve's own IM
    return s;
  };
  m.aux_solver = [curve](const Vec&, const Vec& theta) -> std::optional<Vec> {
    return Vec{curve.evaluate(theta[0])};
  };
  m.aux_set_mapper = [curve](const Vec&, const AuxSet& s) {
    // the companion random set is [0, U*]; every realization and every
    // principle nested set is an interval anchored at 0
    ParamSet out_set = ParamSet::empty_set();
    for (const Interval& part : s.intervals().parts()) {
      if (part.lo > 1e-9)
        throw std::logic_error("cc-im: auxiliary sets must be anchored at 0");
      out_set = unite(out_set, confidence_set(curve, part.hi));
    }
    return out_set;
  };
  return out;
}

}  // namespace im
