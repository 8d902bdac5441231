#include "im/model.hpp"

#include <cmath>
#include <stdexcept>

namespace im {

ParamSet Model::map_aux_set(const Vec& y, const AuxSet& s) const {
  if (aux_set_mapper) return aux_set_mapper(y, s);
  if (is_discrete()) {
    std::vector<double> out;
    for (int u : s.points()) {
      ParamSet sol = theta_solver(y, {static_cast<double>(u)});
      for (double t : sol.as_finite()) out.push_back(t);
    }
    return ParamSet::finite(std::move(out));
  }
  if (!theta_of_u)
    throw std::logic_error("map_aux_set: no solution map for model " + name);
  std::vector<Interval> parts;
  for (const Interval& iv : s.intervals().parts()) {
    double a = theta_of_u(y, iv.lo);
    double b = theta_of_u(y, iv.hi);
    Interval img;
    if (theta_decreasing_in_u) {
      img = Interval{b, a, iv.hi_open, iv.lo_open};
    } else {
      img = Interval{a, b, iv.lo_open, iv.hi_open};
    }
    if (std::isnan(img.lo) || std::isnan(img.hi)) continue;
    parts.push_back(img);
  }
  return ParamSet::intervals(intersect(IntervalUnion(std::move(parts)), param_range));
}

ParamSet solve_theta(const Model& model, const Vec& y, const Vec& u) {
  return model.theta_solver(y, u);
}

Vec aux_for(const Model& model, const Vec& y, const Vec& theta) {
  if (!model.aux_solver)
    throw std::logic_error("aux_for: model " + model.name + " has no aux solver");
  auto u = model.aux_solver(y, theta);
  if (!u)
    throw std::runtime_error("aux_for: no u associates y with theta under " + model.name);
  return *u;
}

Vec simulate_data(const Model& model, const Vec& theta, Rng& rng) {
  return model.dge(model.sample_aux(rng), theta);
}

Model make_normal_location(IntervalUnion window) {
  Model m;
  m.name = "normal-location";
  m.aux = AuxDistribution::uniform01();
  m.param_range = std::move(window);
  m.association = [](const Vec& y, const Vec& theta, const Vec& u) {
    return y[0] - theta[0] - normal_quantile(u[0]);
  };
  m.theta_of_u = [](const Vec& y, double u) { return y[0] - normal_quantile(u); };
  m.theta_decreasing_in_u = true;
  IntervalUnion range = m.param_range;
  m.theta_solver = [range](const Vec& y, const Vec& u) {
    double t = y[0] - normal_quantile(u[0]);
    if (!std::isfinite(t) || !range.contains(t)) return ParamSet::empty_set();
    return ParamSet::finite({t});
  };
  m.aux_solver = [](const Vec& y, const Vec& theta) -> std::optional<Vec> {
    return Vec{normal_cdf(y[0] - theta[0])};
  };
  m.dge = [](const Vec& u, const Vec& theta) {
    return Vec{theta[0] + normal_quantile(u[0])};
  };
  return m;
}

Model make_exp_rate() {
  Model m;
  m.name = "exp-rate";
  m.aux = AuxDistribution::uniform01();
  m.param_range = IntervalUnion::of(Interval{0.0, kInf, true, true});
  m.association = [](const Vec& y, const Vec& theta, const Vec& u) {
    return u[0] - (1.0 - std::exp(-theta[0] * y[0]));
  };
  m.theta_of_u = [](const Vec& y, double u) {
    if (u >= 1.0) return kInf;
    return -std::log1p(-u) / y[0];
  };
  m.theta_decreasing_in_u = false;
  m.theta_solver = [](const Vec& y, const Vec& u) {
    if (y[0] <= 0.0) return ParamSet::empty_set();
    double t = -std::log1p(-u[0]) / y[0];
    if (!std::isfinite(t) || t <= 0.0) return ParamSet::empty_set();
    return ParamSet::finite({t});
  };
  m.aux_solver = [](const Vec& y, const Vec& theta) -> std::optional<Vec> {
    if (y[0] <= 0.0 || theta[0] <= 0.0) return std::nullopt;
    return Vec{1.0 - std::exp(-theta[0] * y[0])};
  };
  m.dge = [](const Vec& u, const Vec& theta) {
    return Vec{-std::log1p(-u[0]) / theta[0]};
  };
  return m;
}

Model make_two_normal() {
  Model m;
  m.name = "two-normal";
  m.param_dim = 2;
  m.data_dim = 2;
  m.aux_dim = 2;
  m.aux = AuxDistribution::uniform01();
  m.association = [](const Vec& y, const Vec& theta, const Vec& u) {
    double rx = y[0] - theta[0] - normal_quantile(u[0]);
    double ry = y[1] - theta[1] - normal_quantile(u[1]);
    return std::hypot(rx, ry);
  };
  m.theta_solver = [](const Vec& y, const Vec& u) {
    double tx = y[0] - normal_quantile(u[0]);
    double ty = y[1] - normal_quantile(u[1]);
    if (!std::isfinite(tx) || !std::isfinite(ty)) return ParamSet::points2({});
    return ParamSet::points2({{tx, ty}});
  };
  m.aux_solver = [](const Vec& y, const Vec& theta) -> std::optional<Vec> {
    return Vec{normal_cdf(y[0] - theta[0]), normal_cdf(y[1] - theta[1])};
  };
  m.dge = [](const Vec& u, const Vec& theta) {
    return Vec{theta[0] + normal_quantile(u[0]), theta[1] + normal_quantile(u[1])};
  };
  return m;
}

Model make_discrete_shift(int n) {
  if (n < 1) throw std::invalid_argument("discrete-shift: N must be positive");
  Model m;
  m.name = "discrete-shift:" + std::to_string(n);
  m.aux = AuxDistribution::discrete_uniform(n);
  m.association = [](const Vec& y, const Vec& theta, const Vec& u) {
    return y[0] - theta[0] - u[0];
  };
  m.theta_solver = [](const Vec& y, const Vec& u) {
    return ParamSet::finite({y[0] - u[0]});
  };
  m.aux_solver = [n](const Vec& y, const Vec& theta) -> std::optional<Vec> {
    double u = y[0] - theta[0];
    if (u < 0.0 || u > n - 1.0 || u != std::floor(u)) return std::nullopt;
    return Vec{u};
  };
  m.dge = [](const Vec& u, const Vec& theta) { return Vec{theta[0] + u[0]}; };
  return m;
}

Model builtin_model(const std::string& name) {
  if (name == "normal-location") return make_normal_location();
  if (name == "exp-rate") return make_exp_rate();
  if (name == "two-normal") return make_two_normal();
  const std::string prefix = "discrete-shift:";
  if (name.rfind(prefix, 0) == 0) {
    int n = std::stoi(name.substr(prefix.size()));
    return make_discrete_shift(n);
  }
  throw std::invalid_argument("unknown model: " + name);
}

}  // namespace im
