#ifndef IM_MODEL_HPP
#define IM_MODEL_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "im/aux_dist.hpp"
#include "im/aux_set.hpp"
#include "im/param_set.hpp"
#include "im/rng.hpp"

namespace im {

using Vec = std::vector<double>;

// A statistical model given by an association a(y, theta, u) = 0 with a
// parameter-free auxiliary distribution. Built-ins carry closed-form
// solvers in both directions plus the data generating equation.
struct Model {
  std::string name;
  int param_dim = 1;
  int data_dim = 1;
  int aux_dim = 1;
  AuxDistribution aux = AuxDistribution::uniform01();

  // Residual of the association equation; zero when (y, theta, u) are associated.
  std::function<double(const Vec& y, const Vec& theta, const Vec& u)> association;

  // All theta with a(y, theta, u) = 0, restricted to the parameter window.
  std::function<ParamSet(const Vec& y, const Vec& u)> theta_solver;

  // The u associated with (y, theta); nullopt when incompatible.
  std::function<std::optional<Vec>(const Vec& y, const Vec& theta)> aux_solver;

  // Data generating equation y = G(u, theta).
  std::function<Vec(const Vec& u, const Vec& theta)> dge;

  // Scalar solution map u -> theta for 1-D continuous built-ins; used to
  // push auxiliary interval unions through the association exactly.
  std::function<double(const Vec& y, double u)> theta_of_u;
  bool theta_decreasing_in_u = false;

  // Parameter window; solutions outside it are discarded.
  IntervalUnion param_range = IntervalUnion::whole_line();

  // Optional override for pushing whole auxiliary sets through the
  // association when no monotone scalar map exists.
  std::function<ParamSet(const Vec& y, const AuxSet& s)> aux_set_mapper;

  bool is_discrete() const { return aux.is_discrete(); }

  Vec sample_aux(Rng& rng) const {
    Vec u(aux_dim);
    for (double& v : u) v = aux.sample(rng);
    return u;
  }

  // Image of an auxiliary set under the solution map, clipped to the
  // parameter window. Exact for monotone 1-D maps and discrete models.
  ParamSet map_aux_set(const Vec& y, const AuxSet& s) const;
};

// Convenience wrappers over the core callbacks.
ParamSet solve_theta(const Model& model, const Vec& y, const Vec& u);
Vec aux_for(const Model& model, const Vec& y, const Vec& theta);  // throws if no solution
Vec simulate_data(const Model& model, const Vec& theta, Rng& rng);

Model make_normal_location(IntervalUnion window = IntervalUnion::whole_line());
Model make_exp_rate();
Model make_two_normal();
Model make_discrete_shift(int n);

// Lookup by name string: "normal-location", "two-normal", "exp-rate",
// "discrete-shift:N".
Model builtin_model(const std::string& name);

}  // namespace im

#endif
