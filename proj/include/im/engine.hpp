#ifndef IM_ENGINE_HPP
#define IM_ENGINE_HPP

#include <string>
#include <vector>

#include "im/model.hpp"
#include "im/randomset.hpp"

namespace im {

struct BeliefReport {
  double belief = 0.0;
  double plausibility = 0.0;
  double se_belief = 0.0;       // 0 on the exact path
  double se_plausibility = 0.0;
  long n_empty = 0;             // discarded empty realizations
  std::string method;           // "exact" or "monte-carlo"
};

enum class BeliefMethod { Auto, Exact, MonteCarlo };

// One draw of Theta_y(S): the image of a realization of the predictive
// random set under the solution map.
ParamSet realize_theta_set(const Model& model, const Vec& y, const NestedFamily& fam,
                           Rng& rng);

// bel_y(A) = P(Theta_y(S) subset A | nonempty) and its dual plausibility.
// Exact by enumeration for discrete auxiliaries and by integration over
// U* for nested 1-D families with a monotone solution map; Monte Carlo
// with reported standard errors otherwise.
BeliefReport belief(const Model& model, const Vec& y, const NestedFamily& fam,
                    const ParamSet& A, long n_mc, Rng& rng,
                    BeliefMethod method = BeliefMethod::Auto);

// pl_y({theta}) on a parameter grid; equals gamma(u_{y,theta}).
std::vector<double> point_plausibility_curve(const Model& model, const Vec& y,
                                             const NestedFamily& fam,
                                             const std::vector<double>& grid);

// A_{alpha,y}: the image of the principle nested set, nested in alpha.
ParamSet principle_assertion(const Model& model, const Vec& y, const NestedFamily& fam,
                             double alpha);

// bel_y(A) = sup{alpha : A_{alpha,y} subset A}; the cross-check path.
double belief_via_principle(const Model& model, const Vec& y, const NestedFamily& fam,
                            const ParamSet& A);

}  // namespace im

#endif
