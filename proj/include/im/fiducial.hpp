#ifndef IM_FIDUCIAL_HPP
#define IM_FIDUCIAL_HPP

#include <string>
#include <vector>

#include "im/model.hpp"
#include "im/randomset.hpp"

namespace im {

enum class ResidualNorm { L2, LInf };

enum class TieRule {
  Leftmost,       // default: smallest minimizer
  OutsideLargest  // proof-forced rule: prefer a minimizer outside the assertion
};

struct FiducialSample {
  std::vector<double> draws;     // accepted theta* values (1-D)
  double epsilon = 0.0;
  double acceptance_rate = 1.0;  // fraction of proposals kept
  std::string tie_rule = "leftmost";
};

struct FidEstimate {
  double value = 0.0;
  double se = 0.0;      // 0 when exact
  bool exact = false;
};

// Q_y(u): the parameter minimizing the association residual over the
// model's parameter window. Closed-form solutions are used when the
// solver finds them; otherwise a grid scan with golden-section
// refinement over the window.
double pseudo_solve(const Model& model, const Vec& y, const Vec& u,
                    ResidualNorm norm = ResidualNorm::L2,
                    TieRule tie = TieRule::Leftmost);

// Rejection sampling of the generalized fiducial distribution: propose
// U* from the auxiliary distribution, keep proposals whose minimized
// residual is <= epsilon. epsilon = 0 keeps exact solutions only.
FiducialSample sample_gfd(const Model& model, const Vec& y, long n, double epsilon,
                          Rng& rng, double acceptance_floor = 1e-4);

// fid_y(A) = P(theta* in A); exact enumeration for discrete auxiliaries,
// Monte Carlo with binomial standard error otherwise.
FidEstimate fid_probability(const Model& model, const Vec& y, const ParamSet& A, long n,
                            double epsilon, Rng& rng);

// The attainment construction for discrete models: a nested family whose
// belief at (y, A) equals fid_y(A) exactly, built by putting the
// auxiliary points whose solutions fall inside A first in the inclusion
// order.
NestedFamily matching_randomset(const Model& model, const Vec& y, const ParamSet& A);

}  // namespace im

#endif
