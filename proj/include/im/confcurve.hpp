#ifndef IM_CONFCURVE_HPP
#define IM_CONFCURVE_HPP

#include <functional>
#include <string>
#include <vector>

#include "im/engine.hpp"
#include "im/fiducial.hpp"
#include "im/model.hpp"
#include "im/randomset.hpp"

namespace im {

enum class CurveKind { Exact, Conservative };

// theta -> [0,1] whose sublevel sets are confidence regions at every
// level. evaluate is exact everywhere; grid/values cache the evaluation
// grid for emission and level-set extraction.
struct ConfidenceCurve {
  std::function<double(double)> evaluate;
  std::vector<double> grid;
  std::vector<double> values;
  CurveKind kind = CurveKind::Conservative;
  std::string provenance;  // "cd" | "im" | "fiducial-recalibrated" | "fieller"
};

std::vector<double> linspace(double lo, double hi, int n);

// cc(theta) = 2|H(theta) - 0.5| from a confidence distribution function.
ConfidenceCurve cc_from_cd(std::function<double(double)> H, std::vector<double> grid);

// cc(theta) = inf{alpha : theta in A_{alpha,y}}; conservative in general,
// exact when gamma(U_star) uniformity has been certified.
ConfidenceCurve cc_from_im(const Model& model, const Vec& y, const NestedFamily& fam,
                           std::vector<double> grid, bool gamma_uniform_certified = false);

// Replaces each level alpha with fid_y(A_{alpha,y}); pointwise >= input,
// and exact under P(U_star in M_0) = 1.
ConfidenceCurve recalibrate_exact(const ConfidenceCurve& cc, const Model& model,
                                  const Vec& y, const NestedFamily& fam, long n, Rng& rng);

// cc-bel(A) = sup{alpha : {cc <= alpha} subset A}; cc-pl(A) = inf_A cc.
double cc_belief(const ConfidenceCurve& cc, const ParamSet& A);
double cc_plausibility(const ConfidenceCurve& cc, const ParamSet& A);

// Level set {theta : cc(theta) <= alpha} as an interval union, extracted
// from the grid with bisection refinement at the crossings. A level set
// reaching a grid boundary where the curve lies below alpha is extended
// to infinity.
ParamSet confidence_set(const ConfidenceCurve& cc, double alpha);

// cc(rho) = 2*Phi(|x - rho*y| / sqrt(1 + rho^2)) - 1; the equal-tailed
// curve whose level sets invert the ratio-of-means pivot.
ConfidenceCurve fieller_cc(double x, double y, std::vector<double> grid);

// The IM whose point plausibility is 1 - cc: association cc(theta) - u
// with the random set [0, U*].
struct ImFromCc {
  Model model;
  NestedFamily fam;
};
ImFromCc im_from_cc(const ConfidenceCurve& cc);

}  // namespace im

#endif
