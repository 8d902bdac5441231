#ifndef IM_VALIDATE_HPP
#define IM_VALIDATE_HPP

#include <functional>
#include <string>
#include <vector>

#include "im/confcurve.hpp"
#include "im/engine.hpp"
#include "im/model.hpp"
#include "im/randomset.hpp"

namespace im {

enum class CoverageRule { Exact, Conservative };

struct CoverageRow {
  double alpha = 0.0;
  double empirical = 0.0;
  double se = 0.0;
  bool pass = false;
  std::string rule;
};

struct CoverageReport {
  std::vector<CoverageRow> rows;
  long n_rep = 0;
  bool all_pass() const {
    for (const auto& r : rows)
      if (!r.pass) return false;
    return true;
  }
};

// Simulates Y at theta0, rebuilds the curve per replication, and tests
// P(cc_Y(theta0) < alpha) against alpha. Exact curves must match within
// 3 binomial SEs; conservative ones must reach at least alpha - 3 SE.
CoverageReport cc_coverage_sim(const Model& model, const Vec& theta0,
                               const std::function<ConfidenceCurve(const Vec&)>& builder,
                               long n_rep, const std::vector<double>& alphas,
                               std::uint64_t seed, CoverageRule rule);

// Tests the belief validity bound P(bel_Y(A) >= 1-alpha) <= alpha + 3 SE
// for a false assertion (theta0 outside A). Exact enumeration replaces
// simulation for discrete models.
CoverageReport belief_validity_sim(const Model& model, const Vec& theta0,
                                   const NestedFamily& fam, const ParamSet& A,
                                   long n_rep, const std::vector<double>& alphas,
                                   std::uint64_t seed);

struct OracleRow {
  std::vector<double> assertion;  // finite parameter subset
  double bel = 0.0;
  double fid = 0.0;
  double pl = 0.0;
};

struct OracleTable {
  std::string model_name;
  std::string family_name;
  Vec y;
  std::vector<double> window;
  bool exhaustive = true;
  std::vector<OracleRow> rows;
};

// Exact bel/fid/pl by enumeration for a discrete model over every subset
// of a K-point parameter window (K <= 12); 1000 random subsets beyond.
OracleTable build_oracle(const Model& model, const Vec& y, const NestedFamily& fam,
                         const std::vector<double>& window, std::uint64_t seed = 1);

struct TheoremReport {
  std::vector<std::string> violations;
  long rows_checked = 0;
  bool ok() const { return violations.empty(); }
};

// Sweeps the oracle for: the bel <= fid <= pl sandwich, dominance of the
// nested rearrangement, the all-or-nothing plausibility gap for
// intersecting families, and exact attainment by the matching family.
TheoremReport check_theorems(const Model& model, const Vec& y,
                             const std::vector<NestedFamily>& fams,
                             const std::vector<double>& window, std::uint64_t seed = 1);

}  // namespace im

#endif
