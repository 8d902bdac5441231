#ifndef IM_RANDOMSET_HPP
#define IM_RANDOMSET_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "im/aux_dist.hpp"
#include "im/aux_set.hpp"
#include "im/rng.hpp"

namespace im {

// A predictive random set S = S_{U*} with U* ~ U(0,1), together with its
// containment function gamma(u) = P(u in S). Continuous families live on
// the auxiliary range; discrete families on {0..N-1} are stored as an
// explicit gamma table plus the exact list of (probability, realization)
// pairs, which is what the enumeration oracles consume.
class NestedFamily {
 public:
  // Continuous family. alpha_set is the native draw parametrization
  // S_alpha; level_set_fn, when given, is the closed-form sublevel set
  // {u : gamma(u) > 1 - alpha}. Without it, sublevel sets are found by
  // grid inversion (resolution 2^-12) with bisection refinement.
  static NestedFamily continuous(std::string name,
                                 std::function<double(double)> gamma,
                                 std::function<AuxSet(double)> alpha_set,
                                 bool nested,
                                 std::function<AuxSet(double)> level_set_fn = nullptr);

  // Nested construction: realizes a given containment function by its
  // sublevel sets; always nested and shares the same gamma.
  static NestedFamily from_gamma(std::function<double(double)> gamma,
                                 std::string name = "nested-from-gamma");

  // Discrete family from explicit realizations; gamma table derived.
  static NestedFamily discrete(std::string name,
                               std::vector<std::pair<double, AuxSet>> realizations,
                               bool nested, int support_size);

  // Discrete nesting of a gamma table on {0..N-1}: S_alpha = {i : g_i > 1-alpha}.
  static NestedFamily discrete_from_gamma(std::vector<double> gamma_table,
                                          std::string name = "discrete-from-gamma");

  const std::string& name() const { return name_; }
  bool nested() const { return nested_; }
  bool is_discrete() const { return discrete_; }

  double gamma(double u) const;
  const std::vector<double>& gamma_table() const;

  // Superlevel set {u : gamma(u) > 1 - alpha} of the containment function.
  AuxSet level_set(double alpha) const;

  // Realization for a given U* value, in the family's native parametrization.
  AuxSet realization(double ustar) const;
  AuxSet draw(Rng& rng) const { return realization(rng.uniform01()); }

  // Exact (probability, realization) decomposition; discrete only.
  const std::vector<std::pair<double, AuxSet>>& realizations() const;

 private:
  NestedFamily() = default;

  std::string name_;
  bool nested_ = true;
  bool discrete_ = false;
  std::function<double(double)> gamma_;
  std::function<AuxSet(double)> alpha_set_;
  std::function<AuxSet(double)> level_set_;
  std::vector<double> gamma_table_;
  std::vector<std::pair<double, AuxSet>> realizations_;
};

// Named continuous families over U(0,1):
//   "two-sided"  S_a = {u : |u-0.5| < |a-0.5|}
//   "left"       S_a = [0, a]
//   "right"      S_a = [a, 1]
//   "offset"     S_a = (0.5a, 0.5+0.5a)   (not nested)
NestedFamily builtin_randomset(const std::string& name);

// Discrete analogues on {0..N-1}: S_a collects the first ceil(aN) points
// of a fixed inclusion order (natural, reversed, or center-out);
// "offset" uses a sliding window and is not nested.
NestedFamily builtin_discrete_randomset(const std::string& name, int n);

// Piecewise-linear gamma from (u, gamma) pairs, e.g. loaded from CSV.
NestedFamily randomset_from_table(const std::vector<std::pair<double, double>>& table);

// The canonical nested sets carrying all the information of a nested
// family; coincides with level_set up to boundary sets of measure zero.
AuxSet principle_nested_set(const NestedFamily& fam, double alpha);

struct ValidityRow {
  double alpha = 0.0;
  double prob = 0.0;  // P(gamma(U_star) <= alpha)
  double se = 0.0;
  bool violated = false;
};

struct ValidityReport {
  std::vector<ValidityRow> rows;
  bool gamma_uniform = false;  // KS test of gamma(U_star) against U(0,1)
  double ks = 0.0;
  bool ok() const {
    for (const auto& r : rows)
      if (r.violated) return false;
    return true;
  }
};

// Checks the sub-uniformity condition P(gamma(U_star) <= alpha) <= alpha
// on a grid of levels; Monte Carlo for continuous auxiliaries, exact for
// discrete ones. Also reports whether gamma(U_star) looks uniform, which
// upgrades conservative curves to exact ones downstream.
ValidityReport check_validity_condition(const NestedFamily& fam,
                                        const AuxDistribution& aux, long n_mc,
                                        const std::vector<double>& alphas, Rng& rng);

}  // namespace im

#endif
