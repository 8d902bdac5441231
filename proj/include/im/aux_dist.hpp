#ifndef IM_AUX_DIST_HPP
#define IM_AUX_DIST_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "im/interval.hpp"
#include "im/rng.hpp"
#include "im/special.hpp"

namespace im {

enum class AuxKind { Uniform01, StdNormal, DiscreteUniform };

// The auxiliary variable of an association: a known, parameter-free
// distribution with sampler, CDF and quantile.
class AuxDistribution {
 public:
  static AuxDistribution uniform01() { return AuxDistribution(AuxKind::Uniform01, 0); }
  static AuxDistribution std_normal() { return AuxDistribution(AuxKind::StdNormal, 0); }
  static AuxDistribution discrete_uniform(int n) {
    if (n < 1) throw std::invalid_argument("discrete_uniform: n must be positive");
    return AuxDistribution(AuxKind::DiscreteUniform, n);
  }

  AuxKind kind() const { return kind_; }
  bool is_discrete() const { return kind_ == AuxKind::DiscreteUniform; }
  int support_size() const { return n_; }

  double sample(Rng& rng) const {
    switch (kind_) {
      case AuxKind::Uniform01: return rng.uniform01();
      case AuxKind::StdNormal: return normal_quantile(rng.uniform01());
      case AuxKind::DiscreteUniform: return rng.uniform_int(n_);
    }
    return 0.0;
  }

  double cdf(double u) const {
    switch (kind_) {
      case AuxKind::Uniform01:
        return u < 0.0 ? 0.0 : (u > 1.0 ? 1.0 : u);
      case AuxKind::StdNormal:
        return normal_cdf(u);
      case AuxKind::DiscreteUniform: {
        double k = std::floor(u) + 1.0;
        if (k < 0.0) return 0.0;
        if (k > n_) return 1.0;
        return k / n_;
      }
    }
    return 0.0;
  }

  double quantile(double p) const {
    if (p < 0.0 || p > 1.0) throw std::domain_error("quantile: p outside [0,1]");
    switch (kind_) {
      case AuxKind::Uniform01: return p;
      case AuxKind::StdNormal: return normal_quantile(p);
      case AuxKind::DiscreteUniform:
        return std::min(static_cast<double>(n_ - 1), std::floor(p * n_));
    }
    return 0.0;
  }

  IntervalUnion range() const {
    switch (kind_) {
      case AuxKind::Uniform01:
        return IntervalUnion::of(Interval::closed(0.0, 1.0));
      case AuxKind::StdNormal:
        return IntervalUnion::whole_line();
      case AuxKind::DiscreteUniform:
        return IntervalUnion::of(Interval::closed(0.0, n_ - 1.0));
    }
    return IntervalUnion();
  }

  std::vector<double> support() const {
    if (!is_discrete())
      throw std::logic_error("support(): continuous auxiliary distribution");
    std::vector<double> s(n_);
    for (int i = 0; i < n_; ++i) s[i] = i;
    return s;
  }

 private:
  AuxDistribution(AuxKind kind, int n) : kind_(kind), n_(n) {}
  AuxKind kind_;
  int n_;
};

}  // namespace im

#endif
