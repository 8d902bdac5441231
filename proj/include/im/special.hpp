#ifndef IM_SPECIAL_HPP
#define IM_SPECIAL_HPP

#include <cmath>
#include <functional>
#include <vector>

namespace im {

inline double normal_pdf(double x) {
  static const double inv_sqrt_2pi = 0.3989422804014326779;
  return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

inline double normal_cdf(double x) {
  return 0.5 * std::erfc(-x * 0.7071067811865475244);
}

// Inverse standard normal CDF; Acklam's rational approximation polished
// with one Halley step, accurate to ~1e-15 over (0, 1).
double normal_quantile(double p);

// One-sample Kolmogorov-Smirnov distance sup_x |F_n(x) - cdf(x)|.
// The sample need not be sorted.
double ks_distance(std::vector<double> sample, const std::function<double(double)>& cdf);

}  // namespace im

#endif
