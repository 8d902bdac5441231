#ifndef IM_PARAM_SET_HPP
#define IM_PARAM_SET_HPP

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "im/interval.hpp"

namespace im {

// Exactly-representable subset of parameter space. Interval unions for
// 1-D continuous parameters, finite point sets for discrete models,
// 2-D point lists for the two-parameter model, and a membership
// predicate as the Monte-Carlo-only fallback.
class ParamSet {
 public:
  enum class Kind { Intervals, Finite, Points2, Predicate };

  ParamSet() : kind_(Kind::Finite) {}

  static ParamSet intervals(IntervalUnion u);
  static ParamSet finite(std::vector<double> points);  // deduped + sorted
  static ParamSet points2(std::vector<std::array<double, 2>> points);
  static ParamSet predicate(std::function<bool(double)> member, std::string label = "");
  static ParamSet empty_set() { return finite({}); }
  static ParamSet whole_line() { return intervals(IntervalUnion::whole_line()); }

  Kind kind() const { return kind_; }
  bool is_empty() const;
  bool contains(double x) const;
  bool contains2(const std::array<double, 2>& p) const;

  // Exact set algebra; throws std::logic_error for predicate/2-D kinds.
  ParamSet complement() const;
  bool subset_of(const ParamSet& other) const;
  bool intersects(const ParamSet& other) const;
  friend ParamSet unite(const ParamSet& a, const ParamSet& b);
  friend ParamSet intersect(const ParamSet& a, const ParamSet& b);

  const IntervalUnion& as_intervals() const;
  const std::vector<double>& as_finite() const;
  const std::vector<std::array<double, 2>>& as_points2() const;

  // Promotes a finite set to its degenerate interval union.
  IntervalUnion to_intervals() const;

  std::string to_string() const;

 private:
  Kind kind_;
  IntervalUnion iv_;
  std::vector<double> finite_;
  std::vector<std::array<double, 2>> pts2_;
  std::function<bool(double)> pred_;
  std::string label_;
};

ParamSet unite(const ParamSet& a, const ParamSet& b);
ParamSet intersect(const ParamSet& a, const ParamSet& b);

// Parses "(-inf,0]|(2,3)" interval-union strings or "{3,4,5}" finite sets.
ParamSet parse_param_set(const std::string& text);

}  // namespace im

#endif
