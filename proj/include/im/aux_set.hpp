#ifndef IM_AUX_SET_HPP
#define IM_AUX_SET_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "im/interval.hpp"

namespace im {

// Realization of a predictive random set inside the auxiliary range:
// an interval union for continuous auxiliaries, a finite subset of
// {0..N-1} for discrete ones.
class AuxSet {
 public:
  AuxSet() : discrete_(false) {}

  static AuxSet continuous(IntervalUnion u) {
    AuxSet s;
    s.discrete_ = false;
    s.iv_ = std::move(u);
    return s;
  }
  static AuxSet discrete(std::vector<int> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    AuxSet s;
    s.discrete_ = true;
    s.pts_ = std::move(points);
    return s;
  }
  static AuxSet empty_continuous() { return continuous(IntervalUnion()); }
  static AuxSet empty_discrete() { return discrete({}); }

  bool is_discrete() const { return discrete_; }
  bool is_empty() const { return discrete_ ? pts_.empty() : iv_.is_empty(); }

  bool contains(double u) const {
    if (!discrete_) return iv_.contains(u);
    return std::binary_search(pts_.begin(), pts_.end(), static_cast<int>(u));
  }

  bool subset_of(const AuxSet& other) const {
    check_same_kind(other);
    if (discrete_)
      return std::includes(other.pts_.begin(), other.pts_.end(), pts_.begin(), pts_.end());
    return iv_.subset_of(other.iv_);
  }

  bool intersects(const AuxSet& other) const {
    check_same_kind(other);
    if (!discrete_) return iv_.intersects(other.iv_);
    for (int p : pts_)
      if (other.contains(p)) return true;
    return false;
  }

  const IntervalUnion& intervals() const {
    if (discrete_) throw std::logic_error("AuxSet: discrete, no interval representation");
    return iv_;
  }
  const std::vector<int>& points() const {
    if (!discrete_) throw std::logic_error("AuxSet: continuous, no point list");
    return pts_;
  }

  std::string to_string() const {
    if (!discrete_) return iv_.to_string();
    std::string s = "{";
    for (std::size_t i = 0; i < pts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(pts_[i]);
    }
    return s + "}";
  }

 private:
  void check_same_kind(const AuxSet& other) const {
    if (discrete_ != other.discrete_)
      throw std::logic_error("AuxSet: mixed discrete/continuous operation");
  }
  bool discrete_;
  IntervalUnion iv_;
  std::vector<int> pts_;
};

}  // namespace im

#endif
