#include "im/param_set.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace im {

ParamSet ParamSet::intervals(IntervalUnion u) {
  ParamSet s;
  s.kind_ = Kind::Intervals;
  s.iv_ = std::move(u);
  return s;
}

ParamSet ParamSet::finite(std::vector<double> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  ParamSet s;
  s.kind_ = Kind::Finite;
  s.finite_ = std::move(points);
  return s;
}

ParamSet ParamSet::points2(std::vector<std::array<double, 2>> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  ParamSet s;
  s.kind_ = Kind::Points2;
  s.pts2_ = std::move(points);
  return s;
}

ParamSet ParamSet::predicate(std::function<bool(double)> member, std::string label) {
  ParamSet s;
  s.kind_ = Kind::Predicate;
  s.pred_ = std::move(member);
  s.label_ = std::move(label);
  return s;
}

bool ParamSet::is_empty() const {
  switch (kind_) {
    case Kind::Intervals: return iv_.is_empty();
    case Kind::Finite: return finite_.empty();
    case Kind::Points2: return pts2_.empty();
    case Kind::Predicate:
      throw std::logic_error("ParamSet: emptiness undecidable for predicate sets");
  }
  return true;
}

bool ParamSet::contains(double x) const {
  switch (kind_) {
    case Kind::Intervals: return iv_.contains(x);
    case Kind::Finite: return std::binary_search(finite_.begin(), finite_.end(), x);
    case Kind::Predicate: return pred_(x);
    case Kind::Points2:
      throw std::logic_error("ParamSet: scalar membership on a 2-D point set");
  }
  return false;
}

bool ParamSet::contains2(const std::array<double, 2>& p) const {
  if (kind_ != Kind::Points2)
    throw std::logic_error("ParamSet: 2-D membership on a non-2-D set");
  return std::binary_search(pts2_.begin(), pts2_.end(), p);
}

IntervalUnion ParamSet::to_intervals() const {
  if (kind_ == Kind::Intervals) return iv_;
  if (kind_ == Kind::Finite) {
    std::vector<Interval> parts;
    parts.reserve(finite_.size());
    for (double x : finite_) parts.push_back(Interval::point(x));
    return IntervalUnion(std::move(parts));
  }
  throw std::logic_error("ParamSet: no exact interval representation");
}

ParamSet ParamSet::complement() const {
  return intervals(to_intervals().complement());
}

bool ParamSet::subset_of(const ParamSet& other) const {
  if (kind_ == Kind::Finite && other.kind_ == Kind::Finite) {
    return std::includes(other.finite_.begin(), other.finite_.end(),
                         finite_.begin(), finite_.end());
  }
  if (kind_ == Kind::Finite) {
    if (other.kind_ == Kind::Predicate) {
      for (double x : finite_)
        if (!other.pred_(x)) return false;
      return true;
    }
    for (double x : finite_)
      if (!other.contains(x)) return false;
    return true;
  }
  return to_intervals().subset_of(other.to_intervals());
}

bool ParamSet::intersects(const ParamSet& other) const {
  if (kind_ == Kind::Finite) {
    for (double x : finite_)
      if (other.contains(x)) return true;
    return false;
  }
  if (other.kind_ == Kind::Finite) return other.intersects(*this);
  return to_intervals().intersects(other.to_intervals());
}

ParamSet unite(const ParamSet& a, const ParamSet& b) {
  if (a.kind_ == ParamSet::Kind::Finite && b.kind_ == ParamSet::Kind::Finite) {
    std::vector<double> pts = a.finite_;
    pts.insert(pts.end(), b.finite_.begin(), b.finite_.end());
    return ParamSet::finite(std::move(pts));
  }
  return ParamSet::intervals(unite(a.to_intervals(), b.to_intervals()));
}

ParamSet intersect(const ParamSet& a, const ParamSet& b) {
  if (a.kind_ == ParamSet::Kind::Finite) {
    std::vector<double> pts;
    for (double x : a.finite_)
      if (b.contains(x)) pts.push_back(x);
    return ParamSet::finite(std::move(pts));
  }
  if (b.kind_ == ParamSet::Kind::Finite) return intersect(b, a);
  return ParamSet::intervals(intersect(a.to_intervals(), b.to_intervals()));
}

const IntervalUnion& ParamSet::as_intervals() const {
  if (kind_ != Kind::Intervals) throw std::logic_error("ParamSet: not interval-union");
  return iv_;
}

const std::vector<double>& ParamSet::as_finite() const {
  if (kind_ != Kind::Finite) throw std::logic_error("ParamSet: not finite");
  return finite_;
}

const std::vector<std::array<double, 2>>& ParamSet::as_points2() const {
  if (kind_ != Kind::Points2) throw std::logic_error("ParamSet: not 2-D points");
  return pts2_;
}

std::string ParamSet::to_string() const {
  switch (kind_) {
    case Kind::Intervals: return iv_.to_string();
    case Kind::Finite: {
      std::ostringstream os;
      os.precision(17);
      os << "{";
      for (std::size_t i = 0; i < finite_.size(); ++i) {
        if (i) os << ",";
        os << finite_[i];
      }
      os << "}";
      return os.str();
    }
    case Kind::Points2: {
      std::ostringstream os;
      os.precision(17);
      os << "{";
      for (std::size_t i = 0; i < pts2_.size(); ++i) {
        if (i) os << ",";
        os << "(" << pts2_[i][0] << "," << pts2_[i][1] << ")";
      }
      os << "}";
      return os.str();
    }
    case Kind::Predicate: return label_.empty() ? "<predicate>" : label_;
  }
  return "";
}

ParamSet parse_param_set(const std::string& text) {
  std::size_t b = text.find_first_not_of(" \t");
  if (b == std::string::npos) return ParamSet::empty_set();
  std::size_t e = text.find_last_not_of(" \t");
  std::string t = text.substr(b, e - b + 1);
  if (t.front() == '{') {
    if (t.back() != '}') throw std::invalid_argument("unterminated finite set: " + text);
    std::vector<double> pts;
    std::stringstream ss(t.substr(1, t.size() - 2));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.find_first_not_of(" \t") == std::string::npos) continue;
      pts.push_back(std::stod(tok));
    }
    return ParamSet::finite(std::move(pts));
  }
  return ParamSet::intervals(parse_interval_union(t));
}

}  // namespace im
