#ifndef IM_INTERVAL_HPP
#define IM_INTERVAL_HPP

#include <limits>
#include <string>
#include <vector>

namespace im {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// A single interval with independent open/closed endpoint flags.
// Infinite endpoints are always open.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_open = false;
  bool hi_open = false;

  static Interval closed(double a, double b) { return {a, b, false, false}; }
  static Interval open(double a, double b) { return {a, b, true, true}; }
  static Interval left_open(double a, double b) { return {a, b, true, false}; }
  static Interval right_open(double a, double b) { return {a, b, false, true}; }
  static Interval point(double a) { return {a, a, false, false}; }
  static Interval whole_line() { return {-kInf, kInf, true, true}; }

  bool empty() const {
    if (lo > hi) return true;
    if (lo == hi) return lo_open || hi_open || lo == -kInf || hi == kInf;
    return false;
  }
  bool contains(double x) const {
    if (x < lo || x > hi) return false;
    if (x == lo && lo_open) return false;
    if (x == hi && hi_open) return false;
    return true;
  }
  double length() const { return empty() ? 0.0 : hi - lo; }
};

// Normalized union of disjoint, sorted, non-mergeable intervals.
// All set operations are exact (no tolerances); endpoint flags are
// tracked through every operation.
class IntervalUnion {
 public:
  IntervalUnion() = default;
  IntervalUnion(std::initializer_list<Interval> parts);
  explicit IntervalUnion(std::vector<Interval> parts);

  static IntervalUnion empty_set() { return IntervalUnion(); }
  static IntervalUnion whole_line() { return IntervalUnion({Interval::whole_line()}); }
  static IntervalUnion of(Interval iv) { return IntervalUnion({iv}); }

  const std::vector<Interval>& parts() const { return parts_; }
  bool is_empty() const { return parts_.empty(); }
  bool contains(double x) const;
  double measure() const;  // total length (+inf for unbounded)

  IntervalUnion complement() const;  // with respect to the whole real line

  bool subset_of(const IntervalUnion& other) const;
  bool intersects(const IntervalUnion& other) const;
  bool operator==(const IntervalUnion& other) const { return parts_ == other.parts_; }

  std::string to_string() const;

  friend IntervalUnion unite(const IntervalUnion& a, const IntervalUnion& b);
  friend IntervalUnion intersect(const IntervalUnion& a, const IntervalUnion& b);

 private:
  void normalize();
  std::vector<Interval> parts_;
};

inline bool operator==(const Interval& a, const Interval& b) {
  return a.lo == b.lo && a.hi == b.hi && a.lo_open == b.lo_open && a.hi_open == b.hi_open;
}

IntervalUnion unite(const IntervalUnion& a, const IntervalUnion& b);
IntervalUnion intersect(const IntervalUnion& a, const IntervalUnion& b);

// Parses interval-union strings like "(-inf,0]|(2,3)" or "[1,1]".
IntervalUnion parse_interval_union(const std::string& text);

}  // namespace im

#endif
