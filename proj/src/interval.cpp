#include "im/interval.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace im {

IntervalUnion::IntervalUnion(std::initializer_list<Interval> parts)
    : parts_(parts) {
  normalize();
}

IntervalUnion::IntervalUnion(std::vector<Interval> parts) : parts_(std::move(parts)) {
  normalize();
}

void IntervalUnion::normalize() {
  std::vector<Interval> in;
  in.reserve(parts_.size());
  for (Interval iv : parts_) {
    if (iv.lo == -kInf) iv.lo_open = true;
    if (iv.hi == kInf) iv.hi_open = true;
    if (!iv.empty()) in.push_back(iv);
  }
  std::sort(in.begin(), in.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return !a.lo_open && b.lo_open;  // closed endpoint first
  });
  parts_.clear();
  for (const Interval& iv : in) {
    if (!parts_.empty()) {
      Interval& last = parts_.back();
      bool overlaps = iv.lo < last.hi ||
                      (iv.lo == last.hi && !(iv.lo_open && last.hi_open));
      if (overlaps) {
        if (iv.hi > last.hi) {
          last.hi = iv.hi;
          last.hi_open = iv.hi_open;
        } else if (iv.hi == last.hi) {
          last.hi_open = last.hi_open && iv.hi_open;
        }
        continue;
      }
    }
    parts_.push_back(iv);
  }
}

bool IntervalUnion::contains(double x) const {
  for (const Interval& iv : parts_)
    if (iv.contains(x)) return true;
  return false;
}

double IntervalUnion::measure() const {
  double m = 0.0;
  for (const Interval& iv : parts_) m += iv.length();
  return m;
}

IntervalUnion IntervalUnion::complement() const {
  std::vector<Interval> out;
  double cursor = -kInf;
  bool cursor_open = true;
  for (const Interval& iv : parts_) {
    Interval gap{cursor, iv.lo, cursor_open, !iv.lo_open};
    if (!gap.empty()) out.push_back(gap);
    cursor = iv.hi;
    cursor_open = !iv.hi_open;
  }
  Interval tail{cursor, kInf, cursor_open, true};
  if (!tail.empty()) out.push_back(tail);
  return IntervalUnion(std::move(out));
}

IntervalUnion unite(const IntervalUnion& a, const IntervalUnion& b) {
  std::vector<Interval> all = a.parts_;
  all.insert(all.end(), b.parts_.begin(), b.parts_.end());
  return IntervalUnion(std::move(all));
}

namespace {

Interval intersect_one(const Interval& a, const Interval& b) {
  Interval r;
  if (a.lo > b.lo) {
    r.lo = a.lo;
    r.lo_open = a.lo_open;
  } else if (a.lo < b.lo) {
    r.lo = b.lo;
    r.lo_open = b.lo_open;
  } else {
    r.lo = a.lo;
    r.lo_open = a.lo_open || b.lo_open;
  }
  if (a.hi < b.hi) {
    r.hi = a.hi;
    r.hi_open = a.hi_open;
  } else if (a.hi > b.hi) {
    r.hi = b.hi;
    r.hi_open = b.hi_open;
  } else {
    r.hi = a.hi;
    r.hi_open = a.hi_open || b.hi_open;
  }
  return r;
}

}  // namespace

IntervalUnion intersect(const IntervalUnion& a, const IntervalUnion& b) {
  std::vector<Interval> out;
  for (const Interval& x : a.parts_)
    for (const Interval& y : b.parts_) {
      Interval r = intersect_one(x, y);
      if (!r.empty()) out.push_back(r);
    }
  return IntervalUnion(std::move(out));
}

bool IntervalUnion::subset_of(const IntervalUnion& other) const {
  return intersect(*this, other.complement()).is_empty();
}

bool IntervalUnion::intersects(const IntervalUnion& other) const {
  return !intersect(*this, other).is_empty();
}

namespace {

std::string num_to_string(double x) {
  if (x == kInf) return "inf";
  if (x == -kInf) return "-inf";
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

double parse_num(const std::string& tok) {
  std::string t;
  for (char c : tok)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t == "inf" || t == "+inf") return kInf;
  if (t == "-inf") return -kInf;
  std::size_t pos = 0;
  double v = std::stod(t, &pos);
  if (pos != t.size()) throw std::invalid_argument("bad number in interval: " + tok);
  return v;
}

}  // namespace

std::string IntervalUnion::to_string() const {
  if (parts_.empty()) return "{}";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    const Interval& iv = parts_[i];
    if (i) s += "|";
    s += iv.lo_open ? '(' : '[';
    s += num_to_string(iv.lo);
    s += ',';
    s += num_to_string(iv.hi);
    s += iv.hi_open ? ')' : ']';
  }
  return s;
}

IntervalUnion parse_interval_union(const std::string& text) {
  std::vector<Interval> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, '|')) {
    std::size_t b = tok.find_first_not_of(" \t");
    std::size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    tok = tok.substr(b, e - b + 1);
    if (tok == "{}") continue;
    if (tok.size() < 5 || (tok.front() != '(' && tok.front() != '[') ||
        (tok.back() != ')' && tok.back() != ']'))
      throw std::invalid_argument("bad interval token: " + tok);
    std::size_t comma = tok.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("bad interval token: " + tok);
    Interval iv;
    iv.lo_open = tok.front() == '(';
    iv.hi_open = tok.back() == ')';
    iv.lo = parse_num(tok.substr(1, comma - 1));
    iv.hi = parse_num(tok.substr(comma + 1, tok.size() - comma - 2));
    parts.push_back(iv);
  }
  return IntervalUnion(std::move(parts));
}

}  // namespace im
