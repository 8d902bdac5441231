#include "im/randomset.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "im/special.hpp"

namespace im {

namespace {

constexpr int kGridCells = 4096;  // 2^12 inversion resolution

// Sublevel set {u in [0,1] : gamma(u) > 1 - alpha} by grid scan with
// bisection refinement at indicator changes.
AuxSet invert_gamma(const std::function<double(double)>& gamma, double alpha) {
  const double t = 1.0 - alpha;
  auto above = [&](double u) { return gamma(u) > t; };
  std::vector<Interval> parts;
  double open_at = 0.0;
  bool inside = above(0.0);
  if (inside) open_at = 0.0;
  for (int i = 0; i < kGridCells; ++i) {
    double u0 = static_cast<double>(i) / kGridCells;
    double u1 = static_cast<double>(i + 1) / kGridCells;
    bool next = above(u1);
    if (next == inside) continue;
    // bisect the crossing
    double lo = u0, hi = u1;
    for (int it = 0; it < 60; ++it) {
      double mid = 0.5 * (lo + hi);
      if (above(mid) == inside)
        lo = mid;
      else
        hi = mid;
    }
    double c = 0.5 * (lo + hi);
    if (inside)
      parts.push_back(Interval::open(open_at, c));
    else
      open_at = c;
    inside = next;
  }
  if (inside) parts.push_back(Interval::open(open_at, 1.0));
  return AuxSet::continuous(IntervalUnion(std::move(parts)));
}

}  // namespace

NestedFamily NestedFamily::continuous(std::string name,
                                      std::function<double(double)> gamma,
                                      std::function<AuxSet(double)> alpha_set,
                                      bool nested,
                                      std::function<AuxSet(double)> level_set_fn) {
  NestedFamily f;
  f.name_ = std::move(name);
  f.discrete_ = false;
  f.nested_ = nested;
  f.gamma_ = std::move(gamma);
  f.alpha_set_ = std::move(alpha_set);
  f.level_set_ = std::move(level_set_fn);
  return f;
}

NestedFamily NestedFamily::from_gamma(std::function<double(double)> gamma,
                                      std::string name) {
  NestedFamily f;
  f.name_ = std::move(name);
  f.discrete_ = false;
  f.nested_ = true;
  f.gamma_ = std::move(gamma);
  // draws use the sublevel parametrization itself
  return f;
}

NestedFamily NestedFamily::discrete(std::string name,
                                    std::vector<std::pair<double, AuxSet>> realizations,
                                    bool nested, int support_size) {
  NestedFamily f;
  f.name_ = std::move(name);
  f.discrete_ = true;
  f.nested_ = nested;
  f.gamma_table_.assign(support_size, 0.0);
  double total = 0.0;
  for (const auto& [p, s] : realizations) {
    total += p;
    for (int i : s.points()) f.gamma_table_[i] += p;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("discrete family: realization probabilities must sum to 1");
  f.realizations_ = std::move(realizations);
  return f;
}

NestedFamily NestedFamily::discrete_from_gamma(std::vector<double> gamma_table,
                                               std::string name) {
  const int n = static_cast<int>(gamma_table.size());
  // distinct gamma values, descending
  std::vector<double> levels = gamma_table;
  std::sort(levels.begin(), levels.end(), std::greater<double>());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::vector<std::pair<double, AuxSet>> reals;
  double prev_alpha = 0.0;
  if (!levels.empty() && levels.front() < 1.0) {
    // gamma never reaches 1: empty realizations with positive probability
    reals.emplace_back(1.0 - levels.front(), AuxSet::empty_discrete());
    prev_alpha = 1.0 - levels.front();
  }
  for (std::size_t j = 0; j < levels.size(); ++j) {
    if (levels[j] <= 0.0) break;
    double next_alpha = j + 1 < levels.size() ? 1.0 - levels[j + 1] : 1.0;
    std::vector<int> pts;
    for (int i = 0; i < n; ++i)
      if (gamma_table[i] >= levels[j]) pts.push_back(i);
    reals.emplace_back(next_alpha - prev_alpha, AuxSet::discrete(std::move(pts)));
    prev_alpha = next_alpha;
  }
  NestedFamily f = discrete(std::move(name), std::move(reals), true, n);
  f.gamma_table_ = std::move(gamma_table);  // keep caller's table verbatim
  return f;
}

double NestedFamily::gamma(double u) const {
  if (discrete_) {
    int i = static_cast<int>(u);
    if (i < 0 || i >= static_cast<int>(gamma_table_.size())) return 0.0;
    return gamma_table_[i];
  }
  return gamma_(u);
}

const std::vector<double>& NestedFamily::gamma_table() const {
  if (!discrete_) throw std::logic_error("gamma_table: continuous family");
  return gamma_table_;
}

AuxSet NestedFamily::level_set(double alpha) const {
  if (discrete_) {
    std::vector<int> pts;
    for (int i = 0; i < static_cast<int>(gamma_table_.size()); ++i)
      if (gamma_table_[i] > 1.0 - alpha) pts.push_back(i);
    return AuxSet::discrete(std::move(pts));
  }
  if (level_set_) return level_set_(alpha);
  if (alpha <= 0.0) return AuxSet::empty_continuous();
  return invert_gamma(gamma_, alpha);
}

AuxSet NestedFamily::realization(double ustar) const {
  if (discrete_) {
    double cum = 0.0;
    for (const auto& [p, s] : realizations_) {
      cum += p;
      if (ustar <= cum) return s;
    }
    return realizations_.back().second;
  }
  if (alpha_set_) return alpha_set_(ustar);
  return level_set(ustar);
}

const std::vector<std::pair<double, AuxSet>>& NestedFamily::realizations() const {
  if (!discrete_) throw std::logic_error("realizations: continuous family");
  return realizations_;
}

NestedFamily builtin_randomset(const std::string& name) {
  if (name == "two-sided") {
    return NestedFamily::continuous(
        name, [](double u) { return 1.0 - std::abs(2.0 * u - 1.0); },
        [](double a) {
          double w = std::abs(a - 0.5);
          return AuxSet::continuous(IntervalUnion::of(Interval::open(0.5 - w, 0.5 + w)));
        },
        true,
        [](double a) {
          if (a <= 0.0) return AuxSet::empty_continuous();
          double w = 0.5 * std::min(a, 1.0);
          return AuxSet::continuous(IntervalUnion::of(Interval::open(0.5 - w, 0.5 + w)));
        });
  }
  if (name == "left") {
    return NestedFamily::continuous(
        name, [](double u) { return 1.0 - u; },
        [](double a) {
          return AuxSet::continuous(IntervalUnion::of(Interval::closed(0.0, a)));
        },
        true,
        [](double a) {
          if (a <= 0.0) return AuxSet::empty_continuous();
          return AuxSet::continuous(
              IntervalUnion::of(Interval::right_open(0.0, std::min(a, 1.0))));
        });
  }
  if (name == "right") {
    return NestedFamily::continuous(
        name, [](double u) { return u; },
        [](double a) {
          return AuxSet::continuous(IntervalUnion::of(Interval::closed(a, 1.0)));
        },
        true,
        [](double a) {
          if (a <= 0.0) return AuxSet::empty_continuous();
          return AuxSet::continuous(
              IntervalUnion::of(Interval::left_open(1.0 - std::min(a, 1.0), 1.0)));
        });
  }
  if (name == "offset") {
    // Shares the two-sided gamma but is not nested: the windows slide.
    return NestedFamily::continuous(
        name, [](double u) { return 1.0 - std::abs(2.0 * u - 1.0); },
        [](double a) {
          return AuxSet::continuous(
              IntervalUnion::of(Interval::open(0.5 * a, 0.5 + 0.5 * a)));
        },
        false,
        [](double a) {
          if (a <= 0.0) return AuxSet::empty_continuous();
          double w = 0.5 * std::min(a, 1.0);
          return AuxSet::continuous(IntervalUnion::of(Interval::open(0.5 - w, 0.5 + w)));
        });
  }
  throw std::invalid_argument("unknown random set family: " + name);
}

namespace {

std::vector<int> inclusion_order(const std::string& name, int n) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  if (name == "right") {
    std::reverse(order.begin(), order.end());
  } else if (name == "two-sided") {
    double center = 0.5 * (n - 1);
    std::stable_sort(order.begin(), order.end(), [center](int a, int b) {
      return std::abs(a - center) < std::abs(b - center);
    });
  }
  return order;
}

}  // namespace

NestedFamily builtin_discrete_randomset(const std::string& name, int n) {
  if (n < 1) throw std::invalid_argument("discrete family: N must be positive");
  if (name == "left" || name == "right" || name == "two-sided") {
    std::vector<int> order = inclusion_order(name, n);
    std::vector<std::pair<double, AuxSet>> reals;
    std::vector<int> prefix;
    for (int m = 0; m < n; ++m) {
      prefix.push_back(order[m]);
      reals.emplace_back(1.0 / n, AuxSet::discrete(prefix));
    }
    return NestedFamily::discrete("discrete-" + name, std::move(reals), true, n);
  }
  if (name == "offset") {
    // Non-nested variant: the first prefix cell is split into {o0,o1}
    // and {o0,o2}; gamma stays sub-uniform for every n >= 3.
    if (n < 3) throw std::invalid_argument("discrete offset family needs N >= 3");
    std::vector<std::pair<double, AuxSet>> reals;
    reals.emplace_back(0.5 / n, AuxSet::discrete({0, 1}));
    reals.emplace_back(0.5 / n, AuxSet::discrete({0, 2}));
    std::vector<int> prefix = {0, 1};
    for (int m = 2; m <= n; ++m) {
      if (m > 2) prefix.push_back(m - 1);
      reals.emplace_back(1.0 / n, AuxSet::discrete(prefix));
    }
    return NestedFamily::discrete("discrete-offset", std::move(reals), false, n);
  }
  throw std::invalid_argument("unknown discrete random set family: " + name);
}

NestedFamily randomset_from_table(const std::vector<std::pair<double, double>>& table) {
  if (table.size() < 2)
    throw std::invalid_argument("gamma table needs at least two points");
  auto pts = table;
  std::sort(pts.begin(), pts.end());
  auto gamma = [pts](double u) {
    if (u <= pts.front().first) return pts.front().second;
    if (u >= pts.back().first) return pts.back().second;
    auto it = std::upper_bound(pts.begin(), pts.end(), std::make_pair(u, kInf));
    auto lo = std::prev(it);
    double w = (u - lo->first) / (it->first - lo->first);
    return (1.0 - w) * lo->second + w * it->second;
  };
  return NestedFamily::from_gamma(gamma, "table");
}

AuxSet principle_nested_set(const NestedFamily& fam, double alpha) {
  if (alpha > 0.0) return fam.level_set(alpha);
  // alpha = 0: the intersection of all realizations, i.e. {u : gamma(u) = 1}
  if (fam.is_discrete()) {
    std::vector<int> pts;
    const auto& g = fam.gamma_table();
    for (int i = 0; i < static_cast<int>(g.size()); ++i)
      if (g[i] >= 1.0) pts.push_back(i);
    return AuxSet::discrete(std::move(pts));
  }
  // grid scan for {u : gamma(u) = 1}; isolated grid nodes become points
  std::vector<Interval> parts;
  const double tol = 1e-15;
  int run_start = -1;
  for (int i = 0; i <= kGridCells; ++i) {
    double u = static_cast<double>(i) / kGridCells;
    bool at_one = fam.gamma(u) >= 1.0 - tol;
    if (at_one && run_start < 0) run_start = i;
    if ((!at_one || i == kGridCells) && run_start >= 0) {
      int run_end = at_one ? i : i - 1;
      double a = static_cast<double>(run_start) / kGridCells;
      double b = static_cast<double>(run_end) / kGridCells;
      parts.push_back(run_start == run_end ? Interval::point(a) : Interval::closed(a, b));
      run_start = -1;
    }
  }
  return AuxSet::continuous(IntervalUnion(std::move(parts)));
}

ValidityReport check_validity_condition(const NestedFamily& fam,
                                        const AuxDistribution& aux, long n_mc,
                                        const std::vector<double>& alphas, Rng& rng) {
  ValidityReport rep;
  if (aux.is_discrete()) {
    const int n = aux.support_size();
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = fam.gamma(i);
    for (double a : alphas) {
      ValidityRow row;
      row.alpha = a;
      int count = 0;
      for (double gi : g)
        if (gi <= a) ++count;
      row.prob = static_cast<double>(count) / n;
      row.se = 0.0;
      row.violated = row.prob > a;
      rep.rows.push_back(row);
    }
    std::vector<double> sorted = g;
    std::sort(sorted.begin(), sorted.end());
    rep.gamma_uniform = true;
    for (int j = 0; j < n; ++j)
      if (std::abs(sorted[j] - static_cast<double>(j + 1) / n) > 1e-12)
        rep.gamma_uniform = false;
    return rep;
  }
  if (n_mc < 10000)
    throw std::invalid_argument("check_validity_condition: n_mc must be >= 10^4");
  std::vector<double> sample(n_mc);
  for (long i = 0; i < n_mc; ++i) sample[i] = fam.gamma(aux.sample(rng));
  std::sort(sample.begin(), sample.end());
  for (double a : alphas) {
    ValidityRow row;
    row.alpha = a;
    auto it = std::upper_bound(sample.begin(), sample.end(), a);
    row.prob = static_cast<double>(it - sample.begin()) / n_mc;
    row.se = std::sqrt(std::max(row.prob * (1.0 - row.prob), 1e-12) / n_mc);
    row.violated = row.prob > a + 3.0 * row.se;
    rep.rows.push_back(row);
  }
  rep.ks = ks_distance(sample, +[](double x) {
    return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x);
  });
  rep.gamma_uniform = std::sqrt(static_cast<double>(n_mc)) * rep.ks < 1.63;
  return rep;
}

}  // namespace im
