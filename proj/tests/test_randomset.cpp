#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "im/randomset.hpp"

using namespace im;

TEST_CASE("builtin gamma values") {
  NestedFamily two = builtin_randomset("two-sided");
  CHECK(two.gamma(0.5) == doctest::Approx(1.0));
  CHECK(two.gamma(0.975) == doctest::Approx(0.05).epsilon(1e-12));
  NestedFamily left = builtin_randomset("left");
  CHECK(left.gamma(0.3) == doctest::Approx(0.7).epsilon(1e-12));
  NestedFamily right = builtin_randomset("right");
  CHECK(right.gamma(0.3) == doctest::Approx(0.3).epsilon(1e-12));
  CHECK_THROWS(builtin_randomset("no-such-family"));
}

TEST_CASE("level sets from gamma") {
  NestedFamily f = NestedFamily::from_gamma(
      [](double u) { return 1.0 - std::abs(2.0 * u - 1.0); });
  AuxSet s = f.level_set(0.5);
  const auto& p = s.intervals().parts();
  REQUIRE(p.size() == 1);
  CHECK(p[0].lo == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(p[0].hi == doctest::Approx(0.75).epsilon(1e-9));

  NestedFamily ones = NestedFamily::from_gamma([](double) { return 1.0; });
  for (double a : {0.1, 0.5, 0.99}) {
    AuxSet ls = ones.level_set(a);
    CHECK(ls.intervals().measure() == doctest::Approx(1.0).epsilon(1e-9));
  }

  NestedFamily d = NestedFamily::discrete_from_gamma({1.0, 0.75, 0.5, 0.25});
  CHECK(d.level_set(0.6).points() == std::vector<int>{0, 1, 2});
  // realization decomposition is the chain of prefixes, each 1/4
  const auto& reals = d.realizations();
  REQUIRE(reals.size() == 4);
  for (const auto& [prob, set] : reals) CHECK(prob == doctest::Approx(0.25));
  CHECK(reals[0].second.points() == std::vector<int>{0});
  CHECK(reals[3].second.points() == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("nesting: level sets are monotone in alpha") {
  for (const char* name : {"two-sided", "left", "right"}) {
    NestedFamily f = builtin_randomset(name);
    for (double a1 = 0.05; a1 < 1.0; a1 += 0.1)
      for (double a2 = a1 + 0.05; a2 < 1.0; a2 += 0.1)
        CHECK(f.level_set(a1).subset_of(f.level_set(a2)));
  }
  NestedFamily d = builtin_discrete_randomset("two-sided", 7);
  for (double a1 = 0.1; a1 < 1.0; a1 += 0.2)
    for (double a2 = a1 + 0.1; a2 <= 1.0; a2 += 0.2)
      CHECK(d.level_set(a1).subset_of(d.level_set(a2)));
}

TEST_CASE("containment frequency matches gamma within 3 SE") {
  Rng rng(17);
  const long n = 100000;
  for (const char* name : {"two-sided", "left", "offset"}) {
    NestedFamily f = builtin_randomset(name);
    for (int k = 1; k <= 11; ++k) {
      double u = k / 12.0;
      long hits = 0;
      Rng local = rng.substream(k);
      for (long i = 0; i < n; ++i)
        if (f.draw(local).contains(u)) ++hits;
      double est = static_cast<double>(hits) / n;
      double g = f.gamma(u);
      double se = std::sqrt(std::max(g * (1.0 - g), 1e-12) / n);
      CHECK(std::abs(est - g) <= 3.0 * se + 1e-9);
    }
  }
}

TEST_CASE("nested construction reproduces gamma") {
  NestedFamily base = builtin_randomset("offset");  // not nested
  NestedFamily nested = NestedFamily::from_gamma([&](double u) { return base.gamma(u); });
  CHECK(nested.nested());
  Rng rng(4);
  const long n = 100000;
  for (double u : {0.1, 0.4, 0.5, 0.8}) {
    long hits = 0;
    for (long i = 0; i < n; ++i)
      if (nested.draw(rng).contains(u)) ++hits;
    double est = static_cast<double>(hits) / n;
    double g = base.gamma(u);
    double se = std::sqrt(std::max(g * (1.0 - g), 1e-12) / n);
    CHECK(std::abs(est - g) <= 3.0 * se + 1e-9);
  }
}

TEST_CASE("principle nested sets") {
  NestedFamily two = builtin_randomset("two-sided");
  AuxSet s95 = principle_nested_set(two, 0.95);
  const auto& p = s95.intervals().parts();
  REQUIRE(p.size() == 1);
  CHECK(p[0].lo == doctest::Approx(0.025).epsilon(1e-9));
  CHECK(p[0].hi == doctest::Approx(0.975).epsilon(1e-9));

  // alpha = 0 degenerates to the gamma = 1 core: the center point
  AuxSet s0 = principle_nested_set(two, 0.0);
  REQUIRE(s0.intervals().parts().size() == 1);
  CHECK(s0.intervals().parts()[0] == Interval::point(0.5));

  NestedFamily left = builtin_randomset("left");
  AuxSet l = principle_nested_set(left, 0.3);
  REQUIRE(l.intervals().parts().size() == 1);
  CHECK(l.intervals().parts()[0].lo == doctest::Approx(0.0));
  CHECK(l.intervals().parts()[0].hi == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(l.contains(0.0));
  CHECK(!l.contains(0.3));

  NestedFamily ones = NestedFamily::from_gamma([](double) { return 1.0; });
  CHECK(principle_nested_set(ones, 0.0).intervals().measure() ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("validity condition checker") {
  std::vector<double> alphas;
  for (int i = 1; i <= 19; ++i) alphas.push_back(0.05 * i);

  Rng rng(8);
  auto aux = AuxDistribution::uniform01();
  ValidityReport ok = check_validity_condition(builtin_randomset("two-sided"), aux,
                                               100000, alphas, rng);
  CHECK(ok.ok());
  CHECK(ok.gamma_uniform);

  ValidityReport ones = check_validity_condition(
      NestedFamily::from_gamma([](double) { return 1.0; }), aux, 100000, alphas, rng);
  CHECK(ones.ok());
  CHECK(!ones.gamma_uniform);

  // deliberately invalid: P(gamma <= alpha) = sqrt(alpha) > alpha
  ValidityReport bad = check_validity_condition(
      NestedFamily::from_gamma([](double u) { return u * u; }), aux, 100000, alphas, rng);
  CHECK(!bad.ok());
  CHECK(!bad.gamma_uniform);

  // exact discrete path
  ValidityReport dl = check_validity_condition(builtin_discrete_randomset("left", 4),
                                               AuxDistribution::discrete_uniform(4), 0,
                                               alphas, rng);
  CHECK(dl.ok());
  CHECK(dl.gamma_uniform);
  ValidityReport doff = check_validity_condition(builtin_discrete_randomset("offset", 4),
                                                 AuxDistribution::discrete_uniform(4), 0,
                                                 alphas, rng);
  CHECK(doff.ok());
  CHECK(!doff.gamma_uniform);
}

TEST_CASE("discrete offset family is sub-uniform for a range of sizes") {
  for (int n = 3; n <= 9; ++n) {
    NestedFamily f = builtin_discrete_randomset("offset", n);
    CHECK(!f.nested());
    double total = 0.0;
    for (const auto& [p, s] : f.realizations()) total += p;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    for (int j = 1; j <= n; ++j) {
      double a = static_cast<double>(j) / n;
      int count = 0;
      for (int i = 0; i < n; ++i)
        if (f.gamma(i) <= a + 1e-12) ++count;
      CHECK(static_cast<double>(count) / n <= a + 1e-12);
    }
  }
}

TEST_CASE("gamma table interpolation") {
  NestedFamily f = randomset_from_table({{0.0, 1.0}, {1.0, 0.0}});
  CHECK(f.gamma(0.3) == doctest::Approx(0.7).epsilon(1e-12));
  AuxSet s = f.level_set(0.4);
  REQUIRE(s.intervals().parts().size() == 1);
  CHECK(s.intervals().parts()[0].hi == doctest::Approx(0.4).epsilon(1e-9));
  CHECK_THROWS(randomset_from_table({{0.0, 1.0}}));
}

TEST_CASE("independent draws of a nested family intersect") {
  Rng rng(99);
  NestedFamily f = builtin_randomset("two-sided");
  for (int rep = 0; rep < 200; ++rep) {
    AuxSet a = f.draw(rng);
    AuxSet b = f.draw(rng);
    if (!a.is_empty() && !b.is_empty()) CHECK(a.intersects(b));
  }
}
