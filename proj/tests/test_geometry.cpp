#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ctv/errors.hpp"
#include "ctv/tverberg.hpp"
#include "support/oracles.hpp"

using namespace ctv;

namespace {

RationalPoint pt(std::vector<int> coords) {
  RationalPoint p;
  for (int c : coords) {
    p.coords.emplace_back(c);
  }
  return p;
}

}  // namespace

TEST_CASE("hulls_intersect on segments") {
  // Two crossing diagonals of a square meet at (1, 1).
  auto w = hulls_intersect({{pt({0, 0}), pt({2, 2})}, {pt({0, 2}), pt({2, 0})}});
  REQUIRE(w.has_value());
  CHECK(w->point.coords == std::vector<Rational>{1, 1});
  CHECK(witness_valid(*w, {{pt({0, 0}), pt({2, 2})}, {pt({0, 2}), pt({2, 0})}}));

  // Disjoint collinear segments do not meet.
  CHECK_FALSE(hulls_intersect({{pt({0, 0}), pt({1, 0})}, {pt({2, 0}), pt({3, 0})}}).has_value());

  CHECK_THROWS_AS(hulls_intersect({{pt({0, 0})}, {}}), PreconditionError);
  CHECK_THROWS_AS(hulls_intersect({{pt({0, 0})}, {pt({1})}}), PreconditionError);
}

TEST_CASE("hulls_intersect handles coincident and degenerate points") {
  // Repeated points are legal.
  auto w = hulls_intersect({{pt({1, 1}), pt({1, 1})}, {pt({1, 1})}});
  REQUIRE(w.has_value());
  CHECK(w->point.coords == std::vector<Rational>{1, 1});

  // Single shared vertex.
  auto w2 = hulls_intersect({{pt({0, 0}), pt({1, 0})}, {pt({1, 0}), pt({2, 3})}});
  REQUIRE(w2.has_value());
  CHECK(w2->point.coords == std::vector<Rational>{1, 0});
}

TEST_CASE("LP agrees with the exhaustive subset oracle") {
  std::mt19937 rng(41);
  int agree = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int d = 1 + static_cast<int>(rng() % 3);
    int r = 2 + static_cast<int>(rng() % 2);
    // Up to 8 points total, at least one per part.
    std::vector<std::vector<RationalPoint>> parts(r);
    int budget = 8;
    for (int i = 0; i < r; ++i) {
      int size = 1 + static_cast<int>(rng() % 3);
      size = std::min(size, budget - (r - i - 1));
      budget -= size;
      for (int k = 0; k < size; ++k) {
        RationalPoint p;
        for (int t = 0; t < d; ++t) {
          p.coords.emplace_back(static_cast<int>(rng() % 7) - 3);
        }
        parts[i].push_back(std::move(p));
      }
    }
    bool lp = hulls_intersect(parts).has_value();
    bool oracle = ctv::testing::hulls_intersect_oracle(parts);
    CHECK(lp == oracle);
    agree += lp == oracle;
  }
  CHECK(agree == 200);
}

TEST_CASE("witnesses are exactly self-checking") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::vector<RationalPoint>> parts(2);
    for (auto& part : parts) {
      int size = 2 + static_cast<int>(rng() % 2);
      for (int k = 0; k < size; ++k) {
        RationalPoint p;
        for (int t = 0; t < 2; ++t) {
          p.coords.emplace_back(static_cast<int>(rng() % 9) - 4);
        }
        part.push_back(std::move(p));
      }
    }
    auto w = hulls_intersect(parts);
    if (w) {
      CHECK(witness_valid(*w, parts));
    }
  }
}

TEST_CASE("reference configurations") {
  auto ref23 = reference_configuration(2, 3);
  REQUIRE(ref23.classes.size() == 4);
  CHECK(ref23.classes[0] == std::vector<RationalPoint>{pt({0, 0}), pt({0, 0})});
  CHECK(ref23.classes[1] == std::vector<RationalPoint>{pt({1, 0}), pt({1, 0})});
  CHECK(ref23.classes[2] == std::vector<RationalPoint>{pt({0, 1}), pt({0, 1})});
  REQUIRE(ref23.classes[3].size() == 1);
  CHECK(ref23.classes[3][0].coords == std::vector<Rational>{Rational(1, 3), Rational(1, 3)});
  CHECK(ref23.total() == 7);

  auto ref13 = reference_configuration(1, 3);
  CHECK(ref13.total() == 5);
  CHECK(ref13.classes[2][0].coords == std::vector<Rational>{Rational(1, 2)});

  auto ref33 = reference_configuration(3, 3);
  CHECK(ref33.total() == 9);  // N+1 = (r-1)(d+1)+1
  CHECK(ref33.classes[4][0].coords ==
        std::vector<Rational>(3, Rational(1, 4)));

  // The identity decoding: r-1 full simplices plus the center singleton
  // meet at the center.
  std::vector<std::vector<RationalPoint>> parts;
  for (int i = 0; i < 2; ++i) {
    parts.push_back({ref23.classes[0][i], ref23.classes[1][i], ref23.classes[2][i]});
  }
  parts.push_back({ref23.classes[3][0]});
  auto w = hulls_intersect(parts);
  REQUIRE(w.has_value());
  CHECK(w->point.coords == std::vector<Rational>{Rational(1, 3), Rational(1, 3)});
}

TEST_CASE("rainbow partition enumeration matches the brute-force census") {
  SECTION("two singleton classes") {
    ColoredConfiguration cfg;
    cfg.d = 1;
    cfg.classes = {{pt({0})}, {pt({1})}};
    std::vector<RainbowPartition> seen;
    enumerate_rainbow_partitions(cfg, 2, {}, [&](const RainbowPartition& p) {
      seen.push_back(p);
      return true;
    });
    REQUIRE(seen.size() == 1);
    CHECK(seen[0].parts.size() == 2);
  }

  SECTION("census agreement on the reference configurations") {
    for (auto [d, r] : std::vector<std::pair<int, int>>{{1, 3}, {2, 3}}) {
      auto cfg = reference_configuration(d, r);
      for (bool all_points : {false, true}) {
        auto oracle = ctv::testing::rainbow_partitions_oracle(cfg, r, all_points);
        std::set<RainbowPartition> mine;
        EnumerationOptions opts;
        opts.use_all_points = all_points;
        enumerate_rainbow_partitions(cfg, r, opts, [&](const RainbowPartition& p) {
          CHECK(mine.insert(p).second);  // no duplicates
          return true;
        });
        INFO("(d, r) = (" << d << ", " << r << "), all_points = " << all_points);
        CHECK(mine == oracle);
      }
    }
  }

  SECTION("covering partitions of the line reference configuration") {
    // Frozen from the census oracle: 5 points, 3 parts, all points used.
    auto cfg = reference_configuration(1, 3);
    auto oracle = ctv::testing::rainbow_partitions_oracle(cfg, 3, true);
    CHECK(oracle.size() == 14);
  }

  SECTION("fewer points than parts") {
    ColoredConfiguration cfg;
    cfg.d = 1;
    cfg.classes = {{pt({0})}, {pt({1})}};
    int count = 0;
    enumerate_rainbow_partitions(cfg, 3, {}, [&](const RainbowPartition&) {
      ++count;
      return true;
    });
    CHECK(count == 0);
  }

  SECTION("budget is enforced") {
    auto cfg = reference_configuration(2, 3);
    EnumerationOptions opts;
    opts.budget = 5;
    CHECK_THROWS_AS(
        enumerate_rainbow_partitions(cfg, 3, opts, [](const RainbowPartition&) { return true; }),
        BudgetError);
  }
}

TEST_CASE("find_rainbow_partition on reference configurations") {
  for (auto [d, r] : std::vector<std::pair<int, int>>{{1, 3}, {2, 3}, {3, 3}}) {
    INFO("(d, r) = (" << d << ", " << r << ")");
    auto cfg = reference_configuration(d, r);
    auto found = find_rainbow_partition(cfg, r);
    REQUIRE(found.has_value());
    CHECK(witness_valid(found->second, partition_points(cfg, found->first)));
    // The last point (the center singleton) is alone in its part.
    int singleton_cls = d + 1;
    for (const auto& part : found->first.parts) {
      bool has_center = std::any_of(part.begin(), part.end(), [&](const PointRef& ref) {
        return ref.cls == singleton_cls;
      });
      if (has_center) {
        CHECK(part.size() == 1);
      }
    }
  }
}

TEST_CASE("tverberg partition counts on reference configurations") {
  CHECK(count_tverberg_partitions(reference_configuration(2, 3), 3) == 4);
  CHECK(count_tverberg_partitions(reference_configuration(3, 3), 3) == 8);
  CHECK(count_tverberg_partitions(reference_configuration(1, 5), 5) == 24);
}

TEST_CASE("pad_reduction arithmetic") {
  // d = 1, r = 3, sizes (2, 1, 1, 1): pads to the plane with sizes (2,2,2,1).
  ColoredConfiguration cfg;
  cfg.d = 1;
  cfg.classes = {{pt({0}), pt({7})}, {pt({3})}, {pt({5})}, {pt({2})}};
  auto red = pad_reduction(cfg, 3);
  CHECK(red.padded.d == 2);
  REQUIRE(red.padded.classes.size() == 4);
  CHECK(red.padded.classes[0].size() == 2);
  CHECK(red.padded.classes[1].size() == 2);
  CHECK(red.padded.classes[2].size() == 2);
  CHECK(red.padded.classes[3].size() == 1);
  CHECK(red.padded.total() == 7);
  // Originals embedded with trailing zeros; new points at e_2.
  CHECK(red.padded.classes[0][0].coords == std::vector<Rational>{0, 0});
  CHECK(red.padded.classes[1][1].coords == std::vector<Rational>{0, 1});
  CHECK(red.padded.classes[2][1].coords == std::vector<Rational>{0, 1});

  // Theorem shape is a no-op.
  auto ref = reference_configuration(2, 3);
  auto noop = pad_reduction(ref, 3);
  CHECK(noop.padded.d == 2);
  CHECK(noop.padded.total() == ref.total());

  // Precondition violations.
  ColoredConfiguration bad = cfg;
  bad.classes[0].push_back(pt({9}));
  CHECK_THROWS_AS(pad_reduction(bad, 3), PreconditionError);
}

TEST_CASE("pad_reduction round trip on random admissible configurations") {
  std::mt19937 rng(47);
  int passes = 0;
  for (int trial = 0; trial < 50; ++trial) {
    int r = 3;
    int d = 1 + static_cast<int>(rng() % 2);
    int n = (r - 1) * (d + 1);
    // Random class sizes <= r-1 summing to N, then the trailing singleton.
    std::vector<int> sizes;
    int remaining = n;
    while (remaining > 0) {
      int s = 1 + static_cast<int>(rng() % (r - 1));
      s = std::min(s, remaining);
      sizes.push_back(s);
      remaining -= s;
    }
    while (static_cast<int>(sizes.size()) + 1 < d + 2) {
      // Split a class of size 2 to reach d+2 classes.
      for (auto& s : sizes) {
        if (s == 2) {
          s = 1;
          sizes.push_back(1);
          break;
        }
      }
    }
    ColoredConfiguration cfg;
    cfg.d = d;
    for (int s : sizes) {
      std::vector<RationalPoint> cls;
      for (int k = 0; k < s; ++k) {
        RationalPoint p;
        for (int t = 0; t < d; ++t) {
          p.coords.emplace_back(static_cast<int>(rng() % 21) - 10);
        }
        cls.push_back(std::move(p));
      }
      cfg.classes.push_back(std::move(cls));
    }
    {
      RationalPoint p;
      for (int t = 0; t < d; ++t) {
        p.coords.emplace_back(static_cast<int>(rng() % 21) - 10);
      }
      cfg.classes.push_back({p});
    }

    auto red = pad_reduction(cfg, r);
    auto found = find_rainbow_partition(red.padded, r);
    REQUIRE(found.has_value());  // guaranteed in the padded shape
    auto restricted = red.restrict_partition(found->first);
    for (const auto& part : restricted.parts) {
      CHECK_FALSE(part.empty());
    }
    auto w = hulls_intersect(partition_points(cfg, restricted));
    CHECK(w.has_value());
    passes += w.has_value();
  }
  CHECK(passes == 50);
}

TEST_CASE("conjecture trials") {
  SECTION("planar two-partition always succeeds") {
    auto rep = conjecture_trial(2, 2, 2, 10, 7);
    CHECK(rep.successes == 10);
    CHECK(rep.failures == 0);
  }
  SECTION("below the trivial bound failures appear") {
    auto rep = conjecture_trial(2, 3, 1, 20, 7);
    CHECK(rep.failures > 0);
    CHECK_FALSE(rep.failing_configs.empty());
  }
  SECTION("deterministic given the seed") {
    auto a = conjecture_trial(1, 3, 2, 5, 99);
    auto b = conjecture_trial(1, 3, 2, 5, 99);
    CHECK(a.successes == b.successes);
    CHECK(a.route == "singleton");
  }
}
