#include <doctest.h>

#include <random>

#include "digicover/errors.hpp"
#include "digicover/fixtures.hpp"
#include "digicover/lifting.hpp"
#include "oracles.hpp"

using namespace digicover;

namespace {

std::vector<Point> random_walk(const DigitalImage& img, std::mt19937_64& rng, std::size_t len) {
  std::vector<Point> steps{img.point(rng() % img.size())};
  for (std::size_t i = 0; i < len; ++i) {
    const auto idx = img.index_of(steps.back());
    const auto nb = img.neighbors_of(idx);
    // Stay moves are legal path steps.
    if (nb.empty() || rng() % 4 == 0) {
      steps.push_back(steps.back());
    } else {
      steps.push_back(img.point(nb[rng() % nb.size()]));
    }
  }
  return steps;
}

std::set<std::vector<Point>> as_step_set(const std::vector<DigitalPath>& lifts) {
  std::set<std::vector<Point>> out;
  for (const auto& l : lifts) out.insert(l.steps());
  return out;
}

}  // namespace

TEST_CASE("all_lifts matches the product-of-fibers oracle") {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto p = random_map(seed, {8, 2});
    for (int trial = 0; trial < 4; ++trial) {
      const auto steps = random_walk(p.codomain(), rng, 1 + rng() % 4);
      const auto path = validate_path(p.codomain(), steps);
      for (const auto& e : p.fiber(steps.front())) {
        const auto lifts = all_lifts({p, path, e});
        CHECK(as_step_set(lifts) == oracle::lifts_by_product(p, steps, e));
        for (const auto& l : lifts) CHECK(l.front() == e);
      }
    }
  }
}

TEST_CASE("lift_path reports none, one or ambiguity") {
  const auto pr1 = fixture_pr1().map;
  const auto alpha = validate_path(pr1.codomain(), {{0}, {1}, {2}});
  CHECK_THROWS_AS(lift_path({pr1, alpha, {0, 0}}), AmbiguousLiftError);
  CHECK_THROWS_AS(lift_path({pr1, alpha, {1, 0}}), StartNotInFiberError);

  const auto mod4 = fixture_mod4_ray().map;
  const auto gamma = validate_path(mod4.codomain(), {{0, 0}, {1, -1}});
  CHECK_FALSE(lift_path({mod4, gamma, {0}}).has_value());
  const auto lifted = lift_path({mod4, gamma, {4}});
  REQUIRE(lifted.has_value());
  CHECK(lifted->steps() == std::vector<Point>{{4}, {3}});

  CHECK_THROWS_AS(all_lifts({mod4, validate_path(interval_image(0, 1), {{0}, {1}}), {0}}),
                  DomainMismatchError);
}

TEST_CASE("lifts commute with deck transformations of a cycle cover") {
  // Rotation by m on C_{km} covers the identity on C_m, so it carries lifts to lifts.
  const int k = 3, m = 5;
  const auto p = fixture_cycle_cover(k, m).map;
  const auto deck = [&](const Point& x) { return Point{(x[0] + m) % (k * m)}; };
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto path = validate_path(p.codomain(), random_walk(p.codomain(), rng, 6));
    const auto e = p.fiber(path.front()).front();
    const auto l = lift_path({p, path, e});
    const auto l2 = lift_path({p, path, deck(e)});
    REQUIRE(l.has_value());
    REQUIRE(l2.has_value());
    for (std::size_t t = 0; t <= path.length(); ++t) CHECK(l2->at(t) == deck(l->at(t)));
  }
}

TEST_CASE("fixture lifting verdicts") {
  const auto pr1 = fixture_pr1();
  CHECK(has_plp(pr1.map).holds);
  CHECK_FALSE(has_unique_lifts(pr1.map).holds);

  const auto mod4 = fixture_mod4_ray();
  const auto v = has_plp(mod4.map);
  CHECK_FALSE(v.holds);
  CHECK(std::get<PointWitness>(v.witness).points == std::vector<Point>{{0, 0}, {1, -1}, {0}});
  CHECK(has_unique_lifts(mod4.map).holds);

  CHECK_THROWS_AS(has_plp(fixture_han_example().map), NotContinuousError);
  const auto into = DigitalMap::from_pairs(interval_image(0, 1), interval_image(0, 2),
                                           {{{0}, {0}}, {{1}, {1}}});
  CHECK_THROWS_AS(has_plp(into), NotSurjectiveError);
}

TEST_CASE("path oracles agree with the local criteria") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto p = random_map(seed, {10, 2});
    CHECK(has_plp(p).holds == plp_oracle(p, 4).holds);
    CHECK(has_unique_lifts(p).holds == uniqueness_oracle(p, 4).holds);
    // Failures already show up on length-1 paths.
    CHECK(plp_oracle(p, 1).holds == plp_oracle(p, 6).holds);
    CHECK(uniqueness_oracle(p, 1).holds == uniqueness_oracle(p, 6).holds);
  }
  CHECK_THROWS_AS(plp_oracle(fixture_cycle_cover(4, 5).map, 2), SizeGuardError);
  CHECK_NOTHROW(plp_oracle(fixture_cycle_cover(4, 5).map, 2, 100));
}

TEST_CASE("plp oracle witness is an unliftable path") {
  const auto p = fixture_mod4_ray().map;
  const auto v = plp_oracle(p, 3);
  REQUIRE_FALSE(v.holds);
  const auto& w = std::get<PathPair>(v.witness);
  CHECK(all_lifts({p, validate_path(p.codomain(), w.first), w.second.front()}).empty());
}
