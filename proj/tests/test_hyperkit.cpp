#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "ehig/generate.hpp"
#include "ehig/hypergraph.hpp"
#include "support.hpp"

using namespace ehig;

namespace {

IntervalHypergraph make(int points, std::vector<std::pair<int, int>> ranges) {
  IntervalHypergraph h;
  h.point_count = points;
  int i = 0;
  for (auto [l, r] : ranges) h.intervals.push_back({"e" + std::to_string(i++), l, r});
  return h;
}

// the stretched star: centre avoids the outer private points
const IntervalHypergraph k13_model = make(7, {{1, 2}, {2, 6}, {4, 4}, {6, 7}});
const IntervalHypergraph k14_model = make(9, {{1, 2}, {2, 8}, {4, 4}, {6, 6}, {8, 9}});

}  // namespace

TEST_CASE("validation flags out-of-range and misordered intervals") {
  CHECK(validate(make(5, {{1, 5}, {2, 2}})).empty());
  CHECK(validate(make(0, {})).empty());
  CHECK(!validate(make(5, {{0, 3}})).empty());
  CHECK(!validate(make(5, {{1, 6}})).empty());
  CHECK(!validate(make(5, {{4, 2}})).empty());
  IntervalHypergraph dup = make(3, {{1, 1}, {2, 3}});
  dup.intervals[1].id = dup.intervals[0].id;
  CHECK(!validate(dup).empty());
  CHECK_THROWS_AS(require_valid(make(5, {{0, 3}})), std::invalid_argument);
}

TEST_CASE("exact hit counting") {
  auto h = make(4, {{1, 2}, {2, 3}, {3, 4}});
  auto all = exact_hit_check(h, {2, 3});
  CHECK(!all.exact);  // middle interval hit twice
  CHECK(all.counts == std::vector<int>{1, 2, 1});
  auto one = exact_hit_check(h, {2, 4});
  CHECK(one.exact);
  CHECK(one.counts == std::vector<int>{1, 1, 1});
  CHECK(!exact_hit_check(h, {1}).exact);        // last interval missed
  CHECK(exact_hit_check(make(0, {}), {}).exact);
}

TEST_CASE("star boundary: three leaves hittable, four not") {
  auto yes = exactly_hittable(k13_model);
  REQUIRE(yes);
  CHECK(exact_hit_check(k13_model, *yes).exact);
  CHECK(!exactly_hittable(k14_model));
  auto brute13 = brute_force_ehs(k13_model);
  REQUIRE(brute13);
  CHECK(exact_hit_check(k13_model, *brute13).exact);
  CHECK(!brute_force_ehs(k14_model));
}

TEST_CASE("exhaustive search refuses huge point sets") {
  CHECK_THROWS_AS(brute_force_ehs(make(30, {{1, 30}})), std::invalid_argument);
  CHECK(brute_force_ehs(make(30, {{1, 30}}), 30));
}

TEST_CASE("membership minimisation matches the subset-scan oracle") {
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    auto h = random_hypergraph(12, 8, seed);
    auto r = min_membership_hitting(h);
    CAPTURE(seed);
    CHECK(r.max_hits == support::brute_minimax(h));
    auto check = exact_hit_check(h, r.points);
    REQUIRE(!check.counts.empty());
    CHECK(*std::max_element(check.counts.begin(), check.counts.end()) == r.max_hits);
    CHECK(*std::min_element(check.counts.begin(), check.counts.end()) >= 1);
    CHECK((r.max_hits == 1) == exactly_hittable(h).has_value());
  }
}

TEST_CASE("membership on the vacuous hypergraph") {
  auto r = min_membership_hitting(make(4, {}));
  CHECK(r.max_hits == 0);
  CHECK(r.points.empty());
}

TEST_CASE("membership of the stretched stars") {
  CHECK(min_membership_hitting(k13_model).max_hits == 1);
  CHECK(min_membership_hitting(k14_model).max_hits == 2);
}

TEST_CASE("proper detection and the proper-family greedy") {
  CHECK(is_proper(k13_model) == false);  // centre swallows the middle leaf
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    auto s = random_proper_interval_graph(1 + seed % 10, seed);
    REQUIRE(is_proper(s.model));
    auto hit = proper_greedy_ehs(s.model);
    CHECK(exact_hit_check(s.model, hit).exact);
  }
}

TEST_CASE("greedy handles duplicate ranges as one constraint") {
  auto h = make(4, {{1, 2}, {1, 2}, {3, 4}});
  auto hit = proper_greedy_ehs(h);
  CHECK(exact_hit_check(h, hit).exact);
}
