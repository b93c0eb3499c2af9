#pragma once
// Interval hypergraphs over the points 1..point_count and exact hitting:
// validation, hit counting, an exhaustive oracle, minimum membership
// hitting via difference constraints, and the proper-family greedy.

#include <optional>
#include <string>
#include <vector>

namespace ehig {

struct Interval {
  std::string id;
  int left = 0;
  int right = 0;
};

bool operator==(const Interval& a, const Interval& b);

struct IntervalHypergraph {
  int point_count = 0;
  std::vector<Interval> intervals;
};

// Strictly increasing point list.
using HittingSet = std::vector<int>;

struct Violation {
  std::string interval_id;  // empty for hypergraph-level breaches
  std::string message;
};

struct HitCheck {
  std::vector<int> counts;  // parallel to intervals
  bool exact = false;
};

struct MembershipResult {
  int max_hits = 0;   // smallest achievable maximum hits per interval; 0 only when vacuous
  HittingSet points;
};

std::vector<Violation> validate(const IntervalHypergraph& h);
void require_valid(const IntervalHypergraph& h);  // throws std::invalid_argument

HitCheck exact_hit_check(const IntervalHypergraph& h, const HittingSet& s);

// Lexicographically smallest exact hitting set by exhaustive search,
// or nullopt when none exists. Refuses point counts above the guard.
std::optional<HittingSet> brute_force_ehs(const IntervalHypergraph& h, int point_guard = 25);

// Smallest k admitting a point set that hits every interval between 1 and
// k times, with a witness set. Vacuous (k = 0, empty set) with no intervals.
MembershipResult min_membership_hitting(const IntervalHypergraph& h);

// Present with a verified exact hitting set iff min membership is at most 1.
std::optional<HittingSet> exactly_hittable(const IntervalHypergraph& h);

// No strict nesting between any two intervals; identical intervals allowed.
bool is_proper(const IntervalHypergraph& h);

// Left-to-right greedy exact hitting set; requires is_proper.
HittingSet proper_greedy_ehs(const IntervalHypergraph& h);

}  // namespace ehig
