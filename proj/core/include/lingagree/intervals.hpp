#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace lingagree {

// A closed crisp interval [l, r] with finite endpoints. Zero width is allowed.
class Interval {
 public:
  // Throws Error(InvalidInterval) if l > r or either endpoint is not finite.
  Interval(double l, double r);

  double l() const noexcept { return l_; }
  double r() const noexcept { return r_; }
  double length() const noexcept { return r_ - l_; }
  bool contains(double x) const noexcept { return l_ <= x && x <= r_; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double l_;
  double r_;
};

Interval make_interval(double l, double r);

// The N responses for one (group, term) pair, in participant order.
class IntervalCollection {
 public:
  // Throws Error(EmptyCollection) when no intervals are given.
  explicit IntervalCollection(std::vector<Interval> intervals);
  IntervalCollection(std::initializer_list<Interval> intervals);

  std::size_t size() const noexcept { return intervals_.size(); }
  std::span<const Interval> intervals() const noexcept { return intervals_; }
  const Interval& operator[](std::size_t i) const { return intervals_[i]; }
  auto begin() const noexcept { return intervals_.begin(); }
  auto end() const noexcept { return intervals_.end(); }

 private:
  std::vector<Interval> intervals_;
};

// Canonical union of intervals: sorted, pairwise disjoint and non-touching
// (for consecutive segments a, b: a.r < b.l). Segments may be single points.
class DisjointRegion {
 public:
  DisjointRegion() = default;

  // Sorts and merges; overlapping or touching inputs coalesce.
  static DisjointRegion from_intervals(std::vector<Interval> intervals);

  std::span<const Interval> segments() const noexcept { return segments_; }
  bool empty() const noexcept { return segments_.empty(); }
  double total_length() const noexcept;
  bool contains(double x) const noexcept;
  bool is_subset_of(const DisjointRegion& other) const noexcept;

  friend bool operator==(const DisjointRegion&, const DisjointRegion&) = default;

 private:
  std::vector<Interval> segments_;
};

// Result of the endpoint sweep. `breakpoints` are the sorted distinct
// endpoints; point_counts[j] is the number of intervals containing
// breakpoints[j]; cell_counts[j] is the number covering the open cell
// (breakpoints[j], breakpoints[j+1]).
struct CoverageProfile {
  std::vector<double> breakpoints;
  std::vector<std::size_t> point_counts;
  std::vector<std::size_t> cell_counts;
};

CoverageProfile coverage_profile(const IntervalCollection& collection);

// Exact set of points covered by at least k intervals.
DisjointRegion region_at_least(const CoverageProfile& profile, std::size_t k);

DisjointRegion union_region(const IntervalCollection& collection);

// Entry k-1 is the region covered by at least k of the N intervals, k = 1..N.
std::vector<DisjointRegion> level_sets(const IntervalCollection& collection);

// Entry k-1 is the length of level set k. Same values as level_sets but in
// O(N log N) without materialising the regions.
std::vector<double> level_lengths(const IntervalCollection& collection);

inline constexpr std::uint64_t kDefaultTupleBound = 1'000'000;

// Brute force: length of the union, over all C(N, k) k-tuples, of each
// tuple's intersection. Test oracle only; throws Error(CombinatorialLimit)
// when C(N, k) exceeds max_tuples.
double tuple_length_oracle(const IntervalCollection& collection, std::size_t k,
                           std::uint64_t max_tuples = kDefaultTupleBound);

}  // namespace lingagree
