#include "lingagree/intervals.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lingagree/error.hpp"

namespace lingagree {

Interval::Interval(double l, double r) : l_(l), r_(r) {
  if (!std::isfinite(l) || !std::isfinite(r)) {
    throw Error(ErrorCode::InvalidInterval, "interval endpoints must be finite");
  }
  if (l > r) {
    throw Error(ErrorCode::InvalidInterval,
                "left endpoint " + std::to_string(l) + " exceeds right endpoint " + std::to_string(r));
  }
}

Interval make_interval(double l, double r) { return Interval(l, r); }

IntervalCollection::IntervalCollection(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  if (intervals_.empty()) {
    throw Error(ErrorCode::EmptyCollection, "an interval collection needs at least one interval");
  }
}

IntervalCollection::IntervalCollection(std::initializer_list<Interval> intervals)
    : IntervalCollection(std::vector<Interval>(intervals)) {}

DisjointRegion DisjointRegion::from_intervals(std::vector<Interval> intervals) {
  std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) {
    return a.l() < b.l() || (a.l() == b.l() && a.r() < b.r());
  });
  DisjointRegion region;
  for (const Interval& next : intervals) {
    if (!region.segments_.empty() && next.l() <= region.segments_.back().r()) {
      Interval& last = region.segments_.back();
      if (next.r() > last.r()) last = Interval(last.l(), next.r());
    } else {
      region.segments_.push_back(next);
    }
  }
  return region;
}

double DisjointRegion::total_length() const noexcept {
  double total = 0.0;
  for (const Interval& s : segments_) total += s.length();
  return total;
}

bool DisjointRegion::contains(double x) const noexcept {
  auto it = std::upper_bound(segments_.begin(), segments_.end(), x,
                             [](double v, const Interval& s) { return v < s.l(); });
  if (it == segments_.begin()) return false;
  return std::prev(it)->contains(x);
}

bool DisjointRegion::is_subset_of(const DisjointRegion& other) const noexcept {
  auto outer = other.segments_.begin();
  for (const Interval& s : segments_) {
    while (outer != other.segments_.end() && outer->r() < s.l()) ++outer;
    if (outer == other.segments_.end()) return false;
    if (!(outer->l() <= s.l() && s.r() <= outer->r())) return false;
  }
  return true;
}

CoverageProfile coverage_profile(const IntervalCollection& collection) {
  const std::size_t n = collection.size();
  std::vector<double> lefts, rights;
  lefts.reserve(n);
  rights.reserve(n);
  for (const Interval& iv : collection) {
    lefts.push_back(iv.l());
    rights.push_back(iv.r());
  }
  std::sort(lefts.begin(), lefts.end());
  std::sort(rights.begin(), rights.end());

  CoverageProfile profile;
  std::merge(lefts.begin(), lefts.end(), rights.begin(), rights.end(), std::back_inserter(profile.breakpoints));
  profile.breakpoints.erase(std::unique(profile.breakpoints.begin(), profile.breakpoints.end()),
                            profile.breakpoints.end());

  const std::size_t m = profile.breakpoints.size();
  profile.point_counts.resize(m);
  profile.cell_counts.resize(m - 1);

  // Two cursors: opened = #{l <= b}, closed_before = #{r < b}, closed_at = #{r <= b}.
  std::size_t opened = 0, closed_before = 0, closed_at = 0;
  for (std::size_t j = 0; j < m; ++j) {
    const double b = profile.breakpoints[j];
    while (opened < n && lefts[opened] <= b) ++opened;
    while (closed_before < n && rights[closed_before] < b) ++closed_before;
    while (closed_at < n && rights[closed_at] <= b) ++closed_at;
    profile.point_counts[j] = opened - closed_before;
    if (j + 1 < m) profile.cell_counts[j] = opened - closed_at;
  }
  return profile;
}

DisjointRegion region_at_least(const CoverageProfile& profile, std::size_t k) {
  const auto& b = profile.breakpoints;
  std::vector<Interval> pieces;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (profile.point_counts[j] >= k) pieces.emplace_back(b[j], b[j]);
    if (j + 1 < b.size() && profile.cell_counts[j] >= k) pieces.emplace_back(b[j], b[j + 1]);
  }
  return DisjointRegion::from_intervals(std::move(pieces));
}

DisjointRegion union_region(const IntervalCollection& collection) {
  return DisjointRegion::from_intervals({collection.begin(), collection.end()});
}

std::vector<DisjointRegion> level_sets(const IntervalCollection& collection) {
  // One pass over the alternating point/cell counts: level k opens where the
  // count rises through k and closes where it falls below k. Every event sits
  // on a breakpoint, and a point count is never below its neighbouring cells.
  const CoverageProfile profile = coverage_profile(collection);
  const auto& b = profile.breakpoints;
  const std::size_t n = collection.size();
  std::vector<std::vector<Interval>> pieces(n);
  std::vector<double> open_at(n, 0.0);
  std::size_t current = 0;
  auto step_to = [&](std::size_t next, double x) {
    for (std::size_t k = current + 1; k <= next; ++k) open_at[k - 1] = x;
    for (std::size_t k = next + 1; k <= current; ++k) pieces[k - 1].emplace_back(open_at[k - 1], x);
    current = next;
  };
  for (std::size_t j = 0; j < b.size(); ++j) {
    step_to(profile.point_counts[j], b[j]);
    step_to(j + 1 < b.size() ? profile.cell_counts[j] : 0, b[j]);
  }
  std::vector<DisjointRegion> levels;
  levels.reserve(n);
  for (auto& p : pieces) levels.push_back(DisjointRegion::from_intervals(std::move(p)));
  return levels;
}

std::vector<double> level_lengths(const IntervalCollection& collection) {
  const CoverageProfile profile = coverage_profile(collection);
  const std::size_t n = collection.size();
  std::vector<double> width_by_count(n + 1, 0.0);
  for (std::size_t j = 0; j + 1 < profile.breakpoints.size(); ++j) {
    width_by_count[profile.cell_counts[j]] += profile.breakpoints[j + 1] - profile.breakpoints[j];
  }
  std::vector<double> lengths(n, 0.0);
  double running = 0.0;
  for (std::size_t k = n; k >= 1; --k) {
    running += width_by_count[k];
    lengths[k - 1] = running;
  }
  return lengths;
}

namespace {

// C(n, k), or bound + 1 once it is known to exceed bound.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t bound) {
  k = std::min(k, n - k);
  __extension__ using Wide = unsigned __int128;
  Wide result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > bound) return bound + 1;
  }
  return static_cast<std::uint64_t>(result);
}

}  // namespace

double tuple_length_oracle(const IntervalCollection& collection, std::size_t k, std::uint64_t max_tuples) {
  const std::size_t n = collection.size();
  if (k < 1 || k > n) {
    throw Error(ErrorCode::InvalidArgument, "tuple size " + std::to_string(k) + " outside 1.." + std::to_string(n));
  }
  if (binomial_capped(n, k, max_tuples) > max_tuples) {
    throw Error(ErrorCode::CombinatorialLimit,
                "C(" + std::to_string(n) + ", " + std::to_string(k) + ") exceeds " + std::to_string(max_tuples));
  }

  std::vector<Interval> intersections;
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    double lo = collection[pick[0]].l();
    double hi = collection[pick[0]].r();
    for (std::size_t i = 1; i < k; ++i) {
      lo = std::max(lo, collection[pick[i]].l());
      hi = std::min(hi, collection[pick[i]].r());
    }
    if (lo <= hi) intersections.emplace_back(lo, hi);

    // Advance to the next combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return DisjointRegion::from_intervals(std::move(intersections)).total_length();
}

}  // namespace lingagree
