#include "lingagree/agreement.hpp"

#include <algorithm>
#include <string>

#include "lingagree/error.hpp"

namespace lingagree {

GammaBreakdown gamma_from_lengths(std::span<const double> lengths) {
  const std::size_t n = lengths.size();
  if (n < 2) {
    throw Error(ErrorCode::TooFewSources, "agreement needs at least 2 levels, got " + std::to_string(n));
  }
  if (!(lengths[0] > 0.0)) throw Error(ErrorCode::EmptySupport, "lowest level has zero length");

  GammaBreakdown out{0.0, {}, 0.0};
  out.terms.reserve(n - 1);
  double weighted = 0.0;
  for (std::size_t level = n; level >= 2; --level) {
    const double weight = static_cast<double>(level) / static_cast<double>(n);
    const double length = lengths[level - 1];
    const double lower = lengths[level - 2];
    const double ratio = lower > 0.0 ? length / lower : 0.0;
    out.terms.push_back({level, weight, length, lower, ratio});
    weighted += weight * ratio;
    out.weight_sum += weight;
  }
  out.gamma = weighted / out.weight_sum;
  return out;
}

GammaBreakdown gamma_exact(const IntervalCollection& collection) {
  if (collection.size() < 2) {
    throw Error(ErrorCode::TooFewSources, "agreement needs at least 2 intervals, got " +
                                              std::to_string(collection.size()));
  }
  const std::vector<double> lengths = level_lengths(collection);
  return gamma_from_lengths(lengths);
}

GammaBreakdown gamma_alpha(const MembershipFunction& mf, std::size_t cuts, const Discretization& disc) {
  if (cuts < 2) throw Error(ErrorCode::InvalidCuts, "need at least 2 alpha-cuts, got " + std::to_string(cuts));
  std::vector<double> lengths(cuts);
  for (std::size_t i = 1; i <= cuts; ++i) {
    const double alpha = static_cast<double>(i) / static_cast<double>(cuts);
    lengths[i - 1] = alpha_length(mf, alpha, disc);
  }
  return gamma_from_lengths(lengths);
}

double jaccard(const MembershipFunction& a, const MembershipFunction& b, const Discretization& disc) {
  const Interval da = a.domain();
  const Interval db = b.domain();
  const Interval window = disc.window.value_or(Interval(std::min(da.l(), db.l()), std::max(da.r(), db.r())));
  double overlap = 0.0;
  double combined = 0.0;
  for (double x : sample_grid(window, disc.samples)) {
    const double ma = a(x);
    const double mb = b(x);
    overlap += std::min(ma, mb);
    combined += std::max(ma, mb);
  }
  if (combined <= 0.0) throw Error(ErrorCode::EmptySet, "both sets vanish on the shared grid");
  return overlap / combined;
}

}  // namespace lingagree
