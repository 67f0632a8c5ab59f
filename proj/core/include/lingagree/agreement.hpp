#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lingagree/fuzzy_set.hpp"
#include "lingagree/iaa.hpp"
#include "lingagree/intervals.hpp"

namespace lingagree {

// One summand of the agreement ratio: weight * length / lower_length, where
// length is the extent of agreement level `level` and lower_length that of
// level - 1.
struct GammaTerm {
  std::size_t level;
  double weight;
  double length;
  double lower_length;
  double ratio;
};

struct GammaBreakdown {
  double gamma;
  std::vector<GammaTerm> terms;  // highest level first
  double weight_sum;
};

// Agreement ratio from level lengths: lengths[k-1] is the extent covered at
// agreement level k of n = lengths.size(); level k is weighted k/n and
// level 1 only appears as a denominator. A zero denominator gives ratio 0.
// Throws TooFewSources if n < 2 and EmptySupport if lengths[0] == 0.
GammaBreakdown gamma_from_lengths(std::span<const double> lengths);

// Exact ratio for an IAA set from the endpoint sweep.
GammaBreakdown gamma_exact(const IntervalCollection& collection);
inline GammaBreakdown gamma_exact(const AgreementFS& fs) { return gamma_exact(fs.source()); }

// Ratio estimated from alpha-cuts at alpha_i = i / cuts, i = 1..cuts, with
// weights i / cuts. Throws InvalidCuts if cuts < 2.
GammaBreakdown gamma_alpha(const MembershipFunction& mf, std::size_t cuts, const Discretization& disc = {});

// Sum of min over sum of max on a shared grid (the union of both domains
// unless disc.window is set). Throws EmptySet if both sets vanish.
double jaccard(const MembershipFunction& a, const MembershipFunction& b, const Discretization& disc = {});

}  // namespace lingagree
