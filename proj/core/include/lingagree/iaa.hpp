#pragma once

#include <cstddef>

#include "lingagree/fuzzy_set.hpp"
#include "lingagree/intervals.hpp"

namespace lingagree {

// Interval Agreement Approach fuzzy set: mu(x) is the fraction of the source
// intervals that contain x. Held exactly as a step function whose
// breakpoints are the distinct source endpoints and whose levels are k/n.
class AgreementFS {
 public:
  const PiecewiseConstant& fs() const noexcept { return fs_; }
  std::size_t n() const noexcept { return source_.size(); }
  const IntervalCollection& source() const noexcept { return source_; }

  MembershipFunction membership() const { return fs_; }
  double operator()(double x) const noexcept { return fs_(x); }

  friend AgreementFS build_iaa(const IntervalCollection& collection);

 private:
  AgreementFS(PiecewiseConstant fs, IntervalCollection source) : fs_(std::move(fs)), source_(std::move(source)) {}

  PiecewiseConstant fs_;
  IntervalCollection source_;
};

AgreementFS build_iaa(const IntervalCollection& collection);

}  // namespace lingagree
