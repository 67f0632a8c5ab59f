#include "lingagree/iaa.hpp"

namespace lingagree {

AgreementFS build_iaa(const IntervalCollection& collection) {
  CoverageProfile profile = coverage_profile(collection);
  const double n = static_cast<double>(collection.size());

  std::vector<double> cells(profile.cell_counts.size());
  for (std::size_t j = 0; j < cells.size(); ++j) cells[j] = static_cast<double>(profile.cell_counts[j]) / n;
  std::vector<double> points(profile.point_counts.size());
  for (std::size_t j = 0; j < points.size(); ++j) points[j] = static_cast<double>(profile.point_counts[j]) / n;

  return AgreementFS(PiecewiseConstant(std::move(profile.breakpoints), std::move(cells), std::move(points)),
                     collection);
}

}  // namespace lingagree
