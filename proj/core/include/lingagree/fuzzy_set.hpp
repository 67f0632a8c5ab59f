#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "lingagree/intervals.hpp"

namespace lingagree {

inline constexpr std::size_t kDefaultSamples = 1001;

// Step function. cell_levels[j] holds on the open cell
// (breakpoints[j], breakpoints[j+1]); point_levels[j] is the value at
// breakpoints[j] itself. Zero outside [breakpoints.front(), breakpoints.back()].
class PiecewiseConstant {
 public:
  // Breakpoint values default to the max of the adjacent cells, which makes
  // every alpha-cut closed.
  PiecewiseConstant(std::vector<double> breakpoints, std::vector<double> cell_levels);
  PiecewiseConstant(std::vector<double> breakpoints, std::vector<double> cell_levels,
                    std::vector<double> point_levels);

  double operator()(double x) const noexcept;
  Interval domain() const noexcept { return {breakpoints_.front(), breakpoints_.back()}; }

  // Views into this object; keep it alive while using them.
  std::span<const double> breakpoints() const noexcept { return breakpoints_; }
  std::span<const double> cell_levels() const noexcept { return cell_levels_; }
  std::span<const double> point_levels() const noexcept { return point_levels_; }

  friend bool operator==(const PiecewiseConstant&, const PiecewiseConstant&) = default;

 private:
  std::vector<double> breakpoints_;
  std::vector<double> cell_levels_;
  std::vector<double> point_levels_;
};

struct Vertex {
  double x;
  double mu;
};

// Linear interpolation between vertices, zero outside the first/last vertex.
class PiecewiseLinear {
 public:
  explicit PiecewiseLinear(std::vector<Vertex> vertices);

  // a <= b <= c with a < c. Coincident feet collapse into a shoulder.
  static PiecewiseLinear triangular(double a, double b, double c);
  // a <= b <= c <= d with a < d.
  static PiecewiseLinear trapezoidal(double a, double b, double c, double d);

  double operator()(double x) const noexcept;
  Interval domain() const noexcept { return {vertices_.front().x, vertices_.back().x}; }
  std::span<const Vertex> vertices() const noexcept { return vertices_; }

 private:
  std::vector<Vertex> vertices_;
};

// exp(-(x - mean)^2 / (2 sigma^2)) on [mean - 5 sigma, mean + 5 sigma],
// intersected with the optional user domain; zero elsewhere.
class Gaussian {
 public:
  Gaussian(double mean, double sigma, std::optional<Interval> domain = std::nullopt);

  double operator()(double x) const noexcept;
  Interval domain() const noexcept { return window_; }
  double mean() const noexcept { return mean_; }
  double sigma() const noexcept { return sigma_; }

 private:
  double mean_;
  double sigma_;
  Interval window_;
};

// Values on a uniform grid over [lo, hi]; nearest-grid-point lookup.
class Sampled {
 public:
  Sampled(Interval range, std::vector<double> mu);

  double operator()(double x) const noexcept;
  Interval domain() const noexcept { return range_; }
  std::span<const double> values() const noexcept { return mu_; }

 private:
  Interval range_;
  std::vector<double> mu_;
};

class MembershipFunction {
 public:
  using Variant = std::variant<PiecewiseConstant, PiecewiseLinear, Gaussian, Sampled>;

  MembershipFunction(PiecewiseConstant f) : f_(std::move(f)) {}
  MembershipFunction(PiecewiseLinear f) : f_(std::move(f)) {}
  MembershipFunction(Gaussian f) : f_(std::move(f)) {}
  MembershipFunction(Sampled f) : f_(std::move(f)) {}

  double operator()(double x) const noexcept;
  // Bounded evaluation window used by every sampled computation.
  Interval domain() const noexcept;
  const Variant& variant() const noexcept { return f_; }
  bool is_piecewise_constant() const noexcept { return std::holds_alternative<PiecewiseConstant>(f_); }

 private:
  Variant f_;
};

double mu(const MembershipFunction& mf, double x) noexcept;

enum class CutPath {
  Auto,     // exact alpha-cuts for step functions, grid sweep for the rest
  Sampled,  // always sweep the grid
};

struct Discretization {
  Discretization(std::size_t samples = kDefaultSamples, std::optional<Interval> window = std::nullopt,
                 CutPath path = CutPath::Auto)
      : samples(samples), window(window), path(path) {}

  std::size_t samples;
  std::optional<Interval> window;  // defaults to the mf's own domain
  CutPath path;
};

// Uniform grid including both ends: x_i = lo + i (hi - lo) / (samples - 1).
std::vector<double> sample_grid(Interval window, std::size_t samples);

struct AlphaCut {
  double alpha;
  DisjointRegion region;
};

// Grid sweep over the discretised domain. A run opens at the first x_i with
// mu(x_i) >= alpha and closes at x_{i-1} when mu(x_i) < alpha, or at the last
// grid point if still open.
DisjointRegion sampled_alpha_cut(const MembershipFunction& mf, double alpha, std::size_t samples, Interval window);

// {x | mu(x) >= alpha}. Throws InvalidAlpha unless 0 < alpha <= 1 and
// InvalidSamples if samples < 2.
AlphaCut alpha_cut(const MembershipFunction& mf, double alpha, const Discretization& disc = {});
double alpha_length(const MembershipFunction& mf, double alpha, const Discretization& disc = {});

struct Attributes {
  double height;
  double centroid;
  double support_length;
  double core_length;
};

// Throws EmptySet when mu is identically zero.
Attributes attributes(const MembershipFunction& mf, const Discretization& disc = {});

}  // namespace lingagree
