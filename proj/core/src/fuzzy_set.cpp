#include "lingagree/fuzzy_set.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lingagree/error.hpp"

namespace lingagree {

namespace {

void require_unit(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw Error(ErrorCode::InvalidMembership, std::string(what) + " " + std::to_string(v) + " outside [0, 1]");
  }
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

// --- PiecewiseConstant ------------------------------------------------------

PiecewiseConstant::PiecewiseConstant(std::vector<double> breakpoints, std::vector<double> cell_levels)
    : PiecewiseConstant(breakpoints, cell_levels, [&] {
        std::vector<double> points(breakpoints.size(), 0.0);
        for (std::size_t j = 0; j < points.size(); ++j) {
          if (j > 0 && j - 1 < cell_levels.size()) points[j] = std::max(points[j], cell_levels[j - 1]);
          if (j < cell_levels.size()) points[j] = std::max(points[j], cell_levels[j]);
        }
        return points;
      }()) {}

PiecewiseConstant::PiecewiseConstant(std::vector<double> breakpoints, std::vector<double> cell_levels,
                                     std::vector<double> point_levels)
    : breakpoints_(std::move(breakpoints)),
      cell_levels_(std::move(cell_levels)),
      point_levels_(std::move(point_levels)) {
  if (breakpoints_.empty()) throw Error(ErrorCode::InvalidMembership, "step function needs a breakpoint");
  for (std::size_t j = 0; j < breakpoints_.size(); ++j) {
    if (!std::isfinite(breakpoints_[j])) throw Error(ErrorCode::InvalidMembership, "non-finite breakpoint");
    if (j > 0 && !(breakpoints_[j - 1] < breakpoints_[j])) {
      throw Error(ErrorCode::InvalidMembership, "breakpoints must be strictly increasing");
    }
  }
  if (cell_levels_.size() + 1 != breakpoints_.size() || point_levels_.size() != breakpoints_.size()) {
    throw Error(ErrorCode::InvalidMembership, "level count does not match breakpoint count");
  }
  for (double v : cell_levels_) require_unit(v, "cell level");
  for (double v : point_levels_) require_unit(v, "point level");
}

double PiecewiseConstant::operator()(double x) const noexcept {
  if (x < breakpoints_.front() || x > breakpoints_.back()) return 0.0;
  auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x);
  const auto j = static_cast<std::size_t>(it - breakpoints_.begin());
  if (*it == x) return point_levels_[j];
  return cell_levels_[j - 1];
}

// --- PiecewiseLinear --------------------------------------------------------

PiecewiseLinear::PiecewiseLinear(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error(ErrorCode::InvalidMembership, "piecewise-linear set needs a vertex");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!std::isfinite(vertices_[i].x)) throw Error(ErrorCode::InvalidMembership, "non-finite vertex");
    require_unit(vertices_[i].mu, "vertex membership");
    if (i > 0 && !(vertices_[i - 1].x < vertices_[i].x)) {
      throw Error(ErrorCode::InvalidMembership, "vertices must have strictly increasing x");
    }
  }
}

namespace {

// Merges vertices sharing an x, keeping the larger membership.
std::vector<Vertex> collapse(std::vector<Vertex> raw) {
  std::vector<Vertex> out;
  for (const Vertex& v : raw) {
    if (!out.empty() && out.back().x == v.x) {
      out.back().mu = std::max(out.back().mu, v.mu);
    } else {
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace

PiecewiseLinear PiecewiseLinear::triangular(double a, double b, double c) {
  if (!(a <= b && b <= c && a < c)) {
    throw Error(ErrorCode::InvalidMembership, "triangular needs a <= b <= c and a < c");
  }
  return PiecewiseLinear(collapse({{a, 0.0}, {b, 1.0}, {c, 0.0}}));
}

PiecewiseLinear PiecewiseLinear::trapezoidal(double a, double b, double c, double d) {
  if (!(a <= b && b <= c && c <= d && a < d)) {
    throw Error(ErrorCode::InvalidMembership, "trapezoidal needs a <= b <= c <= d and a < d");
  }
  return PiecewiseLinear(collapse({{a, 0.0}, {b, 1.0}, {c, 1.0}, {d, 0.0}}));
}

double PiecewiseLinear::operator()(double x) const noexcept {
  if (x < vertices_.front().x || x > vertices_.back().x) return 0.0;
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), x,
                             [](const Vertex& v, double value) { return v.x < value; });
  if (it->x == x) return it->mu;
  const Vertex& hi = *it;
  const Vertex& lo = *std::prev(it);
  const double t = (x - lo.x) / (hi.x - lo.x);
  return lo.mu + t * (hi.mu - lo.mu);
}

// --- Gaussian ---------------------------------------------------------------

namespace {

Interval gaussian_window(double mean, double sigma, const std::optional<Interval>& domain) {
  if (!std::isfinite(mean) || !std::isfinite(sigma) || !(sigma > 0.0)) {
    throw Error(ErrorCode::InvalidMembership, "gaussian needs a finite mean and sigma > 0");
  }
  double lo = mean - 5.0 * sigma;
  double hi = mean + 5.0 * sigma;
  if (domain) {
    if (!(domain->l() < domain->r())) throw Error(ErrorCode::InvalidDomain, "gaussian domain is degenerate");
    lo = std::max(lo, domain->l());
    hi = std::min(hi, domain->r());
    if (!(lo < hi)) throw Error(ErrorCode::InvalidDomain, "gaussian domain misses the bulk of the curve");
  }
  return {lo, hi};
}

}  // namespace

Gaussian::Gaussian(double mean, double sigma, std::optional<Interval> domain)
    : mean_(mean), sigma_(sigma), window_(gaussian_window(mean, sigma, domain)) {}

double Gaussian::operator()(double x) const noexcept {
  if (!window_.contains(x)) return 0.0;
  const double z = (x - mean_) / sigma_;
  return std::exp(-0.5 * z * z);
}

// --- Sampled ----------------------------------------------------------------

Sampled::Sampled(Interval range, std::vector<double> mu) : range_(range), mu_(std::move(mu)) {
  if (mu_.size() < 2) throw Error(ErrorCode::InvalidSamples, "sampled set needs at least two values");
  if (!(range_.l() < range_.r())) throw Error(ErrorCode::InvalidDomain, "sampled set needs lo < hi");
  for (double v : mu_) require_unit(v, "sampled membership");
}

double Sampled::operator()(double x) const noexcept {
  if (!range_.contains(x)) return 0.0;
  const double step = range_.length() / static_cast<double>(mu_.size() - 1);
  auto i = static_cast<std::size_t>(std::lround((x - range_.l()) / step));
  return mu_[std::min(i, mu_.size() - 1)];
}

// --- MembershipFunction -----------------------------------------------------

double MembershipFunction::operator()(double x) const noexcept {
  return std::visit([x](const auto& f) { return f(x); }, f_);
}

Interval MembershipFunction::domain() const noexcept {
  return std::visit([](const auto& f) { return f.domain(); }, f_);
}

double mu(const MembershipFunction& mf, double x) noexcept { return mf(x); }

// --- alpha-cuts -------------------------------------------------------------

std::vector<double> sample_grid(Interval window, std::size_t samples) {
  if (samples < 2) throw Error(ErrorCode::InvalidSamples, "need at least 2 samples");
  std::vector<double> grid(samples);
  const double step = window.length() / static_cast<double>(samples - 1);
  for (std::size_t i = 0; i < samples; ++i) grid[i] = window.l() + static_cast<double>(i) * step;
  grid.back() = window.r();
  return grid;
}

DisjointRegion sampled_alpha_cut(const MembershipFunction& mf, double alpha, std::size_t samples, Interval window) {
  const std::vector<double> x = sample_grid(window, samples);
  std::vector<Interval> cuts;
  bool open = false;
  double left = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (mf(x[i]) < alpha) {
      if (open) cuts.emplace_back(left, x[i - 1]);
      open = false;
    } else {
      if (!open) left = x[i];
      open = true;
    }
  }
  if (open) cuts.emplace_back(left, x.back());
  return DisjointRegion::from_intervals(std::move(cuts));
}

namespace {

DisjointRegion exact_step_cut(const PiecewiseConstant& f, double alpha) {
  const auto b = f.breakpoints();
  const auto cells = f.cell_levels();
  const auto points = f.point_levels();
  std::vector<Interval> pieces;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (points[j] >= alpha) pieces.emplace_back(b[j], b[j]);
    if (j < cells.size() && cells[j] >= alpha) pieces.emplace_back(b[j], b[j + 1]);
  }
  return DisjointRegion::from_intervals(std::move(pieces));
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::InvalidAlpha, "alpha " + std::to_string(alpha) + " outside (0, 1]");
  }
}

}  // namespace

AlphaCut alpha_cut(const MembershipFunction& mf, double alpha, const Discretization& disc) {
  check_alpha(alpha);
  if (disc.samples < 2) throw Error(ErrorCode::InvalidSamples, "need at least 2 samples");
  if (disc.path == CutPath::Auto) {
    if (const auto* step = std::get_if<PiecewiseConstant>(&mf.variant())) {
      return {alpha, exact_step_cut(*step, alpha)};
    }
  }
  return {alpha, sampled_alpha_cut(mf, alpha, disc.samples, disc.window.value_or(mf.domain()))};
}

double alpha_length(const MembershipFunction& mf, double alpha, const Discretization& disc) {
  return alpha_cut(mf, alpha, disc).region.total_length();
}

// --- attributes -------------------------------------------------------------

Attributes attributes(const MembershipFunction& mf, const Discretization& disc) {
  if (disc.samples < 2) throw Error(ErrorCode::InvalidSamples, "need at least 2 samples");
  const Interval window = disc.window.value_or(mf.domain());

  const double height = std::visit(
      Overloaded{
          [](const PiecewiseConstant& f) {
            double h = 0.0;
            for (double v : f.point_levels()) h = std::max(h, v);
            for (double v : f.cell_levels()) h = std::max(h, v);
            return h;
          },
          [](const PiecewiseLinear& f) {
            double h = 0.0;
            for (const Vertex& v : f.vertices()) h = std::max(h, v.mu);
            return h;
          },
          [](const Gaussian& f) {
            if (f.domain().contains(f.mean())) return 1.0;
            return std::max(f(f.domain().l()), f(f.domain().r()));
          },
          [](const Sampled& f) {
            double h = 0.0;
            for (double v : f.values()) h = std::max(h, v);
            return h;
          },
      },
      mf.variant());
  if (height <= 0.0) throw Error(ErrorCode::EmptySet, "membership is identically zero");

  const double support = std::visit(
      Overloaded{
          [](const PiecewiseConstant& f) {
            double len = 0.0;
            const auto b = f.breakpoints();
            const auto cells = f.cell_levels();
            for (std::size_t j = 0; j < cells.size(); ++j) {
              if (cells[j] > 0.0) len += b[j + 1] - b[j];
            }
            return len;
          },
          [](const PiecewiseLinear& f) {
            double len = 0.0;
            const auto v = f.vertices();
            for (std::size_t i = 0; i + 1 < v.size(); ++i) {
              if (v[i].mu > 0.0 || v[i + 1].mu > 0.0) len += v[i + 1].x - v[i].x;
            }
            return len;
          },
          [](const Gaussian& f) { return f.domain().length(); },
          [&](const Sampled&) {
            const double threshold = 1.0 / static_cast<double>(disc.samples);
            return sampled_alpha_cut(mf, threshold, disc.samples, window).total_length();
          },
      },
      mf.variant());

  double weighted = 0.0;
  double mass = 0.0;
  for (double x : sample_grid(window, disc.samples)) {
    const double m = mf(x);
    weighted += x * m;
    mass += m;
  }
  if (mass <= 0.0) throw Error(ErrorCode::EmptySet, "membership vanishes on every grid point");

  const double core = alpha_length(mf, 1.0, disc);
  return {height, weighted / mass, support, core};
}

}  // namespace lingagree
