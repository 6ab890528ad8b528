#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace fracdirac {

/// The clock function phi with its derivative; all fractional operators in
/// this library are taken with respect to such a clock. phi must be C^1 with
/// phi' > 0 on the interior of [t_start, t_end] (phi'(t_start) = 0 is
/// tolerated, e.g. phi(t) = t^p on [0, T]).
struct ClockMap {
  std::function<double(double)> phi;
  std::function<double(double)> phi_prime;
  double t_start = 0.0;
  double t_end = 1.0;
  std::string name = "identity";
  bool tabulated = false;  // skips the C^1 spot-check (no callable curvature)
};

/// Clocks selectable by name: "identity", "power:p" (p > 0), "exp".
ClockMap make_clock(const std::string& spec, double t_start, double t_end);

/// Clock from sampled columns (t, phi, phi'); linear interpolation between
/// samples. The t column must be strictly increasing.
ClockMap make_tabulated_clock(std::vector<double> t, std::vector<double> phi,
                              std::vector<double> phi_prime);

struct TimeGrid {
  std::vector<double> nodes;  // strictly increasing, at least 3

  int steps() const { return static_cast<int>(nodes.size()) - 1; }
  double front() const { return nodes.front(); }
  double back() const { return nodes.back(); }
};

/// Uniform grid with `steps` intervals on [t0, t1].
std::shared_ptr<const TimeGrid> uniform_grid(double t0, double t1, int steps);

/// A grid bound to a clock: caches u_k = phi(t_k) and phi'(t_k) and runs the
/// clock validity checks (u strictly increasing, phi' > 0, C^1 spot-check of
/// phi' against a small-step central difference of phi).
class ClockedGrid {
 public:
  ClockedGrid(std::shared_ptr<const TimeGrid> grid, ClockMap clock);

  const TimeGrid& grid() const { return *grid_; }
  std::shared_ptr<const TimeGrid> grid_ptr() const { return grid_; }
  const ClockMap& clock() const { return clock_; }
  std::span<const double> u() const { return u_; }        // phi(t_k)
  std::span<const double> phip() const { return phip_; }  // phi'(t_k)
  int size() const { return static_cast<int>(u_.size()); }

 private:
  std::shared_ptr<const TimeGrid> grid_;
  ClockMap clock_;
  std::vector<double> u_;
  std::vector<double> phip_;
};

/// Sampled values of a scalar (complex) function on a time grid. The leading
/// `flagged_prefix` nodes, when nonzero, were filled by extrapolation rather
/// than computed and should be skipped by accuracy-sensitive consumers.
struct TimeSeries {
  std::shared_ptr<const TimeGrid> grid;
  std::vector<std::complex<double>> values;
  int flagged_prefix = 0;

  int size() const { return static_cast<int>(values.size()); }
};

TimeSeries make_series(std::shared_ptr<const TimeGrid> grid,
                       const std::function<std::complex<double>(double)>& f);
TimeSeries make_series_real(std::shared_ptr<const TimeGrid> grid,
                            const std::function<double(double)>& f);
TimeSeries zero_series(std::shared_ptr<const TimeGrid> grid);

/// Throws if a and b do not share one grid (pointer first, contents second).
void require_same_grid(const TimeSeries& a, const TimeSeries& b);
void require_same_grid(const TimeSeries& a, const TimeGrid& g);

/// A positive fractional order together with its integer envelope n,
/// n - 1 < alpha <= n.
struct FracOrder {
  double alpha;
  int n;

  explicit FracOrder(double a);
};

}  // namespace fracdirac
