#include "fracdirac/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracdirac {

ClockMap make_clock(const std::string& spec, double t_start, double t_end) {
  ClockMap c;
  c.t_start = t_start;
  c.t_end = t_end;
  c.name = spec;
  if (spec == "identity") {
    c.phi = [](double t) { return t; };
    c.phi_prime = [](double) { return 1.0; };
  } else if (spec == "exp") {
    c.phi = [](double t) { return std::exp(t); };
    c.phi_prime = [](double t) { return std::exp(t); };
  } else if (spec.rfind("power:", 0) == 0) {
    const double p = std::stod(spec.substr(6));
    if (!(p > 0)) throw std::invalid_argument("clock power:p requires p > 0");
    if (t_start < 0)
      throw std::invalid_argument("clock power:p requires t >= 0");
    c.phi = [p](double t) { return std::pow(t, p); };
    c.phi_prime = [p](double t) { return p * std::pow(t, p - 1.0); };
  } else {
    throw std::invalid_argument("unknown clock \"" + spec + "\"");
  }
  return c;
}

ClockMap make_tabulated_clock(std::vector<double> t, std::vector<double> phi,
                              std::vector<double> phi_prime) {
  if (t.size() < 2 || t.size() != phi.size() || t.size() != phi_prime.size())
    throw std::invalid_argument("tabulated clock: column size mismatch");
  for (size_t i = 1; i < t.size(); ++i)
    if (!(t[i] > t[i - 1]))
      throw std::invalid_argument("tabulated clock: t column not increasing");

  auto tt = std::make_shared<std::vector<double>>(std::move(t));
  auto pp = std::make_shared<std::vector<double>>(std::move(phi));
  auto dd = std::make_shared<std::vector<double>>(std::move(phi_prime));

  auto interp = [tt](const std::shared_ptr<std::vector<double>>& col,
                     double x) {
    const auto& tv = *tt;
    if (x < tv.front() - 1e-12 || x > tv.back() + 1e-12)
      throw std::out_of_range("tabulated clock: t outside table range");
    x = std::clamp(x, tv.front(), tv.back());
    const auto it = std::upper_bound(tv.begin(), tv.end(), x);
    const size_t hi = std::min<size_t>(
        std::max<size_t>(1, static_cast<size_t>(it - tv.begin())),
        tv.size() - 1);
    const size_t lo = hi - 1;
    const double w = (x - tv[lo]) / (tv[hi] - tv[lo]);
    return (1.0 - w) * (*col)[lo] + w * (*col)[hi];
  };

  ClockMap c;
  c.t_start = tt->front();
  c.t_end = tt->back();
  c.name = "tabulated";
  c.tabulated = true;
  c.phi = [interp, pp](double x) { return interp(pp, x); };
  c.phi_prime = [interp, dd](double x) { return interp(dd, x); };
  return c;
}

std::shared_ptr<const TimeGrid> uniform_grid(double t0, double t1, int steps) {
  if (!(t1 > t0)) throw std::invalid_argument("grid: t1 must exceed t0");
  if (steps < 2) throw std::invalid_argument("grid: need at least 2 steps");
  TimeGrid g;
  g.nodes.resize(steps + 1);
  for (int i = 0; i <= steps; ++i)
    g.nodes[i] = t0 + (t1 - t0) * static_cast<double>(i) / steps;
  g.nodes.back() = t1;
  return std::make_shared<const TimeGrid>(std::move(g));
}

ClockedGrid::ClockedGrid(std::shared_ptr<const TimeGrid> grid, ClockMap clock)
    : grid_(std::move(grid)), clock_(std::move(clock)) {
  const auto& t = grid_->nodes;
  if (t.size() < 3) throw std::invalid_argument("grid: need at least 3 nodes");
  for (size_t i = 1; i < t.size(); ++i)
    if (!(t[i] > t[i - 1]))
      throw std::invalid_argument("grid: nodes not strictly increasing");
  if (std::abs(t.front() - clock_.t_start) >
      1e-12 * std::max(1.0, std::abs(clock_.t_start)))
    throw std::invalid_argument("grid: first node must equal clock t_start");

  const int n = static_cast<int>(t.size());
  u_.resize(n);
  phip_.resize(n);
  for (int i = 0; i < n; ++i) {
    u_[i] = clock_.phi(t[i]);
    phip_[i] = clock_.phi_prime(t[i]);
  }
  for (int i = 1; i < n; ++i) {
    if (!(u_[i] > u_[i - 1]))
      throw std::invalid_argument(
          "clock: phi not strictly increasing across the grid");
    if (!(phip_[i] > 0.0))
      throw std::invalid_argument("clock: phi_prime <= 0 at node " +
                                  std::to_string(i));
  }
  if (phip_[0] < 0.0)
    throw std::invalid_argument("clock: phi_prime < 0 at the left endpoint");

  if (!clock_.tabulated) {
    // C^1 spot-check: phi' against a small-step central difference of phi.
    for (int i = 1; i + 1 < n; ++i) {
      const double ti = t[i];
      const double dt = 1e-6 * std::max(1.0, std::abs(ti));
      const double cd = (clock_.phi(ti + dt) - clock_.phi(ti - dt)) / (2 * dt);
      if (std::abs(cd - phip_[i]) > 1e-6 * std::max(1.0, std::abs(phip_[i])))
        throw std::invalid_argument(
            "clock: phi_prime inconsistent with phi near t=" +
            std::to_string(ti));
    }
  }
}

TimeSeries make_series(std::shared_ptr<const TimeGrid> grid,
                       const std::function<std::complex<double>(double)>& f) {
  TimeSeries s;
  s.grid = std::move(grid);
  s.values.reserve(s.grid->nodes.size());
  for (double t : s.grid->nodes) s.values.push_back(f(t));
  return s;
}

TimeSeries make_series_real(std::shared_ptr<const TimeGrid> grid,
                            const std::function<double(double)>& f) {
  return make_series(std::move(grid),
                     [&f](double t) { return std::complex<double>(f(t), 0.0); });
}

TimeSeries zero_series(std::shared_ptr<const TimeGrid> grid) {
  TimeSeries s;
  s.grid = std::move(grid);
  s.values.assign(s.grid->nodes.size(), {0.0, 0.0});
  return s;
}

void require_same_grid(const TimeSeries& a, const TimeGrid& g) {
  if (a.grid.get() == &g) return;
  if (!a.grid || a.grid->nodes != g.nodes)
    throw std::invalid_argument("time series grids do not match");
}

void require_same_grid(const TimeSeries& a, const TimeSeries& b) {
  if (a.grid == b.grid && a.grid) return;
  if (!a.grid || !b.grid || a.grid->nodes != b.grid->nodes)
    throw std::invalid_argument("time series grids do not match");
}

FracOrder::FracOrder(double a) : alpha(a) {
  if (!(a > 0)) throw std::invalid_argument("fractional order must be > 0");
  n = static_cast<int>(std::ceil(a));
  if (n < 1) n = 1;
}

}  // namespace fracdirac
