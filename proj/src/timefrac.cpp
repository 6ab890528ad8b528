#include "fracdirac/timefrac.hpp"

#include <cmath>
#include <stdexcept>

#include "fracdirac/specfun.hpp"

namespace fracdirac {

namespace {

using cplx = std::complex<double>;

// d/du by 3-point nonuniform stencils; second order throughout.
std::vector<cplx> derivative_u(std::span<const double> u,
                               std::span<const cplx> f) {
  const int n = static_cast<int>(u.size());
  std::vector<cplx> out(n);
  for (int i = 1; i + 1 < n; ++i) {
    const double hl = u[i] - u[i - 1];
    const double hr = u[i + 1] - u[i];
    out[i] = (f[i + 1] * (hl * hl) - f[i - 1] * (hr * hr) +
              f[i] * (hr * hr - hl * hl)) /
             (hl * hr * (hl + hr));
  }
  {
    const double h0 = u[1] - u[0];
    const double h1 = u[2] - u[1];
    out[0] = f[0] * (-(2 * h0 + h1) / (h0 * (h0 + h1))) +
             f[1] * ((h0 + h1) / (h0 * h1)) + f[2] * (-h0 / (h1 * (h0 + h1)));
  }
  {
    const double h1 = u[n - 1] - u[n - 2];
    const double h0 = u[n - 2] - u[n - 3];
    out[n - 1] = f[n - 1] * ((2 * h1 + h0) / (h1 * (h0 + h1))) +
                 f[n - 2] * (-(h0 + h1) / (h0 * h1)) +
                 f[n - 3] * (h1 / (h0 * (h0 + h1)));
  }
  return out;
}

// Newton-form polynomial through (x[i], y[i]), evaluated at xq.
cplx newton_eval(std::span<const double> x, std::span<const cplx> y,
                 double xq) {
  const int m = static_cast<int>(x.size());
  std::vector<cplx> coef(y.begin(), y.end());
  for (int lvl = 1; lvl < m; ++lvl)
    for (int i = m - 1; i >= lvl; --i)
      coef[i] = (coef[i] - coef[i - 1]) / (x[i] - x[i - lvl]);
  cplx acc = coef[m - 1];
  for (int i = m - 2; i >= 0; --i) acc = acc * (xq - x[i]) + coef[i];
  return acc;
}

}  // namespace

TimeSeries frac_integral(double alpha, const ClockMap& clock,
                         const TimeSeries& f) {
  auto cg = std::make_shared<const ClockedGrid>(f.grid, clock);
  ProductQuadrature quad(cg, alpha);
  return quad.apply(f);
}

TimeSeries frac_integral(const ProductQuadrature& quad, const TimeSeries& f) {
  return quad.apply(f);
}

TimeSeries phi_diff(int j, const ClockedGrid& cg, const TimeSeries& f) {
  if (j < 0) throw std::invalid_argument("phi_diff: j must be >= 0");
  require_same_grid(f, cg.grid());
  if (cg.size() < 2 * j + 2 || cg.size() < 3)
    throw std::invalid_argument("phi_diff: grid too short for j=" +
                                std::to_string(j));
  TimeSeries out = f;
  for (int pass = 0; pass < j; ++pass)
    out.values = derivative_u(cg.u(), out.values);
  return out;
}

TimeSeries phi_diff(int j, const ClockMap& clock, const TimeSeries& f) {
  ClockedGrid cg(f.grid, clock);
  return phi_diff(j, cg, f);
}

TimeSeries rl_derivative(const FracOrder& alpha, const ClockedGrid& cg,
                         const TimeSeries& f,
                         const ProductQuadrature* pre_built) {
  require_same_grid(f, cg.grid());
  const int n = alpha.n;
  if (cg.size() < 2 * n + 2)
    throw std::invalid_argument("rl_derivative: grid too short (need >= " +
                                std::to_string(2 * n + 2) + " nodes)");

  TimeSeries g;
  const double frac = n - alpha.alpha;
  if (frac == 0.0) {
    g = f;
  } else if (pre_built != nullptr) {
    if (pre_built->alpha() != frac)
      throw std::invalid_argument("rl_derivative: pre-built quadrature order "
                                  "mismatch");
    g = pre_built->apply(f);
  } else {
    ProductQuadrature quad(
        std::make_shared<const ClockedGrid>(cg.grid_ptr(), cg.clock()), frac);
    g = quad.apply(f);
  }

  for (int pass = 0; pass < n; ++pass)
    g.values = derivative_u(cg.u(), g.values);

  // The leading n nodes sit on one-sided stencils over data that is not
  // smooth at t0; replace them by extrapolation and flag.
  const auto u = cg.u();
  const int m = n + 1;  // degree-n polynomial through the next m nodes
  std::vector<double> xs(u.begin() + n, u.begin() + n + m);
  std::vector<cplx> ys(g.values.begin() + n, g.values.begin() + n + m);
  for (int i = 0; i < n; ++i) g.values[i] = newton_eval(xs, ys, u[i]);
  g.flagged_prefix = std::max(f.flagged_prefix, n);
  return g;
}

TimeSeries rl_derivative(const FracOrder& alpha, const ClockMap& clock,
                         const TimeSeries& f) {
  ClockedGrid cg(f.grid, clock);
  return rl_derivative(alpha, cg, f);
}

std::vector<cplx> estimate_initial_jets(int count, const ClockedGrid& cg,
                                        const TimeSeries& f) {
  std::vector<cplx> jets(count);
  std::vector<cplx> work = f.values;
  for (int j = 0; j < count; ++j) {
    jets[j] = work[0];
    if (j + 1 < count) work = derivative_u(cg.u(), work);
  }
  return jets;
}

TimeSeries caputo_derivative(const FracOrder& alpha, const ClockedGrid& cg,
                             const TimeSeries& f,
                             const std::optional<std::vector<cplx>>& init,
                             const ProductQuadrature* pre_built) {
  require_same_grid(f, cg.grid());
  const int n = alpha.n;
  std::vector<cplx> jets;
  bool estimated = false;
  if (init.has_value()) {
    if (static_cast<int>(init->size()) != n)
      throw std::invalid_argument("caputo_derivative: init must have exactly " +
                                  std::to_string(n) + " entries");
    jets = *init;
  } else {
    jets = estimate_initial_jets(n, cg, f);
    estimated = true;
  }

  TimeSeries shifted = f;
  const auto u = cg.u();
  const double u0 = u[0];
  for (int i = 0; i < static_cast<int>(shifted.values.size()); ++i) {
    cplx jet = 0.0;
    double upow = 1.0;
    double fact = 1.0;
    for (int j = 0; j < n; ++j) {
      jet += jets[j] * upow / fact;
      upow *= (u[i] - u0);
      fact *= (j + 1.0);
    }
    // note: loop order above multiplies after use, so term j uses u^j / j!
    shifted.values[i] -= jet;
  }
  TimeSeries out = rl_derivative(alpha, cg, shifted, pre_built);
  if (estimated) out.flagged_prefix = std::max(out.flagged_prefix, n);
  return out;
}

TimeSeries caputo_derivative(const FracOrder& alpha, const ClockMap& clock,
                             const TimeSeries& f,
                             const std::optional<std::vector<cplx>>& init) {
  ClockedGrid cg(f.grid, clock);
  return caputo_derivative(alpha, cg, f, init);
}

std::vector<cplx> psi_basis_values(int j, const ClockedGrid& cg) {
  if (j < 0) throw std::invalid_argument("psi_basis: j must be >= 0");
  const auto u = cg.u();
  const double rfact = std::exp(-log_gamma(j + 1.0));
  std::vector<cplx> out(u.size());
  for (size_t i = 0; i < u.size(); ++i)
    out[i] = std::pow(u[i] - u[0], static_cast<double>(j)) * rfact;
  return out;
}

TimeSeries psi_basis(int j, const ClockMap& clock,
                     std::shared_ptr<const TimeGrid> grid) {
  ClockedGrid cg(grid, clock);
  TimeSeries s;
  s.grid = std::move(grid);
  s.values = psi_basis_values(j, cg);
  return s;
}

}  // namespace fracdirac
