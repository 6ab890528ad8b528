#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "fracdirac/grid.hpp"
#include "fracdirac/quadrature.hpp"

namespace fracdirac {

/// I^{alpha,phi} f. One-shot convenience; repeated use on one grid should go
/// through ProductQuadrature directly.
TimeSeries frac_integral(double alpha, const ClockMap& clock,
                         const TimeSeries& f);
TimeSeries frac_integral(const ProductQuadrature& quad, const TimeSeries& f);

/// j-fold application of (1/phi') d/dt, realized as d/du on the clock grid
/// with second-order nonuniform stencils (one-sided at the endpoints).
TimeSeries phi_diff(int j, const ClockMap& clock, const TimeSeries& f);
TimeSeries phi_diff(int j, const ClockedGrid& cg, const TimeSeries& f);

/// Riemann-Liouville derivative D^{alpha,phi} = ((1/phi') d/dt)^n I^{n-alpha,phi}.
/// The first n nodes are filled by degree-n polynomial extrapolation in u and
/// flagged (flagged_prefix = n).
TimeSeries rl_derivative(const FracOrder& alpha, const ClockMap& clock,
                         const TimeSeries& f);
TimeSeries rl_derivative(const FracOrder& alpha, const ClockedGrid& cg,
                         const TimeSeries& f,
                         const ProductQuadrature* pre_built = nullptr);

/// Caputo-type derivative: subtract the phi-Taylor jet of order n-1 at t0,
/// then apply the RL derivative. `init[j]` are the initial phi-derivatives
/// f_phi^[j](t0), j = 0..n-1; when absent they are estimated from the grid by
/// one-sided differences (second order, flagged lower accuracy).
TimeSeries caputo_derivative(
    const FracOrder& alpha, const ClockMap& clock, const TimeSeries& f,
    const std::optional<std::vector<std::complex<double>>>& init = {});
TimeSeries caputo_derivative(
    const FracOrder& alpha, const ClockedGrid& cg, const TimeSeries& f,
    const std::optional<std::vector<std::complex<double>>>& init = {},
    const ProductQuadrature* pre_built = nullptr);

/// Psi_j(t) = (phi(t) - phi(t0))^j / Gamma(j+1).
TimeSeries psi_basis(int j, const ClockMap& clock,
                     std::shared_ptr<const TimeGrid> grid);
std::vector<std::complex<double>> psi_basis_values(int j, const ClockedGrid& cg);

/// Estimate f_phi^[j](t0) for j = 0..count-1 by one-sided differences.
std::vector<std::complex<double>> estimate_initial_jets(int count,
                                                        const ClockedGrid& cg,
                                                        const TimeSeries& f);

}  // namespace fracdirac
