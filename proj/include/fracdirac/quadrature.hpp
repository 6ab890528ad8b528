#pragma once

#include <memory>
#include <span>

#include "fracdirac/grid.hpp"

namespace fracdirac {

/// Product-integration rule for the weakly singular fractional integral
///
///   (I^{alpha,phi} f)(t) = 1/Gamma(alpha) * int_a^t phi'(s)
///                          (phi(t)-phi(s))^{alpha-1} f(s) ds.
///
/// Working in u = phi(s), the integrand is (u_t - u)^{alpha-1} ftilde(u);
/// ftilde is interpolated linearly per cell and the singular moment is
/// integrated in closed form, so the rule is exact for f piecewise linear
/// in phi(s). Weights are precomputed once per (grid, clock, alpha) and
/// reused across applications.
class ProductQuadrature {
 public:
  ProductQuadrature(std::shared_ptr<const ClockedGrid> cg, double alpha);

  double alpha() const { return alpha_; }
  const ClockedGrid& clocked_grid() const { return *cg_; }

  /// OpenMP-parallel over output nodes. Row sums are independent, so the
  /// result is identical to apply_serial for any thread count.
  TimeSeries apply(const TimeSeries& f) const;

  /// Serial reference implementation kept for testing and benchmarks.
  TimeSeries apply_serial(const TimeSeries& f) const;

  /// In-place variant on raw spans (used by the solver's inner loops).
  void apply_to(std::span<const std::complex<double>> f,
                std::span<std::complex<double>> out, bool parallel) const;

 private:
  std::shared_ptr<const ClockedGrid> cg_;
  double alpha_;
  std::vector<double> weights_;     // packed lower triangle, row i at offset_[i]
  std::vector<std::size_t> offset_;
};

}  // namespace fracdirac
