#include "fracdirac/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "fracdirac/specfun.hpp"

namespace fracdirac {

ProductQuadrature::ProductQuadrature(std::shared_ptr<const ClockedGrid> cg,
                                     double alpha)
    : cg_(std::move(cg)), alpha_(alpha) {
  if (!(alpha > 0))
    throw std::invalid_argument("frac_integral: alpha must be > 0");

  const auto u = cg_->u();
  const int n = static_cast<int>(u.size());
  offset_.resize(n);
  std::size_t total = 0;
  for (int i = 0; i < n; ++i) {
    offset_[i] = total;
    total += static_cast<std::size_t>(i) + 1;
  }
  weights_.assign(total, 0.0);

  const double rgam = std::exp(-log_gamma(alpha));
  const double ap1 = alpha + 1.0;

#pragma omp parallel for schedule(dynamic, 16)
  for (int i = 1; i < n; ++i) {
    double* row = weights_.data() + offset_[i];
    const double ui = u[i];
    // Walk cells [u_k, u_{k+1}], k < i; v = ui - u decreases along the row.
    double b = ui - u[0];
    double bpow = std::pow(b, alpha);
    for (int k = 0; k < i; ++k) {
      const double a = ui - u[k + 1];
      const double apow = (k + 1 == i) ? 0.0 : std::pow(a, alpha);
      const double A = (bpow - apow) / alpha;               // int v^{a-1}
      const double B = (b * bpow - a * apow) / ap1;         // int v^{a}
      const double delta = b - a;                           // cell width in u
      const double slope_part = (b * A - B) / delta;
      row[k] += rgam * (A - slope_part);
      row[k + 1] += rgam * slope_part;
      b = a;
      bpow = apow;
    }
  }
}

void ProductQuadrature::apply_to(std::span<const std::complex<double>> f,
                                 std::span<std::complex<double>> out,
                                 bool parallel) const {
  const int n = cg_->size();
  if (static_cast<int>(f.size()) != n || static_cast<int>(out.size()) != n)
    throw std::invalid_argument("frac_integral: series/grid size mismatch");
  out[0] = 0.0;
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
  for (int i = 1; i < n; ++i) {
    const double* row = weights_.data() + offset_[i];
    std::complex<double> acc = 0.0;
    for (int k = 0; k <= i; ++k) acc += row[k] * f[k];
    out[i] = acc;
  }
}

TimeSeries ProductQuadrature::apply(const TimeSeries& f) const {
  require_same_grid(f, cg_->grid());
  TimeSeries out = zero_series(cg_->grid_ptr());
  apply_to(f.values, out.values, true);
  return out;
}

TimeSeries ProductQuadrature::apply_serial(const TimeSeries& f) const {
  require_same_grid(f, cg_->grid());
  TimeSeries out = zero_series(cg_->grid_ptr());
  apply_to(f.values, out.values, false);
  return out;
}

}  // namespace fracdirac
