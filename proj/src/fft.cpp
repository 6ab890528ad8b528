#include "fracdirac/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <functional>
#include <stdexcept>

namespace fracdirac {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;
}

std::size_t Lattice::size() const {
  std::size_t s = 1;
  for (int n : shape) s *= static_cast<std::size_t>(n);
  return s;
}

double Lattice::wavenumber(int axis, int k) const {
  return kTwoPi * folded_index(k, shape[axis]) / extent[axis];
}

std::vector<double> Lattice::node_coords(std::size_t flat) const {
  std::vector<double> x(dim());
  for (int a = dim() - 1; a >= 0; --a) {
    const int idx = static_cast<int>(flat % shape[a]);
    flat /= shape[a];
    x[a] = extent[a] * idx / shape[a];
  }
  return x;
}

void Lattice::validate() const {
  if (shape.empty() || shape.size() != extent.size())
    throw std::invalid_argument("lattice: shape/extent mismatch");
  for (int n : shape)
    if (n < 8) throw std::invalid_argument("lattice: need >= 8 nodes per axis");
  for (double e : extent)
    if (!(e > 0)) throw std::invalid_argument("lattice: extent must be > 0");
}

Dft::Dft(Lattice lattice) : lattice_(std::move(lattice)) {
  lattice_.validate();
  const int d = lattice_.dim();
  std::vector<int> n(lattice_.shape.begin(), lattice_.shape.end());
  std::vector<fftw_complex> scratch_in(lattice_.size());
  std::vector<fftw_complex> scratch_out(lattice_.size());
  plan_fwd_ = fftw_plan_dft(d, n.data(), scratch_in.data(), scratch_out.data(),
                            FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  plan_bwd_ = fftw_plan_dft(d, n.data(), scratch_in.data(), scratch_out.data(),
                            FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!plan_fwd_ || !plan_bwd_) throw std::runtime_error("fftw plan failed");
}

Dft::~Dft() {
  if (plan_fwd_) fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  if (plan_bwd_) fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
}

void Dft::forward(std::span<const std::complex<double>> in,
                  std::span<std::complex<double>> out) const {
  if (in.size() != lattice_.size() || out.size() != lattice_.size())
    throw std::invalid_argument("dft: buffer size mismatch");
  fftw_execute_dft(static_cast<fftw_plan>(plan_fwd_),
                   reinterpret_cast<fftw_complex*>(
                       const_cast<std::complex<double>*>(in.data())),
                   reinterpret_cast<fftw_complex*>(out.data()));
}

void Dft::inverse(std::span<const std::complex<double>> in,
                  std::span<std::complex<double>> out) const {
  if (in.size() != lattice_.size() || out.size() != lattice_.size())
    throw std::invalid_argument("dft: buffer size mismatch");
  fftw_execute_dft(static_cast<fftw_plan>(plan_bwd_),
                   reinterpret_cast<fftw_complex*>(
                       const_cast<std::complex<double>*>(in.data())),
                   reinterpret_cast<fftw_complex*>(out.data()));
  const double scale = 1.0 / static_cast<double>(lattice_.size());
  for (auto& v : out) v *= scale;
}

double Dft::xi_squared(std::size_t flat) const {
  double s = 0.0;
  for (int a = lattice_.dim() - 1; a >= 0; --a) {
    const int idx = static_cast<int>(flat % lattice_.shape[a]);
    flat /= lattice_.shape[a];
    const double xi = lattice_.wavenumber(a, idx);
    s += xi * xi;
  }
  return s;
}

void Dft::derivative(std::span<const std::complex<double>> in,
                     std::span<std::complex<double>> out, int axis) const {
  const std::size_t n = lattice_.size();
  std::vector<std::complex<double>> hat(n);
  forward(in, {hat.data(), n});
  const int na = lattice_.shape[axis];
  // stride of `axis` in the row-major flattening
  std::size_t stride = 1;
  for (int a = lattice_.dim() - 1; a > axis; --a) stride *= lattice_.shape[a];
  for (std::size_t i = 0; i < n; ++i) {
    const int k = static_cast<int>((i / stride) % na);
    const int kf = Lattice::folded_index(k, na);
    // forward transform pairs with e^{+i xi x} reconstruction: d/dx -> i xi
    double xi = kTwoPi * kf / lattice_.extent[axis];
    if (na % 2 == 0 && k == na / 2) xi = 0.0;  // Nyquist
    hat[i] *= std::complex<double>(0.0, xi);
  }
  inverse(hat, out);
}

void Dft::radial_multiplier(std::span<const std::complex<double>> in,
                            std::span<std::complex<double>> out,
                            const std::function<double(double)>& m) const {
  const std::size_t n = lattice_.size();
  std::vector<std::complex<double>> hat(n);
  forward(in, {hat.data(), n});
  for (std::size_t i = 0; i < n; ++i) hat[i] *= m(std::sqrt(xi_squared(i)));
  inverse(hat, out);
}

}  // namespace fracdirac
