#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace fracdirac {

/// Uniform periodic lattice: shape[a] nodes on [0, extent[a]) per axis,
/// row-major flattening (last axis fastest).
struct Lattice {
  std::vector<int> shape;
  std::vector<double> extent;

  int dim() const { return static_cast<int>(shape.size()); }
  std::size_t size() const;
  double spacing(int axis) const { return extent[axis] / shape[axis]; }
  /// Signed integer frequency for index k on an axis (k - n for k >= n/2).
  static int folded_index(int k, int n) { return k < (n + 1) / 2 ? k : k - n; }
  /// Angular wavenumber xi = 2 pi k~ / L.
  double wavenumber(int axis, int k) const;
  std::vector<double> node_coords(std::size_t flat) const;
  void validate() const;
  bool operator==(const Lattice&) const = default;
};

/// Cached complex-to-complex FFTW plans for one lattice. forward() applies
/// the e^{-i xi x} sum, inverse() the normalized e^{+i xi x} sum; the pair
/// round-trips exactly. Plans are created once (not thread-safe to create,
/// safe to execute concurrently on distinct buffers).
class Dft {
 public:
  explicit Dft(Lattice lattice);
  ~Dft();
  Dft(const Dft&) = delete;
  Dft& operator=(const Dft&) = delete;

  const Lattice& lattice() const { return lattice_; }

  void forward(std::span<const std::complex<double>> in,
               std::span<std::complex<double>> out) const;
  void inverse(std::span<const std::complex<double>> in,
               std::span<std::complex<double>> out) const;

  /// Spectral partial derivative along an axis (Nyquist mode zeroed).
  void derivative(std::span<const std::complex<double>> in,
                  std::span<std::complex<double>> out, int axis) const;

  /// Fourier multiplier m(|xi|) applied in place of the field.
  void radial_multiplier(std::span<const std::complex<double>> in,
                         std::span<std::complex<double>> out,
                         const std::function<double(double)>& m) const;

  /// |xi|^2 at a flattened frequency index.
  double xi_squared(std::size_t flat) const;

 private:
  Lattice lattice_;
  void* plan_fwd_ = nullptr;
  void* plan_bwd_ = nullptr;
};

}  // namespace fracdirac
