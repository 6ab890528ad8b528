#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "fracdirac/fft.hpp"

namespace fracdirac {

/// Basis blade as a generator bit set. Generators are ordered
/// e_1..e_n, e_plus, e_minus so that Cl_{0,n} embeds by mask prefix.
using Blade = std::uint32_t;

/// Complexified Cl_{0,n} extended by the pair e_plus (square +1),
/// e_minus (square -1); all generators anticommute.
struct WittAlgebra {
  int vec_dim = 0;  // n

  int gen_count() const { return vec_dim + 2; }
  int eplus() const { return vec_dim; }
  int eminus() const { return vec_dim + 1; }
  double generator_square(int g) const { return g == eplus() ? 1.0 : -1.0; }
  bool operator==(const WittAlgebra&) const = default;
};

/// Product of two basis blades: sign from transposition parity
/// (popcount-prefix count) plus signature contractions; resulting blade is
/// the symmetric difference.
std::pair<double, Blade> blade_product(const WittAlgebra& alg, Blade a,
                                       Blade b);

/// Sparse multivector over the Witt-extended algebra. Exact structural
/// zeros are pruned after every operation.
class Multivector {
 public:
  using Coeff = std::complex<double>;

  explicit Multivector(WittAlgebra alg = {}) : alg_(alg) {}
  Multivector(WittAlgebra alg, Blade b, Coeff c) : alg_(alg) { set(b, c); }

  static Multivector scalar(WittAlgebra alg, Coeff c) {
    return Multivector(alg, 0u, c);
  }
  static Multivector generator(WittAlgebra alg, int g);

  const WittAlgebra& algebra() const { return alg_; }
  const std::map<Blade, Coeff>& terms() const { return terms_; }
  Coeff coeff(Blade b) const;
  void set(Blade b, Coeff c);
  bool empty() const { return terms_.empty(); }
  double max_abs() const;

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(Coeff s);
  friend Multivector operator+(Multivector a, const Multivector& b) {
    return a += b;
  }
  friend Multivector operator-(Multivector a, const Multivector& b) {
    return a -= b;
  }
  friend Multivector operator*(Multivector a, Coeff s) { return a *= s; }
  friend Multivector operator*(Coeff s, Multivector a) { return a *= s; }

 private:
  WittAlgebra alg_;
  std::map<Blade, Coeff> terms_;
};

/// Bilinear extension of the blade product.
Multivector geometric_product(const Multivector& a, const Multivector& b);
inline Multivector operator*(const Multivector& a, const Multivector& b) {
  return geometric_product(a, b);
}

/// The nilpotent Witt pair f = (e_plus - e_minus)/2, f^+ = (e_plus + e_minus)/2
/// in the (n+2)-generator algebra.
std::pair<Multivector, Multivector> witt_pair(int n);

// ---------------------------------------------------------------------------
// Sampled Clifford-valued fields

/// Multivector-valued field on a periodic lattice, stored per-blade
/// (structure of arrays).
struct MultivectorField {
  WittAlgebra algebra;
  Lattice lattice;
  std::map<Blade, std::vector<std::complex<double>>> comps;

  std::vector<std::complex<double>>& component(Blade b);
  Multivector at(std::size_t flat) const;
  void prune(double tol = 0.0);
};

/// Euclidean Dirac operator sum_k e_k d/dx_k with spectral differentiation
/// per axis; requires a periodic field. Component transforms run
/// OpenMP-parallel; the serial variant is the reference for tests.
MultivectorField dirac_apply(const MultivectorField& f,
                             const Dft* dft = nullptr);
MultivectorField dirac_apply_serial(const MultivectorField& f,
                                    const Dft* dft = nullptr);

/// Dirac operator by 4th-order central differences for non-periodic sample
/// boxes; valid on the interior window (margin 2 per axis), the margin nodes
/// of the result are zeroed. `spacing[a]` is the sample step along axis a.
MultivectorField dirac_apply_fd4(const MultivectorField& f,
                                 std::span<const double> spacing);

/// Max-norm of the Dirac image over the interior window; 0 signals
/// left-monogenicity on the grid.
double monogenic_residual(const MultivectorField& f, int interior_margin = 0);

}  // namespace fracdirac
