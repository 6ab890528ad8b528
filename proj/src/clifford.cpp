#include "fracdirac/clifford.hpp"

#include <bit>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace fracdirac {

namespace {
using cplx = std::complex<double>;

void require_same_algebra(const WittAlgebra& a, const WittAlgebra& b) {
  if (!(a == b))
    throw std::invalid_argument("clifford: algebra dimension mismatch");
}
}  // namespace

std::pair<double, Blade> blade_product(const WittAlgebra& alg, Blade a,
                                       Blade b) {
  // Transpositions needed to interleave the two ascending generator lists:
  // count pairs (i in a, j in b) with i > j.
  int swaps = 0;
  Blade ash = a >> 1;
  while (ash) {
    swaps += std::popcount(ash & b);
    ash >>= 1;
  }
  double sign = (swaps & 1) ? -1.0 : 1.0;
  Blade common = a & b;
  while (common) {
    const int g = std::countr_zero(common);
    sign *= alg.generator_square(g);
    common &= common - 1;
  }
  return {sign, a ^ b};
}

Multivector Multivector::generator(WittAlgebra alg, int g) {
  if (g < 0 || g >= alg.gen_count())
    throw std::invalid_argument("clifford: generator index out of range");
  return Multivector(alg, Blade{1} << g, 1.0);
}

Multivector::Coeff Multivector::coeff(Blade b) const {
  const auto it = terms_.find(b);
  return it == terms_.end() ? Coeff{0.0, 0.0} : it->second;
}

void Multivector::set(Blade b, Coeff c) {
  if (c == Coeff{0.0, 0.0})
    terms_.erase(b);
  else
    terms_[b] = c;
}

double Multivector::max_abs() const {
  double m = 0.0;
  for (const auto& [b, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  require_same_algebra(alg_, o.alg_);
  for (const auto& [b, c] : o.terms_) set(b, coeff(b) + c);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  require_same_algebra(alg_, o.alg_);
  for (const auto& [b, c] : o.terms_) set(b, coeff(b) - c);
  return *this;
}

Multivector& Multivector::operator*=(Coeff s) {
  if (s == Coeff{0.0, 0.0}) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, c] : terms_) c *= s;
  return *this;
}

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  require_same_algebra(a.algebra(), b.algebra());
  Multivector out(a.algebra());
  for (const auto& [ba, ca] : a.terms())
    for (const auto& [bb, cb] : b.terms()) {
      const auto [sign, blade] = blade_product(a.algebra(), ba, bb);
      out.set(blade, out.coeff(blade) + sign * ca * cb);
    }
  return out;
}

std::pair<Multivector, Multivector> witt_pair(int n) {
  if (n < 1) throw std::invalid_argument("witt_pair: n must be >= 1");
  WittAlgebra alg{n};
  const Blade ep = Blade{1} << alg.eplus();
  const Blade em = Blade{1} << alg.eminus();
  Multivector f(alg), fp(alg);
  f.set(ep, 0.5);
  f.set(em, -0.5);
  fp.set(ep, 0.5);
  fp.set(em, 0.5);
  return {f, fp};
}

// ---------------------------------------------------------------------------

std::vector<cplx>& MultivectorField::component(Blade b) {
  auto it = comps.find(b);
  if (it == comps.end())
    it = comps.emplace(b, std::vector<cplx>(lattice.size())).first;
  return it->second;
}

Multivector MultivectorField::at(std::size_t flat) const {
  Multivector m(algebra);
  for (const auto& [b, arr] : comps) m.set(b, arr[flat]);
  return m;
}

void MultivectorField::prune(double tol) {
  for (auto it = comps.begin(); it != comps.end();) {
    double mx = 0.0;
    for (const auto& v : it->second) mx = std::max(mx, std::abs(v));
    it = (mx <= tol) ? comps.erase(it) : ++it;
  }
}

namespace {

MultivectorField dirac_apply_impl(const MultivectorField& f, const Dft* dft,
                                  bool parallel) {
  std::unique_ptr<Dft> local;
  if (dft == nullptr) {
    local = std::make_unique<Dft>(f.lattice);
    dft = local.get();
  } else if (!(dft->lattice() == f.lattice)) {
    throw std::invalid_argument("dirac_apply: dft lattice mismatch");
  }
  const int n = f.algebra.vec_dim;
  if (f.lattice.dim() != n)
    throw std::invalid_argument(
        "dirac_apply: lattice dimension must equal the algebra vector "
        "dimension");

  MultivectorField out;
  out.algebra = f.algebra;
  out.lattice = f.lattice;

  struct Task {
    int axis;
    Blade src;
    double sign;
    Blade dst;
  };
  std::vector<Task> tasks;
  for (int k = 0; k < n; ++k) {
    const Blade ek = Blade{1} << k;
    for (const auto& [b, arr] : f.comps) {
      const auto [sign, blade] = blade_product(f.algebra, ek, b);
      tasks.push_back({k, b, sign, blade});
      out.component(blade);  // preallocate before the parallel region
    }
  }

  std::vector<std::vector<cplx>> partial(tasks.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int ti = 0; ti < static_cast<int>(tasks.size()); ++ti) {
    partial[ti].resize(f.lattice.size());
    dft->derivative(f.comps.at(tasks[ti].src), partial[ti], tasks[ti].axis);
  }
  for (std::size_t ti = 0; ti < tasks.size(); ++ti) {
    auto& dst = out.component(tasks[ti].dst);
    const double s = tasks[ti].sign;
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += s * partial[ti][i];
  }
  out.prune();
  return out;
}

// 4th-order central first derivative along one axis, interior only.
void fd4_axis(const Lattice& lat, std::span<const cplx> in,
              std::span<cplx> out, int axis, double h) {
  std::size_t stride = 1;
  for (int a = lat.dim() - 1; a > axis; --a) stride *= lat.shape[a];
  const int na = lat.shape[axis];
  const std::size_t n = lat.size();
  const double c1 = 8.0 / (12.0 * h);
  const double c2 = 1.0 / (12.0 * h);
  for (std::size_t i = 0; i < n; ++i) {
    const int k = static_cast<int>((i / stride) % na);
    if (k < 2 || k >= na - 2) {
      out[i] = 0.0;
      continue;
    }
    out[i] = c1 * (in[i + stride] - in[i - stride]) -
             c2 * (in[i + 2 * stride] - in[i - 2 * stride]);
  }
}

}  // namespace

MultivectorField dirac_apply(const MultivectorField& f, const Dft* dft) {
  return dirac_apply_impl(f, dft, true);
}

MultivectorField dirac_apply_serial(const MultivectorField& f,
                                    const Dft* dft) {
  return dirac_apply_impl(f, dft, false);
}

MultivectorField dirac_apply_fd4(const MultivectorField& f,
                                 std::span<const double> spacing) {
  const int n = f.algebra.vec_dim;
  if (static_cast<int>(spacing.size()) != n || f.lattice.dim() != n)
    throw std::invalid_argument("dirac_apply_fd4: dimension mismatch");
  for (int a = 0; a < n; ++a)
    if (f.lattice.shape[a] < 5)
      throw std::invalid_argument("dirac_apply_fd4: need >= 5 nodes per axis");

  MultivectorField out;
  out.algebra = f.algebra;
  out.lattice = f.lattice;
  std::vector<cplx> deriv(f.lattice.size());
  for (int k = 0; k < n; ++k) {
    const Blade ek = Blade{1} << k;
    for (const auto& [b, arr] : f.comps) {
      fd4_axis(f.lattice, arr, deriv, k, spacing[k]);
      const auto [sign, blade] = blade_product(f.algebra, ek, b);
      auto& dst = out.component(blade);
      for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += sign * deriv[i];
    }
  }
  out.prune();
  return out;
}

double monogenic_residual(const MultivectorField& f, int interior_margin) {
  MultivectorField img = dirac_apply(f);
  double mx = 0.0;
  const auto& lat = img.lattice;
  for (const auto& [b, arr] : img.comps) {
    for (std::size_t i = 0; i < arr.size(); ++i) {
      if (interior_margin > 0) {
        std::size_t rest = i;
        bool interior = true;
        for (int a = lat.dim() - 1; a >= 0; --a) {
          const int k = static_cast<int>(rest % lat.shape[a]);
          rest /= lat.shape[a];
          if (k < interior_margin || k >= lat.shape[a] - interior_margin) {
            interior = false;
            break;
          }
        }
        if (!interior) continue;
      }
      mx = std::max(mx, std::abs(arr[i]));
    }
  }
  return mx;
}

}  // namespace fracdirac
