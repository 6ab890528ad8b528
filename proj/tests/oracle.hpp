#pragma once

// Extended-precision reference implementations, independent of the library
// code paths they check. Test-only.

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace oracle {

using cplxl = std::complex<long double>;

/// Gamma by Spouge's formula (a = 39) in long double; independent of the
/// Lanczos fit in the library.
long double gamma_spouge(long double x);
long double log_gamma_spouge(long double x);

/// Multivariate Mittag-Leffler by brute-force double sum to shell `shells`.
cplxl ml_direct(std::span<const long double> a, long double b,
                std::span<const cplxl> z, int shells);

/// Kilbas-Saigo type series by direct product-form summation.
cplxl kilbas_saigo_direct(long double alpha, long double beta,
                          long double gamma, long double lambda, cplxl z,
                          int terms);

/// Bessel J by the ascending series in long double (small/moderate x).
long double bessel_series(long double nu, long double x, int terms = 200);

/// High-resolution quadrature of the fractional integral
/// 1/Gamma(al) int_{u0}^{ut} (ut-u)^{al-1} f(u) du with the singular factor
/// absorbed by the substitution v = (ut-u)^al; Gauss-Legendre panels in v.
/// `f` is a smooth function of u.
long double frac_integral_highres(
    long double alpha, long double u0, long double ut,
    const std::function<long double(long double)>& f, int panels = 256);

}  // namespace oracle
