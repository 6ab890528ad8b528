#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracdirac {

/// Thrown when a series or iteration fails to meet its tolerance within
/// the configured term budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Gamma family

/// log|Gamma(x)| for real x excluding non-positive integers.
/// Lanczos fit on x > 0 (relative error well below 1e-12 up to x = 170),
/// reflection formula for x < 0. Throws std::domain_error at poles.
double log_gamma(double x);

/// Sign of Gamma(x); 0 at the poles.
int gamma_sign(double x);

/// Gamma(x) with reflection; overflows to +-inf past x ~ 171.6.
double gamma_fn(double x);

/// 1/Gamma(x), entire: returns 0 at the poles instead of throwing.
double reciprocal_gamma(double x);

namespace detail {
// Selfcheck fault-injection hook: additive perturbation of log_gamma.
// Never set outside the selfcheck fault-isolation path.
extern double lgamma_perturbation;
}  // namespace detail

// ---------------------------------------------------------------------------
// Series evaluators

/// Value of a truncated series together with an a-posteriori bound on the
/// discarded tail.
struct SeriesResult {
  std::complex<double> value{};
  double error_estimate = 0.0;
  int terms = 0;
};

/// Parameters of the multivariate Mittag-Leffler function
/// E_{(a_1..a_n),b}(z_1..z_n); all a_i > 0 and b > 0.
struct MultiMLParams {
  std::vector<double> a;
  double b = 1.0;

  void validate() const;
};

/// Multivariate Mittag-Leffler series, summed by total degree k
/// ("shells"). Terms of one shell enumerate all compositions
/// l_1+...+l_n = k weighted by the multinomial coefficient and
/// 1/Gamma(b + sum a_i l_i). Stops once the shell majorant
/// (sum|z_i|)^k / Gamma(b + k min a_i) stays below abs_tol for three
/// consecutive shells.
SeriesResult ml_multivariate(const MultiMLParams& params,
                             std::span<const std::complex<double>> z,
                             double abs_tol = 1e-14, int max_shells = 10000);

/// Two-parameter Mittag-Leffler E_{alpha,beta}(z); the n = 1 case above.
SeriesResult ml_two_param(double alpha, double beta, std::complex<double> z,
                          double abs_tol = 1e-14, int max_shells = 10000);

/// Parameters of the Kilbas-Saigo type function E^lambda_{alpha,beta,gamma}.
struct KilbasSaigoParams {
  double alpha = 1.0;  // > 0
  double beta = 1.0;   // > 0
  double gamma = 0.0;
  double lambda = 1.0;

  // Checks alpha,beta > 0 and that alpha*(j*beta+gamma)+1 misses the
  // Gamma poles for j = 0..depth.
  void validate(int depth = 512) const;
};

/// Coefficients c_0..c_{count-1} of the defining power series,
/// c_{k+1} = c_k * Gamma(a[k b + g] + 1) / Gamma(a[k b + g] + lambda + 1),
/// accumulated in log form.
std::vector<double> kilbas_saigo_coeffs(const KilbasSaigoParams& params,
                                        int count);

/// Kilbas-Saigo series sum_k c_k z^k; stops after |c_k z^k| < abs_tol for
/// three consecutive terms.
SeriesResult kilbas_saigo(const KilbasSaigoParams& params,
                          std::complex<double> z, double abs_tol = 1e-14,
                          int max_terms = 10000);

// ---------------------------------------------------------------------------
// Bessel

/// Bessel function of the first kind J_nu(x) for nu >= -1/2, x >= 0.
/// Ascending series (long double) for small x, Steed's continued-fraction
/// method for large x. Absolute error below 1e-10 on x in [0,100],
/// nu in [-1/2, 20].
double bessel_j(double nu, double x);

}  // namespace fracdirac
