#include "fracdirac/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace fracdirac {

namespace detail {
double lgamma_perturbation = 0.0;
}

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_gamma_pole(double x) {
  return x <= 0.5 && std::abs(x - std::nearbyint(x)) < 1e-12 * std::max(1.0, std::abs(x));
}

// Lanczos fit, g = 607/128, 14 terms. Valid for x > 0.
double lanczos_log_gamma(double x) {
  static const double cof[14] = {
      57.1562356658629235,     -59.5979603554754912,
      14.1360979747417471,     -0.491913816097620199,
      0.339946499848118887e-4, 0.465236289270485756e-4,
      -0.983744753048795646e-4, 0.158088703224912494e-3,
      -0.210264441724104883e-3, 0.217439618115212643e-3,
      -0.164318106536763890e-3, 0.844182239838527433e-4,
      -0.261908384015814087e-4, 0.368991826595316234e-5};
  double y = x;
  double tmp = x + 5.24218750000000000;
  tmp = (x + 0.5) * std::log(tmp) - tmp;
  double ser = 0.999999999999997092;
  for (int j = 0; j < 14; ++j) ser += cof[j] / ++y;
  return tmp + std::log(2.5066282746310005 * ser / x);
}

}  // namespace

double log_gamma(double x) {
  if (is_gamma_pole(x))
    throw std::domain_error("log_gamma: pole at non-positive integer x=" +
                            std::to_string(x));
  double result;
  if (x > 0) {
    result = lanczos_log_gamma(x);
  } else {
    // |Gamma(x)| = pi / (|sin(pi x)| Gamma(1-x))
    double r = x - std::nearbyint(x);  // in [-1/2, 1/2]
    result = std::log(kPi) - std::log(std::abs(std::sin(kPi * r))) -
             lanczos_log_gamma(1.0 - x);
  }
  return result + detail::lgamma_perturbation;
}

int gamma_sign(double x) {
  if (x > 0) return 1;
  if (is_gamma_pole(x)) return 0;
  // Gamma alternates sign between consecutive negative integers.
  return (static_cast<long long>(std::floor(x)) % 2 == 0) ? 1 : -1;
}

double gamma_fn(double x) {
  return gamma_sign(x) * std::exp(log_gamma(x));
}

double reciprocal_gamma(double x) {
  if (x <= 0.5 && is_gamma_pole(x)) return 0.0;
  return gamma_sign(x) * std::exp(-log_gamma(x));
}

// ---------------------------------------------------------------------------
// Multivariate Mittag-Leffler

void MultiMLParams::validate() const {
  if (a.empty()) throw std::invalid_argument("ml: parameter vector a is empty");
  for (double ai : a)
    if (!(ai > 0))
      throw std::invalid_argument("ml: every a_i must be positive");
  if (!(b > 0)) throw std::invalid_argument("ml: b must be positive");
}

namespace {

using cplx = std::complex<double>;

// Sum of one total-degree shell: all l_1+...+l_n = k.
cplx ml_shell(const MultiMLParams& p, std::span<const cplx> z, int k) {
  const int n = static_cast<int>(z.size());
  const double lg_kfact = log_gamma(k + 1.0);
  cplx total = 0.0;
  std::function<void(int, int, cplx, double, double)> rec =
      [&](int pos, int rem, cplx zpow, double lfact, double asum) {
        if (pos == n - 1) {
          cplx zp = zpow;
          for (int i = 0; i < rem; ++i) zp *= z[pos];
          const double lf = lfact + log_gamma(rem + 1.0);
          const double as = asum + p.a[pos] * rem;
          total += zp * std::exp(lg_kfact - lf - log_gamma(p.b + as));
          return;
        }
        cplx zl = 1.0;
        for (int l = 0; l <= rem; ++l) {
          rec(pos + 1, rem - l, zpow * zl, lfact + log_gamma(l + 1.0),
              asum + p.a[pos] * l);
          zl *= z[pos];
        }
      };
  rec(0, k, cplx{1.0, 0.0}, 0.0, 0.0);
  return total;
}

}  // namespace

SeriesResult ml_multivariate(const MultiMLParams& params,
                             std::span<const std::complex<double>> z,
                             double abs_tol, int max_shells) {
  params.validate();
  if (z.size() != params.a.size())
    throw std::invalid_argument("ml: z length must match parameter count");

  double zsum = 0.0;
  for (const auto& zi : z) zsum += std::abs(zi);
  const double amin = *std::min_element(params.a.begin(), params.a.end());

  SeriesResult res;
  if (zsum == 0.0) {
    res.value = reciprocal_gamma(params.b);
    res.terms = 1;
    return res;
  }
  const double lzsum = std::log(zsum);
  auto shell_bound = [&](int k) {
    return std::exp(k * lzsum - log_gamma(params.b + k * amin));
  };

  cplx sum = 0.0;
  int below = 0;
  int k = 0;
  for (; k < max_shells; ++k) {
    sum += ml_shell(params, z, k);
    below = (shell_bound(k + 1) < abs_tol) ? below + 1 : 0;
    if (below >= 3) break;
  }
  if (k >= max_shells)
    throw ConvergenceError("ml_multivariate: no convergence within " +
                           std::to_string(max_shells) + " shells, |z|_1=" +
                           std::to_string(zsum));

  // Tail majorant; the 1.13 factor covers the dip of Gamma below 1 on (1,2).
  double tail = 0.0;
  for (int j = 1; j <= 1000; ++j) {
    const double b = shell_bound(k + j);
    tail += b;
    if (b < 1e-320) break;
  }
  res.value = sum;
  res.error_estimate = 1.13 * tail;
  res.terms = k + 1;
  return res;
}

SeriesResult ml_two_param(double alpha, double beta, std::complex<double> z,
                          double abs_tol, int max_shells) {
  MultiMLParams p{{alpha}, beta};
  const std::complex<double> zz[1] = {z};
  return ml_multivariate(p, zz, abs_tol, max_shells);
}

// ---------------------------------------------------------------------------
// Kilbas-Saigo

void KilbasSaigoParams::validate(int depth) const {
  if (!(alpha > 0)) throw std::invalid_argument("kilbas_saigo: alpha must be > 0");
  if (!(beta > 0)) throw std::invalid_argument("kilbas_saigo: beta must be > 0");
  for (int j = 0; j < depth; ++j) {
    const double arg = alpha * (j * beta + gamma) + 1.0;
    if (is_gamma_pole(arg))
      throw std::domain_error(
          "kilbas_saigo: Gamma pole at alpha*(j*beta+gamma)+1, j=" +
          std::to_string(j));
  }
}

std::vector<double> kilbas_saigo_coeffs(const KilbasSaigoParams& p, int count) {
  std::vector<double> c(count, 0.0);
  if (count == 0) return c;
  c[0] = 1.0;
  double lc = 0.0;
  int sgn = 1;
  for (int k = 1; k < count; ++k) {
    const int j = k - 1;
    const double num = p.alpha * (j * p.beta + p.gamma) + 1.0;
    const double den = num + p.lambda;
    if (is_gamma_pole(num))
      throw std::domain_error("kilbas_saigo: Gamma pole in coefficient " +
                              std::to_string(k));
    if (is_gamma_pole(den)) {
      // 1/Gamma vanishes: the series terminates.
      break;
    }
    lc += log_gamma(num) - log_gamma(den);
    sgn *= gamma_sign(num) * gamma_sign(den);
    c[k] = sgn * std::exp(lc);
  }
  return c;
}

SeriesResult kilbas_saigo(const KilbasSaigoParams& p, std::complex<double> z,
                          double abs_tol, int max_terms) {
  p.validate();
  double lc = 0.0;
  int sgn = 1;
  bool terminated = false;

  auto advance = [&](int k) {
    // c_{k+1} from c_k; returns false once the series terminates.
    const double num = p.alpha * (k * p.beta + p.gamma) + 1.0;
    const double den = num + p.lambda;
    if (is_gamma_pole(num))
      throw std::domain_error("kilbas_saigo: Gamma pole in coefficient " +
                              std::to_string(k + 1));
    if (is_gamma_pole(den)) return false;
    lc += log_gamma(num) - log_gamma(den);
    sgn *= gamma_sign(num) * gamma_sign(den);
    return true;
  };

  cplx sum = 1.0;  // c_0 = 1
  cplx zk = 1.0;
  int below = 0;
  int k = 0;
  double last_mag = 1.0;
  for (k = 1; k < max_terms; ++k) {
    if (!advance(k - 1)) {
      terminated = true;
      break;
    }
    zk *= z;
    const cplx term = static_cast<double>(sgn) * std::exp(lc) * zk;
    sum += term;
    last_mag = std::abs(term);
    below = (last_mag < abs_tol) ? below + 1 : 0;
    if (below >= 3) break;
  }
  if (!terminated && k >= max_terms)
    throw ConvergenceError("kilbas_saigo: no convergence within " +
                           std::to_string(max_terms) + " terms, |z|=" +
                           std::to_string(std::abs(z)));

  SeriesResult res;
  res.value = sum;
  res.terms = k + 1;
  if (terminated) {
    res.error_estimate = 0.0;
    return res;
  }
  // A-posteriori tail: run the recurrence a bit further, then a geometric cap.
  double tail = 0.0;
  double prev = last_mag;
  double lmag = std::log(std::max(last_mag, 1e-320));
  const double labsz = std::log(std::max(std::abs(z), 1e-320));
  double ratio = 1.0;
  for (int j = 0; j < 30; ++j) {
    const double num = p.alpha * ((k + j) * p.beta + p.gamma) + 1.0;
    const double den = num + p.lambda;
    if (is_gamma_pole(num) || is_gamma_pole(den)) break;
    lmag += log_gamma(num) - log_gamma(den) + labsz;
    const double mag = std::exp(lmag);
    tail += mag;
    ratio = (prev > 0) ? mag / prev : 0.0;
    prev = mag;
    if (mag < 1e-320) break;
  }
  if (ratio < 0.9) tail += prev * ratio / (1.0 - ratio);
  res.error_estimate = tail;
  return res;
}

// ---------------------------------------------------------------------------
// Bessel J

namespace {

// Ascending series in long double; fine up to x ~ 12 for nu >= -1/2.
double bessel_series(double nu, double x) {
  const long double halfx = 0.5L * static_cast<long double>(x);
  long double term = std::exp(static_cast<long double>(nu) * std::log(halfx) -
                              lgammal(static_cast<long double>(nu) + 1.0L));
  long double sum = term;
  const long double x2 = halfx * halfx;
  for (int k = 1; k < 300; ++k) {
    term *= -x2 / (static_cast<long double>(k) * (nu + k));
    sum += term;
    if (fabsl(term) < 1e-24L * (fabsl(sum) + 1e-30L)) break;
  }
  return static_cast<double>(sum);
}

// Steed's method (continued fractions CF1/CF2) for J_nu, Y_nu, x >= 2, nu >= 0.
struct SteedResult {
  double j, jp, y, yp;
};

SteedResult bessel_steed(double nu, double x) {
  constexpr double EPS = 1e-16;
  constexpr double FPMIN = 1e-300;
  constexpr int MAXIT = 10000;

  const int nl = std::max(0, static_cast<int>(nu - x + 1.5));
  const double xmu = nu - nl;
  const double xmu2 = xmu * xmu;
  const double xi = 1.0 / x;
  const double xi2 = 2.0 * xi;
  const double w = xi2 / kPi;

  // CF1: h = J'_nu / J_nu
  int isign = 1;
  double h = nu * xi;
  if (h < FPMIN) h = FPMIN;
  double b = xi2 * nu;
  double d = 0.0, c = h;
  int i = 1;
  for (; i <= MAXIT; ++i) {
    b += xi2;
    d = b - d;
    if (std::abs(d) < FPMIN) d = FPMIN;
    c = b - 1.0 / c;
    if (std::abs(c) < FPMIN) c = FPMIN;
    d = 1.0 / d;
    const double del = c * d;
    h *= del;
    if (d < 0.0) isign = -isign;
    if (std::abs(del - 1.0) < EPS) break;
  }
  if (i > MAXIT)
    throw ConvergenceError("bessel_j: CF1 failed, nu=" + std::to_string(nu) +
                           " x=" + std::to_string(x));

  // Downward recurrence from nu to xmu.
  double rjl = isign * FPMIN;
  double rjpl = h * rjl;
  const double rjl1 = rjl;
  const double rjp1 = rjpl;
  double fact = nu * xi;
  for (int l = nl; l >= 1; --l) {
    const double rjtemp = fact * rjl + rjpl;
    fact -= xi;
    rjpl = fact * rjtemp - rjl;
    rjl = rjtemp;
  }
  if (rjl == 0.0) rjl = EPS;
  const double f = rjpl / rjl;

  // CF2 for p + i q.
  const double a0 = 0.25 - xmu2;
  double p = -0.5 * xi;
  double q = 1.0;
  const double br = 2.0 * x;
  double bi = 2.0;
  double fct = a0 * xi / (p * p + q * q);
  double cr = br + q * fct;
  double ci = bi + p * fct;
  double den = br * br + bi * bi;
  double dr = br / den;
  double di = -bi / den;
  double dlr = cr * dr - ci * di;
  double dli = cr * di + ci * dr;
  double temp = p * dlr - q * dli;
  q = p * dli + q * dlr;
  p = temp;
  double a = a0;
  int i2 = 2;
  for (; i2 <= MAXIT; ++i2) {
    a += 2 * (i2 - 1);
    bi += 2.0;
    dr = a * dr + br;
    di = a * di + bi;
    if (std::abs(dr) + std::abs(di) < FPMIN) dr = FPMIN;
    fct = a / (cr * cr + ci * ci);
    cr = br + cr * fct;
    ci = bi - ci * fct;
    if (std::abs(cr) + std::abs(ci) < FPMIN) cr = FPMIN;
    den = dr * dr + di * di;
    dr /= den;
    di /= -den;
    dlr = cr * dr - ci * di;
    dli = cr * di + ci * dr;
    temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    if (std::abs(dlr - 1.0) + std::abs(dli) < EPS) break;
  }
  if (i2 > MAXIT)
    throw ConvergenceError("bessel_j: CF2 failed, nu=" + std::to_string(nu) +
                           " x=" + std::to_string(x));

  const double gam = (p - f) / q;
  double rjmu = std::sqrt(w / ((p - f) * gam + q));
  rjmu = std::copysign(rjmu, rjl);
  const double rymu = rjmu * gam;
  const double rymup = rymu * (p + q / gam);
  double ry1 = xmu * xi * rymu - rymup;

  SteedResult out;
  out.j = rjl1 * (rjmu / rjl);
  out.jp = rjp1 * (rjmu / rjl);

  // Upward recurrence for Y up to order nu.
  double ym = rymu, y1 = ry1;
  for (int l = 1; l <= nl; ++l) {
    const double ytemp = (xmu + l) * xi2 * y1 - ym;
    ym = y1;
    y1 = ytemp;
  }
  out.y = ym;
  out.yp = nu * xi * ym - y1;
  return out;
}

}  // namespace

double bessel_j(double nu, double x) {
  if (nu < -0.5)
    throw std::invalid_argument("bessel_j: nu must be >= -1/2");
  if (x < 0.0) throw std::invalid_argument("bessel_j: x must be >= 0");
  if (x == 0.0) {
    if (nu == 0.0) return 1.0;
    return nu > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  const double xswitch = 12.0;
  if (x <= xswitch || x < nu) return bessel_series(nu, x);
  if (nu >= 0.0) return bessel_steed(nu, x).j;
  // Reflection for nu in [-1/2, 0): J_{-mu} = J_mu cos(mu pi) - Y_mu sin(mu pi)
  const double mu = -nu;
  const SteedResult s = bessel_steed(mu, x);
  return s.j * std::cos(mu * kPi) - s.y * std::sin(mu * kPi);
}

}  // namespace fracdirac
