#include "oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace oracle {

namespace {

constexpr long double kPiL = 3.14159265358979323846264338327950288L;

// 16-point Gauss-Legendre rule on [-1, 1].
constexpr int kGL = 16;
const long double kGLx[kGL] = {
    -0.9894009349916499325961542L, -0.9445750230732325760779884L,
    -0.8656312023878317438804679L, -0.7554044083550030338951012L,
    -0.6178762444026437484466718L, -0.4580167776572273863424194L,
    -0.2816035507792589132304605L, -0.09501250983763744018531934L,
    0.09501250983763744018531934L, 0.2816035507792589132304605L,
    0.4580167776572273863424194L,  0.6178762444026437484466718L,
    0.7554044083550030338951012L,  0.8656312023878317438804679L,
    0.9445750230732325760779884L,  0.9894009349916499325961542L};
const long double kGLw[kGL] = {
    0.02715245941175409485178057L, 0.06225352393864789286284384L,
    0.09515851168249278480992511L, 0.1246289712555338720524763L,
    0.1495959888165767320815017L,  0.1691565193950025381893121L,
    0.1826034150449235888667637L,  0.1894506104550684962853967L,
    0.1894506104550684962853967L,  0.1826034150449235888667637L,
    0.1691565193950025381893121L,  0.1495959888165767320815017L,
    0.1246289712555338720524763L,  0.09515851168249278480992511L,
    0.06225352393864789286284384L, 0.02715245941175409485178057L};

}  // namespace

long double log_gamma_spouge(long double x) {
  if (x < 0.5L) {
    // reflection
    return std::log(kPiL / std::abs(std::sin(kPiL * x))) -
           log_gamma_spouge(1.0L - x);
  }
  constexpr int a = 39;
  // c_k = (-1)^{k-1}/(k-1)! (a-k)^{k-1/2} e^{a-k}
  long double acc = 2.5066282746310005024157652848110L;  // sqrt(2 pi)
  long double fact = 1.0L;
  for (int k = 1; k < a; ++k) {
    const long double ck = ((k % 2) ? 1.0L : -1.0L) / fact *
                           std::pow(static_cast<long double>(a - k),
                                    k - 0.5L) *
                           std::exp(static_cast<long double>(a - k));
    acc += ck / (x - 1.0L + k);
    fact *= k;
  }
  return (x - 0.5L) * std::log(x - 1.0L + a) - (x - 1.0L + a) + std::log(acc);
}

long double gamma_spouge(long double x) {
  if (x > 0.5L) return std::exp(log_gamma_spouge(x));
  const long double refl = kPiL / std::sin(kPiL * x);
  return refl / std::exp(log_gamma_spouge(1.0L - x));
}

cplxl ml_direct(std::span<const long double> a, long double b,
                std::span<const cplxl> z, int shells) {
  const int n = static_cast<int>(z.size());
  cplxl sum = 0.0L;
  std::vector<int> l(n, 0);
  // enumerate all tuples with sum <= shells by odometer
  auto term = [&](void) {
    int k = 0;
    for (int v : l) k += v;
    long double lcoef = log_gamma_spouge(k + 1.0L);
    cplxl zp = 1.0L;
    long double asum = 0.0L;
    for (int i = 0; i < n; ++i) {
      lcoef -= log_gamma_spouge(l[i] + 1.0L);
      asum += a[i] * l[i];
      for (int r = 0; r < l[i]; ++r) zp *= z[i];
    }
    sum += zp * std::exp(lcoef) / gamma_spouge(b + asum);
  };
  while (true) {
    int k = 0;
    for (int v : l) k += v;
    if (k <= shells) term();
    int pos = n - 1;
    while (pos >= 0) {
      ++l[pos];
      int s = 0;
      for (int v : l) s += v;
      if (s <= shells) break;
      l[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return sum;
}

cplxl kilbas_saigo_direct(long double alpha, long double beta,
                          long double gamma, long double lambda, cplxl z,
                          int terms) {
  cplxl sum = 1.0L;
  cplxl zk = 1.0L;
  long double c = 1.0L;
  for (int k = 1; k < terms; ++k) {
    const int j = k - 1;
    const long double num = alpha * (j * beta + gamma) + 1.0L;
    c *= gamma_spouge(num) / gamma_spouge(num + lambda);
    zk *= z;
    sum += c * zk;
  }
  return sum;
}

long double bessel_series(long double nu, long double x, int terms) {
  if (x == 0.0L) return nu == 0.0L ? 1.0L : 0.0L;
  const long double halfx = 0.5L * x;
  long double term =
      std::exp(nu * std::log(halfx) - log_gamma_spouge(nu + 1.0L));
  long double sum = term;
  const long double x2 = halfx * halfx;
  for (int k = 1; k < terms; ++k) {
    term *= -x2 / (static_cast<long double>(k) * (nu + k));
    sum += term;
    if (std::abs(term) < 1e-30L * std::abs(sum)) break;
  }
  return sum;
}

long double frac_integral_highres(
    long double alpha, long double u0, long double ut,
    const std::function<long double(long double)>& f, int panels) {
  // v = (ut - u)^alpha removes the endpoint singularity:
  // I = 1/(alpha Gamma(alpha)) int_0^{(ut-u0)^alpha} f(ut - v^{1/alpha}) dv
  if (!(ut > u0)) return 0.0L;
  const long double vmax = std::pow(ut - u0, alpha);
  long double acc = 0.0L;
  for (int p = 0; p < panels; ++p) {
    const long double va = vmax * p / panels;
    const long double vb = vmax * (p + 1) / panels;
    const long double mid = 0.5L * (va + vb);
    const long double half = 0.5L * (vb - va);
    for (int g = 0; g < kGL; ++g) {
      const long double v = mid + half * kGLx[g];
      acc += half * kGLw[g] * f(ut - std::pow(v, 1.0L / alpha));
    }
  }
  return acc / (alpha * gamma_spouge(alpha));
}

}  // namespace oracle
