#include "gridflow/rng.hpp"

#include <cmath>
#include <limits>

#include "gridflow/errors.hpp"

namespace gridflow {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

Rng Rng::stream(std::string_view purpose) const {
  return Rng(splitmix64(seed_ ^ fnv1a(purpose)));
}

Rng Rng::stream(std::uint64_t index) const {
  return Rng(splitmix64(seed_ ^ splitmix64(index ^ 0xa02bdbf7bb3c0a7ULL)));
}

std::uint64_t Rng::next_u64() { return engine_(); }

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform_open() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::normal() { return normal_quantile(uniform_open()); }

double Rng::weibull(double k, double lambda) {
  if (!(k > 0.0) || !(lambda > 0.0)) {
    throw BadParameterError("weibull: k and lambda must be positive");
  }
  return weibull_quantile(uniform_open(), k, lambda);
}

double Rng::gamma(double shape) {
  if (!(shape > 0.0)) {
    throw BadParameterError("gamma: shape must be positive");
  }
  if (shape < 1.0) {
    // Boost to shape+1 and scale back.
    double g = gamma(shape + 1.0);
    return g * std::pow(uniform_open(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x = normal();
    double t = 1.0 + c * x;
    if (t <= 0.0) continue;
    double v = t * t * t;
    double u = uniform_open();
    double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double Rng::beta(double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0)) {
    throw BadParameterError("beta: alpha and beta must be positive");
  }
  double ga = gamma(alpha);
  double gb = gamma(beta);
  return ga / (ga + gb);
}

int Rng::bernoulli(double p) {
  if (!(p >= 0.0) || !(p <= 1.0)) {
    throw BadParameterError("bernoulli: p must lie in [0, 1]");
  }
  return uniform() < p ? 1 : 0;
}

// ---- quantile functions -----------------------------------------------------

double normal_quantile(double u) {
  if (!(u > 0.0) || !(u < 1.0)) {
    throw BadParameterError("normal_quantile: u must lie in (0, 1)");
  }
  // Rational approximation (Acklam), then one Halley refinement through the
  // complementary error function; the refined result is accurate to a few ulp.
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  double x;
  if (u < plow) {
    double q = std::sqrt(-2.0 * std::log(u));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (u <= 1.0 - plow) {
    double q = u - 0.5;
    double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    double q = std::sqrt(-2.0 * std::log(1.0 - u));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  static const double sqrt2 = std::sqrt(2.0);
  static const double sqrt2pi = std::sqrt(2.0 * M_PI);
  double e = 0.5 * std::erfc(-x / sqrt2) - u;
  double g = e * sqrt2pi * std::exp(0.5 * x * x);
  x -= g / (1.0 + 0.5 * x * g);
  return x;
}

double weibull_quantile(double u, double k, double lambda) {
  if (!(u > 0.0) || !(u < 1.0)) {
    throw BadParameterError("weibull_quantile: u must lie in (0, 1)");
  }
  if (!(k > 0.0) || !(lambda > 0.0)) {
    throw BadParameterError("weibull_quantile: k and lambda must be positive");
  }
  return lambda * std::pow(-std::log1p(-u), 1.0 / k);
}

namespace {

// Continued fraction for the regularized incomplete beta (modified Lentz).
double beta_cf(double x, double a, double b) {
  const double eps = std::numeric_limits<double>::epsilon();
  const double fpmin = std::numeric_limits<double>::min() / eps;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < fpmin) d = fpmin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 300; ++m) {
    int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < fpmin) d = fpmin;
    c = 1.0 + aa / c;
    if (std::abs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < fpmin) d = fpmin;
    c = 1.0 + aa / c;
    if (std::abs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < eps) break;
  }
  return h;
}

}  // namespace

double incomplete_beta(double x, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw BadParameterError("incomplete_beta: a and b must be positive");
  }
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                    a * std::log(x) + b * std::log1p(-x);
  double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_cf(x, a, b) / a;
  }
  return 1.0 - front * beta_cf(1.0 - x, b, a) / b;
}

double beta_quantile(double u, double alpha, double beta) {
  if (!(u > 0.0) || !(u < 1.0)) {
    throw BadParameterError("beta_quantile: u must lie in (0, 1)");
  }
  if (!(alpha > 0.0) || !(beta > 0.0)) {
    throw BadParameterError("beta_quantile: alpha and beta must be positive");
  }
  // Bisection bracket kept alongside Newton steps for robustness near 0/1.
  double lo = 0.0, hi = 1.0;
  double x = alpha / (alpha + beta);
  for (int it = 0; it < 200; ++it) {
    double f = incomplete_beta(x, alpha, beta) - u;
    if (f > 0.0) {
      hi = x;
    } else {
      lo = x;
    }
    double ln_pdf = (alpha - 1.0) * std::log(x) + (beta - 1.0) * std::log1p(-x) +
                    std::lgamma(alpha + beta) - std::lgamma(alpha) -
                    std::lgamma(beta);
    double pdf = std::exp(ln_pdf);
    double next = x - f / pdf;
    if (!(next > lo) || !(next < hi) || !std::isfinite(next)) {
      next = 0.5 * (lo + hi);
    }
    if (std::abs(next - x) < 1e-14 * (1.0 + std::abs(x))) {
      return next;
    }
    x = next;
  }
  return x;
}

// ---- Halton ------------------------------------------------------------------

std::vector<int> first_primes(int count) {
  std::vector<int> primes;
  primes.reserve(count);
  for (int n = 2; static_cast<int>(primes.size()) < count; ++n) {
    bool prime = true;
    for (int p : primes) {
      if (p * p > n) break;
      if (n % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(n);
  }
  return primes;
}

double radical_inverse(std::uint64_t index, int base) {
  double inv_base = 1.0 / base;
  double value = 0.0;
  double factor = inv_base;
  while (index > 0) {
    value += static_cast<double>(index % base) * factor;
    index /= base;
    factor *= inv_base;
  }
  return value;
}

HaltonSequence::HaltonSequence(int dim, std::uint64_t skip)
    : bases_(first_primes(dim)), index_(skip) {
  if (dim <= 0) {
    throw BadParameterError("HaltonSequence: dim must be positive");
  }
}

std::vector<double> HaltonSequence::next() {
  ++index_;
  std::vector<double> point(bases_.size());
  for (std::size_t i = 0; i < bases_.size(); ++i) {
    point[i] = radical_inverse(index_, bases_[i]);
  }
  return point;
}

}  // namespace gridflow
