#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace gridflow {

/// Deterministic random stream. Equal seeds produce bitwise-equal streams on
/// every platform; named sub-streams are derived by seed mixing and never
/// interleave with their parent.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Derived stream for a named purpose ("shuffle", "init", ...).
  Rng stream(std::string_view purpose) const;
  /// Derived stream for an indexed purpose (per-sample, per-worker).
  Rng stream(std::uint64_t index) const;

  std::uint64_t next_u64();
  /// Uniform on [0, 1).
  double uniform();
  /// Uniform on the open interval (0, 1); safe to feed quantile functions.
  double uniform_open();
  /// Standard normal via the inverse CDF.
  double normal();
  double weibull(double k, double lambda);
  double beta(double alpha, double beta);
  /// Gamma(shape, 1) by Marsaglia-Tsang squeeze.
  double gamma(double shape);
  int bernoulli(double p);

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

// Quantile (inverse CDF) functions. The Monte Carlo and low-discrepancy
// sampling paths share these, so both produce variates through identical
// transforms.

/// Standard normal quantile, absolute error below 1.2e-9 over (0, 1).
double normal_quantile(double u);
double weibull_quantile(double u, double k, double lambda);
/// Beta quantile via the regularized incomplete beta function.
double beta_quantile(double u, double alpha, double beta);
/// Regularized incomplete beta function I_x(a, b).
double incomplete_beta(double x, double a, double b);

/// Halton low-discrepancy sequence over the first `dim` primes, with the
/// leading `skip` points discarded.
class HaltonSequence {
 public:
  explicit HaltonSequence(int dim, std::uint64_t skip = 409);
  /// Next point; every coordinate lies strictly inside (0, 1).
  std::vector<double> next();
  int dim() const { return static_cast<int>(bases_.size()); }

 private:
  std::vector<int> bases_;
  std::uint64_t index_;
};

double radical_inverse(std::uint64_t index, int base);
std::vector<int> first_primes(int count);

}  // namespace gridflow
