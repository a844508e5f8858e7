#pragma once

// Euclidean ball sizes in Z_q^n and the saddle-point growth exponent of
// coefficients of f(z)^n, where f is the per-coordinate weight enumerator.

#include "yaglom/bigint.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace yaglom {

/// Per-coordinate Euclidean weight enumerator f(z) = sum count_w z^w.
///
/// For finite q the counts sum to q. `q == 0` marks the theta series
/// 1 + 2 sum_{i>=1} z^{i^2}, truncated after `shells` terms.
struct WeightEnumerator {
  int q = 0;
  int shells = 0;
  /// (weight, count), strictly increasing weight, weight 0 first.
  std::vector<std::pair<std::int64_t, std::int64_t>> terms;

  std::int64_t max_weight() const { return terms.back().first; }
  std::int64_t total_mass() const;
  /// f'(1)/f(1), the average coordinate weight.
  double mean_weight() const;
};

/// Difference-weight enumerator of Z_q:
/// odd q = 2s+1: 1 + 2 sum_{i<=s} z^{i^2};
/// even q = 2s+2: 1 + 2 sum_{i<=s} z^{i^2} + z^{(s+1)^2}.
WeightEnumerator enumerator(int q);

/// Theta series truncated after `shells` terms.
WeightEnumerator theta_enumerator(int shells);

/// Number of words of Z_q^n with Euclidean weight at most r (exact).
BigInt ball_size(int q, int n, std::int64_t r);

/// Solution of z f'(z) = lambda f(z).
struct SaddleSolution {
  double lambda = 0.0;
  double mu = 0.0;
  /// log2 f(mu) - lambda log2 mu, in bits per coordinate.
  double exponent = 0.0;
  /// lambda was at or above the mean weight; exponent is log2 q and mu is 1.
  bool clamped = false;
  int iterations = 0;
};

/// z f'(z) / f(z), evaluated stably through u = ln z.
double tilted_mean(const WeightEnumerator& f, double log_z);
/// ln f(e^u) via log-sum-exp.
double log_enumerator(const WeightEnumerator& f, double log_z);

/// Saddle point of f(z)^n at normalized radius lambda.
///
/// Requires 0 < lambda < max weight. For finite q and lambda at or above the
/// mean weight the exponent is clamped to log2 q.
SaddleSolution saddle_solve(const WeightEnumerator& f, double lambda);

/// Saddle point of the truncated theta series. Throws NumericError naming the
/// required shell count when the dropped tail at mu exceeds 1e-18 f(mu).
SaddleSolution theta_saddle(double lambda, int shells);

/// Smallest shell count whose tail at mu is below 1e-18 f(mu).
int theta_shells_needed(double lambda);

}  // namespace yaglom
