#include "yaglom/counting.hpp"

#include "yaglom/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace yaglom {

namespace {

constexpr double kTailTolerance = 1e-18;
constexpr double kResidualTolerance = 1e-12;
constexpr int kBisectionSteps = 120;
constexpr int kNewtonSteps = 10;
constexpr int kIterationCap = 200;

struct TiltedMoments {
  double log_sum;
  double mean;
  double variance;
};

// Moments of the weight under the tilted law P(w) ~ count_w e^{u w}.
TiltedMoments tilted_moments(const WeightEnumerator& f, double u) {
  double peak = -std::numeric_limits<double>::infinity();
  for (const auto& [w, count] : f.terms) peak = std::max(peak, std::log(double(count)) + u * double(w));
  double sum = 0.0, first = 0.0, second = 0.0;
  for (const auto& [w, count] : f.terms) {
    const double mass = std::exp(std::log(double(count)) + u * double(w) - peak);
    sum += mass;
    first += mass * double(w);
    second += mass * double(w) * double(w);
  }
  const double mean = first / sum;
  return {peak + std::log(sum), mean, std::max(0.0, second / sum - mean * mean)};
}

// log of 2 sum_{i > shells} mu^{i^2}, bounded by a geometric series.
double log_theta_tail(int shells, double u) {
  const double head = double(shells + 1) * double(shells + 1) * u;
  const double ratio = double(2 * shells + 3) * u;
  return std::numbers::ln2 + head - std::log1p(-std::exp(ratio));
}

}  // namespace

std::int64_t WeightEnumerator::total_mass() const {
  std::int64_t total = 0;
  for (const auto& term : terms) total += term.second;
  return total;
}

double WeightEnumerator::mean_weight() const {
  double mass = 0.0, first = 0.0;
  for (const auto& [w, count] : terms) {
    mass += double(count);
    first += double(count) * double(w);
  }
  return first / mass;
}

WeightEnumerator enumerator(int q) {
  if (q < 2) throw DomainError("enumerator needs q >= 2, got " + std::to_string(q));
  WeightEnumerator f;
  f.q = q;
  f.terms.emplace_back(0, 1);
  const int s = q % 2 ? (q - 1) / 2 : (q - 2) / 2;
  for (std::int64_t i = 1; i <= s; ++i) f.terms.emplace_back(i * i, 2);
  if (q % 2 == 0) f.terms.emplace_back(std::int64_t(s + 1) * (s + 1), 1);
  return f;
}

WeightEnumerator theta_enumerator(int shells) {
  if (shells < 1) throw DomainError("theta series needs at least one shell");
  WeightEnumerator f;
  f.q = 0;
  f.shells = shells;
  f.terms.emplace_back(0, 1);
  for (std::int64_t i = 1; i <= shells; ++i) f.terms.emplace_back(i * i, 2);
  return f;
}

BigInt ball_size(int q, int n, std::int64_t r) {
  if (n < 1) throw DomainError("ball_size needs n >= 1");
  if (r < 0) return 0;
  const WeightEnumerator f = enumerator(q);
  const std::int64_t top = std::min<std::int64_t>(r, std::int64_t(n) * f.max_weight());

  // dp[w] = number of prefixes of weight exactly w; the weight-0 term has count 1
  // so the update runs in place from high to low degree.
  std::vector<BigInt> dp(top + 1);
  dp[0] = 1;
  std::int64_t reach = 0;
  for (int coord = 0; coord < n; ++coord) {
    reach = std::min(top, reach + f.max_weight());
    for (std::int64_t w = reach; w >= 1; --w) {
      BigInt acc = 0;
      for (std::size_t k = 1; k < f.terms.size(); ++k) {
        const auto [weight, count] = f.terms[k];
        if (weight > w) break;
        const BigInt& prev = dp[w - weight];
        if (prev.is_zero()) continue;
        if (count == 1) {
          acc += prev;
        } else {
          acc += prev * count;
        }
      }
      dp[w] += acc;
    }
  }
  BigInt total = 0;
  for (const auto& v : dp) total += v;
  return total;
}

double tilted_mean(const WeightEnumerator& f, double log_z) { return tilted_moments(f, log_z).mean; }

double log_enumerator(const WeightEnumerator& f, double log_z) { return tilted_moments(f, log_z).log_sum; }

SaddleSolution saddle_solve(const WeightEnumerator& f, double lambda) {
  if (!(lambda > 0.0) || !(lambda < double(f.max_weight()))) {
    throw DomainError("lambda=" + std::to_string(lambda) + " outside (0, " + std::to_string(f.max_weight()) + ")");
  }
  SaddleSolution out;
  out.lambda = lambda;
  if (f.q > 0 && lambda >= f.mean_weight()) {
    out.mu = 1.0;
    out.exponent = std::log2(double(f.q));
    out.clamped = true;
    return out;
  }

  auto residual = [&](double u) { return tilted_mean(f, u) - lambda; };

  double lo = std::log(1e-30);
  while (residual(lo) > 0.0) {
    lo *= 2.0;
    if (++out.iterations > kIterationCap) throw NumericError("saddle bracket: no lower end found");
  }
  double hi = 0.0;
  while (residual(hi) <= 0.0) {
    hi += std::numbers::ln2;
    if (++out.iterations > kIterationCap) throw NumericError("saddle bracket: no upper end found");
  }

  for (int step = 0; step < kBisectionSteps && hi - lo > 0.0; ++step) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (residual(mid) > 0.0 ? hi : lo) = mid;
    ++out.iterations;
  }
  double u = 0.5 * (lo + hi);
  for (int step = 0; step < kNewtonSteps; ++step) {
    const TiltedMoments m = tilted_moments(f, u);
    const double gap = m.mean - lambda;
    if (gap == 0.0 || m.variance <= 0.0) break;
    const double next = std::clamp(u - gap / m.variance, lo, hi);
    ++out.iterations;
    if (std::abs(next - u) <= 1e-16 * (1.0 + std::abs(u))) {
      u = next;
      break;
    }
    u = next;
  }
  if (out.iterations > kIterationCap) throw NumericError("saddle solver exceeded the iteration cap");

  const TiltedMoments m = tilted_moments(f, u);
  if (!(std::abs(m.mean - lambda) <= kResidualTolerance * lambda)) {
    throw NumericError("saddle solver did not converge: relative residual " +
                       std::to_string(std::abs(m.mean - lambda) / lambda));
  }
  out.mu = std::exp(u);
  out.exponent = (m.log_sum - lambda * u) / std::numbers::ln2;
  if (f.q > 0) out.exponent = std::clamp(out.exponent, 0.0, std::log2(double(f.q)));
  return out;
}

int theta_shells_needed(double lambda) {
  if (!(lambda > 0.0)) throw DomainError("theta saddle needs lambda > 0");
  int shells = 4;
  while (double(shells) * shells <= lambda) shells *= 2;
  for (int guard = 0; guard < 64; ++guard) {
    const WeightEnumerator f = theta_enumerator(shells);
    const SaddleSolution sol = saddle_solve(f, lambda);
    const double u = std::log(sol.mu);
    const double log_f = log_enumerator(f, u);
    int need = 1;
    while (need < shells && log_theta_tail(need, u) > log_f + std::log(kTailTolerance)) ++need;
    if (need >= shells) {
      shells *= 2;
      continue;
    }
    while (double(need) * need <= lambda) ++need;
    for (; need <= shells; ++need) {
      const WeightEnumerator g = theta_enumerator(need);
      const double v = std::log(saddle_solve(g, lambda).mu);
      if (log_theta_tail(need, v) <= log_enumerator(g, v) + std::log(kTailTolerance)) return need;
    }
    shells *= 2;
  }
  throw NumericError("could not size the theta truncation for lambda=" + std::to_string(lambda));
}

SaddleSolution theta_saddle(double lambda, int shells) {
  const WeightEnumerator f = theta_enumerator(shells);
  SaddleSolution sol = saddle_solve(f, lambda);
  const double u = std::log(sol.mu);
  if (log_theta_tail(shells, u) > log_enumerator(f, u) + std::log(kTailTolerance)) {
    throw NumericError("theta truncation of " + std::to_string(shells) + " shells is insufficient at lambda=" +
                       std::to_string(lambda) + "; need at least " + std::to_string(theta_shells_needed(lambda)) +
                       " shells");
  }
  return sol;
}

}  // namespace yaglom
