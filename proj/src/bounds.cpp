#include "yaglom/bounds.hpp"

#include "yaglom/counting.hpp"
#include "yaglom/euclid.hpp"
#include "yaglom/primality.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <limits>
#include <string>

namespace yaglom {

namespace {

using Precise = boost::multiprecision::cpp_bin_float_100;

constexpr double kLn2 = std::numbers::ln2;

}  // namespace

double gilbert_yaglom_rate_log(int q, double x) {
  if (!(x <= 0.0)) throw DomainError("Gilbert-Yaglom rate needs 0 < rho <= 1");
  if (x < kSmallestMaterializedLog) throw DomainError("Gilbert-Yaglom rate needs ln(rho) >= -700");
  const Constellation alphabet(q);
  const WeightEnumerator f = enumerator(q);
  const double lambda = alphabet.a() * std::exp(x);
  if (lambda >= f.mean_weight()) return 0.0;
  return std::log2(double(q)) - saddle_solve(f, lambda).exponent;
}

double gilbert_yaglom_rate(int q, double rho) {
  if (!(rho > 0.0) || !(rho <= 1.0)) throw DomainError("Gilbert-Yaglom rate needs 0 < rho <= 1");
  return gilbert_yaglom_rate_log(q, std::log(rho));
}

namespace {

double theta_exponent(double lambda) {
  return theta_saddle(lambda, theta_shells_needed(lambda)).exponent;
}

}  // namespace

double large_alphabet_rate(double lambda, double radius_sq) {
  if (!(lambda > 0.0) || !(radius_sq > lambda)) throw DomainError("large-alphabet rate needs 0 < lambda < L");
  return theta_exponent(radius_sq) - theta_exponent(lambda);
}

double large_alphabet_gap(double lambda, double radius_sq) {
  return lattice_rate_log(std::log(lambda / radius_sq)) - large_alphabet_rate(lambda, radius_sq);
}

double theta_discretization_defect(double lambda) {
  return theta_exponent(lambda) - 0.5 * std::log2(2.0 * std::numbers::pi * std::numbers::e * lambda);
}

double cube_alphabet_gap(double lambda) { return theta_exponent(lambda) - 0.5 * std::log2(lambda) - 1.0; }

TvzParams TvzParams::from_t(const BigInt& p, const BigInt& t) {
  if (p < 7) throw DomainError("TVZ family needs p >= 7");
  if (t < 1 || t > (p + 1) / 2) throw DomainError("TVZ family needs 1 <= t <= (p+1)/2");
  if ((p % 2) != ((t + 1) % 2)) throw DomainError("TVZ family needs p = t+1 (mod 2)");
  if (!is_probable_prime(p)) throw DomainError("TVZ family needs p prime");

  TvzParams out;
  out.p = p;
  out.t = t;
  const Precise p_hi(p);
  const Precise t_hi(t);
  out.log_p = static_cast<double>(log(p_hi));
  out.log_p_minus_1 = static_cast<double>(log(p_hi - 1));
  out.tau = static_cast<double>(t_hi / (p_hi - 1));
  out.one_minus_tau = static_cast<double>((p_hi - t_hi - 1) / (p_hi - 1));

  // f_Q = 1 - 1/(p^e - 1), e = (p-t-1)/2
  const double log_power = static_cast<double>((p_hi - t_hi - 1) / 2 * log(p_hi));
  if (log_power > kFqClampLog) {
    out.fq = 1.0;
    out.fq_clamped = true;
  } else {
    out.fq = 1.0 - 1.0 / std::expm1(log_power);
  }
  return out;
}

TvzParams TvzParams::from_tau(const BigInt& p, double tau) {
  if (!(tau > 0.0) || !(tau < 1.0)) throw DomainError("tau must lie in (0,1)");
  const Precise scaled = Precise(p - 1) * Precise(tau);
  BigInt t = static_cast<BigInt>(round(scaled));
  if ((p % 2) != ((t + 1) % 2)) t += (Precise(t) < scaled) ? 1 : -1;
  if (t < 1) t = (p % 2 == 0) ? 1 : 2;
  return from_t(p, t);
}

double tvz_log_rho_intercept(const TvzParams& params) {
  return std::log(8.0 * params.tau * params.fq) - 2.0 * params.log_p_minus_1;
}

double tvz_line(const TvzParams& params, double x) {
  const double scale = params.one_minus_tau * params.log_p / kLn2;
  // rho (p-1)^3 / (8t) = exp(x + 2 ln(p-1) - ln(8 tau))
  const double log_penalty = x + 2.0 * params.log_p_minus_1 - std::log(8.0 * params.tau);
  if (log_penalty > 700.0) return -std::numeric_limits<double>::infinity();
  return scale * (params.fq - std::exp(log_penalty));
}

TangentLine tangent_line(double x0, double lambda) {
  if (!(x0 < 1.0)) throw DomainError("tangent needs rho0 < e so that 1 - ln rho0 > 0");
  TangentLine line;
  line.x0 = x0;
  line.lambda = lambda;
  line.log_A = x0 + std::log1p(-x0);
  line.B = lambda * (1.0 - x0) / (2.0 * kLn2);
  return line;
}

double region_residual(double x, double y, double lambda) {
  if (!(y > 0.0) || !(x < 1.0)) throw DomainError("attainable region is defined for y > 0, x < 1");
  if (x + 2.0 * y > 700.0) return std::numeric_limits<double>::infinity();
  return std::exp(x + 2.0 * y) * (1.0 - x) + 4.0 * lambda * (1.0 - x) / y - 8.0;
}

TauWindow tau_window(double x, double y, double lambda) {
  if (!(y > 0.0) || !(x < 1.0)) throw DomainError("tau window is defined for y > 0, x < 1");
  TauWindow w;
  w.lo = x + 2.0 * y > 700.0 ? std::numeric_limits<double>::infinity() : (1.0 - x) * std::exp(x + 2.0 * y) / 8.0;
  w.hi = 1.0 - lambda * (1.0 - x) / (2.0 * y);
  return w;
}

BoundPoint envelope_point(double x, double c) {
  if (!(x < 0.0)) throw DomainError("envelope needs x = ln rho < 0");
  const double y = 0.5 * (c - x);
  if (!(y > 0.0)) throw DomainError("envelope needs y = (c - x)/2 > 0");
  const double tau = (1.0 - x) * std::exp(c) / 8.0;
  if (!(tau > 0.0) || !(tau < 1.0)) {
    throw DomainError("envelope needs tau = (1-x) e^c / 8 in (0,1), got " + std::to_string(tau));
  }
  return {x, (1.0 - 1.0 / (1.0 - x)) * (1.0 - tau) * y / kLn2};
}

double envelope_slope(double x, double c) {
  // R = g(x) h(x) y(x) / ln 2 with g = -x/(1-x), h = 1 - (1-x) k, y = (c-x)/2, k = e^c/8
  const double k = std::exp(c) / 8.0;
  const double g = -x / (1.0 - x);
  const double dg = -1.0 / ((1.0 - x) * (1.0 - x));
  const double h = 1.0 - (1.0 - x) * k;
  const double dh = k;
  const double y = 0.5 * (c - x);
  const double dy = -0.5;
  return (dg * h * y + g * dh * y + g * h * dy) / kLn2;
}

CurveKind parse_curve_kind(std::string_view name) {
  if (name == "shannon") return CurveKind::kShannon;
  if (name == "lattice") return CurveKind::kLattice;
  if (name == "lattice_shifted") return CurveKind::kLatticeShifted;
  if (name == "lachaud_stern") return CurveKind::kLachaudStern;
  if (name == "gilbert_yaglom") return CurveKind::kGilbertYaglom;
  if (name == "tvz_line" || name == "tvz") return CurveKind::kTvzLine;
  if (name == "envelope") return CurveKind::kEnvelope;
  if (name == "scaled_shannon") return CurveKind::kScaledShannon;
  throw UsageError("unknown curve kind '" + std::string(name) + "'");
}

std::string_view curve_name(CurveKind kind) {
  switch (kind) {
    case CurveKind::kShannon: return "shannon";
    case CurveKind::kLattice: return "lattice";
    case CurveKind::kLatticeShifted: return "lattice_shifted";
    case CurveKind::kLachaudStern: return "lachaud_stern";
    case CurveKind::kGilbertYaglom: return "gilbert_yaglom";
    case CurveKind::kTvzLine: return "tvz_line";
    case CurveKind::kEnvelope: return "envelope";
    case CurveKind::kScaledShannon: return "scaled_shannon";
  }
  return "unknown";
}

std::vector<BoundPoint> emit_curve(CurveKind kind, const CurveParams& params, double x_min, double x_max,
                                   int samples) {
  if (samples < 1) throw UsageError("samples must be positive");
  if (!(x_min <= x_max)) throw UsageError("x range is empty");
  if (!std::isfinite(x_min) || !std::isfinite(x_max)) throw UsageError("x range must be finite");
  if (kind == CurveKind::kTvzLine && !params.tvz) throw UsageError("tvz_line needs p and t (or tau)");

  std::vector<BoundPoint> out;
  out.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const double x = samples == 1 ? x_min : x_min + (x_max - x_min) * double(i) / double(samples - 1);
    double rate = 0.0;
    switch (kind) {
      case CurveKind::kShannon: rate = shannon_rate_log(x); break;
      case CurveKind::kLattice: rate = lattice_rate_log(x); break;
      case CurveKind::kLatticeShifted: rate = lattice_shifted_rate_log(x); break;
      case CurveKind::kLachaudStern: rate = lachaud_stern_rate_log(x); break;
      case CurveKind::kGilbertYaglom: rate = gilbert_yaglom_rate_log(params.q, x); break;
      case CurveKind::kTvzLine: rate = std::max(0.0, tvz_line(*params.tvz, x)); break;
      case CurveKind::kEnvelope: rate = envelope_point(x, params.c).rate; break;
      case CurveKind::kScaledShannon: rate = params.lambda * shannon_rate_log(x); break;
    }
    out.push_back({x, rate});
  }
  return out;
}

}  // namespace yaglom
