#pragma once

// Asymptotic rate curves for spherical codes. Curves are parametrized by
// x = ln(rho), rho the squared minimum distance on the unit sphere, so that
// rho far below the smallest double is still representable.

#include "yaglom/bigint.hpp"
#include "yaglom/errors.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace yaglom {

/// Subtracted from the lattice curve for explicitly constructible lattices.
inline constexpr double kExplicitLatticeDeficit = 1.30;

/// Below this ln(rho) the value of rho itself is never formed.
inline constexpr double kSmallestMaterializedLog = -700.0;

/// Shannon's lower bound 1 - log2(rho (4 - rho)) / 2 at rho = e^x.
template <typename Scalar>
Scalar shannon_rate_log(Scalar x) {
  using std::exp;
  using std::log;
  using std::log1p;
  if (!(x < log(Scalar(4)))) throw DomainError("Shannon bound needs 0 < rho < 4");
  // ln(4 - e^x) = ln 4 + log1p(-e^x / 4)
  const Scalar log_rest = log(Scalar(4)) + log1p(-exp(x) / Scalar(4));
  return Scalar(1) - (x + log_rest) / (Scalar(2) * std::numbers::ln2_v<Scalar>);
}

template <typename Scalar>
Scalar shannon_rate(Scalar rho) {
  if (!(rho > Scalar(0)) || !(rho < Scalar(4))) throw DomainError("Shannon bound needs 0 < rho < 4");
  using std::log2;
  // direct form keeps 4 - rho exact near rho = 4
  return Scalar(1) - (log2(rho) + log2(Scalar(4) - rho)) / Scalar(2);
}

/// -log2(rho) / 2 at rho = e^x.
template <typename Scalar>
Scalar lattice_rate_log(Scalar x) {
  return -x / (Scalar(2) * std::numbers::ln2_v<Scalar>);
}

template <typename Scalar>
Scalar lattice_rate(Scalar rho) {
  if (!(rho > Scalar(0))) throw DomainError("lattice bound needs rho > 0");
  using std::log;
  return lattice_rate_log(log(rho));
}

template <typename Scalar>
Scalar lattice_shifted_rate_log(Scalar x) {
  return lattice_rate_log(x) - Scalar(kExplicitLatticeDeficit);
}

/// Half the Shannon bound: the classical rate of polynomial-time constructions.
template <typename Scalar>
Scalar lachaud_stern_rate_log(Scalar x) {
  return Scalar(0.5) * shannon_rate_log(x);
}

template <typename Scalar>
Scalar lachaud_stern_rate(Scalar rho) {
  return Scalar(0.5) * shannon_rate(rho);
}

/// Shannon minus lattice in closed form, -log2(1 - rho/4) / 2.
template <typename Scalar>
Scalar shannon_lattice_gap_log(Scalar x) {
  using std::exp;
  using std::log1p;
  return -log1p(-exp(x) / Scalar(4)) / (Scalar(2) * std::numbers::ln2_v<Scalar>);
}

/// (R_L(rho) - 1.30) - scale * R_S(rho); nonnegative where the explicit
/// lattice curve clears the scaled Shannon bound.
template <typename Scalar>
Scalar explicit_lattice_margin_log(Scalar x, Scalar scale) {
  return lattice_shifted_rate_log(x) - scale * shannon_rate_log(x);
}

/// Rate of Gilbert codes over Z_q lifted to the sphere:
/// log2 q - [log2 f(mu) - a rho log2 mu], with mu the saddle point at a*rho.
/// Zero once a*rho reaches the mean coordinate weight.
double gilbert_yaglom_rate(int q, double rho);
double gilbert_yaglom_rate_log(int q, double x);

/// Large-alphabet construction: Gilbert codes inside the ball of squared
/// radius n*L of Z^n (alphabet wide enough that nothing wraps) with squared
/// distance lambda*n, lifted to the unit sphere so that rho = lambda / L.
/// Rate E_theta(L) - E_theta(lambda) from the theta-series saddle point.
double large_alphabet_rate(double lambda, double radius_sq);

/// R_L(lambda / L) - large_alphabet_rate(lambda, L).
double large_alphabet_gap(double lambda, double radius_sq);

/// E_theta(lambda) - log2(2 pi e lambda) / 2: how far the lattice-point count
/// of the ball exceeds its volume, in bits per coordinate. The large-alphabet
/// gap tends to this as L grows.
double theta_discretization_defect(double lambda);

/// Gap R_L - R in the large-q limit when the whole cube Z_q^n is used with
/// normalization a = s^2: E_theta(lambda) - log2(lambda)/2 - 1. Tends to
/// log2(pi e / 2) / 2 as lambda grows.
double cube_alphabet_gap(double lambda);

/// Parameters of the concatenated family over GF(p) with inner Lee BCH codes
/// of length p-1 correcting t errors.
struct TvzParams {
  BigInt p;
  BigInt t;
  double log_p = 0.0;
  double log_p_minus_1 = 0.0;
  /// t / (p - 1) and 1 - t / (p - 1), both from exact rationals.
  double tau = 0.0;
  double one_minus_tau = 0.0;
  /// 1 - 1/(p^((p-t-1)/2) - 1); exactly 1 when its defect is below 10^-60.
  double fq = 1.0;
  bool fq_clamped = false;

  /// Checks p >= 7 prime, 1 <= t <= (p+1)/2, p = t+1 (mod 2).
  static TvzParams from_t(const BigInt& p, const BigInt& t);
  /// Picks the integer t closest to tau (p-1) with the required parity.
  static TvzParams from_tau(const BigInt& p, double tau);
};

/// ln of the 10^-60 threshold on the defect of f_Q.
inline constexpr double kFqClampLog = 60.0 * std::numbers::ln10;

/// Rate on the line
/// R (p-1) / ((p-t-1) log2 p) + rho (p-1)^3 / (8t) = f_Q at rho = e^x.
/// Negative past the rho-intercept.
double tvz_line(const TvzParams& params, double x);

/// ln of the rho-intercept 8 tau f_Q / (p-1)^2.
double tvz_log_rho_intercept(const TvzParams& params);

/// Tangent X/A + Y/B = 1 to rho -> lambda R_L(rho) at rho0 = e^x0.
struct TangentLine {
  double x0 = 0.0;
  double lambda = 0.0;
  double log_A = 0.0;  ///< ln(rho0 (1 - ln rho0))
  double B = 0.0;      ///< lambda (1 - ln rho0) / (2 ln 2)

  double A() const { return std::exp(log_A); }
  /// Y on the tangent at X = e^x.
  double value_at_log(double x) const { return B * (1.0 - std::exp(x - log_A)); }
};

TangentLine tangent_line(double x0, double lambda);

/// exp(x+2y)(1-x) + 4 lambda (1-x)/y - 8 with x = ln rho, y = ln p.
/// Nonpositive exactly on the attainable region; +inf once x+2y > 700.
double region_residual(double x, double y, double lambda);

/// tau must lie in [lo, hi] for the TVZ line to clear the tangent at x.
struct TauWindow {
  double lo = 0.0;
  double hi = 0.0;
  bool nonempty() const { return lo <= hi; }
  bool contains(double tau) const { return lo <= tau && tau <= hi; }
};

TauWindow tau_window(double x, double y, double lambda);

/// A sample of a rate curve; rho = e^x.
struct BoundPoint {
  double x = 0.0;
  double rate = 0.0;
  std::optional<double> rho() const {
    if (x < kSmallestMaterializedLog) return std::nullopt;
    return std::exp(x);
  }
};

/// Point on the envelope of TVZ lines as p varies, with x + 2 ln p = c and
/// 8 tau = (1 - x) e^c:  R = (1 - 1/(1-x)) (1 - tau) y / ln 2.
BoundPoint envelope_point(double x, double c);
/// dR/dx along the envelope at fixed c.
double envelope_slope(double x, double c);

enum class CurveKind {
  kShannon,
  kLattice,
  kLatticeShifted,
  kLachaudStern,
  kGilbertYaglom,
  kTvzLine,
  kEnvelope,
  kScaledShannon,
};

/// Accepts the canonical names (shannon, lattice, lattice_shifted,
/// lachaud_stern, gilbert_yaglom, tvz_line, envelope, scaled_shannon) and
/// "tvz" as an alias. Throws UsageError otherwise.
CurveKind parse_curve_kind(std::string_view name);
std::string_view curve_name(CurveKind kind);

struct CurveParams {
  int q = 3;                      ///< gilbert_yaglom
  std::optional<TvzParams> tvz;   ///< tvz_line
  double c = -10.0;               ///< envelope
  double lambda = 0.98;           ///< scaled_shannon
};

/// `samples` points uniformly spaced in x over [x_min, x_max].
std::vector<BoundPoint> emit_curve(CurveKind kind, const CurveParams& params, double x_min, double x_max,
                                   int samples);

}  // namespace yaglom
