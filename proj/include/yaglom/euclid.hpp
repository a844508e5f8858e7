#pragma once

// Alphabet embedding of Z_q on the real line, Euclidean and Lee weights on
// Z_q^n, and the Yaglom lift of a ball onto the sphere one dimension up.

#include "yaglom/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <thread>
#include <vector>

namespace yaglom {

/// A word of Z_q^n, one residue per coordinate.
using Word = Eigen::VectorXi;
/// A point of R^n.
using RealPoint = Eigen::VectorXd;
/// A set of words, one per row.
using CodeBook = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
/// A set of real points, one per row.
using PointSet = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Z_q placed on the real line symmetrically about 0.
///
/// Odd q = 2s+1 uses {-s,...,s}. Even q = 2s+2 uses the half-integers
/// {-s-1/2,...,s+1/2}, i.e. the natural representatives {-s,...,s+1} shifted
/// by -1/2. Representatives are kept doubled so everything stays integral.
class Constellation {
 public:
  explicit Constellation(int q);

  int q() const { return q_; }
  int s() const { return s_; }
  bool even() const { return q_ % 2 == 0; }

  /// 2*phi(r) as an integer.
  int twice_point(int residue) const;
  double point(int residue) const { return 0.5 * twice_point(residue); }
  std::vector<double> points() const;

  /// Normalization constant a = max phi(r)^2: s^2 for odd q, (s+1/2)^2 for even q.
  double a() const { return 0.25 * four_a(); }
  /// 4a, exact.
  int four_a() const { return even() ? (2 * s_ + 1) * (2 * s_ + 1) : 4 * s_ * s_; }

  /// min(r^2, (q-r)^2).
  int euclid_weight(int residue) const;
  /// min(r, q-r).
  int lee_weight(int residue) const;
  /// Largest per-coordinate Euclidean weight: floor(q/2)^2.
  int max_coordinate_weight() const { return (q_ / 2) * (q_ / 2); }

  void check(int residue) const;
  void check(const Word& w) const;

 private:
  int q_;
  int s_;
};

/// phi applied coordinatewise. The image lies in the ball of squared radius n*a.
RealPoint embed(const Constellation& c, const Word& w);

/// Sum of min(r^2, (q-r)^2) over coordinates.
std::int64_t euclid_weight(const Constellation& c, const Word& w);

/// Sum of min(r, q-r) over coordinates. Never exceeds euclid_weight.
std::int64_t lee_weight(const Constellation& c, const Word& w);

/// Squared Euclidean distance euclid_weight(u - v mod q). This is a lower
/// bound on |phi(u) - phi(v)|^2, with equality whenever no coordinate wraps.
std::int64_t sq_euclid_distance(const Constellation& c, const Word& u, const Word& v);

/// Componentwise (u - v) mod q.
Word difference(const Constellation& c, const Word& u, const Word& v);

/// Minimum pairwise sq_euclid_distance over the rows of `words`.
/// `workers` > 1 splits the outer loop; the result does not depend on it.
std::int64_t min_sq_distance(const Constellation& c, const CodeBook& words, unsigned workers = 1);

/// Yaglom lift x -> (x, sqrt(R^2 - x.x)) of the ball B(n, R) onto S(n, R).
/// Never decreases distances.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> yaglom_lift(
    const Eigen::MatrixBase<Derived>& x, typename Derived::Scalar radius) {
  using Scalar = typename Derived::Scalar;
  if (!(radius > Scalar(0))) throw DomainError("Yaglom lift radius must be positive");
  if (!x.allFinite()) throw DomainError("Yaglom lift of a non-finite point");
  const Scalar r2 = radius * radius;
  const Scalar norm2 = x.squaredNorm();
  const Scalar excess = norm2 - r2;
  if (excess > Scalar(1e-9) * r2) {
    throw DomainError("point lies outside the ball: |x|^2 exceeds R^2 by " + std::to_string(double(excess)));
  }
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> out(x.size() + 1);
  out.head(x.size()) = x;
  out(x.size()) = excess >= Scalar(0) ? Scalar(0) : std::sqrt(-excess);
  return out;
}

/// Minimum pairwise squared distance between rows.
template <typename Derived>
typename Derived::Scalar min_sq_distance(const Eigen::MatrixBase<Derived>& points, unsigned workers = 1) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index count = points.rows();
  if (count < 2) throw DomainError("minimum distance needs at least two points");
  auto scan = [&](Eigen::Index begin, Eigen::Index stride) {
    Scalar best = std::numeric_limits<Scalar>::infinity();
    for (Eigen::Index i = begin; i < count; i += stride) {
      for (Eigen::Index j = i + 1; j < count; ++j) {
        best = std::min(best, (points.row(i) - points.row(j)).squaredNorm());
      }
    }
    return best;
  };
  if (workers <= 1) return scan(0, 1);
  std::vector<Scalar> partial(workers, std::numeric_limits<Scalar>::infinity());
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] { partial[w] = scan(w, workers); });
    }
  }
  return *std::min_element(partial.begin(), partial.end());
}

}  // namespace yaglom
