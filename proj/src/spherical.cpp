#include "yaglom/spherical.hpp"

#include <cmath>
#include <limits>

namespace yaglom {

SphericalCodeResult to_spherical(const Constellation& alphabet, const CodeBook& words, std::int64_t d_floor,
                                 unsigned workers) {
  if (words.rows() < 1) throw DomainError("spherical code needs at least one word");
  const Eigen::Index n = words.cols();
  const double radius_sq = double(n) * alphabet.a();
  const double radius = std::sqrt(radius_sq);

  SphericalCodeResult out;
  out.points.resize(words.rows(), n + 1);
  for (Eigen::Index r = 0; r < words.rows(); ++r) {
    const Word w = words.row(r).transpose();
    alphabet.check(w);
    out.points.row(r) = yaglom_lift(embed(alphabet, w), radius).transpose() / radius;
  }
  out.rho = words.rows() < 2 ? std::numeric_limits<double>::infinity() : min_sq_distance(out.points, workers);
  out.rho_floor = double(d_floor) / radius_sq;
  out.binary_rate = std::log2(double(words.rows())) / double(n + 1);
  return out;
}

}  // namespace yaglom
