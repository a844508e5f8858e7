#pragma once

#include "yaglom/euclid.hpp"
#include "yaglom/galois.hpp"

#include <cstdint>

namespace yaglom {

/// Exhaustive weight scans refuse codes with more codewords than this.
inline constexpr std::uint64_t kExhaustiveScanLimit = 250'000'000;

/// Linear [n, k] code over GF(q), q prime.
struct LinearCode {
  int q = 0;
  int n = 0;
  int k = 0;
  /// k x n, rows independent over GF(q).
  Eigen::MatrixXi generator;
  /// Guaranteed lower bound on the squared Euclidean minimum distance.
  std::int64_t metric_floor = 0;
  /// For cyclic codes, g(z) with coefficient of z^i at index i.
  Polynomial generator_polynomial;

  /// message * generator mod q.
  Word encode(const Word& message) const;
};

/// Rank of an integer matrix over GF(p).
int rank_mod_p(Eigen::MatrixXi m, int p);

/// Lee-metric BCH code of length p-1 over GF(p) with generator polynomial
/// g(z) = prod_{i=0}^{t-1} (z - alpha^i), alpha the smallest primitive root.
/// Dimension p-1-t, Lee (hence Euclidean) distance at least 2t.
///
/// Requires p >= 5 prime, 1 <= t <= (p+1)/2 and p = t+1 (mod 2).
LinearCode lee_bch(int p, int t);

struct WeightScan {
  std::int64_t min_lee = 0;
  std::int64_t min_euclid = 0;
  std::uint64_t codewords = 0;
};

/// Minimum Lee and Euclidean weights over all nonzero codewords.
/// Throws UsageError above kExhaustiveScanLimit codewords.
WeightScan exhaustive_min_weights(const LinearCode& code, std::uint64_t limit = kExhaustiveScanLimit);

}  // namespace yaglom
