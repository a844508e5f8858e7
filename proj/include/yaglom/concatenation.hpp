#pragma once

#include "yaglom/linear_code.hpp"
#include "yaglom/reed_solomon.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace yaglom {

/// Outer Reed-Solomon code over GF(p^k) composed with an inner [n, k] code
/// over GF(p): each outer symbol's coefficient vector is the inner message.
/// Squared Euclidean distance is at least outer distance x inner floor.
class ConcatenatedCode {
 public:
  ConcatenatedCode(ReedSolomon outer, LinearCode inner);

  const ReedSolomon& outer() const { return outer_; }
  const LinearCode& inner() const { return inner_; }
  int q() const { return inner_.q; }
  int length() const { return outer_.n() * inner_.n; }
  /// Dimension over GF(p).
  int dimension() const { return outer_.k() * inner_.k; }
  std::int64_t metric_floor() const { return std::int64_t(outer_.distance()) * inner_.metric_floor; }

  Word encode(const std::vector<FieldElement>& message) const;
  /// Message given as k_out * k_in digits over GF(p), outer symbol by outer symbol.
  Word encode_digits(const Word& digits) const;
  Word random_message(std::mt19937_64& rng) const;

 private:
  ReedSolomon outer_;
  LinearCode inner_;
};

struct SampledDistance {
  std::int64_t min_distance = 0;
  std::uint64_t pairs = 0;
};

/// Minimum squared Euclidean distance over `pairs` random pairs of distinct codewords.
SampledDistance sampled_min_distance(const ConcatenatedCode& code, std::uint64_t pairs, std::uint64_t seed);

/// Up to `limit` codewords whose outer polynomial is a multiple of a product
/// of k-1 distinct linear factors z - x_j, so the outer word has the minimum
/// Hamming weight n-k+1.
std::vector<Word> low_weight_codewords(const ConcatenatedCode& code, std::size_t limit);

}  // namespace yaglom
