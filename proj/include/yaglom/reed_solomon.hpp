#pragma once

#include "yaglom/galois.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace yaglom {

/// Reed-Solomon evaluation code [n, k, n-k+1] over GF(p^m): a message
/// (m_0..m_{k-1}) maps to (sum_i m_i x_j^i)_j, evaluated at the field
/// elements of index 0..n-1.
class ReedSolomon {
 public:
  ReedSolomon(std::shared_ptr<const GaloisField> field, int n, int k);

  const GaloisField& field() const { return *field_; }
  std::shared_ptr<const GaloisField> field_ptr() const { return field_; }
  int n() const { return n_; }
  int k() const { return k_; }
  /// Minimum Hamming distance, n - k + 1.
  int distance() const { return n_ - k_ + 1; }
  const std::vector<FieldElement>& points() const { return points_; }

  std::vector<FieldElement> encode(const std::vector<FieldElement>& message) const;

  /// Checks that every k x k minor of the generator matrix is nonzero, which
  /// is equivalent to the code being MDS.
  bool all_minors_nonzero() const;

 private:
  std::shared_ptr<const GaloisField> field_;
  int n_;
  int k_;
  std::vector<FieldElement> points_;
};

/// RS[n_out, k_out] over GF(p^k_inner).
ReedSolomon rs_code(int p, int k_inner, int n_out, int k_out);

/// Hamming weight of a vector of field elements.
int hamming_weight(const GaloisField& field, const std::vector<FieldElement>& v);

/// Determinant of a square matrix over GF(p^m) by Gaussian elimination.
FieldElement determinant(const GaloisField& field, std::vector<std::vector<FieldElement>> m);

}  // namespace yaglom
