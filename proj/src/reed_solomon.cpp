#include "yaglom/reed_solomon.hpp"

#include "yaglom/errors.hpp"

#include <string>

namespace yaglom {

ReedSolomon::ReedSolomon(std::shared_ptr<const GaloisField> field, int n, int k)
    : field_(std::move(field)), n_(n), k_(k) {
  if (k < 1 || k > n) throw DomainError("Reed-Solomon code needs 1 <= k <= n");
  if (std::int64_t(n) > field_->order()) {
    throw DomainError("Reed-Solomon length " + std::to_string(n) + " exceeds the field size " +
                      std::to_string(field_->order()));
  }
  points_.reserve(n);
  for (int j = 0; j < n; ++j) points_.push_back(field_->element(j));
}

std::vector<FieldElement> ReedSolomon::encode(const std::vector<FieldElement>& message) const {
  if (int(message.size()) != k_) throw DomainError("Reed-Solomon message length must equal k");
  std::vector<FieldElement> out;
  out.reserve(n_);
  for (const FieldElement& x : points_) {
    // Horner
    FieldElement acc = field_->zero();
    for (int i = k_ - 1; i >= 0; --i) acc = field_->add(field_->mul(acc, x), message[i]);
    out.push_back(std::move(acc));
  }
  return out;
}

bool ReedSolomon::all_minors_nonzero() const {
  // generator entry (i, j) = x_j^i
  std::vector<std::vector<FieldElement>> gen(k_, std::vector<FieldElement>(n_));
  for (int j = 0; j < n_; ++j) {
    FieldElement power = field_->one();
    for (int i = 0; i < k_; ++i) {
      gen[i][j] = power;
      power = field_->mul(power, points_[j]);
    }
  }
  std::vector<int> cols(k_);
  for (int i = 0; i < k_; ++i) cols[i] = i;
  while (true) {
    std::vector<std::vector<FieldElement>> minor(k_, std::vector<FieldElement>(k_));
    for (int i = 0; i < k_; ++i) {
      for (int j = 0; j < k_; ++j) minor[i][j] = gen[i][cols[j]];
    }
    if (field_->is_zero(determinant(*field_, std::move(minor)))) return false;
    // next k-subset in lexicographic order
    int pos = k_ - 1;
    while (pos >= 0 && cols[pos] == n_ - k_ + pos) --pos;
    if (pos < 0) return true;
    ++cols[pos];
    for (int i = pos + 1; i < k_; ++i) cols[i] = cols[i - 1] + 1;
  }
}

ReedSolomon rs_code(int p, int k_inner, int n_out, int k_out) {
  return ReedSolomon(std::make_shared<const GaloisField>(p, k_inner), n_out, k_out);
}

int hamming_weight(const GaloisField& field, const std::vector<FieldElement>& v) {
  int w = 0;
  for (const auto& e : v) w += field.is_zero(e) ? 0 : 1;
  return w;
}

FieldElement determinant(const GaloisField& field, std::vector<std::vector<FieldElement>> m) {
  const std::size_t size = m.size();
  FieldElement det = field.one();
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && field.is_zero(m[pivot][col])) ++pivot;
    if (pivot == size) return field.zero();
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = field.neg(det);
    }
    det = field.mul(det, m[col][col]);
    const FieldElement inv = field.inv(m[col][col]);
    for (std::size_t r = col + 1; r < size; ++r) {
      if (field.is_zero(m[r][col])) continue;
      const FieldElement factor = field.mul(m[r][col], inv);
      for (std::size_t c = col; c < size; ++c) m[r][c] = field.sub(m[r][c], field.mul(factor, m[col][c]));
    }
  }
  return det;
}

}  // namespace yaglom
