#include "yaglom/linear_code.hpp"

#include "yaglom/primality.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace yaglom {

Word LinearCode::encode(const Word& message) const {
  if (message.size() != k) throw DomainError("message length must equal the code dimension");
  for (Eigen::Index i = 0; i < message.size(); ++i) {
    if (message(i) < 0 || message(i) >= q) throw DomainError("message symbol out of range");
  }
  const Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1> wide =
      generator.cast<std::int64_t>().transpose() * message.cast<std::int64_t>();
  const std::int64_t modulus = q;
  return wide.unaryExpr([modulus](std::int64_t v) { return int(((v % modulus) + modulus) % modulus); });
}

int rank_mod_p(Eigen::MatrixXi m, int p) {
  int rank = 0;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  m = m.unaryExpr([p](int v) { return ((v % p) + p) % p; });
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = rank;
    while (pivot < rows && m(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    m.row(pivot).swap(m.row(rank));
    const int inv = mod_inverse(m(rank, col), p);
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == rank || m(r, col) == 0) continue;
      const int factor = int(std::int64_t(m(r, col)) * inv % p);
      for (Eigen::Index c = 0; c < cols; ++c) {
        m(r, c) = int(((m(r, c) - std::int64_t(factor) * m(rank, c)) % p + p) % p);
      }
    }
    ++rank;
  }
  return rank;
}

LinearCode lee_bch(int p, int t) {
  if (p < 5 || !is_probable_prime(BigInt(p))) throw DomainError("Lee BCH codes need a prime p >= 5");
  if (t < 1 || t > (p + 1) / 2) throw DomainError("Lee BCH codes need 1 <= t <= (p+1)/2");
  if (p % 2 != (t + 1) % 2) throw DomainError("Lee BCH codes need p = t+1 (mod 2)");
  if (t >= p - 1) throw DomainError("Lee BCH code would have dimension zero");

  const int alpha = smallest_primitive_root(p);
  Polynomial g{1};
  int root = 1;
  for (int i = 0; i < t; ++i) {
    g = poly_mul(g, Polynomial{(p - root) % p, 1}, p);
    root = int(std::int64_t(root) * alpha % p);
  }

  LinearCode code;
  code.q = p;
  code.n = p - 1;
  code.k = p - 1 - t;
  code.generator = Eigen::MatrixXi::Zero(code.k, code.n);
  for (int row = 0; row < code.k; ++row) {
    for (std::size_t i = 0; i < g.size(); ++i) code.generator(row, row + Eigen::Index(i)) = g[i];
  }
  code.metric_floor = 2 * t;
  code.generator_polynomial = g;
  return code;
}

WeightScan exhaustive_min_weights(const LinearCode& code, std::uint64_t limit) {
  std::uint64_t total = 1;
  for (int i = 0; i < code.k; ++i) {
    if (total > limit / std::uint64_t(code.q)) {
      throw UsageError("exhaustive scan of " + std::to_string(code.q) + "^" + std::to_string(code.k) +
                       " codewords exceeds the limit of " + std::to_string(limit));
    }
    total *= std::uint64_t(code.q);
  }

  const int q = code.q;
  const int n = code.n;
  std::vector<int> lee_table(q), euclid_table(q);
  for (int r = 0; r < q; ++r) {
    lee_table[r] = std::min(r, q - r);
    euclid_table[r] = std::min(r * r, (q - r) * (q - r));
  }
  std::vector<int> rows(std::size_t(code.k) * n);
  for (int r = 0; r < code.k; ++r) {
    for (int c = 0; c < n; ++c) rows[std::size_t(r) * n + c] = ((code.generator(r, c) % q) + q) % q;
  }

  // Odometer over messages: bumping digit j adds row j; a digit wrapping from
  // q-1 to 0 has then added row j q times, which is zero, so the carry simply
  // continues to the next digit.
  std::vector<int> digits(code.k, 0);
  std::vector<int> word(n, 0);
  WeightScan scan;
  scan.min_lee = std::numeric_limits<std::int64_t>::max();
  scan.min_euclid = std::numeric_limits<std::int64_t>::max();
  for (std::uint64_t step = 1; step < total; ++step) {
    for (int j = 0; j < code.k; ++j) {
      const int* row = &rows[std::size_t(j) * n];
      for (int c = 0; c < n; ++c) {
        const int v = word[c] + row[c];
        word[c] = v >= q ? v - q : v;
      }
      if (++digits[j] < q) break;
      digits[j] = 0;
    }
    std::int64_t lee = 0, euclid = 0;
    for (int c = 0; c < n; ++c) {
      lee += lee_table[word[c]];
      euclid += euclid_table[word[c]];
    }
    scan.min_lee = std::min(scan.min_lee, lee);
    scan.min_euclid = std::min(scan.min_euclid, euclid);
  }
  scan.codewords = total;
  return scan;
}

}  // namespace yaglom
