#include "yaglom/gilbert.hpp"

#include <string>
#include <vector>

namespace yaglom {

namespace {

std::int64_t word_count(int q, int n) {
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > kGreedyWordLimit / q) {
      throw UsageError("q^n = " + std::to_string(q) + "^" + std::to_string(n) + " exceeds the greedy limit of " +
                       std::to_string(kGreedyWordLimit) + " words; lower q or n");
    }
    total *= q;
  }
  return total;
}

}  // namespace

Word word_at(int q, int n, std::int64_t index) {
  Word w(n);
  for (int i = n - 1; i >= 0; --i) {
    w(i) = int(index % q);
    index /= q;
  }
  return w;
}

CodeBook greedy_gilbert(int q, int n, std::int64_t d) {
  if (n < 1) throw DomainError("greedy code needs n >= 1");
  if (d < 1) throw DomainError("greedy code needs d >= 1");
  const Constellation alphabet(q);
  const std::int64_t total = word_count(q, n);

  // Offsets of the ball of radius d-1; keeping a word blocks its translates.
  std::vector<Word> offsets;
  for (std::int64_t idx = 0; idx < total; ++idx) {
    Word w = word_at(q, n, idx);
    if (euclid_weight(alphabet, w) <= d - 1) offsets.push_back(std::move(w));
  }

  std::vector<char> blocked(std::size_t(total), 0);
  std::vector<std::int64_t> kept;
  for (std::int64_t idx = 0; idx < total; ++idx) {
    if (blocked[std::size_t(idx)]) continue;
    kept.push_back(idx);
    const Word w = word_at(q, n, idx);
    for (const Word& off : offsets) {
      std::int64_t target = 0;
      for (int i = 0; i < n; ++i) target = target * q + (w(i) + off(i)) % q;
      blocked[std::size_t(target)] = 1;
    }
  }

  CodeBook out(Eigen::Index(kept.size()), n);
  for (std::size_t r = 0; r < kept.size(); ++r) out.row(Eigen::Index(r)) = word_at(q, n, kept[r]).transpose();
  return out;
}

}  // namespace yaglom
