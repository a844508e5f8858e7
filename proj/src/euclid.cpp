#include "yaglom/euclid.hpp"

#include <algorithm>
#include <limits>
#include <thread>

namespace yaglom {

Constellation::Constellation(int q) : q_(q), s_(q % 2 ? (q - 1) / 2 : (q - 2) / 2) {
  if (q < 2) throw DomainError("alphabet size q must be at least 2, got " + std::to_string(q));
}

void Constellation::check(int residue) const {
  if (residue < 0 || residue >= q_) {
    throw DomainError("residue " + std::to_string(residue) + " out of range for q=" + std::to_string(q_));
  }
}

void Constellation::check(const Word& w) const {
  for (Eigen::Index i = 0; i < w.size(); ++i) check(w(i));
}

int Constellation::twice_point(int residue) const {
  check(residue);
  if (even()) {
    const int natural = residue <= s_ + 1 ? residue : residue - q_;
    return 2 * natural - 1;
  }
  const int centered = residue <= s_ ? residue : residue - q_;
  return 2 * centered;
}

std::vector<double> Constellation::points() const {
  std::vector<double> out(q_);
  for (int r = 0; r < q_; ++r) out[r] = point(r);
  return out;
}

int Constellation::euclid_weight(int residue) const {
  check(residue);
  const int other = q_ - residue;
  return std::min(residue * residue, other * other);
}

int Constellation::lee_weight(int residue) const {
  check(residue);
  return std::min(residue, q_ - residue);
}

RealPoint embed(const Constellation& c, const Word& w) {
  RealPoint out(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) out(i) = c.point(w(i));
  return out;
}

std::int64_t euclid_weight(const Constellation& c, const Word& w) {
  std::int64_t total = 0;
  for (Eigen::Index i = 0; i < w.size(); ++i) total += c.euclid_weight(w(i));
  return total;
}

std::int64_t lee_weight(const Constellation& c, const Word& w) {
  std::int64_t total = 0;
  for (Eigen::Index i = 0; i < w.size(); ++i) total += c.lee_weight(w(i));
  return total;
}

Word difference(const Constellation& c, const Word& u, const Word& v) {
  if (u.size() != v.size()) {
    throw DomainError("length mismatch: " + std::to_string(u.size()) + " vs " + std::to_string(v.size()));
  }
  c.check(u);
  c.check(v);
  const int q = c.q();
  return (u - v).unaryExpr([q](int d) { return d < 0 ? d + q : d; });
}

std::int64_t sq_euclid_distance(const Constellation& c, const Word& u, const Word& v) {
  return euclid_weight(c, difference(c, u, v));
}

std::int64_t min_sq_distance(const Constellation& c, const CodeBook& words, unsigned workers) {
  const Eigen::Index count = words.rows();
  if (count < 2) throw DomainError("minimum distance needs at least two words");
  for (Eigen::Index i = 0; i < count; ++i) c.check(Word(words.row(i).transpose()));

  // per-residue-difference weight table
  const int q = c.q();
  std::vector<int> table(2 * q - 1);
  for (int d = -(q - 1); d < q; ++d) table[d + q - 1] = c.euclid_weight(d < 0 ? d + q : d);

  auto scan = [&](Eigen::Index begin, Eigen::Index stride) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (Eigen::Index i = begin; i < count; i += stride) {
      const int* a = words.row(i).data();
      for (Eigen::Index j = i + 1; j < count; ++j) {
        const int* b = words.row(j).data();
        std::int64_t d = 0;
        for (Eigen::Index k = 0; k < words.cols() && d < best; ++k) d += table[a[k] - b[k] + q - 1];
        best = std::min(best, d);
      }
    }
    return best;
  };
  if (workers <= 1) return scan(0, 1);
  std::vector<std::int64_t> partial(workers, std::numeric_limits<std::int64_t>::max());
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back([&, w] { partial[w] = scan(w, workers); });
  }
  return *std::min_element(partial.begin(), partial.end());
}

}  // namespace yaglom
