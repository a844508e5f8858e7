#include "yaglom/concatenation.hpp"

#include "yaglom/errors.hpp"

#include <limits>

namespace yaglom {

ConcatenatedCode::ConcatenatedCode(ReedSolomon outer, LinearCode inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (outer_.field().characteristic() != inner_.q || outer_.field().degree() != inner_.k) {
    throw DomainError("outer alphabet GF(" + std::to_string(outer_.field().characteristic()) + "^" +
                      std::to_string(outer_.field().degree()) + ") does not match the inner [" +
                      std::to_string(inner_.n) + "," + std::to_string(inner_.k) + "] code over Z_" +
                      std::to_string(inner_.q));
  }
}

Word ConcatenatedCode::encode(const std::vector<FieldElement>& message) const {
  const std::vector<FieldElement> symbols = outer_.encode(message);
  Word out(length());
  for (int j = 0; j < outer_.n(); ++j) {
    const Word inner_message = Eigen::Map<const Eigen::VectorXi>(symbols[j].coeffs.data(), inner_.k);
    out.segment(Eigen::Index(j) * inner_.n, inner_.n) = inner_.encode(inner_message);
  }
  return out;
}

Word ConcatenatedCode::encode_digits(const Word& digits) const {
  if (digits.size() != dimension()) throw DomainError("message must have k_out * k_in digits");
  std::vector<FieldElement> message(outer_.k(), outer_.field().zero());
  for (int i = 0; i < outer_.k(); ++i) {
    for (int c = 0; c < inner_.k; ++c) message[i].coeffs[c] = digits(Eigen::Index(i) * inner_.k + c);
  }
  for (const auto& m : message) outer_.field().check(m);
  return encode(message);
}

Word ConcatenatedCode::random_message(std::mt19937_64& rng) const {
  std::uniform_int_distribution<int> symbol(0, q() - 1);
  Word digits(dimension());
  for (Eigen::Index i = 0; i < digits.size(); ++i) digits(i) = symbol(rng);
  return digits;
}

SampledDistance sampled_min_distance(const ConcatenatedCode& code, std::uint64_t pairs, std::uint64_t seed) {
  const Constellation alphabet(code.q());
  std::mt19937_64 rng(seed);
  SampledDistance out;
  out.min_distance = std::numeric_limits<std::int64_t>::max();
  while (out.pairs < pairs) {
    const Word a = code.random_message(rng);
    const Word b = code.random_message(rng);
    if (a == b) continue;
    out.min_distance = std::min(out.min_distance,
                                sq_euclid_distance(alphabet, code.encode_digits(a), code.encode_digits(b)));
    ++out.pairs;
  }
  return out;
}

std::vector<Word> low_weight_codewords(const ConcatenatedCode& code, std::size_t limit) {
  const ReedSolomon& outer = code.outer();
  const GaloisField& field = outer.field();
  std::vector<Word> out;
  std::vector<int> subset(outer.k() - 1);
  for (std::size_t i = 0; i < subset.size(); ++i) subset[i] = int(i);
  while (out.size() < limit) {
    std::vector<FieldElement> poly{field.one()};
    for (int j : subset) {
      std::vector<FieldElement> next(poly.size() + 1, field.zero());
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + 1] = field.add(next[i + 1], poly[i]);
        next[i] = field.sub(next[i], field.mul(poly[i], outer.points()[j]));
      }
      poly = std::move(next);
    }
    for (std::int64_t s = 1; s < field.order() && out.size() < limit; s += 97) {
      std::vector<FieldElement> message;
      for (const auto& c : poly) message.push_back(field.mul(c, field.element(s)));
      out.push_back(code.encode(message));
    }
    int pos = int(subset.size()) - 1;
    while (pos >= 0 && subset[pos] == outer.n() - int(subset.size()) + pos) --pos;
    if (pos < 0) break;
    ++subset[pos];
    for (std::size_t i = pos + 1; i < subset.size(); ++i) subset[i] = subset[i - 1] + 1;
  }
  return out;
}

}  // namespace yaglom
