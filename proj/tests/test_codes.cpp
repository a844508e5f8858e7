#include "yaglom/concatenation.hpp"
#include "yaglom/gilbert.hpp"
#include "yaglom/linear_code.hpp"
#include "yaglom/primality.hpp"
#include "yaglom/reed_solomon.hpp"
#include "yaglom/spherical.hpp"

#include <doctest.h>

#include <memory>
#include <random>

using namespace yaglom;

TEST_CASE("polynomials over GF(p)") {
  CHECK(poly_mul({1, 1}, {6, 1}, 7) == Polynomial{6, 0, 1});
  CHECK(poly_trim(poly_mod({1, 0, 1}, {1, 1}, 2)).empty());
  CHECK(is_irreducible({1, 1, 1}, 2));
  CHECK_FALSE(is_irreducible({1, 0, 1}, 2));
  CHECK(mod_inverse(3, 7) == 5);
}

TEST_CASE("GF(p^k) field axioms") {
  for (auto [p, k] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{7, 2}}) {
    const GaloisField field(p, k);
    CHECK(is_irreducible(field.modulus(), p));
    for (std::int64_t i = 0; i < field.order(); ++i) {
      const FieldElement a = field.element(i);
      CHECK(field.index(a) == i);
      CHECK(field.add(a, field.neg(a)) == field.zero());
      if (field.is_zero(a)) continue;
      CHECK(field.mul(a, field.inv(a)) == field.one());
      CHECK(field.pow(a, field.order() - 1) == field.one());
      for (std::int64_t j = 0; j < field.order(); j += 5) {
        const FieldElement b = field.element(j);
        CHECK(field.mul(a, b) == field.mul(b, a));
      }
    }
    CHECK_THROWS_AS(field.inv(field.zero()), DomainError);
  }
}

TEST_CASE("GF(7^4) inverses") {
  const GaloisField field(7, 4);
  CHECK(field.order() == 2401);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> pick(1, field.order() - 1);
  for (int i = 0; i < 200; ++i) {
    const FieldElement a = field.element(pick(rng));
    CHECK(field.mul(a, field.inv(a)) == field.one());
  }
}

TEST_CASE("primitive roots") {
  CHECK(smallest_primitive_root(5) == 2);
  CHECK(smallest_primitive_root(7) == 3);
  CHECK(smallest_primitive_root(11) == 2);
  CHECK(smallest_primitive_root(23) == 5);
}

TEST_CASE("Lee BCH generator polynomials and distances") {
  const LinearCode c52 = lee_bch(5, 2);
  CHECK(c52.generator_polynomial == Polynomial{2, 2, 1});
  CHECK(c52.n == 4);
  CHECK(c52.k == 2);
  CHECK(c52.metric_floor == 4);

  const LinearCode c72 = lee_bch(7, 2);
  CHECK(c72.generator_polynomial == Polynomial{3, 3, 1});
  const WeightScan s72 = exhaustive_min_weights(c72);
  CHECK(s72.codewords == 2401);
  CHECK(s72.min_lee == 4);
  CHECK(s72.min_euclid == 4);

  const LinearCode c74 = lee_bch(7, 4);
  CHECK(c74.generator_polynomial == Polynomial{1, 5, 5, 2, 1});
  const WeightScan s74 = exhaustive_min_weights(c74);
  CHECK(s74.min_lee == 8);
  CHECK(s74.min_euclid == 14);

  // p in {5,7,11,13}, every admissible t with at most 10^6 codewords
  for (int p : {5, 7, 11, 13}) {
    for (int t = 1; t <= (p + 1) / 2; ++t) {
      if (p % 2 != (t + 1) % 2) continue;
      if (std::pow(double(p), p - 1 - t) > 1e6) continue;
      const LinearCode code = lee_bch(p, t);
      CHECK(rank_mod_p(code.generator, p) == code.k);
      const WeightScan scan = exhaustive_min_weights(code);
      CHECK(scan.min_lee >= 2 * t);
      CHECK(scan.min_euclid >= 2 * t);
    }
  }

  CHECK_THROWS_AS(lee_bch(7, 3), DomainError);
  CHECK_THROWS_AS(lee_bch(9, 2), DomainError);
  CHECK_THROWS_AS(exhaustive_min_weights(lee_bch(13, 2)), UsageError);
}

TEST_CASE("cyclic codewords are multiples of g") {
  const LinearCode code = lee_bch(7, 2);
  Word m(code.k);
  m << 1, 2, 0, 5;
  const Word c = code.encode(m);
  // c(z) mod g(z) = 0
  Polynomial cz(c.data(), c.data() + c.size());
  CHECK(poly_trim(poly_mod(cz, code.generator_polynomial, 7)) == Polynomial{});
}

TEST_CASE("Reed-Solomon codes are MDS") {
  const ReedSolomon small(std::make_shared<GaloisField>(7, 1), 6, 3);
  CHECK(small.distance() == 4);
  CHECK(small.all_minors_nonzero());
  int best = 6;
  const GaloisField& f = small.field();
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      for (int c = 0; c < 7; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        best = std::min(best, hamming_weight(f, small.encode({f.element(a), f.element(b), f.element(c)})));
      }
  CHECK(best == 4);

  const ReedSolomon big = rs_code(7, 4, 8, 4);
  CHECK(big.field().order() == 2401);
  CHECK(big.all_minors_nonzero());
  CHECK_THROWS(rs_code(7, 1, 8, 4));
}

TEST_CASE("concatenated code") {
  const ConcatenatedCode code(rs_code(7, 4, 8, 4), lee_bch(7, 2));
  CHECK(code.length() == 48);
  CHECK(code.dimension() == 16);
  CHECK(code.metric_floor() == 20);

  std::mt19937_64 rng(5);
  const Constellation alphabet(7);
  for (int i = 0; i < 50; ++i) {
    const Word a = code.random_message(rng), b = code.random_message(rng);
    Word sum(a.size());
    for (Eigen::Index j = 0; j < a.size(); ++j) sum(j) = (a(j) + b(j)) % 7;
    Word expected(code.length());
    const Word ca = code.encode_digits(a), cb = code.encode_digits(b);
    for (Eigen::Index j = 0; j < ca.size(); ++j) expected(j) = (ca(j) + cb(j)) % 7;
    CHECK(code.encode_digits(sum) == expected);
  }

  const auto low = low_weight_codewords(code, 40);
  REQUIRE(low.size() == 40);
  for (const Word& w : low) {
    int nonzero_blocks = 0;
    for (int b = 0; b < 8; ++b) nonzero_blocks += w.segment(6 * b, 6).any() ? 1 : 0;
    CHECK(nonzero_blocks == 5);
    CHECK(euclid_weight(alphabet, w) >= 20);
  }

  const SampledDistance sampled = sampled_min_distance(code, 2000, 0);
  CHECK(sampled.pairs == 2000);
  CHECK(sampled.min_distance >= 20);
  CHECK(sampled_min_distance(code, 2000, 0).min_distance == sampled.min_distance);
}

TEST_CASE("greedy Gilbert codes") {
  CHECK(greedy_gilbert(2, 3, 1).rows() == 8);
  CHECK(greedy_gilbert(3, 4, 3).rows() >= 3);
  const CodeBook code = greedy_gilbert(5, 3, 4);
  CHECK(min_sq_distance(Constellation(5), code) >= 4);
  CHECK(code.row(0).isZero());
  CHECK(word_at(3, 3, 5) == Word((Eigen::VectorXi(3) << 0, 1, 2).finished()));
  CHECK_THROWS_AS(greedy_gilbert(10, 8, 2), UsageError);
}

TEST_CASE("spherical codes") {
  const Constellation alphabet(5);
  const CodeBook code = greedy_gilbert(5, 3, 4);
  const SphericalCodeResult sphere = to_spherical(alphabet, code, 4);
  CHECK(sphere.points.cols() == 4);
  CHECK(sphere.points.rows() == code.rows());
  CHECK((sphere.points.rowwise().norm().array() - 1.0).abs().maxCoeff() < 1e-12);
  CHECK(sphere.rho_floor == doctest::Approx(4.0 / 12.0));
  CHECK(sphere.rho >= sphere.rho_floor - 1e-12);
  CHECK(sphere.binary_rate == doctest::Approx(std::log2(double(code.rows())) / 4.0));

  CodeBook single(1, 3);
  single << 1, 2, 3;
  CHECK(std::isinf(to_spherical(alphabet, single, 4).rho));
}
