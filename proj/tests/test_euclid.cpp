#include "yaglom/euclid.hpp"
#include "yaglom/gilbert.hpp"

#include <doctest.h>

#include <random>

using namespace yaglom;

TEST_CASE("constellation points and normalization") {
  const Constellation odd(7);
  CHECK(odd.s() == 3);
  CHECK(odd.a() == 9.0);
  CHECK(odd.point(0) == 0.0);
  CHECK(odd.point(3) == 3.0);
  CHECK(odd.point(4) == -3.0);
  CHECK(odd.max_coordinate_weight() == 9);

  const Constellation even(6);
  CHECK(even.s() == 2);
  CHECK(even.a() == 6.25);
  CHECK(even.point(0) == -0.5);
  CHECK(even.point(3) == 2.5);
  CHECK(even.point(4) == -2.5);
  CHECK(even.max_coordinate_weight() == 9);

  for (int q = 2; q <= 12; ++q) {
    const Constellation c(q);
    double top = 0.0;
    for (double v : c.points()) top = std::max(top, v * v);
    CHECK(top == c.a());
  }
  CHECK_THROWS_AS(Constellation(1), DomainError);
}

TEST_CASE("coordinate weights") {
  const Constellation c(7);
  const int euclid[] = {0, 1, 4, 9, 9, 4, 1};
  const int lee[] = {0, 1, 2, 3, 3, 2, 1};
  for (int r = 0; r < 7; ++r) {
    CHECK(c.euclid_weight(r) == euclid[r]);
    CHECK(c.lee_weight(r) == lee[r]);
  }
  CHECK_THROWS_AS(c.euclid_weight(7), DomainError);
  CHECK_THROWS_AS(c.euclid_weight(-1), DomainError);
}

TEST_CASE("translation invariance and embedding lower bound, exhaustive") {
  for (int q = 2; q <= 8; ++q) {
    const Constellation c(q);
    for (int n = 1; n <= 3; ++n) {
      std::int64_t total = 1;
      for (int i = 0; i < n; ++i) total *= q;
      for (std::int64_t i = 0; i < total; ++i) {
        const Word u = word_at(q, n, i);
        const RealPoint pu = embed(c, u);
        for (std::int64_t j = 0; j < total; ++j) {
          const Word v = word_at(q, n, j);
          const std::int64_t d = sq_euclid_distance(c, u, v);
          REQUIRE(d == euclid_weight(c, difference(c, u, v)));
          REQUIRE(d == sq_euclid_distance(c, v, u));
          REQUIRE((d == 0) == (i == j));
          REQUIRE(double(d) <= (pu - embed(c, v)).squaredNorm() + 1e-12);
        }
      }
    }
  }
}

TEST_CASE("Lee weight never exceeds Euclidean weight") {
  for (int q = 2; q <= 8; ++q) {
    const Constellation c(q);
    for (int n = 1; n <= 3; ++n) {
      std::int64_t total = 1;
      for (int i = 0; i < n; ++i) total *= q;
      for (std::int64_t i = 0; i < total; ++i) {
        const Word w = word_at(q, n, i);
        bool unit = true;
        for (int k = 0; k < n; ++k) unit = unit && c.lee_weight(w(k)) <= 1;
        CHECK(lee_weight(c, w) <= euclid_weight(c, w));
        CHECK((lee_weight(c, w) == euclid_weight(c, w)) == unit);
      }
    }
  }
}

TEST_CASE("embedded words stay in the ball of squared radius n a") {
  const Constellation c(6);
  Word w(3);
  w << 3, 4, 3;
  CHECK(embed(c, w).squaredNorm() == doctest::Approx(3 * c.a()));
}

TEST_CASE("Yaglom lift") {
  RealPoint x(3);
  x << 0.3, -0.4, 1.2;
  const RealPoint y = yaglom_lift(x, 2.0);
  REQUIRE(y.size() == 4);
  CHECK(y.head(3) == x);
  CHECK(y.norm() == doctest::Approx(2.0).epsilon(1e-15));

  RealPoint boundary(2);
  boundary << 3.0, 4.0;
  CHECK(yaglom_lift(boundary, 5.0)(2) == 0.0);

  RealPoint outside(2);
  outside << 3.0, 4.1;
  CHECK_THROWS_AS(yaglom_lift(outside, 5.0), DomainError);
  CHECK_THROWS_AS(yaglom_lift(x, 0.0), DomainError);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(-0.5, 0.5);
  for (int trial = 0; trial < 1000; ++trial) {
    RealPoint a(4), b(4);
    for (int i = 0; i < 4; ++i) {
      a(i) = unit(rng);
      b(i) = unit(rng);
    }
    CHECK((yaglom_lift(a, 1.0) - yaglom_lift(b, 1.0)).squaredNorm() >= (a - b).squaredNorm() - 1e-15);
  }
}

TEST_CASE("minimum distances") {
  const Constellation c(5);
  CodeBook book(3, 2);
  book << 0, 0, 1, 2, 4, 4;
  CHECK(min_sq_distance(c, book) == 2);
  CHECK(min_sq_distance(c, book, 3) == 2);

  PointSet pts(3, 2);
  pts << 0.0, 0.0, 1.0, 0.0, 0.0, 3.0;
  CHECK(min_sq_distance(pts) == 1.0);
  CHECK(min_sq_distance(pts, 2) == 1.0);
}
