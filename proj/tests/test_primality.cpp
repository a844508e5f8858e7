#include "yaglom/bigint.hpp"
#include "yaglom/primality.hpp"
#include "yaglom/verify.hpp"

#include <doctest.h>

#include <vector>

using namespace yaglom;

TEST_CASE("Miller-Rabin against a sieve") {
  const int limit = 100000;
  std::vector<bool> composite(limit, false);
  composite[0] = composite[1] = true;
  for (int i = 2; i * i < limit; ++i)
    if (!composite[i])
      for (int j = i * i; j < limit; j += i) composite[j] = true;
  for (int n = 0; n < limit; ++n) REQUIRE(is_probable_prime(n) == !composite[n]);
}

TEST_CASE("strong pseudoprimes and Carmichael numbers") {
  for (long long n : {561LL, 1105LL, 41041LL, 3215031751LL, 2152302898747LL, 3474749660383LL}) {
    CHECK_FALSE(is_probable_prime(n));
  }
  // strong pseudoprime to every prime base up to 37
  CHECK_FALSE(is_probable_prime(parse_decimal("3317044064679887385961981")));
}

TEST_CASE("large primes") {
  const BigInt m127 = (BigInt(1) << 127) - 1;
  CHECK(is_probable_prime(m127));
  CHECK_FALSE(is_probable_prime(m127 + 2));
  CHECK(is_probable_prime((BigInt(1) << 521) - 1));
  CHECK_FALSE(is_probable_prime(m127 * ((BigInt(1) << 89) - 1)));

  const BigInt p = parse_decimal(kReferencePrimeDigits);
  CHECK(p.str().size() == 137);
  CHECK(is_probable_prime(p));
  CHECK(is_probable_prime(p, 64, 12345));
  CHECK_FALSE(is_probable_prime(p + 2));
}

TEST_CASE("big integer helpers") {
  CHECK(parse_decimal("12 34\\\n56") == 123456);
  CHECK_THROWS(parse_decimal("12a"));
  CHECK(log2_big(BigInt(1) << 3000) == doctest::Approx(3000.0).epsilon(1e-15));
  CHECK(log_big(parse_decimal(kReferencePrimeDigits)) == doctest::Approx(314.84396392926128488).epsilon(1e-15));
}
