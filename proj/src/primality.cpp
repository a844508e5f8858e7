#include "yaglom/primality.hpp"

#include "yaglom/errors.hpp"

#include <array>
#include <random>
#include <string>
#include <vector>

namespace yaglom {

namespace {

using boost::multiprecision::powm;

constexpr std::array<unsigned, 13> kSmallPrimes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

// n - 1 = d * 2^r with d odd; true if `base` does not witness compositeness.
bool strong_probable_prime(const BigInt& n, const BigInt& d, unsigned r, const BigInt& base) {
  const BigInt n_minus_1 = n - 1;
  BigInt x = powm(base, d, n);
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned i = 1; i < r; ++i) {
    x = (x * x) % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

BigInt random_below(std::mt19937_64& rng, const BigInt& bound) {
  const unsigned words = boost::multiprecision::msb(bound) / 64 + 2;
  BigInt value = 0;
  for (unsigned i = 0; i < words; ++i) value = (value << 64) | BigInt(rng());
  return value % bound;
}

}  // namespace

bool is_probable_prime(const BigInt& n, int rounds, std::uint64_t seed) {
  if (n < 2) return false;
  for (unsigned p : kSmallPrimes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }

  BigInt d = n - 1;
  const unsigned r = boost::multiprecision::lsb(d);
  d >>= r;

  for (unsigned p : kSmallPrimes) {
    if (!strong_probable_prime(n, d, r, BigInt(p))) return false;
  }
  static const BigInt kDeterministicLimit("3317044064679887385961981");
  if (n < kDeterministicLimit) return true;

  std::mt19937_64 rng(seed);
  const BigInt span = n - 3;
  for (int round = 0; round < rounds; ++round) {
    const BigInt base = random_below(rng, span) + 2;
    if (!strong_probable_prime(n, d, r, base)) return false;
  }
  return true;
}

int smallest_primitive_root(int p) {
  if (p < 2 || !is_probable_prime(BigInt(p))) throw DomainError(std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  std::vector<int> factors;
  int m = p - 1;
  for (int f = 2; f * f <= m; ++f) {
    if (m % f == 0) {
      factors.push_back(f);
      while (m % f == 0) m /= f;
    }
  }
  if (m > 1) factors.push_back(m);
  for (int g = 2; g < p; ++g) {
    bool generator = true;
    for (int f : factors) {
      if (powm(BigInt(g), BigInt((p - 1) / f), BigInt(p)) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return g;
  }
  throw DomainError("no primitive root found");  // unreachable for prime p
}

}  // namespace yaglom
