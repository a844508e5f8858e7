#pragma once

#include "yaglom/bigint.hpp"

#include <cstdint>

namespace yaglom {

/// Miller-Rabin test.
///
/// Below 3.317e24 the first thirteen primes as bases make the verdict exact.
/// Above it, `rounds` bases are drawn from a mt19937_64 seeded with `seed`,
/// so the verdict is reproducible; a composite survives with probability at
/// most 4^-rounds.
bool is_probable_prime(const BigInt& n, int rounds = 64, std::uint64_t seed = 0);

/// Smallest generator of the multiplicative group mod a prime p.
int smallest_primitive_root(int p);

}  // namespace yaglom
