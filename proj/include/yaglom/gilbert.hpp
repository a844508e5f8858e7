#pragma once

#include "yaglom/euclid.hpp"

#include <cstdint>

namespace yaglom {

/// Greedy codes refuse alphabets with more than this many words.
inline constexpr std::int64_t kGreedyWordLimit = 10'000'000;

/// Lexicographic greedy code in Z_q^n: scan all words in lex order and keep a
/// word iff its squared Euclidean distance to every kept word is at least d.
/// Holds at least ceil(q^n / ball_size(q, n, d-1)) words.
CodeBook greedy_gilbert(int q, int n, std::int64_t d);

/// The word with lex index `index` (first coordinate most significant).
Word word_at(int q, int n, std::int64_t index);

}  // namespace yaglom
