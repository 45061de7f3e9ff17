#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace markov {

/// Fence poset on {1, ..., size}; up[x-1] is true iff x ⋖ x+1, otherwise
/// x+1 ⋖ x.
struct FencePoset {
  std::size_t size = 0;
  std::vector<bool> up;

  friend bool operator==(const FencePoset&, const FencePoset&) = default;
};

/// P_S for S = (a_1, ..., a_n): elements 1..(Σa - 1), with x ⋖ x+1 exactly
/// when x lies in an odd-numbered block.
FencePoset fence_from_sequence(std::span<const long> seq);

/// Number of order ideals (including the empty one).
mpz_class count_ideals(const FencePoset& poset);

/// N(a_i, ..., a_j); the empty sequence gives 1.
mpz_class ideal_count(std::span<const long> seq);

inline constexpr std::size_t kMaxEnumeratedPosetSize = 20;

/// Every order ideal as a bitmask over elements (bit x-1 for element x).
std::vector<std::uint32_t> enumerate_ideals(const FencePoset& poset);

/// Numerator and denominator of [a_1; a_2, ..., a_n]; (1, 0) when empty.
std::pair<mpz_class, mpz_class> cf_numden(std::span<const long> seq);

}  // namespace markov
