#include "markov/fenceposet.hpp"

#include <string>

#include "markov/error.hpp"

namespace markov {

FencePoset fence_from_sequence(std::span<const long> seq) {
  long total = 0;
  for (long a : seq) {
    if (a < 1) {
      throw Error(ErrorKind::Range, "fence sequence entries must be positive, got " + std::to_string(a));
    }
    total += a;
  }
  FencePoset poset;
  if (total <= 1) return poset;
  poset.size = static_cast<std::size_t>(total - 1);
  poset.up.reserve(poset.size - 1);

  // Block j (1-based) covers labels s_{j-1} <= x < s_j.
  std::size_t block = 0;
  long block_end = seq[0];
  for (long x = 1; x < total - 1; ++x) {
    while (x >= block_end) {
      ++block;
      block_end += seq[block];
    }
    poset.up.push_back(block % 2 == 0);
  }
  return poset;
}

mpz_class count_ideals(const FencePoset& poset) {
  if (poset.size == 0) return 1;
  // Ideals of the prefix {1..x}, split by whether x belongs to them.
  mpz_class with = 1;
  mpz_class without = 1;
  for (bool up : poset.up) {
    if (up) {
      // x ⋖ x+1: x+1 may join only if x is present.
      without += with;
    } else {
      // x+1 ⋖ x: x may be present only if x+1 is.
      with += without;
    }
  }
  return with + without;
}

mpz_class ideal_count(std::span<const long> seq) {
  return count_ideals(fence_from_sequence(seq));
}

std::vector<std::uint32_t> enumerate_ideals(const FencePoset& poset) {
  if (poset.size > kMaxEnumeratedPosetSize) {
    throw Error(ErrorKind::Resource, "brute-force ideal enumeration is limited to " +
                                         std::to_string(kMaxEnumeratedPosetSize) + " elements");
  }
  const std::uint32_t limit = std::uint32_t{1} << poset.size;
  std::vector<std::uint32_t> ideals;
  for (std::uint32_t subset = 0; subset < limit; ++subset) {
    bool closed = true;
    for (std::size_t x = 0; x + 1 < poset.size && closed; ++x) {
      const std::uint32_t lower = poset.up[x] ? x : x + 1;
      const std::uint32_t upper = poset.up[x] ? x + 1 : x;
      if ((subset >> upper & 1U) && !(subset >> lower & 1U)) closed = false;
    }
    if (closed) ideals.push_back(subset);
  }
  return ideals;
}

std::pair<mpz_class, mpz_class> cf_numden(std::span<const long> seq) {
  mpz_class h_prev = 0, h = 1;
  mpz_class k_prev = 1, k = 0;
  for (long a : seq) {
    if (a < 1) {
      throw Error(ErrorKind::Range, "continued fraction terms must be positive");
    }
    mpz_class h_next = a * h + h_prev;
    mpz_class k_next = a * k + k_prev;
    h_prev = std::move(h);
    h = std::move(h_next);
    k_prev = std::move(k);
    k = std::move(k_next);
  }
  return {h, k};
}

}  // namespace markov
