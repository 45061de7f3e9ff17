// Structural property suites with fixed-seed generators.
#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "markov/cohnwords.hpp"
#include "markov/error.hpp"
#include "markov/lattice.hpp"
#include "markov/rational.hpp"
#include "markov/words.hpp"
#include "oracle.hpp"

namespace props {

struct Outcome {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++cases;
    if (!ok) {
      if (failures == 0) first_failure = what;
      ++failures;
    }
  }
};

inline constexpr std::uint64_t kSeed = 0x6d61726b6f76ULL;
inline constexpr std::uint64_t kSlopeBound = 60;

// reduce is idempotent and lands on a reduced word; inverse, concat and the
// empty word satisfy the group laws.
inline Outcome free_group_laws(std::size_t n = 2000) {
  using namespace markov;
  Outcome out;
  std::mt19937_64 rng(kSeed);
  for (std::size_t i = 0; i < n; ++i) {
    const FreeWord u = oracle::random_word(rng, 12);
    const FreeWord v = oracle::random_word(rng, 12);
    const FreeWord w = oracle::random_word(rng, 12);
    const FreeWord rw = reduce(w);
    bool ok = rw.is_reduced() && reduce(rw).letters() == rw.letters();
    ok = ok && concat(w, inverse(w)).empty() && concat(inverse(w), w).empty();
    ok = ok && inverse(inverse(w)).letters() == w.letters();
    ok = ok && concat(concat(u, v), w).letters() == concat(u, concat(v, w)).letters();
    ok = ok && inverse(concat(u, w)).letters() == concat(inverse(w), inverse(u)).letters();
    ok = ok && concat(w, FreeWord()).letters() == rw.letters();
    ok = ok && concat(FreeWord(), w).letters() == rw.letters();
    out.record(ok, w.str() + " / " + u.str() + " / " + v.str());
  }
  return out;
}

// w = u·α·u⁻¹ decomposes back to itself, for random conjugates and every ω_t.
inline Outcome symmetric_round_trip(std::size_t n = 1500) {
  using namespace markov;
  Outcome out;
  std::mt19937_64 rng(kSeed + 1);
  std::uniform_int_distribution<int> gen(0, 2), sign(0, 1);
  auto check = [&](const FreeWord& w) {
    try {
      const SymmetricDecomposition d = symmetric_decompose(w);
      const FreeWord back = conjugate(d.prefix, FreeWord({d.center}));
      out.record(back.letters() == reduce(w).letters() && d.prefix.is_reduced(), w.str());
    } catch (const Error& e) {
      out.record(false, w.str() + ": " + e.what());
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    const FreeWord u = reduce(oracle::random_word(rng, 14));
    const Letter alpha{static_cast<Gen>(gen(rng)), sign(rng) ? 1 : -1};
    check(conjugate(u, FreeWord({alpha})));
  }
  for (const auto& t : slopes_up_to(kSlopeBound / 2)) check(omega_geometric(t));
  return out;
}

// Every c_t has the form (first letter)·palindrome·(last letter).
inline Outcome cohn_palindromes() {
  using namespace markov;
  Outcome out;
  for (const auto& t : slopes_up_to(kSlopeBound)) {
    const std::string c = christoffel(t).letters;
    bool ok = c == oracle::floor_christoffel(t.num(), t.den());
    if (c.size() >= 2) {
      ok = ok && is_palindrome(c.substr(1, c.size() - 2));
      if (t < ExtRational::one()) ok = ok && c.front() == 'p' && c.back() == 'q';
      if (t > ExtRational::one()) ok = ok && c.front() == 'q' && c.back() == 'r';
    }
    out.record(ok, t.str() + " -> " + c);
  }
  return out;
}

// For (a/b, t, c/d): the height of L_t over x = b has fractional part
// 1/(b+d) (read mod 1, so n/1 slopes give 0).
inline Outcome height_fraction() {
  using namespace markov;
  Outcome out;
  for (const auto& t : slopes_up_to(kSlopeBound)) {
    const FareyTriple f = farey_triple(t);
    const std::uint64_t b = f.left.den();
    const std::uint64_t d = f.right.den();
    const mpq_class h = vertical_intersection_height(t, b + 1);
    const mpq_class diff = h - mpq_class(1, b + d);
    out.record(diff.get_den() == 1, t.str() + " height " + h.get_str());
  }
  return out;
}

struct NeighborOutcome : Outcome {
  std::size_t left_boundary = 0;
  std::size_t right_boundary = 0;
  std::size_t interior = 0;
};

// ω_t rebuilt from the decompositions of its Farey neighbours matches the
// geometric reading letter for letter, in each of the three regimes.
inline NeighborOutcome neighbor_relations() {
  using namespace markov;
  NeighborOutcome out;
  for (const auto& t : slopes_up_to(kSlopeBound)) {
    if (t == ExtRational::one()) continue;
    const FareyTriple f = farey_triple(t);
    if (f.left.is_zero()) {
      ++out.left_boundary;
    } else if (f.right.is_infinite()) {
      ++out.right_boundary;
    } else {
      ++out.interior;
    }
    const FreeWord w = omega_geometric(t);
    out.record(omega_from_neighbors(t).letters() == w.letters(), t.str());
  }
  return out;
}

}  // namespace props
