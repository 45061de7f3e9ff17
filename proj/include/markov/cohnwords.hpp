#pragma once

#include <string>

#include "markov/rational.hpp"
#include "markov/words.hpp"

namespace markov {

/// A word over {p, q, r}, stored as a lowercase string.
struct CohnWord {
  std::string letters;

  friend bool operator==(const CohnWord&, const CohnWord&) = default;
};

struct CohnTriple {
  CohnWord a;
  CohnWord b;
  CohnWord c;
};

/// Lower lattice path of L_t with steps 0 -> p, 1 -> q, ∞ -> r.
/// c_{0/1} = p and c_{1/0} = r.
CohnWord christoffel(const ExtRational& t);

/// Middle entry of the Cohn word tree vertex for t: children (a, ab, b), (b, bc, c).
CohnWord cohn_tree(const ExtRational& t);

/// Recovers c_t from ω_t by substituting the pieces between consecutive
/// boundary letters (z^±1 for t < 1, x^±1 for t > 1).
CohnWord cohn_from_omega(const FreeWord& w, const ExtRational& t);

bool is_palindrome(const std::string& s);

}  // namespace markov
