#pragma once

#include <span>
#include <string>

#include <gmpxx.h>

#include "markov/gmtree.hpp"
#include "markov/signseq.hpp"
#include "markov/words.hpp"

namespace markov {

/// 2×2 big-integer matrix [e11, e12; e21, e22].
struct Mat2 {
  mpz_class e11 = 1, e12 = 0, e21 = 0, e22 = 1;

  static Mat2 identity() { return {}; }

  mpz_class det() const { return e11 * e22 - e12 * e21; }
  /// Adjugate; equals the inverse when det = 1.
  Mat2 adjugate() const { return {e22, -e12, -e21, e11}; }

  std::string str() const;

  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.e11 * b.e11 + a.e12 * b.e21, a.e11 * b.e12 + a.e12 * b.e22,
            a.e21 * b.e11 + a.e22 * b.e21, a.e21 * b.e12 + a.e22 * b.e22};
  }
  friend Mat2 operator-(const Mat2& a, const Mat2& b) {
    return {a.e11 - b.e11, a.e12 - b.e12, a.e21 - b.e21, a.e22 - b.e22};
  }
  friend bool operator==(const Mat2& a, const Mat2& b) {
    return a.e11 == b.e11 && a.e12 == b.e12 && a.e21 == b.e21 && a.e22 == b.e22;
  }
};

struct Generators {
  Mat2 X;
  Mat2 Y;
  Mat2 Z;
};

Generators generators(const GMParams& params);

/// Substitutes x, y, z by X, Y, Z (inverses by adjugates), left to right.
Mat2 evaluate(const FreeWord& w, const GMParams& params);

/// M_t = evaluate(ω_t); checked against the (m_t, u_t, k_t) entry formula.
Mat2 monodromy(const ExtRational& t, const GMParams& params);

/// [u, -(u²+k·u+1)/m; m, -(u+k)] from the GM tree data.
Mat2 monodromy_from_entries(const ExtRational& t, const GMParams& params);

/// [N(a2..an), -N(a2..a_{n-1}); N(a1..an), -N(a1..a_{n-1})] for s°(t).
Mat2 monodromy_from_ideals(const RunLengthSequence& gm_seq);

/// M̄_t = evaluate(ω̄_t).
Mat2 completed_matrix(const ExtRational& t, const GMParams& params);

/// Π [a_i, 1; 1, 0]; identity for the empty sequence.
Mat2 fs_product(std::span<const long> runs);

/// [N(a0..al), N(a0..a_{l-1}); N(a1..al), N(a1..a_{l-1})].
/// Equals fs_product for two or more terms; for a single term the empty
/// range N() = 1 lands where F_S has 0.
Mat2 ideal_matrix(std::span<const long> runs);

struct InitialCohn {
  Mat2 c01;  // C_{0/1}
  Mat2 c11;  // C_{1/1}
  Mat2 c10;  // C_{1/0}
};

InitialCohn gc_initial(const GMParams& params);

/// C_t from the recursion C_{r⊕t} = C_r C_t - D_s, C_{t⊕s} = C_t C_s - D_r.
Mat2 gc_recursive(const ExtRational& t, const GMParams& params);

/// [K m - k - u, (K m u - k u - u² - 1)/m; m, u].
Mat2 gc_explicit(const ExtRational& t, const GMParams& params);

/// diag(-1, 1) · M̄_t · diag(1, -1).
Mat2 gc_from_completed(const ExtRational& t, const GMParams& params);

/// F_S for the strongly admissible sequence s(t).
Mat2 gc_from_sequence(const ExtRational& t, const GMParams& params);

}  // namespace markov
