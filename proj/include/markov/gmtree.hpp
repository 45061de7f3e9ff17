#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "markov/rational.hpp"

namespace markov {

/// A permutation of {1,2,3} given by its images (σ(1), σ(2), σ(3)).
class Permutation {
 public:
  Permutation() = default;
  Permutation(int s1, int s2, int s3);

  static Permutation identity() { return {}; }
  static std::array<Permutation, 6> all();
  /// Parses "a,b,c".
  static Permutation parse(std::string_view text);

  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::array<int, 3> images_{1, 2, 3};
};

/// (k1, k2, k3, σ) with K = 3 + k1 + k2 + k3.
struct GMParams {
  std::array<long, 3> k{0, 0, 0};
  Permutation sigma;

  GMParams() = default;
  GMParams(long k1, long k2, long k3, Permutation s = {});

  long K() const { return 3 + k[0] + k[1] + k[2]; }
  /// k_i for a position label i in {1,2,3}.
  long k_at(int label) const { return k[static_cast<std::size_t>(label - 1)]; }
  /// k_{σ(i)}.
  long k_sigma(int i) const { return k_at(sigma(i)); }

  /// Parses "k1,k2,k3".
  static std::array<long, 3> parse_k(std::string_view text);
  std::string str() const;
};

struct LabeledNumber {
  mpz_class m;
  int label;

  friend bool operator==(const LabeledNumber& a, const LabeledNumber& b) {
    return a.m == b.m && a.label == b.label;
  }
};

struct LabeledTriple {
  std::array<LabeledNumber, 3> entries;

  const LabeledNumber& left() const { return entries[0]; }
  const LabeledNumber& mid() const { return entries[1]; }
  const LabeledNumber& right() const { return entries[2]; }

  /// The solution vector (x1, x2, x3) with each m placed at its label.
  std::array<mpz_class, 3> positioned() const;

  friend bool operator==(const LabeledTriple&, const LabeledTriple&) = default;
};

/// x1²+x2²+x3²+k1·x2x3+k2·x3x1+k3·x1x2 == K·x1x2x3.
bool gm_verify(const mpz_class& x1, const mpz_class& x2, const mpz_class& x3,
               const GMParams& params);

/// Both sides of the GM equation, for reporting.
std::pair<mpz_class, mpz_class> gm_sides(const mpz_class& x1, const mpz_class& x2,
                                         const mpz_class& x3, const GMParams& params);

LabeledTriple gm_root(const GMParams& params);

std::pair<LabeledTriple, LabeledTriple> gm_children(const LabeledTriple& v,
                                                    const GMParams& params);

/// The labeled vertex for the Farey vertex whose middle entry is t.
LabeledTriple gm_vertex(const ExtRational& t, const GMParams& params);

/// (m_t, i_t).
LabeledNumber gm_at(const ExtRational& t, const GMParams& params);

/// u_t with m_r·u_t ≡ m_s (mod m_t), 0 < u_t < m_t.
mpz_class characteristic(const ExtRational& t, const GMParams& params);

/// k_t = k_{i_t}.
long k_of(const ExtRational& t, const GMParams& params);

/// All labeled vertices of depth <= depth in breadth-first order.
std::vector<LabeledTriple> gm_enumerate(unsigned depth, const GMParams& params,
                                        unsigned max_depth = kDefaultMaxFareyDepth);

}  // namespace markov
