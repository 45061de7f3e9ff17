#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "markov/rational.hpp"

namespace markov {

enum class Gen : std::uint8_t { X, Y, Z };

char to_char(Gen g);

struct Letter {
  Gen gen;
  int exp;  // +1 or -1

  Letter inverse() const { return {gen, -exp}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word over {x, y, z} and their inverses.
///
/// Letters are stored as given; equality compares reduced forms. Use
/// letters() when the emission order itself matters.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static FreeWord generator(Gen g, int exp = 1) { return FreeWord({Letter{g, exp}}); }

  /// Parses the apostrophe notation, e.g. "yzy'z'"; "1" is the empty word.
  static FreeWord parse(std::string_view text);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  bool is_reduced() const;

  /// Apostrophe notation of the stored letters (no reduction).
  std::string str() const;

  friend bool operator==(const FreeWord& a, const FreeWord& b);

 private:
  std::vector<Letter> letters_;
};

FreeWord reduce(const FreeWord& w);
FreeWord inverse(const FreeWord& w);
/// Reduced product u·w.
FreeWord concat(const FreeWord& u, const FreeWord& w);
/// Raw juxtaposition u·w with no cancellation.
FreeWord juxtapose(const FreeWord& u, const FreeWord& w);
/// Reduced u·w·u⁻¹.
FreeWord conjugate(const FreeWord& u, const FreeWord& w);

struct WordTriple {
  FreeWord a;
  FreeWord b;
  FreeWord c;

  static WordTriple root();
};

/// (a,b,c) -> left (a, b c b⁻¹, b), right (b, b⁻¹ a b, c); middles reduced.
std::pair<WordTriple, WordTriple> word_children(const WordTriple& v);

/// Word tree vertex reached by replaying farey_path(t).
WordTriple word_vertex(const ExtRational& t);

/// ω_t read from the edges crossed by L_t; ω_{0/1} = x, ω_{1/0} = z.
FreeWord omega_geometric(const ExtRational& t);

/// ω_t as the middle entry of the word tree vertex for t.
FreeWord omega_tree(const ExtRational& t);

struct SymmetricDecomposition {
  FreeWord prefix;  // u in w = u·α·u⁻¹
  Letter center;
};

SymmetricDecomposition symmetric_decompose(const FreeWord& w);

/// ω_t assembled from the symmetric decompositions of its Farey neighbours,
/// without any cancellation:
///   r = 0/1:  y z w α⁻¹ w⁻¹          (ω_s = w α w⁻¹)
///   s = 1/0:  u β⁻¹ u⁻¹ x y          (ω_r = u β u⁻¹)
///   else:     u β⁻¹ u⁻¹ x y z w α⁻¹ w⁻¹
/// Throws Regime for t = 1/1, whose neighbours are both boundary slopes.
FreeWord omega_from_neighbors(const ExtRational& t);

enum class CompletionMode { Algebraic, Geometric };

/// ω̄_t: either reduce(xyz·ω_t⁻¹) or the reading of the shifted segment.
FreeWord omega_completed(const ExtRational& t, CompletionMode mode);

}  // namespace markov
