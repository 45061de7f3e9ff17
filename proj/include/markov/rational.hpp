#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "markov/error.hpp"

namespace markov {

/// Reduced nonnegative fraction num/den, where 1/0 stands for infinity.
///
/// Both components are kept reduced at construction. Comparison is by exact
/// cross-multiplication, so 1/0 sorts above every finite value.
class ExtRational {
 public:
  constexpr ExtRational() = default;
  ExtRational(std::uint64_t num, std::uint64_t den);

  static ExtRational zero() { return {0, 1}; }
  static ExtRational one() { return {1, 1}; }
  static ExtRational infinity() { return {1, 0}; }

  /// Parses "p/q" (or a bare integer "p").
  static ExtRational parse(std::string_view text);

  std::uint64_t num() const noexcept { return num_; }
  std::uint64_t den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_infinite() const noexcept { return den_ == 0; }
  bool is_interior() const noexcept { return num_ != 0 && den_ != 0; }

  std::string str() const;

  friend bool operator==(const ExtRational&, const ExtRational&) = default;
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

ExtRational mediant(const ExtRational& a, const ExtRational& b);

/// Throws BoundarySlope unless 0 < t < infinity.
void require_interior(const ExtRational& t, std::string_view what);

struct FareyTriple {
  ExtRational left;
  ExtRational mid;
  ExtRational right;

  static FareyTriple root() {
    return {ExtRational::zero(), ExtRational::one(), ExtRational::infinity()};
  }

  FareyTriple left_child() const { return {left, mediant(left, mid), mid}; }
  FareyTriple right_child() const { return {mid, mediant(mid, right), right}; }

  friend bool operator==(const FareyTriple&, const FareyTriple&) = default;
};

enum class Move : std::uint8_t { Left, Right };

using FareyPath = std::vector<Move>;

FareyTriple farey_triple(const ExtRational& t);
FareyPath farey_path(const ExtRational& t);

/// Replays a move sequence from the root triple.
FareyTriple replay(const FareyPath& path);

inline constexpr unsigned kDefaultMaxFareyDepth = 20;

/// All vertices of depth <= depth in breadth-first order (root first).
std::vector<FareyTriple> farey_enumerate(unsigned depth,
                                         unsigned max_depth = kDefaultMaxFareyDepth);

/// Every reduced p/q with p, q >= 1 and p + q <= max_sum, ordered by (p+q, p).
std::vector<ExtRational> slopes_up_to(std::uint64_t max_sum);

}  // namespace markov
