#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "markov/gmtree.hpp"
#include "markov/lattice.hpp"

namespace markov {

enum class Sign : std::uint8_t { Minus, Plus };

inline char to_char(Sign s) { return s == Sign::Minus ? '-' : '+'; }

/// Maximal runs of equal signs, alternating from `leading`.
struct RunLengthSequence {
  std::vector<long> runs;
  Sign leading = Sign::Minus;

  /// "(a1,a2,...)"
  std::string str() const;

  friend bool operator==(const RunLengthSequence&, const RunLengthSequence&) = default;
};

/// One sign copy attributed to the event that produced it.
struct SignedMark {
  std::size_t event_index;
  Sign sign;
};

/// Sign string of an event stream: one sign per triangle, k_{σ(1)} / k_{σ(2)}
/// / k_{σ(3)} copies per horizontal / diagonal / vertical edge.
std::vector<SignedMark> sign_marks(const std::vector<CrossingEvent>& events,
                                   const GMParams& params);

RunLengthSequence compress(const std::vector<Sign>& signs);

/// s°(t), read from L_t.
RunLengthSequence gm_sequence(const ExtRational& t, const GMParams& params);

/// s(t), read from the endpoint-completed segment.
RunLengthSequence strongly_admissible(const ExtRational& t, const GMParams& params);

long total_weight(const RunLengthSequence& seq);

}  // namespace markov
