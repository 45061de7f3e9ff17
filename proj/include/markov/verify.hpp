#pragma once

#include <optional>
#include <string>
#include <vector>

#include "markov/gmtree.hpp"
#include "markov/rational.hpp"

namespace markov {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  // Identities checked empirically with no proof behind them; a
  // failure is reported but does not fail the run.
  bool conjecture = false;
};

struct VerifyReport {
  ExtRational t;
  GMParams params;
  std::vector<CheckResult> checks;

  /// True when every non-conjecture check passed.
  bool passed() const;
  std::optional<CheckResult> first_failure() const;
};

/// Runs every cross-identity between the word, sequence, tree and matrix
/// constructions for one slope. Never throws for interior t; exceptions
/// raised inside a check are recorded as its failure.
VerifyReport verify_slope(const ExtRational& t, const GMParams& params);

}  // namespace markov
