#pragma once

#include <stdexcept>
#include <string>

namespace markov {

enum class ErrorKind {
  BoundarySlope,  // t = 0/1 or 1/0 where an interior slope is required
  Range,          // an index or argument outside its documented range
  Structure,      // a word lacks the expected u·a·u⁻¹ shape
  Integrality,    // an exact division left a remainder
  Resource,       // a size/depth guard was exceeded
  Regime,         // operation undefined for this slope regime (e.g. t = 1)
  Malformed,      // input that cannot have come from the documented construction
  Consistency,    // two independent routes disagreed
  Parse,          // textual input could not be parsed
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace markov
