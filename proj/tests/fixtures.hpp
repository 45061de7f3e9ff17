// Reference values shared by the unit tests and the acceptance
// runner. Parameters: (k1,k2,k3) = (1,2,0), sigma = id unless noted.
#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace fixtures {

struct TreeVertex {
  const char* slope;
  std::array<std::pair<const char*, int>, 3> entries;
};

// MT(1,2,0,id) to depth 3.
inline const std::vector<TreeVertex>& tree_120() {
  static const std::vector<TreeVertex> v = {
      {"1/1", {{{"1", 1}, {"4", 2}, {"1", 3}}}},
      {"1/2", {{{"1", 1}, {"17", 3}, {"4", 2}}}},
      {"2/1", {{{"4", 2}, {"21", 1}, {"1", 3}}}},
      {"1/3", {{{"1", 1}, {"81", 2}, {"17", 3}}}},
      {"2/3", {{{"17", 3}, {"373", 1}, {"4", 2}}}},
      {"3/2", {{{"4", 2}, {"457", 3}, {"21", 1}}}},
      {"3/1", {{{"21", 1}, {"121", 2}, {"1", 3}}}},
      {"1/4", {{{"1", 1}, {"386", 3}, {"81", 2}}}},
      {"2/5", {{{"81", 2}, {"8227", 1}, {"17", 3}}}},
      {"3/5", {{{"17", 3}, {"38025", 2}, {"373", 1}}}},
      {"3/4", {{{"373", 1}, {"8185", 3}, {"4", 2}}}},
      {"4/3", {{{"4", 2}, {"10033", 1}, {"457", 3}}}},
      {"5/3", {{{"457", 3}, {"57121", 2}, {"21", 1}}}},
      {"5/2", {{{"21", 1}, {"15082", 3}, {"121", 2}}}},
      {"4/1", {{{"121", 2}, {"703", 1}, {"1", 3}}}},
  };
  return v;
}

// Worked example at t = 2/5.
inline constexpr const char* kOmega = "yzy'z'y'xyzyz'y'";
inline constexpr const char* kOmegaBar = "xyzyzy'z'y'x'yzyz'y'";
inline const std::vector<long> kGmSeq = {4, 3, 1, 4, 5, 1, 3, 4};
inline const std::vector<long> kStrongSeq = {5, 1, 3, 3, 1, 5, 4, 1, 3, 4};
inline constexpr std::array<const char*, 4> kMonodromy = {"1930", "-453", "8227", "-1931"};
inline constexpr std::array<const char*, 4> kCompleted = {"-47431", "11127", "8227", "-1930"};
inline constexpr std::array<const char*, 4> kCohn = {"47431", "11127", "8227", "1930"};

}  // namespace fixtures
