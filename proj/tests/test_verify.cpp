#include <doctest.h>

#include <regex>

#include "markov/error.hpp"
#include "markov/svg.hpp"
#include "markov/verify.hpp"

using namespace markov;

namespace {
ExtRational R(const char* s) { return ExtRational::parse(s); }
}  // namespace

TEST_CASE("verify passes on the worked example") {
  const VerifyReport r = verify_slope(R("2/5"), GMParams(1, 2, 0));
  CHECK(r.passed());
  CHECK_FALSE(r.first_failure().has_value());
  CHECK(r.checks.size() >= 14);
  for (const auto& c : r.checks) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
}

TEST_CASE("verify passes in the classical case") {
  CHECK(verify_slope(R("1/1"), GMParams()).passed());
  for (const auto& t : slopes_up_to(10)) CHECK(verify_slope(t, GMParams()).passed());
}

TEST_CASE("verify rejects boundary slopes") {
  CHECK_THROWS_AS(verify_slope(R("0/1"), GMParams()), Error);
}

TEST_CASE("conjecture checks do not gate the report") {
  VerifyReport r{R("1/2"), GMParams(), {{"a", true, "", false}, {"b", false, "x", true}}};
  CHECK(r.passed());
  r.checks.push_back({"c", false, "y", false});
  CHECK_FALSE(r.passed());
  CHECK(r.first_failure()->name == "c");
}

namespace {
std::size_t count(const std::string& text, const std::string& pattern) {
  const std::regex re(pattern);
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re),
                                                std::sregex_iterator()));
}
}  // namespace

TEST_CASE("svg annotations") {
  const GMParams p(1, 2, 0);
  SvgDocument d = render_svg({R("2/5"), p, false, false});
  CHECK(d.annotations == 11);
  CHECK(count(d.text, "class=\"annotation letter\"") == 11);
  CHECK(d.text.rfind("<?xml", 0) == 0);
  CHECK(d.text.find("</svg>") != std::string::npos);

  d = render_svg({R("2/5"), p, false, true});
  CHECK(d.annotations == 25);
  CHECK(count(d.text, "class=\"annotation triangle-sign\"") == 12);
  CHECK(count(d.text, "class=\"annotation edge-sign\"") == 13);

  d = render_svg({R("1/1"), p, false, false});
  CHECK(d.annotations == 1);

  d = render_svg({R("2/5"), p, true, false});
  CHECK(d.annotations == 14);
  CHECK_THROWS_AS(render_svg({R("0/1"), p, false, false}), Error);
}
