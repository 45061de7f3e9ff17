#include <doctest.h>

#include "properties.hpp"

namespace {
void require_clean(const props::Outcome& o) {
  CHECK(o.cases >= 1000);
  CHECK_MESSAGE(o.failures == 0, o.first_failure);
}
}  // namespace

TEST_CASE("free-group laws") { require_clean(props::free_group_laws()); }

TEST_CASE("symmetric decomposition round trip") { require_clean(props::symmetric_round_trip()); }

TEST_CASE("palindromic interior of Cohn words") { require_clean(props::cohn_palindromes()); }

TEST_CASE("height over the left neighbour's denominator") { require_clean(props::height_fraction()); }

TEST_CASE("neighbour relations in all three regimes") {
  const auto o = props::neighbor_relations();
  require_clean(o);
  CHECK(o.left_boundary > 0);
  CHECK(o.right_boundary > 0);
  CHECK(o.interior > 0);
}
