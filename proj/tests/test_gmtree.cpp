#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "markov/error.hpp"
#include "markov/gmtree.hpp"

using namespace markov;

namespace {
ExtRational R(const char* s) { return ExtRational::parse(s); }
const GMParams P120(1, 2, 0);

LabeledTriple triple(const fixtures::TreeVertex& v) {
  LabeledTriple t;
  for (std::size_t i = 0; i < 3; ++i) t.entries[i] = {mpz_class(v.entries[i].first), v.entries[i].second};
  return t;
}
}  // namespace

TEST_CASE("Permutation") {
  CHECK(Permutation::parse("1,2,3") == Permutation::identity());
  const Permutation s = Permutation::parse("3,1,2");
  CHECK(s(1) == 3);
  CHECK(s(2) == 1);
  CHECK(s(3) == 2);
  CHECK(s.str() == "3,1,2");
  CHECK(Permutation::all().size() == 6);
  CHECK_THROWS_AS(Permutation::parse("1,1,3"), Error);
  CHECK_THROWS_AS(Permutation::parse("1,2"), Error);
  CHECK_THROWS_AS(Permutation::parse("0,1,2"), Error);
}

TEST_CASE("GMParams") {
  CHECK(P120.K() == 6);
  CHECK(GMParams::parse_k("1,2,0") == std::array<long, 3>{1, 2, 0});
  CHECK_THROWS_AS(GMParams::parse_k("1,-2,0"), Error);
  CHECK_THROWS_AS(GMParams::parse_k("1,2"), Error);
  const GMParams p(1, 2, 0, Permutation(2, 3, 1));
  CHECK(p.k_sigma(1) == 2);
  CHECK(p.k_sigma(2) == 0);
  CHECK(p.k_sigma(3) == 1);
}

TEST_CASE("gm_verify") {
  CHECK(gm_verify(8227, 81, 17, P120));
  const auto [l, r] = gm_sides(8227, 81, 17, P120);
  CHECK(l == 67971474);
  CHECK(r == 67971474);
  CHECK(gm_verify(1, 1, 1, GMParams()));
  CHECK_FALSE(gm_verify(2, 3, 5, GMParams()));
  const auto [l2, r2] = gm_sides(2, 3, 5, GMParams());
  CHECK(l2 == 38);
  CHECK(r2 == 90);
}

TEST_CASE("gm tree children") {
  const LabeledTriple root = gm_root(P120);
  CHECK(root == triple(fixtures::tree_120()[0]));
  const auto [l, r] = gm_children(root, P120);
  CHECK(l == triple(fixtures::tree_120()[1]));
  CHECK(r == triple(fixtures::tree_120()[2]));
  CHECK(gm_children(r, P120).second == triple(fixtures::tree_120()[6]));

  const auto [l0, r0] = gm_children(gm_root(GMParams()), GMParams());
  CHECK(l0.mid().m == 5);
  CHECK(r0.mid().m == 5);

  LabeledTriple bad = root;
  bad.entries[2].m = 3;
  try {
    gm_children(bad, P120);
    FAIL("expected integrality error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Integrality);
  }
}

TEST_CASE("gm_vertex matches the published tree") {
  for (const auto& v : fixtures::tree_120()) {
    CHECK_MESSAGE(gm_vertex(R(v.slope), P120) == triple(v), v.slope);
  }
}

TEST_CASE("gm_enumerate") {
  const auto all = gm_enumerate(3, P120);
  REQUIRE(all.size() == 15);
  const auto farey = farey_enumerate(3);
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i] == gm_vertex(farey[i].mid, P120));
  }
  CHECK_THROWS_AS(gm_enumerate(30, P120), Error);
}

TEST_CASE("gm_at, characteristic, k_of") {
  CHECK(gm_at(R("2/5"), P120) == LabeledNumber{8227, 1});
  CHECK(gm_at(R("1/1"), P120) == LabeledNumber{4, 2});
  CHECK(gm_at(R("1/3"), P120) == LabeledNumber{81, 2});
  CHECK(characteristic(R("2/5"), P120) == 1930);
  CHECK(characteristic(R("1/1"), P120) == 1);
  CHECK(characteristic(R("1/2"), P120) == 4);
  CHECK(k_of(R("2/5"), P120) == 1);
  CHECK(k_of(R("1/1"), P120) == 2);
  CHECK(k_of(R("1/2"), P120) == 0);
  CHECK_THROWS_AS(gm_at(R("0/1"), P120), Error);
}

TEST_CASE("random parameter sets: equation and coprimality at depth 8") {
  std::mt19937_64 rng(20240501);
  std::uniform_int_distribution<long> kd(0, 3);
  std::uniform_int_distribution<std::size_t> sd(0, 5);
  for (int trial = 0; trial < 10; ++trial) {
    const GMParams p(kd(rng), kd(rng), kd(rng), Permutation::all()[sd(rng)]);
    for (const auto& v : gm_enumerate(8, p)) {
      const auto x = v.positioned();
      CHECK(gm_verify(x[0], x[1], x[2], p));
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), v.left().m.get_mpz_t(), v.mid().m.get_mpz_t());
      CHECK(g == 1);
      mpz_gcd(g.get_mpz_t(), v.mid().m.get_mpz_t(), v.right().m.get_mpz_t());
      CHECK(g == 1);
      mpz_gcd(g.get_mpz_t(), v.left().m.get_mpz_t(), v.right().m.get_mpz_t());
      CHECK(g == 1);
      // Labels are a permutation of {1,2,3}.
      CHECK(v.left().label + v.mid().label + v.right().label == 6);
      CHECK(v.left().label * v.mid().label * v.right().label == 6);
    }
  }
}

TEST_CASE("characteristic is the residue m_s / m_r mod m_t") {
  for (const auto& t : slopes_up_to(12)) {
    const LabeledTriple v = gm_vertex(t, P120);
    const mpz_class u = characteristic(t, P120);
    CHECK(u > 0);
    CHECK(u < v.mid().m);
    const mpz_class lhs = v.left().m * u - v.right().m;
    CHECK(lhs % v.mid().m == 0);
  }
}
