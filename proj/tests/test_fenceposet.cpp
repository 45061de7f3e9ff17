#include <doctest.h>

#include <algorithm>
#include <random>

#include "markov/error.hpp"
#include "markov/fenceposet.hpp"
#include "oracle.hpp"

using namespace markov;

namespace {
using Seq = std::vector<long>;

// Every composition of n (sequences of positive integers summing to n).
void compositions(long n, Seq& cur, std::vector<Seq>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (long a = 1; a <= n; ++a) {
    cur.push_back(a);
    compositions(n - a, cur, out);
    cur.pop_back();
  }
}
}  // namespace

TEST_CASE("fence_from_sequence") {
  const Seq s22{2, 2};
  const FencePoset p = fence_from_sequence(s22);
  CHECK(p.size == 3);
  // 1 <. 2 and 3 <. 2.
  CHECK(p.up == std::vector<bool>{true, false});
  const Seq s1{1};
  CHECK(fence_from_sequence(s1).size == 0);
  const Seq s3{3};
  CHECK(fence_from_sequence(s3).size == 2);
  CHECK(fence_from_sequence(s3).up == std::vector<bool>{true});
  CHECK(fence_from_sequence(Seq{}).size == 0);
  CHECK_THROWS_AS(fence_from_sequence(Seq{2, 0}), Error);
}

TEST_CASE("count_ideals") {
  CHECK(ideal_count(Seq{2, 2}) == 5);
  CHECK(ideal_count(Seq{}) == 1);
  CHECK(count_ideals(FencePoset{}) == 1);
  CHECK(ideal_count(Seq{4, 3, 1, 4, 5, 1, 3, 4}) == 8227);
  CHECK(ideal_count(Seq{3}) == 3);
}

TEST_CASE("enumerate_ideals") {
  const auto ideals = enumerate_ideals(fence_from_sequence(Seq{2, 2}));
  // Bit i set means element i+1 is in the ideal.
  auto sorted = ideals;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<std::uint32_t>{0b000, 0b001, 0b100, 0b101, 0b111});
  CHECK(enumerate_ideals(FencePoset{}) == std::vector<std::uint32_t>{0});
  CHECK(enumerate_ideals(fence_from_sequence(Seq{3, 1})).size() == 4);
  try {
    enumerate_ideals(fence_from_sequence(Seq{22}));
    FAIL("expected resource error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Resource);
  }
}

TEST_CASE("cf_numden") {
  CHECK(cf_numden(Seq{4, 3, 1, 4, 5, 1, 3, 4}) == std::pair<mpz_class, mpz_class>{8227, 1930});
  CHECK(cf_numden(Seq{7}) == std::pair<mpz_class, mpz_class>{7, 1});
  CHECK(cf_numden(Seq{2, 2}) == std::pair<mpz_class, mpz_class>{5, 2});
  CHECK(cf_numden(Seq{}) == std::pair<mpz_class, mpz_class>{1, 0});
}

TEST_CASE("exhaustive oracle agreement for total <= 14") {
  for (long n = 1; n <= 14; ++n) {
    std::vector<Seq> all;
    Seq cur;
    compositions(n, cur, all);
    for (const Seq& s : all) {
      const mpz_class dp = ideal_count(s);
      CHECK(dp == oracle::brute_ideals(s));
      CHECK(dp == enumerate_ideals(fence_from_sequence(s)).size());
      const auto [num, den] = cf_numden(s);
      CHECK(dp == num);
      CHECK(oracle::cf_value(s) == std::pair<mpz_class, mpz_class>{num, den});
      // N(a2..an) is the denominator.
      CHECK(ideal_count(std::span<const long>(s).subspan(1)) == den);
    }
  }
}

TEST_CASE("random sequences up to total 18") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const Seq s = oracle::random_sequence(rng, 18);
    CHECK(ideal_count(s) == oracle::brute_ideals(s));
    CHECK(ideal_count(s) == cf_numden(s).first);
  }
}
