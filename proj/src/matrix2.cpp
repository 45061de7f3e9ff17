#include "markov/matrix2.hpp"

#include "markov/fenceposet.hpp"

namespace markov {

std::string Mat2::str() const {
  return "[" + e11.get_str() + "," + e12.get_str() + ";" + e21.get_str() + "," + e22.get_str() + "]";
}

Generators generators(const GMParams& params) {
  const long k1 = params.k_sigma(1);
  const long k2 = params.k_sigma(2);
  const long k3 = params.k_sigma(3);
  return {Mat2{-k1, -1, 1, 0}, Mat2{1, -1, k2 + 2, -k2 - 1}, Mat2{1, -k3 - 2, 1, -k3 - 1}};
}

Mat2 evaluate(const FreeWord& w, const GMParams& params) {
  const Generators g = generators(params);
  const Mat2 inverses[3] = {g.X.adjugate(), g.Y.adjugate(), g.Z.adjugate()};
  const Mat2* forward[3] = {&g.X, &g.Y, &g.Z};
  Mat2 acc;
  for (const Letter& l : w.letters()) {
    const auto idx = static_cast<std::size_t>(l.gen);
    acc = acc * (l.exp > 0 ? *forward[idx] : inverses[idx]);
  }
  return acc;
}

namespace {

mpz_class exact_div(const mpz_class& n, const mpz_class& d, const char* what) {
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (r != 0) {
    throw Error(ErrorKind::Integrality, std::string(what) + ": " + n.get_str() +
                                            " is not divisible by " + d.get_str());
  }
  return q;
}

struct TreeData {
  mpz_class m;
  mpz_class u;
  long k;
};

TreeData tree_data(const ExtRational& t, const GMParams& params) {
  const LabeledNumber mid = gm_at(t, params);
  return {mid.m, characteristic(t, params), params.k_at(mid.label)};
}

// Entries a[first..last] inclusive, empty when last < first.
std::span<const long> slice(std::span<const long> a, std::ptrdiff_t first, std::ptrdiff_t last) {
  if (last < first) return {};
  return a.subspan(static_cast<std::size_t>(first), static_cast<std::size_t>(last - first + 1));
}

}  // namespace

Mat2 monodromy_from_entries(const ExtRational& t, const GMParams& params) {
  const auto [m, u, k] = tree_data(t, params);
  const mpz_class e12 = exact_div(u * u + k * u + 1, m, "monodromy (1,2)-entry");
  return {u, -e12, m, -(u + k)};
}

Mat2 monodromy(const ExtRational& t, const GMParams& params) {
  require_interior(t, "monodromy");
  const Mat2 m = evaluate(omega_geometric(t), params);
  const Mat2 expected = monodromy_from_entries(t, params);
  if (!(m == expected)) {
    throw Error(ErrorKind::Consistency, "M_" + t.str() + " = " + m.str() +
                                            " disagrees with the entry formula " + expected.str());
  }
  return m;
}

Mat2 monodromy_from_ideals(const RunLengthSequence& gm_seq) {
  const std::span<const long> a(gm_seq.runs);
  const auto n = static_cast<std::ptrdiff_t>(a.size());
  if (n == 0) {
    throw Error(ErrorKind::Malformed, "monodromy ideal form needs a nonempty sequence");
  }
  return {ideal_count(slice(a, 1, n - 1)), -ideal_count(slice(a, 1, n - 2)),
          ideal_count(a), -ideal_count(slice(a, 0, n - 2))};
}

Mat2 completed_matrix(const ExtRational& t, const GMParams& params) {
  return evaluate(omega_completed(t, CompletionMode::Geometric), params);
}

Mat2 fs_product(std::span<const long> runs) {
  Mat2 acc;
  for (long a : runs) acc = acc * Mat2{a, 1, 1, 0};
  return acc;
}

Mat2 ideal_matrix(std::span<const long> runs) {
  const auto n = static_cast<std::ptrdiff_t>(runs.size());
  return {ideal_count(runs), ideal_count(slice(runs, 0, n - 2)), ideal_count(slice(runs, 1, n - 1)),
          ideal_count(slice(runs, 1, n - 2))};
}

InitialCohn gc_initial(const GMParams& params) {
  const long K = params.K();
  const long k1 = params.k_sigma(1);
  const long k2 = params.k_sigma(2);
  const long k3 = params.k_sigma(3);
  return {Mat2{K, -K * k1 - 1, 1, -k1}, Mat2{K * (k2 + 2) - k2 - 1, K - 1, k2 + 2, 1},
          Mat2{K - k3 - 1, K - k3 - 2, 1, 1}};
}

Mat2 gc_recursive(const ExtRational& t, const GMParams& params) {
  require_interior(t, "gc_recursive");
  struct Entry {
    Mat2 c;
    int label;
  };
  const InitialCohn init = gc_initial(params);
  const Permutation& s = params.sigma;
  Entry r{init.c01, s(1)};
  Entry mid{init.c11, s(2)};
  Entry right{init.c10, s(3)};
  const long K = params.K();
  auto shift = [&](int label) {
    const long k = params.k_at(label);
    return Mat2{k, K * k, 0, k};
  };
  for (Move m : farey_path(t)) {
    if (m == Move::Left) {
      Entry next{r.c * mid.c - shift(right.label), right.label};
      right = std::move(mid);
      mid = std::move(next);
    } else {
      Entry next{mid.c * right.c - shift(r.label), r.label};
      r = std::move(mid);
      mid = std::move(next);
    }
  }
  return mid.c;
}

Mat2 gc_explicit(const ExtRational& t, const GMParams& params) {
  require_interior(t, "gc_explicit");
  const auto [m, u, k] = tree_data(t, params);
  const long K = params.K();
  const mpz_class e12 = exact_div(K * m * u - k * u - u * u - 1, m, "GC (1,2)-entry");
  return {K * m - k - u, e12, m, u};
}

Mat2 gc_from_completed(const ExtRational& t, const GMParams& params) {
  const Mat2 bar = completed_matrix(t, params);
  return {-bar.e11, bar.e12, bar.e21, -bar.e22};
}

Mat2 gc_from_sequence(const ExtRational& t, const GMParams& params) {
  return fs_product(strongly_admissible(t, params).runs);
}

}  // namespace markov
