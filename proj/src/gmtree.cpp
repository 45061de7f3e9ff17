#include "markov/gmtree.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace markov {

namespace {

std::vector<long> parse_csv_longs(std::string_view text, std::size_t expected) {
  std::vector<long> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view field = text.substr(start, end - start);
    long value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw Error(ErrorKind::Parse, "cannot parse integer list '" + std::string(text) + "'");
    }
    out.push_back(value);
    start = end + 1;
  }
  if (out.size() != expected) {
    throw Error(ErrorKind::Parse, "expected " + std::to_string(expected) + " comma-separated values in '" +
                                      std::string(text) + "'");
  }
  return out;
}

}  // namespace

Permutation::Permutation(int s1, int s2, int s3) : images_{s1, s2, s3} {
  std::array<int, 3> sorted = images_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{1, 2, 3}) {
    throw Error(ErrorKind::Range, "(" + std::to_string(s1) + "," + std::to_string(s2) + "," +
                                      std::to_string(s3) + ") is not a permutation of {1,2,3}");
  }
}

std::array<Permutation, 6> Permutation::all() {
  return {Permutation{1, 2, 3}, Permutation{1, 3, 2}, Permutation{2, 1, 3},
          Permutation{2, 3, 1}, Permutation{3, 1, 2}, Permutation{3, 2, 1}};
}

Permutation Permutation::parse(std::string_view text) {
  const auto v = parse_csv_longs(text, 3);
  return {static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2])};
}

std::string Permutation::str() const {
  return std::to_string(images_[0]) + "," + std::to_string(images_[1]) + "," +
         std::to_string(images_[2]);
}

GMParams::GMParams(long k1, long k2, long k3, Permutation s) : k{k1, k2, k3}, sigma(s) {
  if (k1 < 0 || k2 < 0 || k3 < 0) {
    throw Error(ErrorKind::Range, "GM coefficients must be nonnegative");
  }
}

std::array<long, 3> GMParams::parse_k(std::string_view text) {
  const auto v = parse_csv_longs(text, 3);
  if (v[0] < 0 || v[1] < 0 || v[2] < 0) {
    throw Error(ErrorKind::Range, "GM coefficients must be nonnegative");
  }
  return {v[0], v[1], v[2]};
}

std::string GMParams::str() const {
  std::ostringstream os;
  os << "k=(" << k[0] << "," << k[1] << "," << k[2] << ") sigma=(" << sigma.str() << ")";
  return os.str();
}

std::array<mpz_class, 3> LabeledTriple::positioned() const {
  std::array<mpz_class, 3> x;
  std::array<bool, 3> seen{false, false, false};
  for (const auto& e : entries) {
    if (e.label < 1 || e.label > 3 || seen[static_cast<std::size_t>(e.label - 1)]) {
      throw Error(ErrorKind::Malformed, "labels of a GM triple must be a permutation of {1,2,3}");
    }
    seen[static_cast<std::size_t>(e.label - 1)] = true;
    x[static_cast<std::size_t>(e.label - 1)] = e.m;
  }
  return x;
}

std::pair<mpz_class, mpz_class> gm_sides(const mpz_class& x1, const mpz_class& x2,
                                         const mpz_class& x3, const GMParams& params) {
  mpz_class lhs = x1 * x1 + x2 * x2 + x3 * x3 + params.k[0] * x2 * x3 + params.k[1] * x3 * x1 +
                  params.k[2] * x1 * x2;
  mpz_class rhs = params.K() * x1 * x2 * x3;
  return {lhs, rhs};
}

bool gm_verify(const mpz_class& x1, const mpz_class& x2, const mpz_class& x3,
               const GMParams& params) {
  const auto [lhs, rhs] = gm_sides(x1, x2, x3, params);
  return lhs == rhs;
}

LabeledTriple gm_root(const GMParams& params) {
  const Permutation& s = params.sigma;
  return {{LabeledNumber{1, s(1)}, LabeledNumber{params.k_sigma(2) + 2, s(2)},
           LabeledNumber{1, s(3)}}};
}

namespace {

mpz_class exact_div(const mpz_class& n, const mpz_class& d) {
  mpz_class q;
  mpz_class r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (r != 0) {
    throw Error(ErrorKind::Integrality,
                n.get_str() + " is not divisible by " + d.get_str() + " in the GM exchange");
  }
  return q;
}

}  // namespace

std::pair<LabeledTriple, LabeledTriple> gm_children(const LabeledTriple& v,
                                                    const GMParams& params) {
  const auto& [a, h] = v.entries[0];
  const auto& [b, i] = v.entries[1];
  const auto& [c, j] = v.entries[2];
  const mpz_class left_m = exact_div(a * a + params.k_at(j) * a * b + b * b, c);
  const mpz_class right_m = exact_div(b * b + params.k_at(h) * b * c + c * c, a);
  LabeledTriple left{{v.entries[0], LabeledNumber{left_m, j}, v.entries[1]}};
  LabeledTriple right{{v.entries[1], LabeledNumber{right_m, h}, v.entries[2]}};
  return {std::move(left), std::move(right)};
}

LabeledTriple gm_vertex(const ExtRational& t, const GMParams& params) {
  LabeledTriple v = gm_root(params);
  for (Move m : farey_path(t)) {
    auto children = gm_children(v, params);
    v = (m == Move::Left) ? std::move(children.first) : std::move(children.second);
  }
  return v;
}

LabeledNumber gm_at(const ExtRational& t, const GMParams& params) {
  return gm_vertex(t, params).mid();
}

mpz_class characteristic(const ExtRational& t, const GMParams& params) {
  const LabeledTriple v = gm_vertex(t, params);
  const mpz_class& mr = v.left().m;
  const mpz_class& mt = v.mid().m;
  const mpz_class& ms = v.right().m;
  if (mt < 2) {
    throw Error(ErrorKind::Consistency, "GM number at " + t.str() + " is below 2");
  }
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), mr.get_mpz_t(), mt.get_mpz_t()) == 0) {
    throw Error(ErrorKind::Consistency,
                "m_r = " + mr.get_str() + " is not invertible modulo m_t = " + mt.get_str());
  }
  mpz_class u = (inv * ms) % mt;
  if (u < 0) u += mt;
  if (u <= 0) {
    throw Error(ErrorKind::Consistency, "characteristic number at " + t.str() + " is not positive");
  }
  return u;
}

long k_of(const ExtRational& t, const GMParams& params) {
  return params.k_at(gm_at(t, params).label);
}

std::vector<LabeledTriple> gm_enumerate(unsigned depth, const GMParams& params,
                                        unsigned max_depth) {
  if (depth > max_depth) {
    throw Error(ErrorKind::Resource, "GM tree depth " + std::to_string(depth) +
                                         " exceeds limit " + std::to_string(max_depth));
  }
  std::vector<LabeledTriple> out;
  out.reserve((std::size_t{2} << depth) - 1);
  out.push_back(gm_root(params));
  std::size_t level_begin = 0;
  for (unsigned d = 0; d < depth; ++d) {
    const std::size_t level_end = out.size();
    for (std::size_t n = level_begin; n < level_end; ++n) {
      auto children = gm_children(out[n], params);
      out.push_back(std::move(children.first));
      out.push_back(std::move(children.second));
    }
    level_begin = level_end;
  }
  return out;
}

}  // namespace markov
