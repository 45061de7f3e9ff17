#include "markov/rational.hpp"

#include <charconv>
#include <numeric>

#include <gmpxx.h>

namespace markov {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BoundarySlope: return "boundary-slope";
    case ErrorKind::Range: return "range";
    case ErrorKind::Structure: return "structure";
    case ErrorKind::Integrality: return "integrality";
    case ErrorKind::Resource: return "resource";
    case ErrorKind::Regime: return "regime";
    case ErrorKind::Malformed: return "malformed";
    case ErrorKind::Consistency: return "consistency";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

ExtRational::ExtRational(std::uint64_t num, std::uint64_t den) {
  if (num == 0 && den == 0) {
    throw Error(ErrorKind::Range, "0/0 is not an extended rational");
  }
  const std::uint64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

namespace {

std::uint64_t parse_u64(std::string_view text, std::string_view whole) {
  std::uint64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw Error(ErrorKind::Parse, "cannot parse rational '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

ExtRational ExtRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return {parse_u64(text, text), 1};
  }
  return {parse_u64(text.substr(0, slash), text), parse_u64(text.substr(slash + 1), text)};
}

std::string ExtRational::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
  // a/b ? c/d  <=>  a*d ? c*b; valid for den = 0 because 1/0 is reduced.
  const int c = cmp(mpz_class(a.num_) * b.den_, mpz_class(b.num_) * a.den_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

ExtRational mediant(const ExtRational& a, const ExtRational& b) {
  return {a.num() + b.num(), a.den() + b.den()};
}

void require_interior(const ExtRational& t, std::string_view what) {
  if (!t.is_interior()) {
    throw Error(ErrorKind::BoundarySlope,
                std::string(what) + ": slope " + t.str() + " must satisfy 0 < t < 1/0");
  }
}

namespace {

template <typename OnMove>
FareyTriple descend(const ExtRational& t, OnMove&& on_move) {
  require_interior(t, "farey_triple");
  FareyTriple v = FareyTriple::root();
  const std::uint64_t cap = t.num() + t.den();
  std::uint64_t steps = 0;
  while (v.mid != t) {
    if (++steps > cap) {
      throw Error(ErrorKind::Consistency, "Stern-Brocot descent did not terminate for " + t.str());
    }
    if (t < v.mid) {
      v = v.left_child();
      on_move(Move::Left);
    } else {
      v = v.right_child();
      on_move(Move::Right);
    }
  }
  return v;
}

}  // namespace

FareyTriple farey_triple(const ExtRational& t) {
  return descend(t, [](Move) {});
}

FareyPath farey_path(const ExtRational& t) {
  FareyPath path;
  descend(t, [&](Move m) { path.push_back(m); });
  return path;
}

FareyTriple replay(const FareyPath& path) {
  FareyTriple v = FareyTriple::root();
  for (Move m : path) {
    v = (m == Move::Left) ? v.left_child() : v.right_child();
  }
  return v;
}

std::vector<FareyTriple> farey_enumerate(unsigned depth, unsigned max_depth) {
  if (depth > max_depth) {
    throw Error(ErrorKind::Resource, "Farey depth " + std::to_string(depth) +
                                         " exceeds limit " + std::to_string(max_depth));
  }
  std::vector<FareyTriple> out;
  out.reserve((std::size_t{2} << depth) - 1);
  out.push_back(FareyTriple::root());
  std::size_t level_begin = 0;
  for (unsigned d = 0; d < depth; ++d) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      const FareyTriple v = out[i];
      out.push_back(v.left_child());
      out.push_back(v.right_child());
    }
    level_begin = level_end;
  }
  return out;
}

std::vector<ExtRational> slopes_up_to(std::uint64_t max_sum) {
  std::vector<ExtRational> out;
  for (std::uint64_t sum = 2; sum <= max_sum; ++sum) {
    for (std::uint64_t p = 1; p < sum; ++p) {
      if (std::gcd(p, sum - p) == 1) out.emplace_back(p, sum - p);
    }
  }
  return out;
}

}  // namespace markov
