#include "markov/cohnwords.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace markov {

namespace {

struct GridPoint {
  long x;
  long y;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

}  // namespace

CohnWord christoffel(const ExtRational& t) {
  if (t.is_zero()) return {"p"};
  if (t.is_infinite()) return {"r"};
  const long a = static_cast<long>(t.num());  // rise
  const long b = static_cast<long>(t.den());  // run

  // Crossings of L_t with x = i and y = j, keyed by the parameter along the
  // segment: x = i at λ = i/b, y = j at λ = j/a. Compare i/b with j/a as
  // i*a against j*b.
  struct Hit {
    long key_num;  // λ = key_num / (a*b)
    GridPoint point;
  };
  std::vector<Hit> hits;
  for (long i = 0; i <= b; ++i) {
    // Height a*i/b; the right-hand neighbour of an upward segment is below.
    const long y = (a * i) / b;
    hits.push_back({i * a, {i, y}});
  }
  for (long j = 0; j <= a; ++j) {
    // Abscissa b*j/a; the right-hand neighbour is to the right.
    const long x = (b * j + a - 1) / a;
    hits.push_back({j * b, {x, j}});
  }
  std::stable_sort(hits.begin(), hits.end(),
                   [](const Hit& l, const Hit& r) { return l.key_num < r.key_num; });

  std::vector<GridPoint> path;
  for (const Hit& h : hits) {
    if (path.empty() || !(path.back() == h.point)) path.push_back(h.point);
  }

  CohnWord out;
  for (std::size_t k = 1; k < path.size(); ++k) {
    const long dx = path[k].x - path[k - 1].x;
    const long dy = path[k].y - path[k - 1].y;
    if (dx == 1 && dy == 0) {
      out.letters.push_back('p');
    } else if (dx == 1 && dy == 1) {
      out.letters.push_back('q');
    } else if (dx == 0 && dy == 1) {
      out.letters.push_back('r');
    } else {
      throw Error(ErrorKind::Consistency, "lower lattice path of " + t.str() + " has a non-unit step");
    }
  }
  return out;
}

CohnWord cohn_tree(const ExtRational& t) {
  if (t.is_zero()) return {"p"};
  if (t.is_infinite()) return {"r"};
  CohnTriple v{{"p"}, {"q"}, {"r"}};
  for (Move m : farey_path(t)) {
    if (m == Move::Left) {
      v = {v.a, {v.a.letters + v.b.letters}, v.b};
    } else {
      v = {v.b, {v.b.letters + v.c.letters}, v.c};
    }
  }
  return v.b;
}

CohnWord cohn_from_omega(const FreeWord& w, const ExtRational& t) {
  require_interior(t, "cohn_from_omega");
  if (t == ExtRational::one()) {
    throw Error(ErrorKind::Regime, "cohn_from_omega is defined for t in (0,1) or (1,inf), not 1/1");
  }
  const bool below = t < ExtRational::one();
  const Gen boundary = below ? Gen::Z : Gen::X;
  const Gen inner = below ? Gen::X : Gen::Z;
  // Short piece y^±1 and long piece y^±1 inner^±1 y^±1.
  const char short_letter = below ? 'p' : 'r';
  const char long_letter = 'q';

  const auto& ls = w.letters();
  std::vector<std::size_t> marks;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (ls[i].gen == boundary) marks.push_back(i);
  }

  std::string middle;
  for (std::size_t k = 1; k < marks.size(); ++k) {
    const std::size_t len = marks[k] - marks[k - 1] - 1;
    const Letter* piece = ls.data() + marks[k - 1] + 1;
    if (len == 1 && piece[0].gen == Gen::Y) {
      middle.push_back(short_letter);
    } else if (len == 3 && piece[0].gen == Gen::Y && piece[1].gen == inner && piece[2].gen == Gen::Y) {
      middle.push_back(long_letter);
    } else {
      throw Error(ErrorKind::Malformed, "piece between boundary letters of '" + w.str() +
                                            "' matches neither allowed shape");
    }
  }
  return below ? CohnWord{"p" + middle + "q"} : CohnWord{"q" + middle + "r"};
}

bool is_palindrome(const std::string& s) {
  return std::equal(s.begin(), s.begin() + static_cast<long>(s.size() / 2), s.rbegin());
}

}  // namespace markov
