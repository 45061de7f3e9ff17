#include "markov/lattice.hpp"

#include <algorithm>
#include <array>

namespace markov {

const char* to_string(EventKind kind) {
  switch (kind) {
    case EventKind::HorizontalEdge: return "horizontal";
    case EventKind::DiagonalEdge: return "diagonal";
    case EventKind::VerticalEdge: return "vertical";
    case EventKind::Triangle: return "triangle";
  }
  return "unknown";
}

mpz_class EpsRational::floor() const {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  if (a.get_den() == 1 && sgn(b) < 0) {
    fl -= 1;
  }
  return fl;
}

namespace {

mpq_class frac(long n, long d) {
  mpq_class r{mpz_class(n), mpz_class(d)};
  r.canonicalize();
  return r;
}

bool is_integral(const EpsRational& v) { return v.a.get_den() == 1 && sgn(v.b) == 0; }

long to_long(const mpz_class& z) { return z.get_si(); }

struct Geometry {
  long p;
  long q;
  EpsRational x0;  // x of the initial endpoint; y0 is always 0

  // Orientation cross-product of (v - start) against the direction (q, p);
  // positive means strictly left of the oriented line.
  EpsRational cross(const mpq_class& vx, const mpq_class& vy) const {
    return EpsRational(q * vy) - mpq_class(p) * (EpsRational(vx) - x0);
  }
};

struct PendingEdge {
  EpsRational param;
  EventKind kind;
  long cell_x;
  long cell_y;
  mpq_class mid_x;
  mpq_class mid_y;
};

}  // namespace

EpsPoint point_at(const SegmentSpec& seg, const EpsRational& param) {
  const EpsRational x0 = seg.shifted ? EpsRational(0, -1) : EpsRational(0);
  return {x0 + mpq_class(seg.slope.den()) * param, mpq_class(seg.slope.num()) * param};
}

std::vector<CrossingEvent> crossing_events(const SegmentSpec& seg) {
  require_interior(seg.slope, "crossing_events");
  const long p = static_cast<long>(seg.slope.num());
  const long q = static_cast<long>(seg.slope.den());
  const Geometry g{p, q, seg.shifted ? EpsRational(0, -1) : EpsRational(0)};

  const EpsRational zero(0);
  const EpsRational one(1);
  auto in_range = [&](const EpsRational& lambda) {
    if (seg.shifted) return zero <= lambda && lambda < one;
    return zero < lambda && lambda < one;
  };
  auto require_edge_interior = [&](const EpsRational& coord) {
    if (is_integral(coord)) {
      throw Error(ErrorKind::Consistency,
                  "segment of slope " + seg.slope.str() + " meets a lattice vertex");
    }
  };

  std::vector<PendingEdge> edges;
  edges.reserve(static_cast<std::size_t>(2 * (p + q) + 2));

  for (long j = 0; j <= p; ++j) {
    const EpsRational lambda(frac(j, p));
    if (!in_range(lambda)) continue;
    const EpsPoint pt = point_at(seg, lambda);
    require_edge_interior(pt.x);
    const long i = to_long(pt.x.floor());
    edges.push_back({lambda, EventKind::HorizontalEdge, i, j, mpq_class(i) + frac(1, 2), mpq_class(j)});
  }
  for (long i = 0; i <= q; ++i) {
    const EpsRational lambda = mpq_class(frac(1, q)) * (EpsRational(i) - g.x0);
    if (!in_range(lambda)) continue;
    const EpsPoint pt = point_at(seg, lambda);
    require_edge_interior(pt.y);
    const long j = to_long(pt.y.floor());
    edges.push_back({lambda, EventKind::VerticalEdge, i, j, mpq_class(i), mpq_class(j) + frac(1, 2)});
  }
  for (long n = 0; n <= p + q; ++n) {
    const EpsRational lambda = mpq_class(frac(1, p + q)) * (EpsRational(n) - g.x0);
    if (!in_range(lambda)) continue;
    const EpsPoint pt = point_at(seg, lambda);
    require_edge_interior(pt.x);
    const long i = to_long(pt.x.floor());
    // Anti-diagonal of the unit square with lower-left corner (i, n - i - 1).
    edges.push_back({lambda, EventKind::DiagonalEdge, i, n - i - 1, mpq_class(i) + frac(1, 2),
                     mpq_class(n - i) - frac(1, 2)});
  }

  std::sort(edges.begin(), edges.end(),
            [](const PendingEdge& l, const PendingEdge& r) { return l.param < r.param; });
  for (std::size_t k = 1; k < edges.size(); ++k) {
    if (!(edges[k - 1].param < edges[k].param)) {
      throw Error(ErrorKind::Consistency, "two edge crossings share a parameter");
    }
  }

  std::vector<CrossingEvent> out;
  out.reserve(2 * edges.size() + 1);

  bool first_triangle = true;
  auto emit_triangle = [&](const EpsRational& lo, const EpsRational& hi) {
    const EpsRational mid = mpq_class(frac(1, 2)) * (lo + hi);
    const EpsPoint pt = point_at(seg, mid);
    const mpz_class ci = pt.x.floor();
    const mpz_class cj = pt.y.floor();
    const EpsRational offset = (pt.x - EpsRational(mpq_class(ci))) + (pt.y - EpsRational(mpq_class(cj)));
    if (offset == one) {
      throw Error(ErrorKind::Consistency, "triangle probe landed on a diagonal edge");
    }
    const bool upper = offset > one;
    const long i = to_long(ci);
    const long j = to_long(cj);
    std::array<std::array<long, 2>, 3> verts;
    if (upper) {
      verts = {{{i + 1, j + 1}, {i + 1, j}, {i, j + 1}}};
    } else {
      verts = {{{i, j}, {i + 1, j}, {i, j + 1}}};
    }
    int left = 0;
    for (const auto& v : verts) {
      if (g.cross(mpq_class(v[0]), mpq_class(v[1])).sign() > 0) ++left;
    }
    const TriangleSign sign =
        (first_triangle || left == 2) ? TriangleSign::Minus : TriangleSign::Plus;
    first_triangle = false;
    CrossingEvent ev{mid, EventKind::Triangle, std::nullopt, sign, i, j, upper};
    out.push_back(std::move(ev));
  };

  EpsRational prev = zero;
  bool have_prev = false;
  for (const PendingEdge& e : edges) {
    if (have_prev || e.param > zero) {
      emit_triangle(prev, e.param);
    }
    const EdgeSide side = g.cross(e.mid_x, e.mid_y).sign() >= 0 ? EdgeSide::NotRight : EdgeSide::Right;
    out.push_back(CrossingEvent{e.param, e.kind, side, std::nullopt, e.cell_x, e.cell_y, false});
    prev = e.param;
    have_prev = true;
  }
  emit_triangle(prev, one);
  return out;
}

mpq_class vertical_intersection_height(const ExtRational& t, unsigned long i) {
  require_interior(t, "vertical_intersection_height");
  if (i < 1 || i > t.den() + 1) {
    throw Error(ErrorKind::Range, "vertical line index " + std::to_string(i) + " outside 1.." +
                                      std::to_string(t.den() + 1));
  }
  mpq_class h(mpz_class(i - 1) * mpz_class(t.num()), mpz_class(t.den()));
  h.canonicalize();
  return h;
}

}  // namespace markov
