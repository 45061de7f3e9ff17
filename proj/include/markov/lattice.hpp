#pragma once

#include <compare>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "markov/rational.hpp"

namespace markov {

/// The value a + b·ε for a formal positive infinitesimal ε.
///
/// Ordering is lexicographic on (a, b); sign() is the sign as ε → 0⁺.
struct EpsRational {
  mpq_class a;
  mpq_class b;

  EpsRational() = default;
  EpsRational(mpq_class a_, mpq_class b_ = 0) : a(std::move(a_)), b(std::move(b_)) {
    a.canonicalize();
    b.canonicalize();
  }

  int sign() const {
    const int s = sgn(a);
    return s != 0 ? s : sgn(b);
  }

  /// Largest integer n with n <= this, as ε → 0⁺.
  mpz_class floor() const;

  friend EpsRational operator+(const EpsRational& x, const EpsRational& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend EpsRational operator-(const EpsRational& x, const EpsRational& y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend EpsRational operator*(const mpq_class& s, const EpsRational& x) {
    return {s * x.a, s * x.b};
  }
  friend bool operator==(const EpsRational& x, const EpsRational& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend std::strong_ordering operator<=>(const EpsRational& x, const EpsRational& y) {
    const int s = (x - y).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

/// A point of the plane with EpsRational coordinates.
struct EpsPoint {
  EpsRational x;
  EpsRational y;
};

enum class EventKind { HorizontalEdge, DiagonalEdge, VerticalEdge, Triangle };
enum class EdgeSide { NotRight, Right };
enum class TriangleSign { Minus, Plus };

const char* to_string(EventKind kind);

inline bool is_edge(EventKind kind) { return kind != EventKind::Triangle; }

struct CrossingEvent {
  EpsRational param;  // position along the oriented segment, in [0, 1]
  EventKind kind;
  std::optional<EdgeSide> side;                // edges only
  std::optional<TriangleSign> triangle_sign;   // triangles only
  // Lower-left-most vertex of the crossed edge, or the right-angle cell
  // origin of the crossed triangle; used for rendering.
  long cell_x = 0;
  long cell_y = 0;
  bool upper = false;  // triangles: true for the cell's upper-right triangle
};

/// The segment L_t from (0,0) to (q,p), or the endpoint-completed segment
/// shifted by (-ε, 0) when `shifted` is set.
struct SegmentSpec {
  ExtRational slope;
  bool shifted = false;
};

/// Ordered merge of crossed edges and crossed triangles.
///
/// Unshifted: every lattice edge whose interior meets the open segment.
/// Shifted: the same, plus the start edge holding (-ε, 0) first; the edge
/// holding the terminal endpoint is never recorded.
std::vector<CrossingEvent> crossing_events(const SegmentSpec& seg);

/// Height of L_t over the i-th vertical grid line x = i - 1 (1 <= i <= q + 1).
mpq_class vertical_intersection_height(const ExtRational& t, unsigned long i);

/// Point of the (possibly shifted) segment at parameter `param`.
EpsPoint point_at(const SegmentSpec& seg, const EpsRational& param);

}  // namespace markov
