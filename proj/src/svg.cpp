#include "markov/svg.hpp"

#include <cmath>
#include <sstream>

#include "markov/lattice.hpp"
#include "markov/signseq.hpp"

namespace markov {

namespace {

constexpr double kCell = 60.0;
constexpr double kMargin = 30.0;

struct Frame {
  long x_min;
  long x_max;
  long y_max;

  double sx(double x) const { return kMargin + (x - static_cast<double>(x_min)) * kCell; }
  double sy(double y) const { return kMargin + (static_cast<double>(y_max) - y) * kCell; }
  double width() const { return 2 * kMargin + static_cast<double>(x_max - x_min) * kCell; }
  double height() const { return 2 * kMargin + static_cast<double>(y_max) * kCell; }
};

double approx(const EpsRational& v) { return v.a.get_d() + v.b.get_d() * kVisualEpsilon; }

std::string fmt(double v) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << v;
  return os.str();
}

void line(std::ostringstream& os, const Frame& f, double x1, double y1, double x2, double y2,
          const char* cls) {
  os << "  <line class=\"" << cls << "\" x1=\"" << fmt(f.sx(x1)) << "\" y1=\"" << fmt(f.sy(y1))
     << "\" x2=\"" << fmt(f.sx(x2)) << "\" y2=\"" << fmt(f.sy(y2)) << "\"/>\n";
}

void label(std::ostringstream& os, double px, double py, const std::string& text, const char* kind) {
  os << "  <text class=\"annotation " << kind << "\" x=\"" << fmt(px) << "\" y=\"" << fmt(py)
     << "\">" << text << "</text>\n";
}

std::string letter_text(const CrossingEvent& e) {
  char c = 'x';
  if (e.kind == EventKind::DiagonalEdge) c = 'y';
  if (e.kind == EventKind::VerticalEdge) c = 'z';
  std::string s(1, c);
  if (*e.side == EdgeSide::Right) s += "&#8242;";
  return s;
}

}  // namespace

SvgDocument render_svg(const SvgOptions& opts) {
  require_interior(opts.t, "svg");
  const SegmentSpec seg{opts.t, opts.shifted};
  const auto events = crossing_events(seg);
  const long p = static_cast<long>(opts.t.num());
  const long q = static_cast<long>(opts.t.den());
  const Frame f{opts.shifted ? -1L : 0L, q, p};
  const double x0 = opts.shifted ? -kVisualEpsilon : 0.0;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(f.width())
     << "\" height=\"" << fmt(f.height()) << "\" viewBox=\"0 0 " << fmt(f.width()) << " "
     << fmt(f.height()) << "\">\n";
  os << "  <title>slope " << opts.t.str() << (opts.shifted ? " (endpoint-completed)" : "")
     << "</title>\n";
  os << "  <style>.grid{stroke:#000;stroke-width:1}.segment{stroke:#e00;stroke-width:2}"
        ".annotation{font-family:serif;font-size:14px;fill:#e00;text-anchor:middle}</style>\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (long j = 0; j <= p; ++j) {
    line(os, f, static_cast<double>(f.x_min), static_cast<double>(j), static_cast<double>(q),
         static_cast<double>(j), "grid");
  }
  for (long i = f.x_min; i <= q; ++i) {
    line(os, f, static_cast<double>(i), 0.0, static_cast<double>(i), static_cast<double>(p), "grid");
  }
  for (long i = f.x_min; i < q; ++i) {
    for (long j = 0; j < p; ++j) {
      line(os, f, static_cast<double>(i), static_cast<double>(j + 1), static_cast<double>(i + 1),
           static_cast<double>(j), "grid");
    }
  }
  line(os, f, x0, 0.0, x0 + static_cast<double>(q), static_cast<double>(p), "segment");

  SvgDocument doc;
  auto crossing_xy = [&](const CrossingEvent& e) {
    const EpsPoint pt = point_at(seg, e.param);
    return std::pair{f.sx(approx(pt.x)), f.sy(approx(pt.y))};
  };

  if (!opts.signs) {
    for (const CrossingEvent& e : events) {
      if (!is_edge(e.kind)) continue;
      const auto [px, py] = crossing_xy(e);
      label(os, px + 8, py - 6, letter_text(e), "letter");
      ++doc.annotations;
    }
  } else {
    const auto marks = sign_marks(events, opts.params);
    std::size_t previous_event = events.size();
    int copy = 0;
    for (const SignedMark& m : marks) {
      const CrossingEvent& e = events[m.event_index];
      copy = (m.event_index == previous_event) ? copy + 1 : 0;
      previous_event = m.event_index;
      const std::string text(1, to_char(m.sign));
      if (e.kind == EventKind::Triangle) {
        // Centroid of the crossed triangle.
        const double cx = static_cast<double>(e.cell_x) + (e.upper ? 2.0 / 3.0 : 1.0 / 3.0);
        const double cy = static_cast<double>(e.cell_y) + (e.upper ? 2.0 / 3.0 : 1.0 / 3.0);
        label(os, f.sx(cx), f.sy(cy) + 5, text, "triangle-sign");
      } else {
        const auto [px, py] = crossing_xy(e);
        label(os, px + 6 + 10 * copy, py - 6, text, "edge-sign");
      }
      ++doc.annotations;
    }
  }
  os << "</svg>\n";
  doc.text = os.str();
  return doc;
}

}  // namespace markov
