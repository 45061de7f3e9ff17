#include "markov/signseq.hpp"

#include <numeric>

namespace markov {

std::string RunLengthSequence::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(runs[i]);
  }
  return s + ")";
}

std::vector<SignedMark> sign_marks(const std::vector<CrossingEvent>& events,
                                   const GMParams& params) {
  std::vector<SignedMark> marks;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const CrossingEvent& e = events[i];
    if (e.kind == EventKind::Triangle) {
      marks.push_back({i, *e.triangle_sign == TriangleSign::Minus ? Sign::Minus : Sign::Plus});
      continue;
    }
    long copies = 0;
    switch (e.kind) {
      case EventKind::HorizontalEdge: copies = params.k_sigma(1); break;
      case EventKind::DiagonalEdge: copies = params.k_sigma(2); break;
      case EventKind::VerticalEdge: copies = params.k_sigma(3); break;
      case EventKind::Triangle: break;
    }
    const Sign s = *e.side == EdgeSide::NotRight ? Sign::Minus : Sign::Plus;
    for (long c = 0; c < copies; ++c) marks.push_back({i, s});
  }
  return marks;
}

RunLengthSequence compress(const std::vector<Sign>& signs) {
  RunLengthSequence seq;
  if (signs.empty()) return seq;
  seq.leading = signs.front();
  Sign current = signs.front();
  long run = 0;
  for (Sign s : signs) {
    if (s == current) {
      ++run;
    } else {
      seq.runs.push_back(run);
      current = s;
      run = 1;
    }
  }
  seq.runs.push_back(run);
  return seq;
}

namespace {

RunLengthSequence read_signs(const SegmentSpec& seg, const GMParams& params) {
  const auto marks = sign_marks(crossing_events(seg), params);
  std::vector<Sign> signs;
  signs.reserve(marks.size());
  for (const SignedMark& m : marks) signs.push_back(m.sign);
  return compress(signs);
}

}  // namespace

RunLengthSequence gm_sequence(const ExtRational& t, const GMParams& params) {
  return read_signs({t, false}, params);
}

RunLengthSequence strongly_admissible(const ExtRational& t, const GMParams& params) {
  return read_signs({t, true}, params);
}

long total_weight(const RunLengthSequence& seq) {
  return std::accumulate(seq.runs.begin(), seq.runs.end(), 0L);
}

}  // namespace markov
