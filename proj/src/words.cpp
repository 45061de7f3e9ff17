#include "markov/words.hpp"

#include "markov/lattice.hpp"

namespace markov {

char to_char(Gen g) {
  switch (g) {
    case Gen::X: return 'x';
    case Gen::Y: return 'y';
    case Gen::Z: return 'z';
  }
  return '?';
}

FreeWord FreeWord::parse(std::string_view text) {
  std::vector<Letter> out;
  if (text == "1") return FreeWord{};
  for (std::size_t i = 0; i < text.size(); ++i) {
    Gen g;
    switch (text[i]) {
      case 'x': g = Gen::X; break;
      case 'y': g = Gen::Y; break;
      case 'z': g = Gen::Z; break;
      default:
        throw Error(ErrorKind::Parse, "unexpected character in word '" + std::string(text) + "'");
    }
    int exp = 1;
    if (i + 1 < text.size() && text[i + 1] == '\'') {
      exp = -1;
      ++i;
    }
    out.push_back({g, exp});
  }
  return FreeWord(std::move(out));
}

bool FreeWord::is_reduced() const {
  for (std::size_t i = 1; i < letters_.size(); ++i) {
    if (letters_[i] == letters_[i - 1].inverse()) return false;
  }
  return true;
}

std::string FreeWord::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  s.reserve(letters_.size() * 2);
  for (const Letter& l : letters_) {
    s.push_back(to_char(l.gen));
    if (l.exp < 0) s.push_back('\'');
  }
  return s;
}

bool operator==(const FreeWord& a, const FreeWord& b) {
  return reduce(a).letters_ == reduce(b).letters_;
}

FreeWord reduce(const FreeWord& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const Letter& l : w.letters()) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return FreeWord(std::move(stack));
}

FreeWord inverse(const FreeWord& w) {
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  for (Letter& l : out) l = l.inverse();
  return FreeWord(std::move(out));
}

FreeWord juxtapose(const FreeWord& u, const FreeWord& w) {
  std::vector<Letter> out = u.letters();
  out.insert(out.end(), w.letters().begin(), w.letters().end());
  return FreeWord(std::move(out));
}

FreeWord concat(const FreeWord& u, const FreeWord& w) { return reduce(juxtapose(u, w)); }

FreeWord conjugate(const FreeWord& u, const FreeWord& w) {
  return reduce(juxtapose(juxtapose(u, w), inverse(u)));
}

WordTriple WordTriple::root() {
  return {FreeWord::generator(Gen::X), FreeWord::generator(Gen::Y), FreeWord::generator(Gen::Z)};
}

std::pair<WordTriple, WordTriple> word_children(const WordTriple& v) {
  WordTriple left{v.a, conjugate(v.b, v.c), v.b};
  WordTriple right{v.b, conjugate(inverse(v.b), v.a), v.c};
  return {std::move(left), std::move(right)};
}

WordTriple word_vertex(const ExtRational& t) {
  WordTriple v = WordTriple::root();
  for (Move m : farey_path(t)) {
    auto children = word_children(v);
    v = (m == Move::Left) ? std::move(children.first) : std::move(children.second);
  }
  return v;
}

namespace {

Letter letter_for(const CrossingEvent& e) {
  Gen g = Gen::X;
  switch (e.kind) {
    case EventKind::HorizontalEdge: g = Gen::X; break;
    case EventKind::DiagonalEdge: g = Gen::Y; break;
    case EventKind::VerticalEdge: g = Gen::Z; break;
    case EventKind::Triangle:
      throw Error(ErrorKind::Malformed, "triangles carry no letter");
  }
  return {g, *e.side == EdgeSide::NotRight ? 1 : -1};
}

FreeWord read_edges(const SegmentSpec& seg) {
  std::vector<Letter> letters;
  for (const CrossingEvent& e : crossing_events(seg)) {
    if (is_edge(e.kind)) letters.push_back(letter_for(e));
  }
  return FreeWord(std::move(letters));
}

}  // namespace

FreeWord omega_geometric(const ExtRational& t) {
  if (t.is_zero()) return FreeWord::generator(Gen::X);
  if (t.is_infinite()) return FreeWord::generator(Gen::Z);
  return read_edges({t, false});
}

FreeWord omega_tree(const ExtRational& t) {
  if (t.is_zero()) return FreeWord::generator(Gen::X);
  if (t.is_infinite()) return FreeWord::generator(Gen::Z);
  return word_vertex(t).b;
}

SymmetricDecomposition symmetric_decompose(const FreeWord& w) {
  const FreeWord r = reduce(w);
  const auto& ls = r.letters();
  if (ls.size() % 2 == 0) {
    throw Error(ErrorKind::Structure, "word '" + r.str() + "' has even reduced length");
  }
  const std::size_t half = ls.size() / 2;
  for (std::size_t i = 0; i < half; ++i) {
    if (ls[ls.size() - 1 - i] != ls[i].inverse()) {
      throw Error(ErrorKind::Structure, "word '" + r.str() + "' is not of the form u a u^-1");
    }
  }
  return {FreeWord(std::vector<Letter>(ls.begin(), ls.begin() + static_cast<long>(half))), ls[half]};
}

namespace {

FreeWord flipped_conjugate(const SymmetricDecomposition& d) {
  return juxtapose(juxtapose(d.prefix, FreeWord({d.center.inverse()})), inverse(d.prefix));
}

}  // namespace

FreeWord omega_from_neighbors(const ExtRational& t) {
  require_interior(t, "omega_from_neighbors");
  const FareyTriple f = farey_triple(t);
  const bool left_boundary = f.left.is_zero();
  const bool right_boundary = f.right.is_infinite();
  if (left_boundary && right_boundary) {
    throw Error(ErrorKind::Regime, "1/1 has two boundary neighbours");
  }
  const FreeWord x = FreeWord::generator(Gen::X);
  const FreeWord y = FreeWord::generator(Gen::Y);
  const FreeWord z = FreeWord::generator(Gen::Z);
  if (left_boundary) {
    const auto ds = symmetric_decompose(omega_geometric(f.right));
    return juxtapose(juxtapose(y, z), flipped_conjugate(ds));
  }
  const auto dr = symmetric_decompose(omega_geometric(f.left));
  if (right_boundary) {
    return juxtapose(flipped_conjugate(dr), juxtapose(x, y));
  }
  const auto ds = symmetric_decompose(omega_geometric(f.right));
  return juxtapose(juxtapose(flipped_conjugate(dr), juxtapose(juxtapose(x, y), z)),
                   flipped_conjugate(ds));
}

FreeWord omega_completed(const ExtRational& t, CompletionMode mode) {
  require_interior(t, "omega_completed");
  if (mode == CompletionMode::Geometric) {
    return read_edges({t, true});
  }
  const FreeWord xyz({{Gen::X, 1}, {Gen::Y, 1}, {Gen::Z, 1}});
  return concat(xyz, inverse(omega_geometric(t)));
}

}  // namespace markov
