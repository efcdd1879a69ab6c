#include "freeknot/moves.h"

#include <algorithm>
#include <sstream>

namespace freeknot {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string ChordText(const Chord& c) {
  return std::to_string(c.p) + " " + std::to_string(c.q);
}

void CheckGap(const ChordDiagram& d, int gap) {
  if (gap < 0 || gap > d.num_positions()) {
    throw GapOutOfRangeError(gap, d.num_positions());
  }
}

// Shifts every end at or after `from` by `by`.
Position Shift(Position x, Position from, int by) {
  return x >= from ? x + by : x;
}

}  // namespace

GapOutOfRangeError::GapOutOfRangeError(int gap, int positions)
    : Error("gap " + std::to_string(gap) + " outside 0.." +
            std::to_string(positions)) {}

std::string ToString(const Move& move) {
  return std::visit(
      Overloaded{
          [](const R1Add& m) { return "R1Add " + std::to_string(m.gap); },
          [](const R1Remove& m) { return "R1Remove " + ChordText(m.chord); },
          [](const R2Add& m) {
            return "R2Add " + std::to_string(m.gap1) + " " +
                   std::to_string(m.gap2) +
                   (m.pattern == R2Pattern::kCrossed ? " crossed" : " nested");
          },
          [](const R2Remove& m) {
            return "R2Remove " + ChordText(m.first) + " " + ChordText(m.second);
          },
          [](const R3& m) {
            return "R3 " + std::to_string(m.r) + " " + std::to_string(m.s) +
                   " " + std::to_string(m.t);
          },
          [](const Rotate& m) { return "Rotate " + std::to_string(m.steps); },
      },
      move);
}

std::string KindName(const Move& move) {
  static constexpr const char* kNames[] = {"R1Add",    "R1Remove", "R2Add",
                                           "R2Remove", "R3",       "Rotate"};
  return kNames[move.index()];
}

Move ParseMove(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string kind;
  in >> kind;
  auto fail = [&]() -> Move {
    throw Error("cannot parse move '" + std::string(text) + "'");
  };
  auto done = [&](Move m) -> Move {
    std::string extra;
    if (in.fail() || (in >> extra)) return fail();
    return m;
  };
  if (kind == "R1Add") {
    R1Add m;
    in >> m.gap;
    return done(m);
  }
  if (kind == "R1Remove") {
    R1Remove m;
    in >> m.chord.p >> m.chord.q;
    return done(m);
  }
  if (kind == "R2Add") {
    R2Add m;
    std::string pattern;
    in >> m.gap1 >> m.gap2 >> pattern;
    if (pattern == "crossed") {
      m.pattern = R2Pattern::kCrossed;
    } else if (pattern == "nested") {
      m.pattern = R2Pattern::kNested;
    } else {
      return fail();
    }
    return done(m);
  }
  if (kind == "R2Remove") {
    R2Remove m;
    in >> m.first.p >> m.first.q >> m.second.p >> m.second.q;
    return done(m);
  }
  if (kind == "R3") {
    R3 m;
    in >> m.r >> m.s >> m.t;
    return done(m);
  }
  if (kind == "Rotate") {
    Rotate m;
    in >> m.steps;
    return done(m);
  }
  return fail();
}

std::vector<Chord> R1Sites(const ChordDiagram& d) {
  std::vector<Chord> out;
  for (const Chord& c : d.chords()) {
    if (c.hi() - c.lo() == 1) out.push_back(c);
  }
  return out;
}

ChordDiagram R1RemoveMove(const ChordDiagram& d, const Chord& c) {
  std::size_t idx = d.IndexOf(c);
  if (idx == d.size() || c.hi() - c.lo() != 1) {
    throw NotAnR1SiteError("(" + std::to_string(c.p) + "," +
                           std::to_string(c.q) + ") is not an R1 site");
  }
  std::vector<Chord> kept;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i != idx) kept.push_back(d.chord(i));
  }
  return Compress(kept);
}

ChordDiagram R1AddMove(const ChordDiagram& d, int gap) {
  CheckGap(d, gap);
  std::vector<Chord> out;
  out.reserve(d.size() + 1);
  for (const Chord& c : d.chords()) {
    out.push_back({Shift(c.p, gap + 1, 2), Shift(c.q, gap + 1, 2)});
  }
  out.push_back({gap + 1, gap + 2});
  return ChordDiagram(std::move(out));
}

bool Adjacent(const Chord& a, const Chord& b) {
  auto dist = [](Position x, Position y) { return x > y ? x - y : y - x; };
  return dist(a.lo(), b.lo()) == 1 && dist(a.hi(), b.hi()) == 1;
}

std::vector<std::pair<Chord, Chord>> R2Sites(const ChordDiagram& d) {
  std::vector<std::pair<Chord, Chord>> out;
  // Chords are sorted by lower end, so a partner's lower end is the next
  // position; only that chord can qualify.
  for (const Chord& a : d.chords()) {
    if (a.lo() + 1 > d.num_positions()) continue;
    const Chord& b = d.ChordAt(a.lo() + 1);
    if (b != a && b.lo() == a.lo() + 1 && Adjacent(a, b)) {
      out.emplace_back(a, b);
    }
  }
  return out;
}

ChordDiagram R2RemoveMove(const ChordDiagram& d, const Chord& a,
                          const Chord& b) {
  std::size_t ia = d.IndexOf(a), ib = d.IndexOf(b);
  if (ia == d.size() || ib == d.size() || ia == ib || !Adjacent(a, b)) {
    throw NotAnR2SiteError("chords (" + ChordText(a) + ") and (" +
                           ChordText(b) + ") are not an R2 site");
  }
  std::vector<Chord> kept;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i != ia && i != ib) kept.push_back(d.chord(i));
  }
  return Compress(kept);
}

ChordDiagram R2AddMove(const ChordDiagram& d, int gap1, int gap2,
                       R2Pattern pattern) {
  CheckGap(d, gap1);
  CheckGap(d, gap2);
  if (gap1 > gap2) std::swap(gap1, gap2);
  std::vector<Chord> out;
  out.reserve(d.size() + 2);
  for (const Chord& c : d.chords()) {
    auto move = [&](Position x) {
      return Shift(Shift(x, gap2 + 1, 2), gap1 + 1, 2);
    };
    out.push_back({move(c.p), move(c.q)});
  }
  const Position a1 = gap1 + 1, a2 = gap1 + 2;
  const Position b1 = gap2 + 3, b2 = gap2 + 4;
  if (pattern == R2Pattern::kCrossed) {
    out.push_back({a1, b1});
    out.push_back({a2, b2});
  } else {
    out.push_back({a1, b2});
    out.push_back({a2, b1});
  }
  return ChordDiagram(std::move(out));
}

std::vector<AdjointTriple> R3Sites(const ChordDiagram& d) {
  std::vector<AdjointTriple> out;
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        std::array<Chord, 3> tri{d.chord(i), d.chord(j), d.chord(k)};
        std::array<Position, 6> ends{tri[0].p, tri[0].q, tri[1].p,
                                     tri[1].q, tri[2].p, tri[2].q};
        std::sort(ends.begin(), ends.end());
        // A sorted set splits into pairs of consecutive integers in at most
        // one way: the smallest end must pair with its successor.
        bool ok = true;
        for (int pair = 0; pair < 3 && ok; ++pair) {
          Position lo = ends[2 * pair], hi = ends[2 * pair + 1];
          ok = hi == lo + 1 && d.ChordIndexAt(lo) != d.ChordIndexAt(hi);
        }
        if (ok) out.push_back({tri, ends[0], ends[2], ends[4]});
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const AdjointTriple& a, const AdjointTriple& b) {
              return a.AsMove() < b.AsMove();
            });
  return out;
}

AdjointTriple FindTriple(const ChordDiagram& d, const R3& anchors) {
  auto fail = [&]() -> AdjointTriple {
    throw NotAnR3SiteError(ToString(Move{anchors}) +
                           " does not anchor a completely adjoint triple");
  };
  const Position r = anchors.r, s = anchors.s, t = anchors.t;
  if (!(r >= 1 && r + 1 < s && s + 1 < t && t + 1 <= d.num_positions())) {
    return fail();
  }
  std::array<std::size_t, 3> idx{};
  std::size_t found = 0;
  for (Position x : {r, r + 1, s, s + 1, t, t + 1}) {
    std::size_t c = d.ChordIndexAt(x);
    if (std::find(idx.begin(), idx.begin() + found, c) == idx.begin() + found) {
      if (found == 3) return fail();
      idx[found++] = c;
    }
  }
  if (found != 3) return fail();
  for (Position x : {r, s, t}) {
    if (d.ChordIndexAt(x) == d.ChordIndexAt(x + 1)) return fail();
  }
  std::sort(idx.begin(), idx.end());
  return {{d.chord(idx[0]), d.chord(idx[1]), d.chord(idx[2])}, r, s, t};
}

ChordDiagram R3Apply(const ChordDiagram& d, const AdjointTriple& triple) {
  const AdjointTriple checked = FindTriple(d, triple.AsMove());
  if (checked.chords != triple.chords) {
    throw NotAnR3SiteError("triple chords do not match the diagram");
  }
  auto swap_end = [&](Position x) {
    for (Position a : {triple.r, triple.s, triple.t}) {
      if (x == a) return a + 1;
      if (x == a + 1) return a;
    }
    return x;
  };
  std::vector<Chord> out;
  out.reserve(d.size());
  for (const Chord& c : d.chords()) {
    if (std::find(triple.chords.begin(), triple.chords.end(), c) ==
        triple.chords.end()) {
      out.push_back(c);
    }
  }
  for (const Chord& c : triple.chords) {
    out.push_back({swap_end(c.p), swap_end(c.q)});
  }
  return ChordDiagram(std::move(out));
}

ChordDiagram RotateBasepoint(const ChordDiagram& d, int steps) {
  const int n2 = d.num_positions();
  if (n2 == 0) return d;
  auto map = [&](Position x) {
    int shifted = (x - 1 - steps) % n2;
    if (shifted < 0) shifted += n2;
    return shifted + 1;
  };
  std::vector<Chord> out;
  out.reserve(d.size());
  for (const Chord& c : d.chords()) out.push_back({map(c.p), map(c.q)});
  return ChordDiagram(std::move(out));
}

ChordDiagram ApplyMove(const ChordDiagram& d, const Move& move) {
  return std::visit(
      Overloaded{
          [&](const R1Add& m) { return R1AddMove(d, m.gap); },
          [&](const R1Remove& m) { return R1RemoveMove(d, m.chord); },
          [&](const R2Add& m) {
            return R2AddMove(d, m.gap1, m.gap2, m.pattern);
          },
          [&](const R2Remove& m) {
            return R2RemoveMove(d, m.first, m.second);
          },
          [&](const R3& m) { return R3Apply(d, FindTriple(d, m)); },
          [&](const Rotate& m) { return RotateBasepoint(d, m.steps); },
      },
      move);
}

Move InverseMove(const ChordDiagram& d, const Move& move) {
  return std::visit(
      Overloaded{
          [&](const R1Add& m) -> Move {
            CheckGap(d, m.gap);
            return R1Remove{{m.gap + 1, m.gap + 2}};
          },
          [&](const R1Remove& m) -> Move {
            if (d.IndexOf(m.chord) == d.size() ||
                m.chord.hi() - m.chord.lo() != 1) {
              throw NotAnR1SiteError(ToString(Move{m}) + " is not applicable");
            }
            return R1Add{m.chord.lo() - 1};
          },
          [&](const R2Add& m) -> Move {
            CheckGap(d, m.gap1);
            CheckGap(d, m.gap2);
            const int g1 = std::min(m.gap1, m.gap2);
            const int g2 = std::max(m.gap1, m.gap2);
            const Position a1 = g1 + 1, a2 = g1 + 2;
            const Position b1 = g2 + 3, b2 = g2 + 4;
            if (m.pattern == R2Pattern::kCrossed) {
              return R2Remove{{a1, b1}, {a2, b2}};
            }
            return R2Remove{{a1, b2}, {a2, b1}};
          },
          [&](const R2Remove& m) -> Move {
            if (d.IndexOf(m.first) == d.size() ||
                d.IndexOf(m.second) == d.size() ||
                !Adjacent(m.first, m.second)) {
              throw NotAnR2SiteError(ToString(Move{m}) + " is not applicable");
            }
            const Chord lower =
                m.first.lo() < m.second.lo() ? m.first : m.second;
            const Position a = std::min(m.first.lo(), m.second.lo());
            const Position b = std::min(m.first.hi(), m.second.hi());
            return R2Add{a - 1, b - 3,
                         lower.hi() == b ? R2Pattern::kCrossed
                                         : R2Pattern::kNested};
          },
          [&](const R3& m) -> Move {
            FindTriple(d, m);
            return m;
          },
          [&](const Rotate& m) -> Move { return Rotate{-m.steps}; },
      },
      move);
}

std::vector<Move> EnumerateMoves(const ChordDiagram& d,
                                 const MoveLimits& limits) {
  std::vector<Move> out;
  for (const Chord& c : R1Sites(d)) out.push_back(R1Remove{c});
  for (const auto& [a, b] : R2Sites(d)) out.push_back(R2Remove{a, b});
  for (const AdjointTriple& t : R3Sites(d)) out.push_back(t.AsMove());
  const int n2 = d.num_positions();
  if (limits.additions && d.size() + 1 <= limits.max_chords) {
    for (int g = 0; g <= n2; ++g) out.push_back(R1Add{g});
  }
  if (limits.additions && d.size() + 2 <= limits.max_chords) {
    for (int g1 = 0; g1 <= n2; ++g1) {
      for (int g2 = g1; g2 <= n2; ++g2) {
        out.push_back(R2Add{g1, g2, R2Pattern::kCrossed});
        out.push_back(R2Add{g1, g2, R2Pattern::kNested});
      }
    }
  }
  if (limits.rotations && !d.empty()) {
    out.push_back(Rotate{-1});
    out.push_back(Rotate{1});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace freeknot
