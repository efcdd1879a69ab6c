#ifndef FREEKNOT_MOVES_H_
#define FREEKNOT_MOVES_H_

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "freeknot/diagram.h"

namespace freeknot {

class NotAnR1SiteError : public Error {
 public:
  using Error::Error;
};
class NotAnR2SiteError : public Error {
 public:
  using Error::Error;
};
class NotAnR3SiteError : public Error {
 public:
  using Error::Error;
};
class GapOutOfRangeError : public Error {
 public:
  GapOutOfRangeError(int gap, int positions);
};

// Gaps number the slots between ends: gap g sits right after position g, so
// gap 0 is just after the base point and gap 2n is the far end.

enum class R2Pattern { kCrossed, kNested };

struct R1Add {
  int gap = 0;
  friend auto operator<=>(const R1Add&, const R1Add&) = default;
};
struct R1Remove {
  Chord chord;
  friend auto operator<=>(const R1Remove&, const R1Remove&) = default;
};
// Two ends are inserted at gap1 and two at gap2 (gap1 <= gap2, both measured
// in the diagram before insertion).
struct R2Add {
  int gap1 = 0;
  int gap2 = 0;
  R2Pattern pattern = R2Pattern::kCrossed;
  friend auto operator<=>(const R2Add&, const R2Add&) = default;
};
struct R2Remove {
  Chord first;
  Chord second;
  friend auto operator<=>(const R2Remove&, const R2Remove&) = default;
};
// Identifies a completely adjoint triple by the lower ends r < s < t of its
// three adjacent end pairs.
struct R3 {
  Position r = 0;
  Position s = 0;
  Position t = 0;
  friend auto operator<=>(const R3&, const R3&) = default;
};
// Moves the base point forward past `steps` ends (backward when negative).
struct Rotate {
  int steps = 0;
  friend auto operator<=>(const Rotate&, const Rotate&) = default;
};

using Move = std::variant<R1Add, R1Remove, R2Add, R2Remove, R3, Rotate>;

std::string ToString(const Move& move);
// "R1Add", "R1Remove", ..., "Rotate".
std::string KindName(const Move& move);
// Inverse of ToString, e.g. "R2Add 0 3 nested" or "R3 1 3 5".
Move ParseMove(std::string_view text);

struct AdjointTriple {
  std::array<Chord, 3> chords;
  Position r = 0;
  Position s = 0;
  Position t = 0;

  R3 AsMove() const { return {r, s, t}; }
  friend bool operator==(const AdjointTriple&, const AdjointTriple&) = default;
};

// Chords (p, p+1), in position order.
std::vector<Chord> R1Sites(const ChordDiagram& d);
ChordDiagram R1RemoveMove(const ChordDiagram& d, const Chord& c);
ChordDiagram R1AddMove(const ChordDiagram& d, int gap);

// Pairs whose lower ends differ by one and whose upper ends differ by one.
std::vector<std::pair<Chord, Chord>> R2Sites(const ChordDiagram& d);
bool Adjacent(const Chord& a, const Chord& b);
ChordDiagram R2RemoveMove(const ChordDiagram& d, const Chord& a,
                          const Chord& b);
ChordDiagram R2AddMove(const ChordDiagram& d, int gap1, int gap2,
                       R2Pattern pattern);

std::vector<AdjointTriple> R3Sites(const ChordDiagram& d);
// Throws NotAnR3SiteError unless r, s, t anchor a completely adjoint triple.
AdjointTriple FindTriple(const ChordDiagram& d, const R3& anchors);
// Rewires the triple through the swap r<->r+1, s<->s+1, t<->t+1. Every other
// chord and every position stay put; applying it twice is the identity.
ChordDiagram R3Apply(const ChordDiagram& d, const AdjointTriple& triple);

ChordDiagram RotateBasepoint(const ChordDiagram& d, int steps);

ChordDiagram ApplyMove(const ChordDiagram& d, const Move& move);
// The move that undoes `move` when applied to ApplyMove(d, move).
Move InverseMove(const ChordDiagram& d, const Move& move);

struct MoveLimits {
  // Additions are listed only while the result stays within this many chords.
  std::size_t max_chords = 0;
  bool additions = true;
  bool rotations = true;
};

// All applicable removals, R3 moves, additions within limits and, for
// nonempty diagrams, Rotate(-1) and Rotate(+1), sorted.
std::vector<Move> EnumerateMoves(const ChordDiagram& d,
                                 const MoveLimits& limits);

}  // namespace freeknot

#endif  // FREEKNOT_MOVES_H_
