#ifndef FREEKNOT_DIAGRAM_H_
#define FREEKNOT_DIAGRAM_H_

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace freeknot {

// Positions along the line are 1-based, as in 1..2n; the base point sits
// before position 1.
using Position = int;

// A chord joins two ends. Stored with p < q once it belongs to a diagram.
struct Chord {
  Position p = 0;
  Position q = 0;

  Position lo() const { return p < q ? p : q; }
  Position hi() const { return p < q ? q : p; }
  bool Contains(Position x) const { return x == p || x == q; }

  friend auto operator<=>(const Chord&, const Chord&) = default;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A Gauss-code label did not occur exactly twice.
class LabelCountError : public Error {
 public:
  LabelCountError(std::string label, int count);
  const std::string& label() const { return label_; }
  int count() const { return count_; }

 private:
  std::string label_;
  int count_;
};

class EmptyTokenError : public Error {
 public:
  explicit EmptyTokenError(std::size_t token_index);
};

class SharedEndpointError : public Error {
 public:
  SharedEndpointError(const Chord& a, const Chord& b);
};

class InvalidDiagramError : public Error {
 public:
  using Error::Error;
};

struct Violation {
  enum class Kind {
    kPositionReused,
    kPositionMissing,
    kPositionOutOfRange,
    kDegenerateChord,
    kNotNormalized,
  };
  Kind kind;
  Position value;

  std::string Describe() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

// Checks the diagram invariants on a raw chord list: the ends cover 1..2n
// exactly once, no chord is degenerate, and chords are sorted by lower end.
std::vector<Violation> Validate(std::span<const Chord> chords);

// An unordered partition of {1..2n} into n chords. Immutable; the chord list
// is kept in canonical order (p < q, sorted by p).
class ChordDiagram {
 public:
  ChordDiagram() = default;
  // Normalizes orientation and order, then validates. Throws
  // InvalidDiagramError listing every violation.
  explicit ChordDiagram(std::vector<Chord> chords);

  std::size_t size() const { return chords_.size(); }
  bool empty() const { return chords_.empty(); }
  int num_positions() const { return static_cast<int>(2 * chords_.size()); }

  std::span<const Chord> chords() const { return chords_; }
  const Chord& chord(std::size_t i) const { return chords_[i]; }

  // Index into chords() of the chord with an end at `pos`.
  std::size_t ChordIndexAt(Position pos) const { return owner_[pos - 1]; }
  const Chord& ChordAt(Position pos) const { return chords_[owner_[pos - 1]]; }
  // Index of the chord equal to `c`, or size() if absent.
  std::size_t IndexOf(const Chord& c) const;

  friend bool operator==(const ChordDiagram& a, const ChordDiagram& b) {
    return a.chords_ == b.chords_;
  }

 private:
  std::vector<Chord> chords_;
  std::vector<std::size_t> owner_;
};

// Whitespace- or comma-separated labels; each label must occur twice.
ChordDiagram ParseGaussCode(std::string_view text);

// Canonical Gauss code, labels "1","2",... by first occurrence.
std::string Serialize(const ChordDiagram& d);

bool Linked(const Chord& a, const Chord& b);

// Number of chords in `b`, other than `p` itself, linked with `p`.
int LinkCount(const Chord& p, std::span<const Chord> b);

// Builds a diagram from a subset of some diagram's chords, renumbering the
// remaining ends order-preservingly to 1..2k.
ChordDiagram Compress(std::span<const Chord> kept);

}  // namespace freeknot

#endif  // FREEKNOT_DIAGRAM_H_
