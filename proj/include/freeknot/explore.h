#ifndef FREEKNOT_EXPLORE_H_
#define FREEKNOT_EXPLORE_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "freeknot/diagram.h"
#include "freeknot/group.h"
#include "freeknot/moves.h"

namespace freeknot {

// Long knots keep the base point; free knots identify all rotations.
enum class KnotKind { kLong, kFree };

// Uniform random perfect matching of 1..2n.
ChordDiagram RandomDiagram(std::size_t n, std::mt19937_64& rng);

// Generator seeded from (seed, stream) so independent trials can run in any
// order and still agree.
std::mt19937_64 TrialRng(std::uint64_t seed, std::uint64_t stream);

// Lexicographically least canonical code over all 2n base points.
std::string FreeKey(const ChordDiagram& d);

ChordDiagram Replay(const ChordDiagram& start, std::span<const Move> path);

// Applies `move_count` moves drawn uniformly from EnumerateMoves with
// additions capped at `size_cap` chords. The applied moves are appended to
// `path` when given.
ChordDiagram Scramble(const ChordDiagram& d, std::size_t move_count,
                      std::uint64_t seed, std::size_t size_cap,
                      std::vector<Move>* path = nullptr);

struct SearchReport {
  enum class Outcome { kReducedToEmpty, kMinimalFound, kExhausted };
  Outcome outcome = Outcome::kExhausted;
  std::size_t visited = 0;
  ChordDiagram start;
  // For kReducedToEmpty the empty diagram; for kMinimalFound a diagram of
  // least chord count reached; for kExhausted the best seen so far.
  ChordDiagram endpoint;
  // Replays from `start` to `endpoint`.
  std::vector<Move> path;
  std::size_t max_states = 0;
  std::size_t max_chords = 0;
  KnotKind kind = KnotKind::kLong;
};

std::string ToString(SearchReport::Outcome outcome);

// Breadth-first search over diagrams reachable by moves that never exceed
// max_chords chords. States are keyed by canonical code (long) or FreeKey
// (free); in free mode every base point of a state is expanded.
SearchReport Reduce(const ChordDiagram& d, std::size_t max_states,
                    std::size_t max_chords, KnotKind kind = KnotKind::kLong);

struct InvariantComparison {
  int m = 1;
  NormalForm first;
  NormalForm second;
  // Free mode only.
  ConjugacyResult::Kind conjugacy = ConjugacyResult::Kind::kUndetermined;
  Word witness;
  bool distinct = false;
  bool undetermined = false;
};

struct Verdict {
  enum class Kind { kSameInvariant, kCertifiedDistinct, kUndetermined };
  Kind kind = Kind::kSameInvariant;
  std::vector<InvariantComparison> per_m;
};

std::string ToString(Verdict::Kind kind);

// Never claims equivalence: kSameInvariant only says no listed m separates
// the two diagrams.
Verdict Distinguish(const ChordDiagram& d1, const ChordDiagram& d2,
                    std::span<const int> m_list, std::size_t state_cap,
                    KnotKind kind = KnotKind::kLong);

struct NontrivialSearch {
  std::vector<ChordDiagram> witnesses;
  std::size_t examined = 0;
  bool truncated = false;
};

// Scans diagrams with at most max_chords chords, one base point per free
// knot, and keeps those whose invariant at depth m is not the identity.
// Stops after state_cap diagrams.
NontrivialSearch SearchNontrivial(std::size_t max_chords, int m,
                                  std::size_t state_cap);

// Randomized checks of invariance under moves.
struct TrialReport {
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::map<std::string, std::size_t> moves_by_kind;
  std::vector<std::string> failures;

  bool ok() const { return passed == trials; }
};

// Each trial draws n uniformly in [0, max_n], a uniform random diagram and a
// uniform applicable R1/R2/R3 move (additions up to max_n + 2 chords), and
// compares normal forms for every m. With only_r3 set, trials use diagrams
// that have an R3 site and apply one of those.
TrialReport MoveInvarianceTrials(std::size_t trials, std::size_t max_n,
                                 std::span<const int> m_list,
                                 std::uint64_t seed, bool only_r3 = false);

// Each trial rotates a random diagram by one step and checks that the new
// normal form is the old one conjugated by the first letter, and that
// ConjugateEqual finds a witness.
TrialReport RotationTrials(std::size_t trials, std::size_t max_n,
                           std::span<const int> m_list, std::uint64_t seed,
                           std::size_t state_cap);

}  // namespace freeknot

#endif  // FREEKNOT_EXPLORE_H_
