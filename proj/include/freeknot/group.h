#ifndef FREEKNOT_GROUP_H_
#define FREEKNOT_GROUP_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "freeknot/parity.h"

namespace freeknot {

class LevelOutOfRangeError : public Error {
 public:
  LevelOutOfRangeError(Letter z, int m);
};

class MixedMError : public Error {
 public:
  MixedMError(int a, int b);
};

// An element of G for depth m, as the endpoint of its action on the origin
// of Z^m x {0,1}: x holds x_1..x_m and eps holds x_{m+1}.
struct NormalForm {
  int m = 1;
  std::vector<std::int64_t> x;
  int eps = 0;

  static NormalForm Identity(int m);
  bool IsIdentity() const;

  friend auto operator<=>(const NormalForm&, const NormalForm&) = default;
};

std::string ToString(const NormalForm& nf);

// Which coordinates enter the parity that steers a'_k / a''_k. kIncludeFinal
// is the action of G. kExcludeFinal drops eps and is kept only as a negative
// control: it breaks a'_i a_m = a_m a''_i.
enum class ParityRule { kIncludeFinal, kExcludeFinal };

// Right multiplication by one generator. For a'_k the coordinate x_{k+1}
// moves up when x_{k+1} + ... + x_m + eps is even and down when odd; a''_k
// moves the other way; a_m toggles eps.
NormalForm ApplyLetter(NormalForm point, Letter z,
                       ParityRule rule = ParityRule::kIncludeFinal);
void ApplyLetterInPlace(NormalForm& point, Letter z,
                        ParityRule rule = ParityRule::kIncludeFinal);

NormalForm Evaluate(const Word& w);
NormalForm Evaluate(std::span<const Letter> letters, int m,
                    ParityRule rule = ParityRule::kIncludeFinal);

// Canonical word for `nf`: F first when eps = 1, then unit steps on levels
// m-1 down to 0.
Word NormalFormToWord(const NormalForm& nf);

NormalForm Multiply(const NormalForm& a, const NormalForm& b);
NormalForm Inverse(const NormalForm& a);
// by^{-1} a by; every letter is an involution, so by^{-1} = reverse(by).
NormalForm Conjugate(const NormalForm& a, const Word& by);

// Every generator of D for depth m, in token order P0 D0 P1 D1 ... F.
std::vector<Letter> Alphabet(int m);

// A defining relation lhs = rhs of G, or one of its companions obtained by
// inverting both sides.
struct Relation {
  std::string name;
  Word lhs;
  Word rhs;
};

// z z = e for every letter, the swap relations for i < j < m, the a_m
// relations for i < m, and their companions.
std::vector<Relation> Relations(int m);

// Names of relations whose two sides act differently on some sample point.
std::vector<std::string> RelationFailures(
    int m, std::span<const NormalForm> sample_points,
    ParityRule rule = ParityRule::kIncludeFinal);
bool RelationCheck(int m, std::span<const NormalForm> sample_points,
                   ParityRule rule = ParityRule::kIncludeFinal);

enum class OracleVerdict { kEqual, kUndetermined };

// Word-level equality search that never consults the action: bidirectional
// breadth-first search over words where one step cancels or inserts a
// square z z, or rewrites a length-two window by a relation. Words stay at
// most two letters longer than the longer input.
OracleVerdict RewriteOracle(const Word& w1, const Word& w2, int depth,
                            std::size_t state_cap = 2'000'000);

struct ClassClosure {
  bool closed = false;
  std::vector<NormalForm> elements;
};

// Breadth-first closure of {a} under conjugation by single letters.
ClassClosure ClassClosureOf(const NormalForm& a, std::size_t state_cap);

struct ConjugacyResult {
  enum class Kind { kYes, kNo, kUndetermined };
  Kind kind = Kind::kUndetermined;
  // For kYes: Conjugate(a, witness) == b.
  Word witness;
};

ConjugacyResult ConjugateEqual(const NormalForm& a, const NormalForm& b,
                               std::size_t state_cap);

}  // namespace freeknot

#endif  // FREEKNOT_GROUP_H_
