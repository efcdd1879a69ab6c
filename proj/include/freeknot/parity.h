#ifndef FREEKNOT_PARITY_H_
#define FREEKNOT_PARITY_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "freeknot/diagram.h"

namespace freeknot {

class InvalidMError : public Error {
 public:
  explicit InvalidMError(int m);
};

// One letter of the alphabet D for depth m: a'_k (kPrime), a''_k
// (kDoublePrime) with 0 <= k < m, or a_m (kFinal). Final letters always carry
// level 0 so that equality ignores it.
struct Letter {
  enum class Kind : unsigned char { kPrime, kDoublePrime, kFinal };
  Kind kind = Kind::kFinal;
  int level = 0;

  static Letter Prime(int k) { return {Kind::kPrime, k}; }
  static Letter DoublePrime(int k) { return {Kind::kDoublePrime, k}; }
  static Letter Final() { return {Kind::kFinal, 0}; }

  bool is_final() const { return kind == Kind::kFinal; }

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// "P<k>", "D<k>" or "F".
std::string ToToken(Letter z);
Letter ParseLetter(std::string_view token);

struct Word {
  int m = 1;
  std::vector<Letter> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  friend bool operator==(const Word&, const Word&) = default;
};

std::string ToString(const Word& w);
// Parses space-separated letter tokens.
Word ParseWord(std::string_view text, int m);
Word Reversed(const Word& w);
Word Concat(const Word& a, const Word& b);

// The m-level parity filtration. Chords are referred to by their index in
// the diagram's chord list.
struct Filtration {
  int m = 1;
  // levels[k] for k < m holds a_k; levels[m] holds the survivors a_m.
  std::vector<std::vector<std::size_t>> levels;
  // prime[k] = a'_k and double_prime[k] = a''_k for k < m.
  std::vector<std::vector<std::size_t>> prime;
  std::vector<std::vector<std::size_t>> double_prime;
  // Class of every chord, indexed like the diagram's chord list.
  std::vector<Letter> letter_of_chord;
};

Filtration ComputeFiltration(const ChordDiagram& d, int m);

// Removes every chord linked with an odd number of other chords.
ChordDiagram DeleteOdd(const ChordDiagram& d);

// Reads the class letter of each end along positions 1..2n.
Word WordOf(const ChordDiagram& d, int m);
Word WordOf(const ChordDiagram& d, const Filtration& f);

}  // namespace freeknot

#endif  // FREEKNOT_PARITY_H_
