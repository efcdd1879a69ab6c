#ifndef FREEKNOT_TESTS_ORACLES_H_
#define FREEKNOT_TESTS_ORACLES_H_

// Slow reference implementations used only by tests. None of them call into
// the library except for the plain data types.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "freeknot/diagram.h"
#include "freeknot/parity.h"

namespace freeknot::oracle {

// Two chords are linked when exactly one end of `b` lies strictly inside `a`.
bool Interleaved(const Chord& a, const Chord& b);

// Chords straight from a Gauss code string: label -> positions.
std::vector<Chord> ChordsFromCode(const std::string& code);

// Class letter of every chord, computed from the set definitions: a_k holds
// the chords odd among the survivors of stages < k, a'_k those odd within a_k.
std::map<Chord, Letter> ClassOfChord(const std::vector<Chord>& chords, int m);

// All perfect matchings of 1..2n, produced by pairing labels of every
// permutation and deduplicating.
std::set<std::vector<Chord>> AllMatchings(int n);

// Gauss code of `chords` with ends moved `steps` places toward the base
// point, relabelled by first occurrence.
std::string RotatedCode(const std::vector<Chord>& chords, int steps);

}  // namespace freeknot::oracle

#endif  // FREEKNOT_TESTS_ORACLES_H_
