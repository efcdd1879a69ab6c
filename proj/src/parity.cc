#include "freeknot/parity.h"

#include <algorithm>
#include <charconv>

namespace freeknot {
namespace {

// Pairwise linking table for the chords of `d`.
std::vector<std::vector<char>> LinkTable(const ChordDiagram& d) {
  const std::size_t n = d.size();
  std::vector<std::vector<char>> table(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      table[i][j] = table[j][i] = Linked(d.chord(i), d.chord(j)) ? 1 : 0;
    }
  }
  return table;
}

bool OddWithin(const std::vector<std::vector<char>>& table, std::size_t p,
               const std::vector<std::size_t>& set) {
  int count = 0;
  for (std::size_t c : set) count += table[p][c];
  return count % 2 == 1;
}

}  // namespace

InvalidMError::InvalidMError(int m)
    : Error("filtration depth m must be >= 1, got " + std::to_string(m)) {}

std::string ToToken(Letter z) {
  switch (z.kind) {
    case Letter::Kind::kPrime:
      return "P" + std::to_string(z.level);
    case Letter::Kind::kDoublePrime:
      return "D" + std::to_string(z.level);
    case Letter::Kind::kFinal:
      return "F";
  }
  return "?";
}

Letter ParseLetter(std::string_view token) {
  if (token == "F") return Letter::Final();
  if (token.size() >= 2 && (token[0] == 'P' || token[0] == 'D')) {
    int level = 0;
    auto digits = token.substr(1);
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), level);
    if (ec == std::errc() && ptr == digits.data() + digits.size() &&
        level >= 0) {
      return token[0] == 'P' ? Letter::Prime(level)
                             : Letter::DoublePrime(level);
    }
  }
  throw Error("bad letter token '" + std::string(token) + "'");
}

std::string ToString(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += ToToken(w.letters[i]);
  }
  return out;
}

Word ParseWord(std::string_view text, int m) {
  Word w{m, {}};
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ') ++j;
    if (j > i) w.letters.push_back(ParseLetter(text.substr(i, j - i)));
    i = j;
  }
  return w;
}

Word Reversed(const Word& w) {
  Word r{w.m, w.letters};
  std::reverse(r.letters.begin(), r.letters.end());
  return r;
}

Word Concat(const Word& a, const Word& b) {
  Word r{a.m, a.letters};
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

Filtration ComputeFiltration(const ChordDiagram& d, int m) {
  if (m < 1) throw InvalidMError(m);
  const auto table = LinkTable(d);
  Filtration f;
  f.m = m;
  f.levels.resize(m + 1);
  f.prime.resize(m);
  f.double_prime.resize(m);
  f.letter_of_chord.assign(d.size(), Letter::Final());

  std::vector<std::size_t> rest(d.size());
  for (std::size_t i = 0; i < rest.size(); ++i) rest[i] = i;

  for (int k = 0; k < m; ++k) {
    std::vector<std::size_t> level, survivors;
    for (std::size_t p : rest) {
      (OddWithin(table, p, rest) ? level : survivors).push_back(p);
    }
    for (std::size_t p : level) {
      if (OddWithin(table, p, level)) {
        f.prime[k].push_back(p);
        f.letter_of_chord[p] = Letter::Prime(k);
      } else {
        f.double_prime[k].push_back(p);
        f.letter_of_chord[p] = Letter::DoublePrime(k);
      }
    }
    f.levels[k] = std::move(level);
    rest = std::move(survivors);
  }
  f.levels[m] = std::move(rest);
  return f;
}

ChordDiagram DeleteOdd(const ChordDiagram& d) {
  std::vector<Chord> kept;
  for (const Chord& c : d.chords()) {
    if (LinkCount(c, d.chords()) % 2 == 0) kept.push_back(c);
  }
  return Compress(kept);
}

Word WordOf(const ChordDiagram& d, const Filtration& f) {
  Word w{f.m, {}};
  w.letters.reserve(d.num_positions());
  for (Position x = 1; x <= d.num_positions(); ++x) {
    w.letters.push_back(f.letter_of_chord[d.ChordIndexAt(x)]);
  }
  return w;
}

Word WordOf(const ChordDiagram& d, int m) {
  return WordOf(d, ComputeFiltration(d, m));
}

}  // namespace freeknot
