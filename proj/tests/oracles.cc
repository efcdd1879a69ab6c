#include "oracles.h"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace freeknot::oracle {

bool Interleaved(const Chord& a, const Chord& b) {
  const int lo = std::min(a.p, a.q), hi = std::max(a.p, a.q);
  const int inside = (lo < b.p && b.p < hi) + (lo < b.q && b.q < hi);
  return inside == 1;
}

std::vector<Chord> ChordsFromCode(const std::string& code) {
  std::istringstream in(code);
  std::map<std::string, std::vector<int>> where;
  std::string tok;
  int pos = 0;
  while (in >> tok) where[tok].push_back(++pos);
  std::vector<Chord> out;
  for (auto& [label, ends] : where) out.push_back({ends.at(0), ends.at(1)});
  std::sort(out.begin(), out.end());
  return out;
}

std::map<Chord, Letter> ClassOfChord(const std::vector<Chord>& chords, int m) {
  auto odd_in = [](const Chord& p, const std::set<Chord>& set) {
    int count = 0;
    for (const Chord& c : set) {
      if (c != p && Interleaved(p, c)) ++count;
    }
    return count % 2 == 1;
  };
  std::map<Chord, Letter> out;
  std::set<Chord> removed;
  std::set<Chord> all(chords.begin(), chords.end());
  for (int k = 0; k < m; ++k) {
    std::set<Chord> complement;
    std::set_difference(all.begin(), all.end(), removed.begin(), removed.end(),
                        std::inserter(complement, complement.end()));
    std::set<Chord> level;
    for (const Chord& p : complement) {
      if (odd_in(p, complement)) level.insert(p);
    }
    for (const Chord& p : level) {
      out[p] = odd_in(p, level) ? Letter::Prime(k) : Letter::DoublePrime(k);
      removed.insert(p);
    }
  }
  for (const Chord& p : all) {
    if (!removed.count(p)) out[p] = Letter::Final();
  }
  return out;
}

std::set<std::vector<Chord>> AllMatchings(int n) {
  std::vector<int> labels(2 * n);
  for (int i = 0; i < 2 * n; ++i) labels[i] = i / 2;
  std::set<std::vector<Chord>> out;
  do {
    std::vector<std::vector<int>> ends(n);
    for (int i = 0; i < 2 * n; ++i) ends[labels[i]].push_back(i + 1);
    std::vector<Chord> chords;
    for (const auto& e : ends) chords.push_back({e[0], e[1]});
    std::sort(chords.begin(), chords.end());
    out.insert(chords);
  } while (std::next_permutation(labels.begin(), labels.end()));
  return out;
}

std::string RotatedCode(const std::vector<Chord>& chords, int steps) {
  const int n2 = static_cast<int>(2 * chords.size());
  if (n2 == 0) return "";
  std::vector<int> owner(n2);
  for (std::size_t i = 0; i < chords.size(); ++i) {
    owner[chords[i].p - 1] = owner[chords[i].q - 1] = static_cast<int>(i);
  }
  std::map<int, int> label;
  std::string out;
  for (int j = 0; j < n2; ++j) {
    int src = ((j + steps) % n2 + n2) % n2;
    int c = owner[src];
    if (!label.count(c)) label[c] = static_cast<int>(label.size()) + 1;
    if (j > 0) out += " ";
    out += std::to_string(label[c]);
  }
  return out;
}

}  // namespace freeknot::oracle
