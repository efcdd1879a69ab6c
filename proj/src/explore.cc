#include "freeknot/explore.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "freeknot/parity.h"

namespace freeknot {
namespace {

struct Node {
  ChordDiagram diagram;
  std::size_t parent;
  std::vector<Move> steps;  // from the parent's diagram to this one
};

std::vector<Move> PathTo(const std::vector<Node>& nodes, std::size_t i) {
  std::vector<std::vector<Move>> chunks;
  while (i != 0) {
    chunks.push_back(nodes[i].steps);
    i = nodes[i].parent;
  }
  std::vector<Move> path;
  for (auto it = chunks.rbegin(); it != chunks.rend(); ++it) {
    path.insert(path.end(), it->begin(), it->end());
  }
  return path;
}

template <class T>
const T& Pick(const std::vector<T>& items, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> dist(0, items.size() - 1);
  return items[dist(rng)];
}

}  // namespace

ChordDiagram RandomDiagram(std::size_t n, std::mt19937_64& rng) {
  std::vector<Position> ends(2 * n);
  std::iota(ends.begin(), ends.end(), 1);
  std::shuffle(ends.begin(), ends.end(), rng);
  std::vector<Chord> chords;
  chords.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    chords.push_back({ends[2 * i], ends[2 * i + 1]});
  }
  return ChordDiagram(std::move(chords));
}

std::mt19937_64 TrialRng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

std::string FreeKey(const ChordDiagram& d) {
  std::string best = Serialize(d);
  for (int k = 1; k < d.num_positions(); ++k) {
    best = std::min(best, Serialize(RotateBasepoint(d, k)));
  }
  return best;
}

ChordDiagram Replay(const ChordDiagram& start, std::span<const Move> path) {
  ChordDiagram d = start;
  for (const Move& m : path) d = ApplyMove(d, m);
  return d;
}

ChordDiagram Scramble(const ChordDiagram& d, std::size_t move_count,
                      std::uint64_t seed, std::size_t size_cap,
                      std::vector<Move>* path) {
  std::mt19937_64 rng = TrialRng(seed, 0);
  ChordDiagram cur = d;
  const MoveLimits limits{size_cap, true, true};
  for (std::size_t i = 0; i < move_count; ++i) {
    auto moves = EnumerateMoves(cur, limits);
    if (moves.empty()) break;
    const Move& m = Pick(moves, rng);
    cur = ApplyMove(cur, m);
    if (path != nullptr) path->push_back(m);
  }
  return cur;
}

std::string ToString(SearchReport::Outcome outcome) {
  switch (outcome) {
    case SearchReport::Outcome::kReducedToEmpty:
      return "ReducedToEmpty";
    case SearchReport::Outcome::kMinimalFound:
      return "MinimalFound";
    case SearchReport::Outcome::kExhausted:
      return "Exhausted";
  }
  return "?";
}

SearchReport Reduce(const ChordDiagram& d, std::size_t max_states,
                    std::size_t max_chords, KnotKind kind) {
  SearchReport report;
  report.start = d;
  report.endpoint = d;
  report.max_states = max_states;
  report.max_chords = max_chords;
  report.kind = kind;

  auto key = [&](const ChordDiagram& x) {
    return kind == KnotKind::kLong ? Serialize(x) : FreeKey(x);
  };
  std::vector<Node> nodes{{d, 0, {}}};
  std::unordered_map<std::string, std::size_t> seen{{key(d), 0}};
  std::size_t best = 0;
  auto finish = [&](SearchReport::Outcome outcome, std::size_t at) {
    report.outcome = outcome;
    report.visited = nodes.size();
    report.endpoint = nodes[at].diagram;
    report.path = PathTo(nodes, at);
    return report;
  };
  if (d.empty()) return finish(SearchReport::Outcome::kReducedToEmpty, 0);

  const MoveLimits limits{max_chords, true, false};
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const ChordDiagram cur = nodes[head].diagram;
    const int rotations = kind == KnotKind::kLong ? 1 : std::max(1, cur.num_positions());
    for (int k = 0; k < rotations; ++k) {
      const ChordDiagram base = k == 0 ? cur : RotateBasepoint(cur, k);
      for (const Move& m : EnumerateMoves(base, limits)) {
        ChordDiagram next = ApplyMove(base, m);
        if (next.size() > max_chords) continue;
        auto [it, fresh] = seen.emplace(key(next), nodes.size());
        if (!fresh) continue;
        std::vector<Move> steps;
        if (k != 0) steps.push_back(Rotate{k});
        steps.push_back(m);
        const bool empty = next.empty();
        const std::size_t chords = next.size();
        nodes.push_back({std::move(next), head, std::move(steps)});
        if (empty) {
          return finish(SearchReport::Outcome::kReducedToEmpty,
                        nodes.size() - 1);
        }
        if (chords < nodes[best].diagram.size()) best = nodes.size() - 1;
        if (nodes.size() >= max_states) {
          return finish(SearchReport::Outcome::kExhausted, best);
        }
      }
    }
  }
  return finish(SearchReport::Outcome::kMinimalFound, best);
}

std::string ToString(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::kSameInvariant:
      return "SameInvariant";
    case Verdict::Kind::kCertifiedDistinct:
      return "CertifiedDistinct";
    case Verdict::Kind::kUndetermined:
      return "Undetermined";
  }
  return "?";
}

Verdict Distinguish(const ChordDiagram& d1, const ChordDiagram& d2,
                    std::span<const int> m_list, std::size_t state_cap,
                    KnotKind kind) {
  Verdict verdict;
  bool any_distinct = false, any_undetermined = false;
  for (int m : m_list) {
    InvariantComparison cmp;
    cmp.m = m;
    cmp.first = Evaluate(WordOf(d1, m));
    cmp.second = Evaluate(WordOf(d2, m));
    cmp.witness = Word{m, {}};
    if (kind == KnotKind::kLong) {
      cmp.distinct = cmp.first != cmp.second;
    } else {
      ConjugacyResult r = ConjugateEqual(cmp.first, cmp.second, state_cap);
      cmp.conjugacy = r.kind;
      cmp.witness = std::move(r.witness);
      cmp.distinct = r.kind == ConjugacyResult::Kind::kNo;
      cmp.undetermined = r.kind == ConjugacyResult::Kind::kUndetermined;
    }
    any_distinct = any_distinct || cmp.distinct;
    any_undetermined = any_undetermined || cmp.undetermined;
    verdict.per_m.push_back(std::move(cmp));
  }
  verdict.kind = any_distinct       ? Verdict::Kind::kCertifiedDistinct
                 : any_undetermined ? Verdict::Kind::kUndetermined
                                    : Verdict::Kind::kSameInvariant;
  return verdict;
}

NontrivialSearch SearchNontrivial(std::size_t max_chords, int m,
                                  std::size_t state_cap) {
  NontrivialSearch out;
  for (std::size_t n = 0; n <= max_chords && !out.truncated; ++n) {
    const int n2 = static_cast<int>(2 * n);
    std::vector<Position> partner(n2 + 1, 0);
    std::vector<Chord> chords;
    // Pairs the first free end with each later free end, recursively, which
    // visits every perfect matching of 1..2n once.
    auto visit = [&](auto&& self) -> void {
      if (out.truncated) return;
      Position first = 1;
      while (first <= n2 && partner[first] != 0) ++first;
      if (first > n2) {
        if (out.examined >= state_cap) {
          out.truncated = true;
          return;
        }
        ++out.examined;
        ChordDiagram d(chords);
        if (Serialize(d) != FreeKey(d)) return;
        if (!Evaluate(WordOf(d, m)).IsIdentity()) out.witnesses.push_back(d);
        return;
      }
      for (Position second = first + 1; second <= n2; ++second) {
        if (partner[second] != 0) continue;
        partner[first] = second;
        partner[second] = first;
        chords.push_back({first, second});
        self(self);
        chords.pop_back();
        partner[first] = partner[second] = 0;
      }
    };
    visit(visit);
  }
  return out;
}

TrialReport MoveInvarianceTrials(std::size_t trials, std::size_t max_n,
                                 std::span<const int> m_list,
                                 std::uint64_t seed, bool only_r3) {
  TrialReport report;
  const MoveLimits limits{max_n + 2, true, false};
  std::uint64_t stream = 0;
  while (report.trials < trials) {
    std::mt19937_64 rng = TrialRng(seed, stream++);
    std::uniform_int_distribution<std::size_t> size_dist(only_r3 ? 3 : 0,
                                                         max_n);
    const ChordDiagram d = RandomDiagram(size_dist(rng), rng);
    std::vector<Move> moves;
    if (only_r3) {
      for (const AdjointTriple& t : R3Sites(d)) moves.push_back(t.AsMove());
    } else {
      moves = EnumerateMoves(d, limits);
    }
    if (moves.empty()) continue;
    const Move& move = Pick(moves, rng);
    const ChordDiagram after = ApplyMove(d, move);
    ++report.trials;
    ++report.moves_by_kind[KindName(move)];
    bool ok = true;
    for (int m : m_list) {
      if (Evaluate(WordOf(d, m)) != Evaluate(WordOf(after, m))) {
        ok = false;
        if (report.failures.size() < 10) {
          report.failures.push_back("m=" + std::to_string(m) + " \"" +
                                    Serialize(d) + "\" " + ToString(move));
        }
      }
    }
    if (ok) ++report.passed;
  }
  return report;
}

TrialReport RotationTrials(std::size_t trials, std::size_t max_n,
                           std::span<const int> m_list, std::uint64_t seed,
                           std::size_t state_cap) {
  TrialReport report;
  for (std::size_t i = 0; i < trials; ++i) {
    std::mt19937_64 rng = TrialRng(seed, i);
    std::uniform_int_distribution<std::size_t> size_dist(1, max_n);
    const ChordDiagram d = RandomDiagram(size_dist(rng), rng);
    const ChordDiagram rotated = RotateBasepoint(d, 1);
    ++report.trials;
    ++report.moves_by_kind["Rotate"];
    bool ok = true;
    for (int m : m_list) {
      const Word w = WordOf(d, m);
      const NormalForm before = Evaluate(w);
      const NormalForm after = Evaluate(WordOf(rotated, m));
      const Word first{m, {w.letters.front()}};
      const ConjugacyResult found = ConjugateEqual(before, after, state_cap);
      const bool pass = after == Conjugate(before, first) &&
                        found.kind == ConjugacyResult::Kind::kYes &&
                        Conjugate(before, found.witness) == after &&
                        found.witness.size() <= 1;
      if (!pass) {
        ok = false;
        if (report.failures.size() < 10) {
          report.failures.push_back("m=" + std::to_string(m) + " \"" +
                                    Serialize(d) + "\"");
        }
      }
    }
    if (ok) ++report.passed;
  }
  return report;
}

}  // namespace freeknot
