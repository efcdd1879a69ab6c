#include "freeknot/group.h"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace freeknot {
namespace {

void CheckLetter(Letter z, int m) {
  if (!z.is_final() && (z.level < 0 || z.level >= m)) {
    throw LevelOutOfRangeError(z, m);
  }
}

int Parity(const NormalForm& point, int level, ParityRule rule) {
  std::int64_t sum = rule == ParityRule::kIncludeFinal ? point.eps : 0;
  for (int s = level; s < point.m; ++s) sum += point.x[s];
  return static_cast<int>(((sum % 2) + 2) % 2);
}

// Conjugation BFS tree: element -> (parent, letter used to reach it).
struct ClosureTree {
  bool closed = false;
  std::map<NormalForm, std::pair<NormalForm, Letter>> parent;
  std::vector<NormalForm> order;

  bool Contains(const NormalForm& e) const { return parent.count(e) > 0; }

  // Letters z_1..z_k with Conjugate(root, [z_1..z_k]) == e.
  std::vector<Letter> PathTo(NormalForm e) const {
    std::vector<Letter> path;
    while (true) {
      const auto& [prev, z] = parent.at(e);
      if (prev == e) break;
      path.push_back(z);
      e = prev;
    }
    std::reverse(path.begin(), path.end());
    return path;
  }
};

ClosureTree Closure(const NormalForm& a, std::size_t state_cap) {
  ClosureTree tree;
  const auto alphabet = Alphabet(a.m);
  tree.parent.emplace(a, std::make_pair(a, Letter::Final()));
  tree.order.push_back(a);
  std::deque<NormalForm> frontier{a};
  while (!frontier.empty()) {
    NormalForm cur = frontier.front();
    frontier.pop_front();
    for (Letter z : alphabet) {
      NormalForm next = Conjugate(cur, Word{a.m, {z}});
      if (tree.Contains(next)) continue;
      if (tree.parent.size() >= state_cap) return tree;
      tree.parent.emplace(next, std::make_pair(cur, z));
      tree.order.push_back(next);
      frontier.push_back(std::move(next));
    }
  }
  tree.closed = true;
  return tree;
}

}  // namespace

LevelOutOfRangeError::LevelOutOfRangeError(Letter z, int m)
    : Error("letter " + ToToken(z) + " is out of range for m = " +
            std::to_string(m)) {}

MixedMError::MixedMError(int a, int b)
    : Error("operands built for different m: " + std::to_string(a) + " vs " +
            std::to_string(b)) {}

NormalForm NormalForm::Identity(int m) {
  if (m < 1) throw InvalidMError(m);
  return NormalForm{m, std::vector<std::int64_t>(m, 0), 0};
}

bool NormalForm::IsIdentity() const {
  return eps == 0 &&
         std::all_of(x.begin(), x.end(), [](std::int64_t v) { return v == 0; });
}

std::string ToString(const NormalForm& nf) {
  std::string out = "(";
  for (std::size_t i = 0; i < nf.x.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(nf.x[i]);
  }
  out += "; " + std::to_string(nf.eps) + ")";
  return out;
}

void ApplyLetterInPlace(NormalForm& point, Letter z, ParityRule rule) {
  CheckLetter(z, point.m);
  if (z.is_final()) {
    point.eps ^= 1;
    return;
  }
  const bool even = Parity(point, z.level, rule) == 0;
  const bool up = (z.kind == Letter::Kind::kPrime) == even;
  point.x[z.level] += up ? 1 : -1;
}

NormalForm ApplyLetter(NormalForm point, Letter z, ParityRule rule) {
  ApplyLetterInPlace(point, z, rule);
  return point;
}

NormalForm Evaluate(std::span<const Letter> letters, int m, ParityRule rule) {
  NormalForm point = NormalForm::Identity(m);
  for (Letter z : letters) ApplyLetterInPlace(point, z, rule);
  return point;
}

NormalForm Evaluate(const Word& w) { return Evaluate(w.letters, w.m); }

Word NormalFormToWord(const NormalForm& nf) {
  Word w{nf.m, {}};
  NormalForm cur = NormalForm::Identity(nf.m);
  auto step = [&](Letter z) {
    ApplyLetterInPlace(cur, z);
    w.letters.push_back(z);
  };
  if (nf.eps == 1) step(Letter::Final());
  for (int k = nf.m - 1; k >= 0; --k) {
    while (cur.x[k] != nf.x[k]) {
      const bool want_up = nf.x[k] > cur.x[k];
      const bool even = Parity(cur, k, ParityRule::kIncludeFinal) == 0;
      step(want_up == even ? Letter::Prime(k) : Letter::DoublePrime(k));
    }
  }
  return w;
}

// Acts on `a` with the word of `b` level by level. The word of `b` walks
// coordinate k monotonically with alternating letters; the same letters move
// `a` the same number of steps, in a direction fixed by the first letter and
// the parity of the partial product.
NormalForm Multiply(const NormalForm& a, const NormalForm& b) {
  if (a.m != b.m) throw MixedMError(a.m, b.m);
  NormalForm out = a;
  out.eps ^= b.eps;
  std::int64_t tail = b.eps;
  for (int k = b.m - 1; k >= 0; --k) {
    if (b.x[k] != 0) {
      const bool first_prime = (b.x[k] > 0) == (tail % 2 == 0);
      const bool out_even =
          Parity(out, k, ParityRule::kIncludeFinal) == 0;
      const std::int64_t steps = b.x[k] > 0 ? b.x[k] : -b.x[k];
      out.x[k] += first_prime == out_even ? steps : -steps;
    }
    tail += b.x[k];
  }
  return out;
}

NormalForm Inverse(const NormalForm& a) {
  return Evaluate(Reversed(NormalFormToWord(a)));
}

NormalForm Conjugate(const NormalForm& a, const Word& by) {
  if (a.m != by.m) throw MixedMError(a.m, by.m);
  NormalForm out = NormalForm::Identity(a.m);
  for (auto it = by.letters.rbegin(); it != by.letters.rend(); ++it) {
    ApplyLetterInPlace(out, *it);
  }
  out = Multiply(out, a);
  for (Letter z : by.letters) ApplyLetterInPlace(out, z);
  return out;
}

std::vector<Letter> Alphabet(int m) {
  std::vector<Letter> out;
  for (int k = 0; k < m; ++k) {
    out.push_back(Letter::Prime(k));
    out.push_back(Letter::DoublePrime(k));
  }
  out.push_back(Letter::Final());
  return out;
}

std::vector<Relation> Relations(int m) {
  std::vector<Relation> out;
  auto add = [&](Letter a, Letter b, Letter c, Letter d) {
    Word lhs{m, {a, b}};
    Word rhs{m, {c, d}};
    out.push_back({ToString(lhs) + " = " + ToString(rhs), lhs, rhs});
  };
  for (Letter z : Alphabet(m)) {
    out.push_back({ToToken(z) + " " + ToToken(z) + " = e", Word{m, {z, z}},
                   Word{m, {}}});
  }
  const auto P = Letter::Prime;
  const auto D = Letter::DoublePrime;
  const Letter F = Letter::Final();
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      add(D(i), P(j), P(j), P(i));
      add(D(i), D(j), D(j), P(i));
      // Companions: invert both sides of the two relations above.
      add(P(i), P(j), P(j), D(i));
      add(P(i), D(j), D(j), D(i));
    }
  }
  for (int i = 0; i < m; ++i) {
    add(P(i), F, F, D(i));
    add(D(i), F, F, P(i));
  }
  return out;
}

std::vector<std::string> RelationFailures(
    int m, std::span<const NormalForm> sample_points, ParityRule rule) {
  std::vector<std::string> failed;
  for (const Relation& r : Relations(m)) {
    for (const NormalForm& pt : sample_points) {
      if (pt.m != m) throw MixedMError(m, pt.m);
      NormalForm left = pt, right = pt;
      for (Letter z : r.lhs.letters) ApplyLetterInPlace(left, z, rule);
      for (Letter z : r.rhs.letters) ApplyLetterInPlace(right, z, rule);
      if (left != right) {
        failed.push_back(r.name);
        break;
      }
    }
  }
  return failed;
}

bool RelationCheck(int m, std::span<const NormalForm> sample_points,
                   ParityRule rule) {
  return RelationFailures(m, sample_points, rule).empty();
}

OracleVerdict RewriteOracle(const Word& w1, const Word& w2, int depth,
                            std::size_t state_cap) {
  if (w1.m != w2.m) throw MixedMError(w1.m, w2.m);
  const int m = w1.m;
  auto code = [&](Letter z) {
    CheckLetter(z, m);
    return static_cast<char>(z.is_final() ? 2 * m
                                          : 2 * z.level +
                                                (z.kind == Letter::Kind::kPrime
                                                     ? 0
                                                     : 1));
  };
  auto encode = [&](const Word& w) {
    std::string s;
    for (Letter z : w.letters) s.push_back(code(z));
    return s;
  };
  const std::string start = encode(w1);
  const std::string goal = encode(w2);
  if (start == goal) return OracleVerdict::kEqual;

  const int letters = 2 * m + 1;
  std::unordered_map<std::string, std::vector<std::string>> rewrites;
  for (const Relation& r : Relations(m)) {
    if (r.lhs.size() != 2 || r.rhs.size() != 2) continue;
    std::string l = encode(r.lhs), rr = encode(r.rhs);
    rewrites[l].push_back(rr);
    rewrites[rr].push_back(l);
  }
  const std::size_t max_len = std::max(start.size(), goal.size()) + 2;

  auto neighbors = [&](const std::string& s, auto&& emit) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i] == s[i + 1]) {
        emit(s.substr(0, i) + s.substr(i + 2));
      }
      auto it = rewrites.find(s.substr(i, 2));
      if (it != rewrites.end()) {
        for (const std::string& rep : it->second) {
          std::string t = s;
          t[i] = rep[0];
          t[i + 1] = rep[1];
          emit(t);
        }
      }
    }
    if (s.size() + 2 <= max_len) {
      for (std::size_t i = 0; i <= s.size(); ++i) {
        for (int c = 0; c < letters; ++c) {
          std::string t = s;
          t.insert(i, 2, static_cast<char>(c));
          emit(t);
        }
      }
    }
  };

  std::unordered_set<std::string> seen_a{start}, seen_b{goal};
  std::vector<std::string> front_a{start}, front_b{goal};
  for (int step = 0; step < depth; ++step) {
    const bool forward = front_a.size() <= front_b.size();
    auto& seen = forward ? seen_a : seen_b;
    auto& other = forward ? seen_b : seen_a;
    auto& front = forward ? front_a : front_b;
    std::vector<std::string> next;
    bool met = false;
    for (const std::string& s : front) {
      neighbors(s, [&](std::string t) {
        if (met) return;
        if (other.count(t)) {
          met = true;
          return;
        }
        if (seen.insert(t).second) next.push_back(std::move(t));
      });
      if (met) return OracleVerdict::kEqual;
      if (seen_a.size() + seen_b.size() > state_cap) {
        return OracleVerdict::kUndetermined;
      }
    }
    front = std::move(next);
    if (front.empty()) break;
  }
  return OracleVerdict::kUndetermined;
}

ClassClosure ClassClosureOf(const NormalForm& a, std::size_t state_cap) {
  ClosureTree tree = Closure(a, state_cap);
  return ClassClosure{tree.closed, std::move(tree.order)};
}

ConjugacyResult ConjugateEqual(const NormalForm& a, const NormalForm& b,
                               std::size_t state_cap) {
  if (a.m != b.m) throw MixedMError(a.m, b.m);
  using Kind = ConjugacyResult::Kind;
  ClosureTree from_a = Closure(a, state_cap);
  if (from_a.Contains(b)) return {Kind::kYes, Word{a.m, from_a.PathTo(b)}};
  if (from_a.closed) return {Kind::kNo, Word{a.m, {}}};

  ClosureTree from_b = Closure(b, state_cap);
  if (from_b.Contains(a)) {
    auto path = from_b.PathTo(a);
    return {Kind::kYes, Word{a.m, {path.rbegin(), path.rend()}}};
  }
  if (from_b.closed) return {Kind::kNo, Word{a.m, {}}};
  for (const NormalForm& e : from_b.order) {
    if (!from_a.Contains(e)) continue;
    // a -> e along path_a, then e -> b along the reversed path from b.
    Word witness{a.m, from_a.PathTo(e)};
    auto back = from_b.PathTo(e);
    witness.letters.insert(witness.letters.end(), back.rbegin(), back.rend());
    return {Kind::kYes, std::move(witness)};
  }
  return {Kind::kUndetermined, Word{a.m, {}}};
}

}  // namespace freeknot
