#include "freeknot/diagram.h"

#include <algorithm>
#include <unordered_map>

namespace freeknot {

LabelCountError::LabelCountError(std::string label, int count)
    : Error("label '" + label + "' occurs " + std::to_string(count) +
            " times, expected 2"),
      label_(std::move(label)),
      count_(count) {}

EmptyTokenError::EmptyTokenError(std::size_t token_index)
    : Error("empty token at index " + std::to_string(token_index)) {}

SharedEndpointError::SharedEndpointError(const Chord& a, const Chord& b)
    : Error("chords (" + std::to_string(a.p) + "," + std::to_string(a.q) +
            ") and (" + std::to_string(b.p) + "," + std::to_string(b.q) +
            ") share an end") {}

std::string Violation::Describe() const {
  switch (kind) {
    case Kind::kPositionReused:
      return "PositionReused(" + std::to_string(value) + ")";
    case Kind::kPositionMissing:
      return "PositionMissing(" + std::to_string(value) + ")";
    case Kind::kPositionOutOfRange:
      return "PositionOutOfRange(" + std::to_string(value) + ")";
    case Kind::kDegenerateChord:
      return "DegenerateChord(" + std::to_string(value) + ")";
    case Kind::kNotNormalized:
      return "NotNormalized(" + std::to_string(value) + ")";
  }
  return "Unknown";
}

std::vector<Violation> Validate(std::span<const Chord> chords) {
  std::vector<Violation> out;
  // Positions must cover 1..N exactly once, where N is the largest end seen;
  // with no reuse and nothing missing, N is forced to equal 2n.
  Position top = 0;
  for (const Chord& c : chords) top = std::max({top, c.p, c.q});
  std::vector<int> seen(top + 1, 0);
  auto mark = [&](Position x) {
    if (x < 1) {
      out.push_back({Violation::Kind::kPositionOutOfRange, x});
      return;
    }
    if (seen[x]++ == 1) out.push_back({Violation::Kind::kPositionReused, x});
  };
  for (const Chord& c : chords) {
    if (c.p == c.q) out.push_back({Violation::Kind::kDegenerateChord, c.p});
    mark(c.p);
    if (c.q != c.p) mark(c.q);
  }
  for (Position x = 1; x <= top; ++x) {
    if (seen[x] == 0) out.push_back({Violation::Kind::kPositionMissing, x});
  }
  for (std::size_t i = 1; i < chords.size(); ++i) {
    if (chords[i - 1].lo() > chords[i].lo()) {
      out.push_back({Violation::Kind::kNotNormalized, chords[i].lo()});
    }
  }
  return out;
}

ChordDiagram::ChordDiagram(std::vector<Chord> chords) {
  for (Chord& c : chords) {
    if (c.p > c.q) std::swap(c.p, c.q);
  }
  std::sort(chords.begin(), chords.end());
  auto violations = Validate(chords);
  if (!violations.empty()) {
    std::string msg = "invalid chord diagram:";
    for (const auto& v : violations) msg += " " + v.Describe();
    throw InvalidDiagramError(msg);
  }
  chords_ = std::move(chords);
  owner_.assign(chords_.size() * 2, 0);
  for (std::size_t i = 0; i < chords_.size(); ++i) {
    owner_[chords_[i].p - 1] = i;
    owner_[chords_[i].q - 1] = i;
  }
}

std::size_t ChordDiagram::IndexOf(const Chord& c) const {
  Chord key{c.lo(), c.hi()};
  auto it = std::lower_bound(chords_.begin(), chords_.end(), key);
  if (it == chords_.end() || *it != key) return chords_.size();
  return static_cast<std::size_t>(it - chords_.begin());
}

ChordDiagram ParseGaussCode(std::string_view text) {
  std::vector<std::string> tokens;
  auto is_space = [](char ch) {
    return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r';
  };
  if (text.find(',') != std::string_view::npos) {
    // Comma-separated: every field must hold a label.
    std::size_t start = 0;
    while (true) {
      std::size_t end = text.find(',', start);
      std::string_view field = text.substr(
          start, end == std::string_view::npos ? end : end - start);
      while (!field.empty() && is_space(field.front())) field.remove_prefix(1);
      while (!field.empty() && is_space(field.back())) field.remove_suffix(1);
      if (field.empty()) throw EmptyTokenError(tokens.size());
      tokens.emplace_back(field);
      if (end == std::string_view::npos) break;
      start = end + 1;
    }
  } else {
    std::string current;
    for (char ch : text) {
      if (is_space(ch)) {
        if (!current.empty()) tokens.push_back(std::move(current));
        current.clear();
      } else {
        current.push_back(ch);
      }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
  }

  std::unordered_map<std::string, std::vector<Position>> where;
  std::vector<std::string> order;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto& slot = where[tokens[i]];
    if (slot.empty()) order.push_back(tokens[i]);
    slot.push_back(static_cast<Position>(i + 1));
  }
  std::vector<Chord> chords;
  chords.reserve(order.size());
  for (const auto& label : order) {
    const auto& pos = where[label];
    if (pos.size() != 2) {
      throw LabelCountError(label, static_cast<int>(pos.size()));
    }
    chords.push_back({pos[0], pos[1]});
  }
  return ChordDiagram(std::move(chords));
}

std::string Serialize(const ChordDiagram& d) {
  const int n2 = d.num_positions();
  std::vector<int> label(d.size(), 0);
  int next = 0;
  std::string out;
  for (Position x = 1; x <= n2; ++x) {
    std::size_t c = d.ChordIndexAt(x);
    if (label[c] == 0) label[c] = ++next;
    if (x > 1) out.push_back(' ');
    out += std::to_string(label[c]);
  }
  return out;
}

bool Linked(const Chord& a, const Chord& b) {
  if (a.Contains(b.p) || a.Contains(b.q)) throw SharedEndpointError(a, b);
  // Only the sign matters; compare factor signs to stay clear of overflow.
  int negatives = 0;
  for (Position x : {a.p, a.q}) {
    for (Position y : {b.p, b.q}) {
      if (x < y) ++negatives;
    }
  }
  return negatives % 2 == 1;
}

int LinkCount(const Chord& p, std::span<const Chord> b) {
  int count = 0;
  for (const Chord& c : b) {
    if (c == p || Chord{c.q, c.p} == p) continue;
    if (Linked(p, c)) ++count;
  }
  return count;
}

ChordDiagram Compress(std::span<const Chord> kept) {
  std::vector<Position> ends;
  ends.reserve(kept.size() * 2);
  for (const Chord& c : kept) {
    ends.push_back(c.p);
    ends.push_back(c.q);
  }
  std::sort(ends.begin(), ends.end());
  auto rank = [&](Position x) {
    return static_cast<Position>(
        std::lower_bound(ends.begin(), ends.end(), x) - ends.begin() + 1);
  };
  std::vector<Chord> out;
  out.reserve(kept.size());
  for (const Chord& c : kept) out.push_back({rank(c.p), rank(c.q)});
  return ChordDiagram(std::move(out));
}

}  // namespace freeknot
