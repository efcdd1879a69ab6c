#include "freeknot/json_io.h"

namespace freeknot {
namespace {

Json ChordJson(const Chord& c) { return Json::array({c.p, c.q}); }

Chord ChordFromJson(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw Error("chord must be [p, q]");
  return {j[0].get<Position>(), j[1].get<Position>()};
}

Json ChordList(const ChordDiagram& d, const std::vector<std::size_t>& idx) {
  Json out = Json::array();
  for (std::size_t i : idx) out.push_back(ChordJson(d.chord(i)));
  return out;
}

}  // namespace

Json ToJson(const ChordDiagram& d) {
  Json chords = Json::array();
  for (const Chord& c : d.chords()) chords.push_back(ChordJson(c));
  return Json{{"n", d.size()}, {"chords", std::move(chords)}};
}

ChordDiagram DiagramFromJson(const Json& j) {
  std::vector<Chord> chords;
  for (const Json& c : j.at("chords")) chords.push_back(ChordFromJson(c));
  if (j.contains("n") && j.at("n").get<std::size_t>() != chords.size()) {
    throw Error("\"n\" does not match the number of chords");
  }
  return ChordDiagram(std::move(chords));
}

Json ToJson(const Word& w) {
  Json out = Json::array();
  for (Letter z : w.letters) out.push_back(ToToken(z));
  return out;
}

Word WordFromJson(const Json& j, int m) {
  Word w{m, {}};
  for (const Json& t : j) w.letters.push_back(ParseLetter(t.get<std::string>()));
  return w;
}

Json ToJson(const NormalForm& nf) {
  return Json{{"m", nf.m}, {"x", nf.x}, {"eps", nf.eps}};
}

NormalForm NormalFormFromJson(const Json& j) {
  NormalForm nf;
  nf.m = j.at("m").get<int>();
  nf.x = j.at("x").get<std::vector<std::int64_t>>();
  nf.eps = j.at("eps").get<int>();
  if (nf.m < 1) throw InvalidMError(nf.m);
  if (nf.x.size() != static_cast<std::size_t>(nf.m)) {
    throw Error("normal form needs exactly m coordinates in \"x\"");
  }
  if (nf.eps != 0 && nf.eps != 1) throw Error("\"eps\" must be 0 or 1");
  return nf;
}

Json ToJson(const Move& move) {
  Json j{{"kind", KindName(move)}};
  if (auto* m = std::get_if<R1Add>(&move)) {
    j["gap"] = m->gap;
  } else if (auto* m = std::get_if<R1Remove>(&move)) {
    j["chord"] = ChordJson(m->chord);
  } else if (auto* m = std::get_if<R2Add>(&move)) {
    j["gap1"] = m->gap1;
    j["gap2"] = m->gap2;
    j["pattern"] = m->pattern == R2Pattern::kCrossed ? "crossed" : "nested";
  } else if (auto* m = std::get_if<R2Remove>(&move)) {
    j["chords"] = Json::array({ChordJson(m->first), ChordJson(m->second)});
  } else if (auto* m = std::get_if<R3>(&move)) {
    j["anchors"] = Json::array({m->r, m->s, m->t});
  } else if (auto* m = std::get_if<Rotate>(&move)) {
    j["steps"] = m->steps;
  }
  return j;
}

Move MoveFromJson(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "R1Add") return R1Add{j.at("gap").get<int>()};
  if (kind == "R1Remove") return R1Remove{ChordFromJson(j.at("chord"))};
  if (kind == "R2Add") {
    const std::string pattern = j.at("pattern").get<std::string>();
    if (pattern != "crossed" && pattern != "nested") {
      throw Error("unknown R2 pattern '" + pattern + "'");
    }
    return R2Add{j.at("gap1").get<int>(), j.at("gap2").get<int>(),
                 pattern == "crossed" ? R2Pattern::kCrossed
                                      : R2Pattern::kNested};
  }
  if (kind == "R2Remove") {
    const Json& c = j.at("chords");
    if (!c.is_array() || c.size() != 2) throw Error("R2Remove needs 2 chords");
    return R2Remove{ChordFromJson(c[0]), ChordFromJson(c[1])};
  }
  if (kind == "R3") {
    const Json& a = j.at("anchors");
    if (!a.is_array() || a.size() != 3) throw Error("R3 needs 3 anchors");
    return R3{a[0].get<Position>(), a[1].get<Position>(), a[2].get<Position>()};
  }
  if (kind == "Rotate") return Rotate{j.at("steps").get<int>()};
  throw Error("unknown move kind '" + kind + "'");
}

Json ToJson(const Filtration& f, const ChordDiagram& d) {
  Json levels = Json::array();
  for (int k = 0; k < f.m; ++k) {
    levels.push_back(Json{{"level", k},
                          {"prime", ChordList(d, f.prime[k])},
                          {"double_prime", ChordList(d, f.double_prime[k])}});
  }
  return Json{{"m", f.m},
              {"levels", std::move(levels)},
              {"final", ChordList(d, f.levels[f.m])}};
}

Json ToJson(const SearchReport& report) {
  Json path = Json::array();
  for (const Move& m : report.path) path.push_back(ToJson(m));
  return Json{{"outcome", ToString(report.outcome)},
              {"visited", report.visited},
              {"mode", report.kind == KnotKind::kLong ? "long" : "free"},
              {"max_states", report.max_states},
              {"max_chords", report.max_chords},
              {"start", Serialize(report.start)},
              {"endpoint", Serialize(report.endpoint)},
              {"path", std::move(path)}};
}

Json ToJson(const Verdict& verdict) {
  Json per_m = Json::array();
  for (const InvariantComparison& c : verdict.per_m) {
    Json entry{{"m", c.m},
               {"first", ToJson(c.first)},
               {"second", ToJson(c.second)},
               {"distinct", c.distinct}};
    if (c.conjugacy == ConjugacyResult::Kind::kYes) {
      entry["conjugator"] = ToJson(c.witness);
    }
    if (c.undetermined) entry["undetermined"] = true;
    per_m.push_back(std::move(entry));
  }
  return Json{{"verdict", ToString(verdict.kind)}, {"per_m", std::move(per_m)}};
}

}  // namespace freeknot
