// Command-line front end: invariants, comparisons, move exploration and the
// self-check suites. Text goes to stdout; --json switches to one JSON
// document per invocation.

#include <cstdint>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "freeknot/diagram.h"
#include "freeknot/explore.h"
#include "freeknot/group.h"
#include "freeknot/json_io.h"
#include "freeknot/moves.h"
#include "freeknot/parity.h"

namespace freeknot {
namespace {

constexpr int kInputError = 3;

struct RunConfig {
  std::vector<int> m_list{1};
  std::uint64_t seed = 1;
  std::size_t max_states = 100000;
  std::size_t max_chords = 8;
  std::size_t move_count = 100;
  std::string mode = "long";
  bool json = false;
};

void Emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string ChordSet(const ChordDiagram& d,
                     const std::vector<std::size_t>& idx) {
  std::string out = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const Chord& c = d.chord(idx[i]);
    if (i > 0) out += ",";
    out += "(" + std::to_string(c.p) + "," + std::to_string(c.q) + ")";
  }
  return out + "}";
}

KnotKind ModeOf(const RunConfig& cfg) {
  return cfg.mode == "free" ? KnotKind::kFree : KnotKind::kLong;
}

ChordDiagram ReadDiagram(const std::optional<std::string>& gauss) {
  if (gauss) return ParseGaussCode(*gauss);
  std::string text((std::istreambuf_iterator<char>(std::cin)),
                   std::istreambuf_iterator<char>());
  return ParseGaussCode(text);
}

int CmdInvariant(const ChordDiagram& d, const RunConfig& cfg) {
  Json out{{"gauss", Serialize(d)}, {"diagram", ToJson(d)}};
  Json invariants = Json::array();
  if (!cfg.json) std::cout << "gauss: " << Serialize(d) << "\n";
  for (int m : cfg.m_list) {
    const Filtration f = ComputeFiltration(d, m);
    const Word w = WordOf(d, f);
    const NormalForm nf = Evaluate(w);
    invariants.push_back(Json{{"m", m},
                              {"filtration", ToJson(f, d)},
                              {"word", ToJson(w)},
                              {"normal_form", ToJson(nf)}});
    if (cfg.json) continue;
    std::cout << "m = " << m << "\n";
    for (int k = 0; k < m; ++k) {
      std::cout << "  P" << k << " " << ChordSet(d, f.prime[k]) << "  D" << k
                << " " << ChordSet(d, f.double_prime[k]) << "\n";
    }
    std::cout << "  F  " << ChordSet(d, f.levels[m]) << "\n";
    std::cout << "  word: " << ToString(w) << "\n";
    std::cout << "  normal form: " << ToJson(nf).dump()
              << (nf.IsIdentity() ? " (identity)" : "") << "\n";
  }
  out["invariants"] = std::move(invariants);
  if (cfg.json) Emit(out);
  return 0;
}

int CmdCompare(const std::vector<std::string>& codes, const RunConfig& cfg) {
  if (codes.size() != 2) {
    std::cerr << "compare needs exactly two --gauss codes\n";
    return kInputError;
  }
  const ChordDiagram a = ParseGaussCode(codes[0]);
  const ChordDiagram b = ParseGaussCode(codes[1]);
  const Verdict v =
      Distinguish(a, b, cfg.m_list, cfg.max_states, ModeOf(cfg));
  if (cfg.json) {
    Json j = ToJson(v);
    j["mode"] = cfg.mode;
    Emit(j);
  } else {
    for (const auto& c : v.per_m) {
      std::cout << "m = " << c.m << ": " << ToJson(c.first).dump() << " vs "
                << ToJson(c.second).dump()
                << (c.distinct       ? " distinct"
                    : c.undetermined ? " undetermined"
                                     : " same")
                << "\n";
    }
    std::cout << ToString(v.kind) << "\n";
  }
  switch (v.kind) {
    case Verdict::Kind::kSameInvariant:
      return 0;
    case Verdict::Kind::kCertifiedDistinct:
      return 1;
    case Verdict::Kind::kUndetermined:
      return 2;
  }
  return 2;
}

int CmdScramble(const ChordDiagram& d, const RunConfig& cfg) {
  std::vector<Move> path;
  const ChordDiagram out =
      Scramble(d, cfg.move_count, cfg.seed, std::max(cfg.max_chords, d.size()),
               &path);
  if (cfg.json) {
    Json moves = Json::array();
    for (const Move& m : path) moves.push_back(ToJson(m));
    Emit(Json{{"seed", cfg.seed},
              {"start", Serialize(d)},
              {"result", Serialize(out)},
              {"diagram", ToJson(out)},
              {"path", std::move(moves)}});
  } else {
    std::cout << "seed: " << cfg.seed << "\n";
    for (const Move& m : path) std::cout << ToString(m) << "\n";
    std::cout << "result: " << Serialize(out) << "\n";
  }
  return 0;
}

int CmdReduce(const ChordDiagram& d, const RunConfig& cfg) {
  const SearchReport r = Reduce(d, cfg.max_states,
                                std::max(cfg.max_chords, d.size()), ModeOf(cfg));
  if (cfg.json) {
    Emit(ToJson(r));
  } else {
    std::cout << ToString(r.outcome) << " after " << r.visited << " states\n";
    for (const Move& m : r.path) std::cout << ToString(m) << "\n";
    std::cout << "endpoint: " << Serialize(r.endpoint) << "\n";
  }
  return 0;
}

int CmdSearch(const RunConfig& cfg) {
  Json per_m = Json::array();
  for (int m : cfg.m_list) {
    const NontrivialSearch s =
        SearchNontrivial(cfg.max_chords, m, cfg.max_states);
    Json witnesses = Json::array();
    for (const auto& w : s.witnesses) {
      witnesses.push_back(Json{{"gauss", Serialize(w)},
                               {"normal_form", ToJson(Evaluate(WordOf(w, m)))}});
    }
    if (!cfg.json) {
      std::cout << "m = " << m << ": " << s.witnesses.size()
                << " witnesses among " << s.examined << " diagrams"
                << (s.truncated ? " (truncated)" : "") << "\n";
      for (const auto& w : witnesses) {
        std::cout << "  " << w["gauss"].get<std::string>() << "  "
                  << w["normal_form"].dump() << "\n";
      }
    }
    per_m.push_back(Json{{"m", m},
                         {"max_chords", cfg.max_chords},
                         {"examined", s.examined},
                         {"truncated", s.truncated},
                         {"witnesses", std::move(witnesses)}});
  }
  if (cfg.json) Emit(Json{{"search", std::move(per_m)}});
  return 0;
}

int CmdSelfcheck(const RunConfig& cfg, std::size_t samples,
                 std::size_t trials, std::size_t rotations) {
  bool relations_ok = true, control_ok = true;
  std::mt19937_64 rng = TrialRng(cfg.seed, 0xC0FFEE);
  std::uniform_int_distribution<int> coord(-20, 20);
  Json relations = Json::array();
  for (int m : cfg.m_list) {
    std::vector<NormalForm> points;
    for (std::size_t i = 0; i < samples; ++i) {
      NormalForm p = NormalForm::Identity(m);
      for (auto& v : p.x) v = coord(rng);
      p.eps = static_cast<int>(rng() % 2);
      points.push_back(std::move(p));
    }
    points.push_back(NormalForm::Identity(m));
    const auto failed = RelationFailures(m, points);
    const bool control =
        !RelationCheck(m, points, ParityRule::kExcludeFinal);
    relations_ok = relations_ok && failed.empty();
    control_ok = control_ok && control;
    relations.push_back(Json{{"m", m},
                             {"failed", failed},
                             {"negative_control_rejected", control}});
  }
  const TrialReport moves =
      MoveInvarianceTrials(trials, 8, cfg.m_list, cfg.seed);
  const TrialReport rotate =
      RotationTrials(rotations, 8, cfg.m_list, cfg.seed, cfg.max_states);
  const bool ok = relations_ok && control_ok && moves.ok() && rotate.ok();
  if (cfg.json) {
    Emit(Json{{"seed", cfg.seed},
              {"relations", std::move(relations)},
              {"invariance", {{"trials", moves.trials},
                              {"passed", moves.passed},
                              {"by_kind", moves.moves_by_kind},
                              {"failures", moves.failures}}},
              {"rotation", {{"trials", rotate.trials},
                            {"passed", rotate.passed},
                            {"failures", rotate.failures}}},
              {"ok", ok}});
  } else {
    std::cout << "relations " << (relations_ok ? "OK" : "FAILED")
              << "; invariance trials " << moves.passed << "/" << moves.trials
              << (moves.ok() ? " OK" : " FAILED") << "\n";
    std::cout << "rotation trials " << rotate.passed << "/" << rotate.trials
              << (rotate.ok() ? " OK" : " FAILED") << "; negative control "
              << (control_ok ? "rejected" : "NOT rejected") << "; seed "
              << cfg.seed << "\n";
    for (const auto& f : moves.failures) std::cout << "  " << f << "\n";
    for (const auto& f : rotate.failures) std::cout << "  " << f << "\n";
  }
  return ok ? 0 : 1;
}

int CmdMoves(const ChordDiagram& d, const RunConfig& cfg,
             const std::vector<std::string>& apply) {
  if (!apply.empty()) {
    ChordDiagram cur = d;
    for (const auto& text : apply) cur = ApplyMove(cur, ParseMove(text));
    if (cfg.json) {
      Emit(Json{{"gauss", Serialize(cur)}, {"diagram", ToJson(cur)}});
    } else {
      std::cout << Serialize(cur) << "\n";
    }
    return 0;
  }
  const auto moves =
      EnumerateMoves(d, {std::max(cfg.max_chords, d.size()), true, true});
  if (cfg.json) {
    Json list = Json::array();
    for (const Move& m : moves) list.push_back(ToJson(m));
    Emit(Json{{"gauss", Serialize(d)}, {"moves", std::move(list)}});
  } else {
    for (const Move& m : moves) std::cout << ToString(m) << "\n";
  }
  return 0;
}

}  // namespace
}  // namespace freeknot

int main(int argc, char** argv) {
  using namespace freeknot;
  CLI::App app{"Parity-filtration invariants of free knots"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::optional<std::string> gauss;
  std::vector<std::string> gauss_pair;
  std::vector<std::string> apply;
  std::size_t samples = 1000, trials = 10000, rotations = 1000;
  bool list = false;

  auto positive = CLI::PositiveNumber;
  auto add_m = [&](CLI::App* sub) {
    sub->add_option("--m", cfg.m_list, "Filtration depth (repeatable)")
        ->check(positive)
        ->take_all();
  };
  auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", cfg.json, "Emit JSON");
  };
  auto add_gauss = [&](CLI::App* sub) {
    sub->add_option("--gauss", gauss,
                    "Gauss code; read from stdin when omitted");
  };

  auto* invariant = app.add_subcommand("invariant", "Word and normal form");
  add_gauss(invariant);
  add_m(invariant);
  add_json(invariant);

  auto* compare = app.add_subcommand(
      "compare", "Compare two diagrams; exit 0 same, 1 distinct, 2 undetermined");
  compare->add_option("--gauss", gauss_pair, "Gauss code (give twice)")
      ->required()
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  compare->add_option("--mode", cfg.mode, "long or free")
      ->check(CLI::IsMember({"long", "free"}));
  compare->add_option("--max-states", cfg.max_states,
                      "Conjugacy closure cap")
      ->check(positive);
  add_m(compare);
  add_json(compare);

  auto* scramble = app.add_subcommand("scramble", "Apply random moves");
  add_gauss(scramble);
  scramble->add_option("--moves", cfg.move_count, "Number of moves");
  scramble->add_option("--seed", cfg.seed, "Random seed");
  scramble->add_option("--max-chords", cfg.max_chords, "Size cap")
      ->check(positive);
  add_json(scramble);

  auto* reduce = app.add_subcommand("reduce", "Search for a path to empty");
  add_gauss(reduce);
  reduce->add_option("--max-states", cfg.max_states, "State cap")
      ->check(positive);
  reduce->add_option("--max-chords", cfg.max_chords, "Size cap")
      ->check(positive);
  reduce->add_option("--mode", cfg.mode, "long or free")
      ->check(CLI::IsMember({"long", "free"}));
  add_json(reduce);

  auto* search = app.add_subcommand(
      "search", "Diagrams with non-identity invariant");
  search->add_option("--max-chords", cfg.max_chords, "Largest chord count");
  search->add_option("--max-states", cfg.max_states,
                     "Cap on diagrams examined")
      ->check(positive);
  add_m(search);
  add_json(search);

  auto* selfcheck = app.add_subcommand(
      "selfcheck", "Relations, move invariance and rotation suites");
  selfcheck->add_option("--samples", samples, "Points per relation check")
      ->check(positive);
  selfcheck->add_option("--trials", trials, "Move invariance trials")
      ->check(positive);
  selfcheck->add_option("--rotations", rotations, "Rotation trials")
      ->check(positive);
  selfcheck->add_option("--seed", cfg.seed, "Random seed");
  selfcheck->add_option("--max-states", cfg.max_states,
                        "Conjugacy closure cap")
      ->check(positive);
  add_m(selfcheck);
  add_json(selfcheck);

  auto* moves = app.add_subcommand("moves", "List or apply moves");
  add_gauss(moves);
  moves->add_flag("--list", list, "List applicable moves (default)");
  moves->add_option("--apply", apply, "Apply a move, e.g. \"R3 1 3 5\"")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  moves->add_option("--max-chords", cfg.max_chords, "Cap for additions");
  add_json(moves);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*invariant) return CmdInvariant(ReadDiagram(gauss), cfg);
    if (*compare) return CmdCompare(gauss_pair, cfg);
    if (*scramble) return CmdScramble(ReadDiagram(gauss), cfg);
    if (*reduce) return CmdReduce(ReadDiagram(gauss), cfg);
    if (*search) return CmdSearch(cfg);
    if (*selfcheck) return CmdSelfcheck(cfg, samples, trials, rotations);
    if (*moves) return CmdMoves(ReadDiagram(gauss), cfg, apply);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return 0;
}
