#include "freeknot/moves.h"

#include <random>

#include "doctest.h"
#include "freeknot/explore.h"
#include "oracles.h"

namespace freeknot {
namespace {

ChordDiagram G(const char* code) { return ParseGaussCode(code); }

TEST_CASE("R1 sites and moves") {
  CHECK(R1Sites(G("1 1 2 2")) == std::vector<Chord>{{1, 2}, {3, 4}});
  CHECK(R1Sites(G("1 2 1 2")).empty());
  CHECK(R1Sites(ChordDiagram()).empty());
  CHECK(Serialize(R1RemoveMove(G("1 1 2 2"), {1, 2})) == "1 1");
  CHECK(Serialize(R1AddMove(ChordDiagram(), 0)) == "1 1");
  CHECK(Serialize(R1AddMove(G("1 1"), 1)) == "1 2 2 1");
  CHECK(Serialize(R1AddMove(G("1 1"), 2)) == "1 1 2 2");
  CHECK_THROWS_AS(R1RemoveMove(G("1 2 1 2"), {1, 3}), NotAnR1SiteError);
  CHECK_THROWS_AS(R1RemoveMove(G("1 1"), {3, 4}), NotAnR1SiteError);
  CHECK_THROWS_AS(R1AddMove(G("1 1"), 3), GapOutOfRangeError);
  CHECK_THROWS_AS(R1AddMove(G("1 1"), -1), GapOutOfRangeError);
}

TEST_CASE("R2 sites and moves") {
  using Site = std::pair<Chord, Chord>;
  CHECK(R2Sites(G("1 2 1 2")) == std::vector<Site>{{{1, 3}, {2, 4}}});
  CHECK(R2Sites(G("1 2 2 1")) == std::vector<Site>{{{1, 4}, {2, 3}}});
  CHECK(R2Sites(G("1 1 2 2")).empty());
  CHECK(R2RemoveMove(G("1 2 1 2"), {1, 3}, {2, 4}).empty());
  CHECK(Serialize(R2AddMove(ChordDiagram(), 0, 0, R2Pattern::kCrossed)) ==
        "1 2 1 2");
  CHECK(Serialize(R2AddMove(ChordDiagram(), 0, 0, R2Pattern::kNested)) ==
        "1 2 2 1");
  CHECK(Serialize(R2AddMove(G("1 1"), 0, 2, R2Pattern::kCrossed)) ==
        "1 2 3 3 1 2");
  CHECK(Serialize(R2AddMove(G("1 1"), 1, 1, R2Pattern::kNested)) ==
        "1 2 3 3 2 1");
  CHECK_THROWS_AS(R2RemoveMove(G("1 1 2 2"), {1, 2}, {3, 4}), NotAnR2SiteError);
  CHECK_THROWS_AS(R2AddMove(G("1 1"), 0, 3, R2Pattern::kNested),
                  GapOutOfRangeError);
}

TEST_CASE("R3 sites and the rewiring") {
  const auto sites = R3Sites(G("1 2 3 1 2 3"));
  REQUIRE(sites.size() == 1);
  CHECK(sites[0].AsMove() == R3{1, 3, 5});
  REQUIRE(R3Sites(G("1 2 2 3 3 1")).size() == 1);
  CHECK(R3Sites(G("1 2 2 3 3 1"))[0].AsMove() == R3{1, 3, 5});
  CHECK(R3Sites(G("1 2 1 2")).empty());

  CHECK(Serialize(R3Apply(G("1 2 3 1 2 3"), sites[0])) == "1 2 2 3 3 1");
  const auto back = R3Sites(G("1 2 2 3 3 1"))[0];
  CHECK(Serialize(R3Apply(G("1 2 2 3 3 1"), back)) == "1 2 3 1 2 3");

  CHECK_THROWS_AS(FindTriple(G("1 2 3 1 2 3"), R3{1, 3, 4}),
                  NotAnR3SiteError);
  CHECK_THROWS_AS(ApplyMove(G("1 1 2 2 3 3"), R3{1, 3, 5}), NotAnR3SiteError);
  CHECK_THROWS_AS(ApplyMove(G("1 2 1 2"), R3{1, 3, 5}), NotAnR3SiteError);
}

TEST_CASE("base point rotation") {
  CHECK(Serialize(RotateBasepoint(G("1 2 1 2"), 1)) == "1 2 1 2");
  CHECK(Serialize(RotateBasepoint(G("1 1 2 2"), 1)) == "1 2 2 1");
  CHECK(Serialize(RotateBasepoint(G("1 1 2 2"), -1)) == "1 2 2 1");
  const auto d = G("1 2 3 1 4 2 4 3");
  CHECK(RotateBasepoint(d, 8) == d);
  CHECK(RotateBasepoint(d, -16) == d);
  CHECK(RotateBasepoint(RotateBasepoint(d, 3), -3) == d);
  CHECK(RotateBasepoint(ChordDiagram(), 5).empty());
  for (int k = -9; k <= 9; ++k) {
    std::vector<Chord> chords(d.chords().begin(), d.chords().end());
    CHECK(Serialize(RotateBasepoint(d, k)) == oracle::RotatedCode(chords, k));
  }
}

TEST_CASE("enumerate moves") {
  const auto empty = EnumerateMoves(ChordDiagram(), {1, true, true});
  CHECK(empty == std::vector<Move>{R1Add{0}});

  const auto crossed = EnumerateMoves(G("1 2 1 2"), {4, true, true});
  CHECK(std::count(crossed.begin(), crossed.end(),
                   Move{R2Remove{{1, 3}, {2, 4}}}) == 1);
  CHECK(std::none_of(crossed.begin(), crossed.end(), [](const Move& m) {
    return std::holds_alternative<R3>(m);
  }));
  CHECK(std::count_if(crossed.begin(), crossed.end(), [](const Move& m) {
          return std::holds_alternative<R1Add>(m) ||
                 std::holds_alternative<R2Add>(m);
        }) > 2);
  CHECK(std::is_sorted(crossed.begin(), crossed.end()));

  const auto tri = EnumerateMoves(G("1 2 3 1 2 3"), {3, true, true});
  CHECK(std::count_if(tri.begin(), tri.end(), [](const Move& m) {
          return std::holds_alternative<R3>(m);
        }) == 1);
  CHECK(std::count(tri.begin(), tri.end(), Move{Rotate{1}}) == 1);
  CHECK(std::count(tri.begin(), tri.end(), Move{Rotate{-1}}) == 1);

  const auto no_add = EnumerateMoves(G("1 1"), {5, false, false});
  CHECK(no_add == std::vector<Move>{R1Remove{{1, 2}}});
}

TEST_CASE("move text round trip") {
  for (const Move& m : std::vector<Move>{
           R1Add{0}, R1Remove{{3, 4}}, R2Add{1, 4, R2Pattern::kNested},
           R2Add{0, 0, R2Pattern::kCrossed}, R2Remove{{1, 3}, {2, 4}},
           R3{1, 3, 5}, Rotate{-1}}) {
    CHECK(ParseMove(ToString(m)) == m);
  }
  CHECK_THROWS_AS(ParseMove("R2Add 0 0 sideways"), Error);
  CHECK_THROWS_AS(ParseMove("R1Add"), Error);
  CHECK_THROWS_AS(ParseMove("R1Add 1 2"), Error);
  CHECK_THROWS_AS(ParseMove("Twist 1"), Error);
}

TEST_CASE("every move has an inverse") {
  std::mt19937_64 rng(29);
  int r3_seen = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const auto d = RandomDiagram(rng() % 8, rng);
    const auto moves = EnumerateMoves(d, {d.size() + 2, true, true});
    for (const Move& m : moves) {
      const auto after = ApplyMove(d, m);
      const Move inv = InverseMove(d, m);
      CHECK(Serialize(ApplyMove(after, inv)) == Serialize(d));
      if (auto* add = std::get_if<R2Add>(&m)) {
        // The inserted pair is an R2 site of the result.
        const auto rm = std::get<R2Remove>(inv);
        const auto sites = R2Sites(after);
        CHECK(std::find(sites.begin(), sites.end(),
                        std::make_pair(rm.first, rm.second)) != sites.end());
        (void)add;
      }
      if (auto* r3 = std::get_if<R3>(&m)) {
        ++r3_seen;
        // Anchors and occupied positions are preserved.
        const auto sites = R3Sites(after);
        CHECK(std::any_of(sites.begin(), sites.end(),
                          [&](const AdjointTriple& t) {
                            return t.AsMove() == *r3;
                          }));
        CHECK(after.size() == d.size());
      }
    }
  }
  CHECK(r3_seen > 20);
}

}  // namespace
}  // namespace freeknot
