#include "freeknot/json_io.h"

#include <random>

#include "doctest.h"

namespace freeknot {
namespace {

TEST_CASE("diagram json") {
  const auto d = ParseGaussCode("1 2 1 2");
  CHECK(ToJson(d).dump() == R"({"n":2,"chords":[[1,3],[2,4]]})");
  CHECK(DiagramFromJson(Json::parse(R"({"n":0,"chords":[]})")).empty());
  CHECK_THROWS_AS(DiagramFromJson(Json::parse(R"({"n":3,"chords":[[1,2]]})")),
                  Error);
  CHECK_THROWS_AS(
      DiagramFromJson(Json::parse(R"({"n":2,"chords":[[1,5],[2,4]]})")),
      InvalidDiagramError);
}

TEST_CASE("normal form and word json") {
  const NormalForm nf{2, {-3, 4}, 1};
  CHECK(ToJson(nf).dump() == R"({"m":2,"x":[-3,4],"eps":1})");
  CHECK(NormalFormFromJson(ToJson(nf)) == nf);
  CHECK_THROWS_AS(NormalFormFromJson(Json::parse(R"({"m":2,"x":[1],"eps":0})")),
                  Error);
  CHECK_THROWS_AS(NormalFormFromJson(Json::parse(R"({"m":1,"x":[1],"eps":2})")),
                  Error);
  const Word w = ParseWord("D0 F P1", 2);
  CHECK(ToJson(w).dump() == R"(["D0","F","P1"])");
  CHECK(WordFromJson(ToJson(w), 2) == w);
}

TEST_CASE("move json") {
  CHECK(ToJson(Move{R2Add{0, 3, R2Pattern::kNested}}).dump() ==
        R"({"kind":"R2Add","gap1":0,"gap2":3,"pattern":"nested"})");
  CHECK(ToJson(Move{R3{1, 3, 5}}).dump() ==
        R"({"kind":"R3","anchors":[1,3,5]})");
  CHECK_THROWS_AS(MoveFromJson(Json::parse(R"({"kind":"Twist"})")), Error);
}

TEST_CASE("json round trips on random values") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const auto d = RandomDiagram(rng() % 9, rng);
    CHECK(DiagramFromJson(Json::parse(ToJson(d).dump())) == d);
    for (const Move& m : EnumerateMoves(d, {d.size() + 1, true, true})) {
      CHECK(MoveFromJson(Json::parse(ToJson(m).dump())) == m);
    }
    const int m = 1 + static_cast<int>(rng() % 3);
    const Word w = WordOf(d, m);
    CHECK(WordFromJson(Json::parse(ToJson(w).dump()), m) == w);
    const NormalForm nf = Evaluate(w);
    CHECK(NormalFormFromJson(Json::parse(ToJson(nf).dump())) == nf);
  }
}

TEST_CASE("report json carries a replayable path") {
  const auto report = Reduce(ParseGaussCode("1 2 3 1 2 3"), 1000, 6);
  const Json j = Json::parse(ToJson(report).dump());
  CHECK(j["outcome"] == "ReducedToEmpty");
  std::vector<Move> path;
  for (const Json& m : j["path"]) path.push_back(MoveFromJson(m));
  CHECK(Replay(ParseGaussCode(j["start"].get<std::string>()), path).empty());
}

}  // namespace
}  // namespace freeknot
