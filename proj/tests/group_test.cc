#include "freeknot/group.h"

#include <random>

#include "doctest.h"

namespace freeknot {
namespace {

const Letter P0 = Letter::Prime(0), D0 = Letter::DoublePrime(0),
             P1 = Letter::Prime(1), F = Letter::Final();

NormalForm NF(std::vector<std::int64_t> x, int eps) {
  const int m = static_cast<int>(x.size());
  return NormalForm{m, std::move(x), eps};
}

Word W(int m, std::vector<Letter> letters) { return Word{m, std::move(letters)}; }

std::vector<NormalForm> RandomPoints(int m, int count, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coord(-12, 12);
  std::vector<NormalForm> out;
  for (int i = 0; i < count; ++i) {
    NormalForm nf = NormalForm::Identity(m);
    for (auto& v : nf.x) v = coord(rng);
    nf.eps = static_cast<int>(rng() % 2);
    out.push_back(nf);
  }
  return out;
}

Word RandomWord(int m, std::size_t len, std::mt19937_64& rng) {
  const auto alphabet = Alphabet(m);
  Word w{m, {}};
  for (std::size_t i = 0; i < len; ++i) {
    w.letters.push_back(alphabet[rng() % alphabet.size()]);
  }
  return w;
}

TEST_CASE("apply letter") {
  CHECK(ApplyLetter(NF({0}, 0), P0) == NF({1}, 0));
  CHECK(ApplyLetter(NF({0}, 1), P0) == NF({-1}, 1));
  CHECK(ApplyLetter(NF({-1, 1}, 0), D0) == NF({-2, 1}, 0));
  CHECK(ApplyLetter(ApplyLetter(NF({3, -2}, 1), F), F) == NF({3, -2}, 1));
  CHECK_THROWS_AS(ApplyLetter(NF({0}, 0), P1), LevelOutOfRangeError);
  CHECK_THROWS_AS(NormalForm::Identity(0), InvalidMError);
}

TEST_CASE("evaluate") {
  CHECK(Evaluate(W(1, {P0, F})) == NF({1}, 1));
  CHECK(Evaluate(W(1, {D0, F, D0, D0, F, D0})).IsIdentity());
  CHECK(Evaluate(W(2, {D0, P1, D0, P1, P1, D0, P1, D0})).IsIdentity());
  CHECK(Evaluate(W(3, {})) == NormalForm::Identity(3));
}

TEST_CASE("normal form to word") {
  CHECK(NormalFormToWord(NormalForm::Identity(2)).empty());
  CHECK(NormalFormToWord(NF({1}, 0)).letters == std::vector<Letter>{P0});
  CHECK(NormalFormToWord(NF({-1}, 1)).letters == std::vector<Letter>{F, P0});
}

TEST_CASE("multiply, inverse, conjugate") {
  CHECK(Multiply(NF({2}, 1), NormalForm::Identity(1)) == NF({2}, 1));
  CHECK(Multiply(NF({1}, 0), NF({1}, 0)).IsIdentity());
  CHECK(Multiply(NF({0}, 1), NF({1}, 0)) == NF({-1}, 1));
  CHECK_THROWS_AS(Multiply(NF({0}, 1), NF({0, 0}, 0)), MixedMError);

  CHECK(Inverse(NormalForm::Identity(2)).IsIdentity());
  CHECK(Inverse(NF({1}, 0)) == NF({1}, 0));
  CHECK(Inverse(NF({1}, 1)) == NF({-1}, 1));

  CHECK(Conjugate(NormalForm::Identity(1), W(1, {P0, F})).IsIdentity());
  CHECK(Conjugate(NF({1}, 0), W(1, {F})) == NF({-1}, 0));
  CHECK(Conjugate(NF({1}, 0), W(1, {F})) == Evaluate(W(1, {D0})));
  CHECK(Conjugate(NF({4, -1}, 1), W(2, {})) == NF({4, -1}, 1));
  CHECK_THROWS_AS(Conjugate(NF({1}, 0), W(2, {F})), MixedMError);
}

TEST_CASE("relation check") {
  std::mt19937_64 rng(3);
  for (int m : {1, 2, 3, 4}) {
    const auto pts = RandomPoints(m, 300, rng);
    CHECK(RelationCheck(m, pts));
  }
  CHECK(RelationCheck(1, RandomPoints(1, 100, rng)));
  // Dropping eps from the parity breaks a'_0 a_1 = a_1 a''_0 at the origin.
  const std::vector<NormalForm> origin{NormalForm::Identity(1)};
  CHECK_FALSE(RelationCheck(1, origin, ParityRule::kExcludeFinal));
  const auto failed = RelationFailures(1, origin, ParityRule::kExcludeFinal);
  CHECK(std::find(failed.begin(), failed.end(), "P0 F = F D0") !=
        failed.end());
  // m = 2 has 5 squares, 4 swaps and 4 a_m relations.
  CHECK(Relations(2).size() == 13);
}

TEST_CASE("rewrite oracle") {
  CHECK(RewriteOracle(W(1, {P0, P0}), W(1, {}), 2) == OracleVerdict::kEqual);
  CHECK(RewriteOracle(W(1, {P0, F}), W(1, {F, D0}), 2) ==
        OracleVerdict::kEqual);
  CHECK(RewriteOracle(W(1, {P0}), W(1, {D0}), 5) ==
        OracleVerdict::kUndetermined);
  CHECK(RewriteOracle(W(1, {D0, F, D0, D0, F, D0}), W(1, {}), 4) ==
        OracleVerdict::kEqual);
}

TEST_CASE("class closure") {
  const auto id = ClassClosureOf(NormalForm::Identity(1), 10);
  CHECK(id.closed);
  CHECK(id.elements == std::vector<NormalForm>{NormalForm::Identity(1)});

  // a'_0 is a reflection in the infinite dihedral subgroup, so its class is
  // infinite; every element found still has odd x_1 and eps = 0.
  const auto refl = ClassClosureOf(NF({1}, 0), 50);
  CHECK_FALSE(refl.closed);
  CHECK(refl.elements.size() == 50);
  CHECK(std::find(refl.elements.begin(), refl.elements.end(), NF({-1}, 0)) !=
        refl.elements.end());
  CHECK(std::find(refl.elements.begin(), refl.elements.end(), NF({-3}, 0)) !=
        refl.elements.end());
  for (const auto& e : refl.elements) {
    CHECK(e.eps == 0);
    CHECK(e.x[0] % 2 != 0);
  }

  // The translation a'_0 a''_0 has a two-element class.
  const auto trans = ClassClosureOf(NF({2}, 0), 100);
  CHECK(trans.closed);
  CHECK(trans.elements.size() == 2);

  const auto tiny = ClassClosureOf(NF({7, -3}, 1), 3);
  CHECK_FALSE(tiny.closed);
}

TEST_CASE("conjugate equal") {
  using Kind = ConjugacyResult::Kind;
  auto r = ConjugateEqual(NormalForm::Identity(1), NormalForm::Identity(1), 10);
  CHECK(r.kind == Kind::kYes);
  CHECK(r.witness.empty());
  CHECK(ConjugateEqual(NormalForm::Identity(1), NF({1}, 0), 10).kind ==
        Kind::kNo);
  CHECK(ConjugateEqual(NF({1}, 0), NormalForm::Identity(1), 10).kind ==
        Kind::kNo);
  r = ConjugateEqual(NF({1}, 0), NF({-1}, 0), 100);
  CHECK(r.kind == Kind::kYes);
  CHECK(r.witness.letters == std::vector<Letter>{F});
  // Translations of different length are not conjugate.
  CHECK(ConjugateEqual(NF({2}, 0), NF({4}, 0), 100).kind == Kind::kNo);
  // Reflections with x_1 = 1 and x_1 = 2 differ in parity of length.
  CHECK(ConjugateEqual(NF({1}, 0), NF({2}, 0), 100).kind == Kind::kNo);
  CHECK_THROWS_AS(ConjugateEqual(NF({1}, 0), NF({1, 0}, 0), 10), MixedMError);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 3);
    const NormalForm a = Evaluate(RandomWord(m, rng() % 7, rng));
    const Word by = RandomWord(m, rng() % 4, rng);
    const NormalForm b = Conjugate(a, by);
    const auto found = ConjugateEqual(a, b, 5000);
    REQUIRE(found.kind == Kind::kYes);
    CHECK(Conjugate(a, found.witness) == b);
  }
}

TEST_CASE("multiply and conjugate agree with letter-by-letter action") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<std::int64_t> coord(-40, 40);
  for (int trial = 0; trial < 2000; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 4);
    NormalForm a = NormalForm::Identity(m), b = NormalForm::Identity(m);
    for (int k = 0; k < m; ++k) {
      a.x[k] = coord(rng);
      b.x[k] = coord(rng);
    }
    a.eps = static_cast<int>(rng() % 2);
    b.eps = static_cast<int>(rng() % 2);
    NormalForm slow = a;
    for (Letter z : NormalFormToWord(b).letters) ApplyLetterInPlace(slow, z);
    CHECK(Multiply(a, b) == slow);

    const Word by = RandomWord(m, rng() % 5, rng);
    const Word full = Concat(Concat(Reversed(by), NormalFormToWord(a)), by);
    CHECK(Conjugate(a, by) == Evaluate(full));
  }
}

TEST_CASE("group properties on random data") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 4);
    const auto alphabet = Alphabet(m);
    for (const auto& pt : RandomPoints(m, 3, rng)) {
      for (Letter z : alphabet) CHECK(ApplyLetter(ApplyLetter(pt, z), z) == pt);
      CHECK(Evaluate(NormalFormToWord(pt)) == pt);
      CHECK(Multiply(pt, Inverse(pt)).IsIdentity());
      CHECK(Multiply(Inverse(pt), pt).IsIdentity());
    }
    const Word w = RandomWord(m, rng() % 12, rng);
    const NormalForm nf = Evaluate(w);
    std::int64_t sum = nf.eps;
    for (auto v : nf.x) sum += v;
    CHECK(((sum % 2) + 2) % 2 == static_cast<std::int64_t>(w.size() % 2));
    CHECK(Evaluate(Concat(w, Reversed(w))).IsIdentity());

    const auto a = Evaluate(RandomWord(m, rng() % 6, rng));
    const auto b = Evaluate(RandomWord(m, rng() % 6, rng));
    const auto c = Evaluate(RandomWord(m, rng() % 6, rng));
    CHECK(Multiply(Multiply(a, b), c) == Multiply(a, Multiply(b, c)));
    CHECK(Multiply(a, b) == Evaluate(Concat(NormalFormToWord(a),
                                            NormalFormToWord(b))));

    // Words with the same endpoint act identically everywhere.
    const Word w2 = Concat(NormalFormToWord(nf), RandomWord(m, 0, rng));
    for (const auto& pt : RandomPoints(m, 20, rng)) {
      NormalForm left = pt, right = pt;
      for (Letter z : w.letters) ApplyLetterInPlace(left, z);
      for (Letter z : w2.letters) ApplyLetterInPlace(right, z);
      CHECK(left == right);
    }
  }
}

}  // namespace
}  // namespace freeknot
