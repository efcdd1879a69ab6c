#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "freeknot/diagram.h"
#include "freeknot/explore.h"
#include "freeknot/group.h"
#include "freeknot/json_io.h"
#include "freeknot/moves.h"
#include "freeknot/parity.h"

namespace py = pybind11;
using namespace freeknot;

namespace {

py::tuple NormalFormTuple(const NormalForm& nf) {
  return py::make_tuple(nf.x, nf.eps);
}

NormalForm NormalFormFrom(int m, const std::vector<std::int64_t>& x, int eps) {
  return NormalFormFromJson(Json{{"m", m}, {"x", x}, {"eps", eps}});
}

std::vector<std::string> Tokens(const Word& w) {
  std::vector<std::string> out;
  for (Letter z : w.letters) out.push_back(ToToken(z));
  return out;
}

Word WordFromTokens(const std::vector<std::string>& tokens, int m) {
  Word w{m, {}};
  for (const auto& t : tokens) w.letters.push_back(ParseLetter(t));
  return w;
}

std::string ConjugacyName(ConjugacyResult::Kind kind) {
  switch (kind) {
    case ConjugacyResult::Kind::kYes:
      return "Yes";
    case ConjugacyResult::Kind::kNo:
      return "No";
    case ConjugacyResult::Kind::kUndetermined:
      return "Undetermined";
  }
  return "?";
}

KnotKind KindFrom(const std::string& mode) {
  if (mode == "long") return KnotKind::kLong;
  if (mode == "free") return KnotKind::kFree;
  throw Error("mode must be 'long' or 'free'");
}

}  // namespace

PYBIND11_MODULE(_freeknot, m) {
  m.doc() = "Parity-filtration invariants of free knots";

  py::register_exception<Error>(m, "FreeKnotError", PyExc_ValueError);

  py::class_<ChordDiagram>(m, "ChordDiagram")
      .def(py::init([](const std::vector<std::pair<int, int>>& chords) {
             std::vector<Chord> c;
             for (auto [p, q] : chords) c.push_back({p, q});
             return ChordDiagram(std::move(c));
           }),
           py::arg("chords"))
      .def_property_readonly("n", &ChordDiagram::size)
      .def_property_readonly("chords",
                             [](const ChordDiagram& d) {
                               std::vector<std::pair<int, int>> out;
                               for (const Chord& c : d.chords()) {
                                 out.emplace_back(c.p, c.q);
                               }
                               return out;
                             })
      .def("gauss", [](const ChordDiagram& d) { return Serialize(d); })
      .def("to_json",
           [](const ChordDiagram& d) { return ToJson(d).dump(); })
      .def("__eq__", [](const ChordDiagram& a, const ChordDiagram& b) {
        return a == b;
      })
      .def("__repr__", [](const ChordDiagram& d) {
        return "ChordDiagram('" + Serialize(d) + "')";
      });

  m.def("parse_gauss_code", &ParseGaussCode, py::arg("text"));
  m.def("serialize", &Serialize, py::arg("diagram"));
  m.def(
      "linked",
      [](std::pair<int, int> a, std::pair<int, int> b) {
        return Linked({a.first, a.second}, {b.first, b.second});
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "word_of",
      [](const ChordDiagram& d, int depth) { return Tokens(WordOf(d, depth)); },
      py::arg("diagram"), py::arg("m"));
  m.def(
      "delete_odd", [](const ChordDiagram& d) { return DeleteOdd(d); },
      py::arg("diagram"));
  m.def(
      "evaluate",
      [](const std::vector<std::string>& tokens, int depth) {
        return NormalFormTuple(Evaluate(WordFromTokens(tokens, depth)));
      },
      py::arg("word"), py::arg("m"),
      "Normal form (x, eps) of a word given as letter tokens.");
  m.def(
      "invariant",
      [](const ChordDiagram& d, int depth) {
        return NormalFormTuple(Evaluate(WordOf(d, depth)));
      },
      py::arg("diagram"), py::arg("m"));
  m.def(
      "normal_form_to_word",
      [](const std::vector<std::int64_t>& x, int eps) {
        return Tokens(NormalFormToWord(
            NormalFormFrom(static_cast<int>(x.size()), x, eps)));
      },
      py::arg("x"), py::arg("eps"));
  m.def(
      "conjugate_equal",
      [](const std::vector<std::int64_t>& ax, int aeps,
         const std::vector<std::int64_t>& bx, int beps, std::size_t cap) {
        const auto r = ConjugateEqual(
            NormalFormFrom(static_cast<int>(ax.size()), ax, aeps),
            NormalFormFrom(static_cast<int>(bx.size()), bx, beps), cap);
        return py::make_tuple(ConjugacyName(r.kind), Tokens(r.witness));
      },
      py::arg("a_x"), py::arg("a_eps"), py::arg("b_x"), py::arg("b_eps"),
      py::arg("state_cap") = 10000);
  m.def(
      "relation_check",
      [](int depth, std::size_t samples, std::uint64_t seed) {
        auto rng = TrialRng(seed, 0);
        std::uniform_int_distribution<int> coord(-20, 20);
        std::vector<NormalForm> pts;
        for (std::size_t i = 0; i < samples; ++i) {
          NormalForm p = NormalForm::Identity(depth);
          for (auto& v : p.x) v = coord(rng);
          p.eps = static_cast<int>(rng() % 2);
          pts.push_back(p);
        }
        return RelationCheck(depth, pts);
      },
      py::arg("m"), py::arg("samples") = 1000, py::arg("seed") = 1);

  m.def(
      "moves",
      [](const ChordDiagram& d, std::size_t max_chords) {
        std::vector<std::string> out;
        for (const Move& mv : EnumerateMoves(d, {max_chords, true, true})) {
          out.push_back(ToString(mv));
        }
        return out;
      },
      py::arg("diagram"), py::arg("max_chords") = 0);
  m.def(
      "apply_move",
      [](const ChordDiagram& d, const std::string& move) {
        return ApplyMove(d, ParseMove(move));
      },
      py::arg("diagram"), py::arg("move"));
  m.def(
      "scramble",
      [](const ChordDiagram& d, std::size_t moves, std::uint64_t seed,
         std::size_t size_cap) { return Scramble(d, moves, seed, size_cap); },
      py::arg("diagram"), py::arg("moves"), py::arg("seed"),
      py::arg("size_cap"));
  m.def(
      "reduce",
      [](const ChordDiagram& d, std::size_t max_states, std::size_t max_chords,
         const std::string& mode) {
        return ToJson(Reduce(d, max_states, max_chords, KindFrom(mode))).dump();
      },
      py::arg("diagram"), py::arg("max_states") = 10000,
      py::arg("max_chords") = 8, py::arg("mode") = "long",
      "Search report as a JSON string.");
  m.def(
      "distinguish",
      [](const ChordDiagram& a, const ChordDiagram& b,
         const std::vector<int>& m_list, std::size_t state_cap,
         const std::string& mode) {
        return ToString(Distinguish(a, b, m_list, state_cap, KindFrom(mode)).kind);
      },
      py::arg("a"), py::arg("b"), py::arg("m_list") = std::vector<int>{1},
      py::arg("state_cap") = 10000, py::arg("mode") = "long");
  m.def(
      "search_nontrivial",
      [](std::size_t max_chords, int depth, std::size_t state_cap) {
        return SearchNontrivial(max_chords, depth, state_cap).witnesses;
      },
      py::arg("max_chords"), py::arg("m") = 1,
      py::arg("state_cap") = 1'000'000);
}
