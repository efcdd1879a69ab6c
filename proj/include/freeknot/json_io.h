#ifndef FREEKNOT_JSON_IO_H_
#define FREEKNOT_JSON_IO_H_

#include "json.hpp"

#include "freeknot/diagram.h"
#include "freeknot/explore.h"
#include "freeknot/group.h"
#include "freeknot/moves.h"
#include "freeknot/parity.h"

namespace freeknot {

using Json = nlohmann::ordered_json;

// {"n": 2, "chords": [[1, 3], [2, 4]]}
Json ToJson(const ChordDiagram& d);
ChordDiagram DiagramFromJson(const Json& j);

// ["D0", "F", ...]
Json ToJson(const Word& w);
Word WordFromJson(const Json& j, int m);

// {"m": 1, "x": [0], "eps": 0}
Json ToJson(const NormalForm& nf);
NormalForm NormalFormFromJson(const Json& j);

// {"kind": "R2Add", "gap1": 0, "gap2": 0, "pattern": "crossed"}, etc.
Json ToJson(const Move& move);
Move MoveFromJson(const Json& j);

Json ToJson(const Filtration& f, const ChordDiagram& d);
Json ToJson(const SearchReport& report);
Json ToJson(const Verdict& verdict);

}  // namespace freeknot

#endif  // FREEKNOT_JSON_IO_H_
