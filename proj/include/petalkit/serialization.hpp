#pragma once

// JSON encodings shared by the C API and the command-line tool.
//
//   petal word    {"kind":"petal","word":[0,3,1,4,2]}   (bare arrays accepted)
//   stem word     {"kind":"stem","word":[2,4,1,5,3,0]}
//   moves         {"type":"add","rotation":r,"pos":j,"m":m,"orient":"asc"|"desc"}
//                 {"type":"del","rotation":r,"pos":k}
//                 {"type":"xchg","rotation":r,"side":"L"|"R","m":m,"w":w}
//   move script   [[initial word], move, move, ...]
//   move path     {"script":[...], "steps":[[...], ...], "end":[...]}
//                 ("steps" and "end" optional when reading)

#include "json.hpp"

#include "petalkit/core.hpp"
#include "petalkit/diagram.hpp"
#include "petalkit/invariants.hpp"
#include "petalkit/moves.hpp"
#include "petalkit/search.hpp"

namespace petalkit {

using json = nlohmann::json;

json to_json(const PetalPermutation& sigma);
json to_json(const StemPermutation& tau);
json to_json(const Pairing& p);
json to_json(const Strand& s);
json to_json(const AlexanderResult& a);  // {"alexander":[...],"determinant":d}
json to_json(const ReducedStemDiagram& d);
json move_to_json(const Move& move);
json script_to_json(const PetalPermutation& start, const std::vector<Move>& moves);
json path_to_json(const MovePath& path);

// All readers throw Error{ParseError} on malformed input and propagate the
// domain errors of the value types (e.g. NotAPermutation).
PetalPermutation petal_from_json(const json& j);
StemPermutation stem_from_json(const json& j);
Move move_from_json(const json& j);
// Accepts a bare script array or a path object.
MovePath path_from_json(const json& j);

json parse_json_text(std::string_view text);

}  // namespace petalkit
