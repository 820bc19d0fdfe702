#include "petalkit/serialization.hpp"

#include "petalkit/error.hpp"

namespace petalkit {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorCode::ParseError, what);
}

std::vector<int> levels_from_json(const json& j) {
  if (!j.is_array()) bad("expected an array of levels, got " + j.dump());
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer()) bad("level is not an integer: " + v.dump());
    out.push_back(v.get<int>());
  }
  return out;
}

// Accepts a bare array or {"kind": expected_kind, "word": [...]}.
std::vector<int> word_from_json(const json& j, const char* expected_kind) {
  if (j.is_array()) return levels_from_json(j);
  if (!j.is_object() || !j.contains("word")) {
    bad(std::string("expected a ") + expected_kind + " word, got " + j.dump());
  }
  if (j.contains("kind") && j.at("kind") != expected_kind) {
    bad(std::string("expected kind \"") + expected_kind + "\", got " +
        j.at("kind").dump());
  }
  return levels_from_json(j.at("word"));
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) bad(std::string("move is missing \"") + key + "\": " + j.dump());
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    bad(std::string("bad \"") + key + "\" in move " + j.dump());
  }
}

std::size_t index_field(const json& j, const char* key) {
  const auto v = field<long long>(j, key);
  if (v < 0) bad(std::string("negative \"") + key + "\" in move " + j.dump());
  return static_cast<std::size_t>(v);
}

const char* side_tag(Side s) { return s == Side::Left ? "L" : "R"; }

}  // namespace

json to_json(const PetalPermutation& sigma) {
  return {{"kind", "petal"},
          {"word", std::vector<int>(sigma.word().begin(), sigma.word().end())}};
}

json to_json(const StemPermutation& tau) {
  return {{"kind", "stem"},
          {"word", std::vector<int>(tau.word().begin(), tau.word().end())}};
}

json to_json(const Pairing& p) {
  json pairs = json::array();
  for (const auto& pair : p.pairs) pairs.push_back(pair.entries);
  return {{"side", side_tag(p.side)}, {"pairs", pairs}};
}

json to_json(const Strand& s) {
  return {{"strand", to_string(s.id)},
          {"levels", std::vector<int>{s.levels[0], s.levels[1]}}};
}

json to_json(const AlexanderResult& a) {
  return {{"alexander", a.polynomial.coefficients()},
          {"determinant", a.determinant}};
}

json to_json(const ReducedStemDiagram& d) {
  json strands_json = json::array();
  for (const auto& s : d.strands) strands_json.push_back(to_json(s));
  json crossings = json::array();
  for (const auto& c : d.crossings) {
    crossings.push_back(
        {{"id", c.id},
         {"over", to_string(d.strands[c.over].id)},
         {"under", to_string(d.strands[c.under()].id)},
         {"height", {c.height.numerator(), c.height.denominator()}},
         {"sign", c.sign}});
  }
  const auto gauss = to_gauss_code(d);
  return {{"stem", to_json(d.stem)},
          {"strands", strands_json},
          {"crossings", crossings},
          {"writhe", writhe(d)},
          {"gauss", gauss.sequence},
          {"gauss_signs", gauss.signs},
          {"pd", format_pd_code(to_pd_code(d))}};
}

json move_to_json(const Move& move) {
  return json::parse(serialize_move(move));
}

json script_to_json(const PetalPermutation& start,
                    const std::vector<Move>& moves) {
  json out = json::array();
  out.push_back(std::vector<int>(start.word().begin(), start.word().end()));
  for (const auto& m : moves) out.push_back(move_to_json(m));
  return out;
}

json path_to_json(const MovePath& path) {
  json steps = json::array();
  for (const auto& s : path.steps) {
    steps.push_back(std::vector<int>(s.word().begin(), s.word().end()));
  }
  const auto& last = path.final_word();
  return {{"script", script_to_json(path.start, path.moves)},
          {"steps", steps},
          {"end", std::vector<int>(last.word().begin(), last.word().end())}};
}

PetalPermutation petal_from_json(const json& j) {
  return PetalPermutation::from_word(word_from_json(j, "petal"));
}

StemPermutation stem_from_json(const json& j) {
  return StemPermutation::from_word(word_from_json(j, "stem"));
}

Move move_from_json(const json& j) {
  if (!j.is_object()) bad("move must be an object: " + j.dump());
  const auto type = field<std::string>(j, "type");
  const Rotation r{index_field(j, "rotation")};
  if (type == "add") {
    const auto orient = field<std::string>(j, "orient");
    if (orient != "asc" && orient != "desc") bad("bad \"orient\" in move " + j.dump());
    return TrivialAddition{r, index_field(j, "pos"), field<int>(j, "m"),
                           orient == "asc" ? Orientation::Ascending
                                           : Orientation::Descending};
  }
  if (type == "del") return TrivialDeletion{r, index_field(j, "pos")};
  if (type == "xchg") {
    const auto side = field<std::string>(j, "side");
    if (side != "L" && side != "R") bad("bad \"side\" in move " + j.dump());
    return CrossingExchange{r, side == "L" ? Side::Left : Side::Right,
                            field<int>(j, "m"), field<int>(j, "w")};
  }
  bad("unknown move type \"" + type + "\"");
}

MovePath path_from_json(const json& j) {
  const json* script = &j;
  if (j.is_object()) {
    if (!j.contains("script")) bad("path object needs a \"script\" field");
    script = &j.at("script");
  }
  if (!script->is_array() || script->empty()) {
    bad("move script must be a non-empty array starting with a petal word");
  }
  MovePath path;
  path.start = petal_from_json(script->at(0));
  for (std::size_t i = 1; i < script->size(); ++i) {
    path.moves.push_back(move_from_json(script->at(i)));
  }
  if (j.is_object()) {
    if (j.contains("steps")) {
      if (!j.at("steps").is_array()) bad("\"steps\" must be an array");
      for (const auto& s : j.at("steps")) path.steps.push_back(petal_from_json(s));
    }
    if (j.contains("end")) path.end = petal_from_json(j.at("end"));
  }
  return path;
}

json parse_json_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace petalkit
