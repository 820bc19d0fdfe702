#include "petalkit/petalkit.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "petalkit/error.hpp"
#include "petalkit/serialization.hpp"

struct pk_petal {
  petalkit::PetalPermutation value;
};
struct pk_stem {
  petalkit::StemPermutation value;
};
struct pk_diagram {
  petalkit::ReducedStemDiagram value;
};

namespace {

using namespace petalkit;

thread_local std::string last_error;

pk_status fail(pk_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class F>
pk_status guard(F&& body) {
  try {
    body();
    return PK_OK;
  } catch (const Error& e) {
    return fail(static_cast<pk_status>(e.code()), e.what());
  } catch (const json::exception& e) {
    return fail(PK_PARSE_ERROR, e.what());
  } catch (const std::exception& e) {
    return fail(PK_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class... Ptrs>
bool any_null(Ptrs... ptrs) {
  return ((ptrs == nullptr) || ...);
}

pk_status null_argument() { return fail(PK_NULL_ARGUMENT, "null argument"); }

std::vector<int> to_levels(const int32_t* levels, size_t len) {
  return std::vector<int>(levels, levels + len);
}

pk_status copy_levels(std::span<const int> word, int32_t* buf, size_t cap,
                      size_t* len) {
  if (len == nullptr || (buf == nullptr && cap > 0)) return null_argument();
  *len = word.size();
  for (size_t i = 0; i < word.size() && i < cap; ++i) buf[i] = word[i];
  return PK_OK;
}

// Text or JSON input for a permutation.
std::vector<int> levels_from_text(const char* text, const char* kind) {
  std::string_view view(text);
  const auto first = view.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && view[first] == '{') {
    const auto j = parse_json_text(view);
    if (std::string_view(kind) == "petal") {
      const auto p = petal_from_json(j);
      return {p.word().begin(), p.word().end()};
    }
    const auto s = stem_from_json(j);
    return {s.word().begin(), s.word().end()};
  }
  return parse_levels(view);
}

}  // namespace

extern "C" {

const char* pk_version(void) { return "1.0.0"; }

const char* pk_status_name(pk_status status) {
  if (status == PK_NULL_ARGUMENT) return "NullArgument";
  // error_name returns views of string literals.
  return error_name(static_cast<ErrorCode>(status)).data();
}

const char* pk_last_error(void) { return last_error.c_str(); }

void pk_string_free(char* s) { std::free(s); }

void pk_search_config_init(pk_search_config* cfg) {
  if (!cfg) return;
  const SearchConfig defaults;
  cfg->petal_bound = defaults.petal_bound;
  cfg->depth_bound = defaults.depth_bound;
  cfg->bidirectional = defaults.bidirectional ? 1 : 0;
  cfg->invariant_prefilter = defaults.invariant_prefilter ? 1 : 0;
  cfg->threads = defaults.threads;
}

pk_status pk_petal_new(const int32_t* levels, size_t len, pk_petal** out) {
  if (any_null(out) || (levels == nullptr && len > 0)) return null_argument();
  return guard([&] {
    *out = new pk_petal{PetalPermutation::from_word(to_levels(levels, len))};
  });
}

pk_status pk_petal_parse(const char* text, pk_petal** out) {
  if (any_null(text, out)) return null_argument();
  return guard([&] {
    *out = new pk_petal{PetalPermutation::from_word(levels_from_text(text, "petal"))};
  });
}

pk_status pk_petal_clone(const pk_petal* p, pk_petal** out) {
  if (any_null(p, out)) return null_argument();
  return guard([&] { *out = new pk_petal{p->value}; });
}

void pk_petal_free(pk_petal* p) { delete p; }

size_t pk_petal_length(const pk_petal* p) { return p ? p->value.size() : 0; }

pk_status pk_petal_levels(const pk_petal* p, int32_t* buf, size_t cap,
                          size_t* len) {
  if (any_null(p)) return null_argument();
  return copy_levels(p->value.word(), buf, cap, len);
}

int pk_petal_equal(const pk_petal* a, const pk_petal* b) {
  return a && b && a->value == b->value;
}

pk_status pk_petal_to_string(const pk_petal* p, char** out) {
  if (any_null(p, out)) return null_argument();
  return guard([&] { *out = dup_string(p->value.to_string()); });
}

pk_status pk_petal_to_json(const pk_petal* p, char** out) {
  if (any_null(p, out)) return null_argument();
  return guard([&] { *out = dup_string(to_json(p->value).dump()); });
}

pk_status pk_petal_canonical_key(const pk_petal* p, char** out) {
  if (any_null(p, out)) return null_argument();
  return guard([&] {
    static const char digits[] = "0123456789abcdef";
    std::string hex;
    for (unsigned char c : canonical_key(p->value)) {
      hex += digits[c >> 4];
      hex += digits[c & 0xf];
    }
    *out = dup_string(hex);
  });
}

pk_status pk_petal_pairing_json(const pk_petal* p, size_t rotation,
                                pk_side side, char** out) {
  if (any_null(p, out)) return null_argument();
  return guard([&] {
    const auto pr = pairing(p->value, Rotation{rotation},
                            side == PK_SIDE_LEFT ? Side::Left : Side::Right);
    *out = dup_string(to_json(pr).dump());
  });
}

pk_status pk_petal_correspondence_json(const pk_petal* p, size_t rotation,
                                       char** out) {
  if (any_null(p, out)) return null_argument();
  return guard([&] {
    json links = json::array();
    for (const auto& link : strand_pair_correspondence(p->value, Rotation{rotation})) {
      links.push_back({{"strand", to_string(link.strand)}, {"pair", link.pair.entries}});
    }
    *out = dup_string(links.dump());
  });
}

pk_status pk_petal_to_stem(const pk_petal* p, size_t rotation, int32_t t0,
                           pk_stem** out) {
  if (any_null(p, out)) return null_argument();
  return guard([&] {
    *out = new pk_stem{petal_to_stem(p->value, Rotation{rotation}, t0)};
  });
}

pk_status pk_random_petal(int32_t n, uint64_t seed, pk_petal** out) {
  if (any_null(out)) return null_argument();
  return guard([&] { *out = new pk_petal{random_petal(n, seed)}; });
}

pk_status pk_stem_new(const int32_t* levels, size_t len, pk_stem** out) {
  if (any_null(out) || (levels == nullptr && len > 0)) return null_argument();
  return guard([&] {
    *out = new pk_stem{StemPermutation::from_word(to_levels(levels, len))};
  });
}

pk_status pk_stem_parse(const char* text, pk_stem** out) {
  if (any_null(text, out)) return null_argument();
  return guard([&] {
    *out = new pk_stem{StemPermutation::from_word(levels_from_text(text, "stem"))};
  });
}

void pk_stem_free(pk_stem* s) { delete s; }

size_t pk_stem_length(const pk_stem* s) { return s ? s->value.size() : 0; }

pk_status pk_stem_levels(const pk_stem* s, int32_t* buf, size_t cap,
                         size_t* len) {
  if (any_null(s)) return null_argument();
  return copy_levels(s->value.word(), buf, cap, len);
}

pk_status pk_stem_to_string(const pk_stem* s, char** out) {
  if (any_null(s, out)) return null_argument();
  return guard([&] { *out = dup_string(s->value.to_string()); });
}

pk_status pk_stem_to_json(const pk_stem* s, char** out) {
  if (any_null(s, out)) return null_argument();
  return guard([&] { *out = dup_string(to_json(s->value).dump()); });
}

pk_status pk_stem_to_petal(const pk_stem* s, pk_petal** out) {
  if (any_null(s, out)) return null_argument();
  return guard([&] { *out = new pk_petal{stem_to_petal(s->value)}; });
}

pk_status pk_stem_strands_json(const pk_stem* s, char** out) {
  if (any_null(s, out)) return null_argument();
  return guard([&] {
    json arr = json::array();
    for (const auto& st : strands(s->value)) arr.push_back(to_json(st));
    *out = dup_string(arr.dump());
  });
}

pk_status pk_apply_move_json(const pk_petal* p, const char* move_json,
                             pk_petal** out) {
  if (any_null(p, move_json, out)) return null_argument();
  return guard([&] {
    const auto move = move_from_json(parse_json_text(move_json));
    *out = new pk_petal{apply_move(p->value, move)};
  });
}

pk_status pk_invert_move_json(const pk_petal* before, const char* move_json,
                              char** out) {
  if (any_null(before, move_json, out)) return null_argument();
  return guard([&] {
    const auto move = move_from_json(parse_json_text(move_json));
    *out = dup_string(serialize_move(invert_move(move, before->value)));
  });
}

pk_status pk_apply_script_json(const char* script_json, char** out) {
  if (any_null(script_json, out)) return null_argument();
  return guard([&] {
    const auto script = path_from_json(parse_json_text(script_json));
    *out = dup_string(path_to_json(replay(script.start, script.moves)).dump());
  });
}

pk_status pk_enumerate_moves_json(const pk_petal* p, int64_t level_cap,
                                  char** out) {
  if (any_null(p, out)) return null_argument();
  return guard([&] {
    std::optional<std::size_t> cap;
    if (level_cap >= 0) cap = static_cast<std::size_t>(level_cap);
    json arr = json::array();
    for (const auto& lm : enumerate_legal_moves(p->value, cap)) {
      arr.push_back({{"move", move_to_json(lm.move)},
                     {"result", std::vector<int>(lm.result.word().begin(),
                                                 lm.result.word().end())}});
    }
    *out = dup_string(arr.dump());
  });
}

pk_status pk_diagram_from_stem(const pk_stem* s, pk_diagram** out) {
  if (any_null(s, out)) return null_argument();
  return guard([&] { *out = new pk_diagram{build_diagram(s->value)}; });
}

pk_status pk_diagram_from_petal(const pk_petal* p, pk_diagram** out) {
  if (any_null(p, out)) return null_argument();
  return guard([&] { *out = new pk_diagram{petal_to_diagram(p->value)}; });
}

void pk_diagram_free(pk_diagram* d) { delete d; }

size_t pk_diagram_crossing_count(const pk_diagram* d) {
  return d ? d->value.crossings.size() : 0;
}

int pk_diagram_writhe(const pk_diagram* d) { return d ? writhe(d->value) : 0; }

pk_status pk_diagram_json(const pk_diagram* d, char** out) {
  if (any_null(d, out)) return null_argument();
  return guard([&] { *out = dup_string(to_json(d->value).dump()); });
}

pk_status pk_diagram_gauss_json(const pk_diagram* d, char** out) {
  if (any_null(d, out)) return null_argument();
  return guard([&] {
    const auto g = to_gauss_code(d->value);
    *out = dup_string(json{{"gauss", g.sequence}, {"signs", g.signs}}.dump());
  });
}

pk_status pk_diagram_pd_text(const pk_diagram* d, char** out) {
  if (any_null(d, out)) return null_argument();
  return guard([&] { *out = dup_string(format_pd_code(to_pd_code(d->value))); });
}

pk_status pk_alexander_of_petal(const pk_petal* p, int64_t* coeffs, size_t cap,
                                size_t* len, uint64_t* determinant) {
  if (any_null(p, len) || (coeffs == nullptr && cap > 0)) return null_argument();
  return guard([&] {
    const auto a = alexander_of_petal(p->value);
    const auto c = a.polynomial.coefficients();
    *len = c.size();
    for (size_t i = 0; i < c.size() && i < cap; ++i) coeffs[i] = c[i];
    if (determinant) *determinant = a.determinant;
  });
}

pk_status pk_alexander_json(const pk_diagram* d, char** out) {
  if (any_null(d, out)) return null_argument();
  return guard([&] {
    *out = dup_string(to_json(alexander_from_diagram(d->value)).dump());
  });
}

pk_status pk_find_path_json(const pk_petal* from, const pk_petal* to,
                            const pk_search_config* cfg, char** out) {
  if (any_null(from, to, out)) return null_argument();
  return guard([&] {
    SearchConfig c;
    if (cfg) {
      c.petal_bound = cfg->petal_bound;
      c.depth_bound = cfg->depth_bound;
      c.bidirectional = cfg->bidirectional != 0;
      c.invariant_prefilter = cfg->invariant_prefilter != 0;
      c.threads = cfg->threads;
    }
    SearchStats stats;
    auto path = find_path(from->value, to->value, c, &stats);
    auto j = path_to_json(path);
    j["states_visited"] = stats.states_visited;
    *out = dup_string(j.dump());
  });
}

pk_status pk_verify_path_json(const char* path_json, int check_invariants,
                              size_t* move_count, size_t* failed_step) {
  if (any_null(path_json)) return null_argument();
  pk_status status = PK_OK;
  const pk_status parsed = guard([&] {
    const auto path = path_from_json(parse_json_text(path_json));
    if (move_count) *move_count = path.moves.size();
    if (auto failure = verify_path(path, check_invariants != 0)) {
      if (failed_step) *failed_step = failure->step;
      status = fail(static_cast<pk_status>(failure->code),
                    "step " + std::to_string(failure->step) + ": " +
                        failure->detail);
    }
  });
  return parsed != PK_OK ? parsed : status;
}

}  // extern "C"
