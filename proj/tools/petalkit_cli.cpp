// petalkit command-line tool. Talks to the library only through the C API.
//
// Exit status: 0 success, 1 domain error, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "petalkit/petalkit.h"

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 1;

// Carries a library status out of a subcommand.
struct Failure {
  pk_status status;
  std::string message;
};

void check(pk_status status) {
  if (status != PK_OK) throw Failure{status, pk_last_error()};
}

struct PetalDeleter {
  void operator()(pk_petal* p) const { pk_petal_free(p); }
};
struct StemDeleter {
  void operator()(pk_stem* s) const { pk_stem_free(s); }
};
struct DiagramDeleter {
  void operator()(pk_diagram* d) const { pk_diagram_free(d); }
};
using Petal = std::unique_ptr<pk_petal, PetalDeleter>;
using Stem = std::unique_ptr<pk_stem, StemDeleter>;
using Diagram = std::unique_ptr<pk_diagram, DiagramDeleter>;

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out(s ? s : "");
  pk_string_free(s);
  return out;
}

std::string read_stream(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// "-" reads standard input, "@path" and plain paths (for file arguments)
// read the file.
std::string read_source(const std::string& arg, bool is_file) {
  if (arg == "-") return read_stream(std::cin);
  std::string path;
  if (!arg.empty() && arg[0] == '@') {
    path = arg.substr(1);
  } else if (is_file) {
    path = arg;
  } else {
    return arg;
  }
  std::ifstream in(path);
  if (!in) throw Failure{PK_IO_ERROR, "cannot read '" + path + "'"};
  return read_stream(in);
}

Petal parse_petal(const std::string& arg) {
  pk_petal* p = nullptr;
  check(pk_petal_parse(read_source(arg, false).c_str(), &p));
  return Petal(p);
}

Stem parse_stem(const std::string& arg) {
  pk_stem* s = nullptr;
  check(pk_stem_parse(read_source(arg, false).c_str(), &s));
  return Stem(s);
}

std::string petal_text(const pk_petal* p) {
  char* s = nullptr;
  check(pk_petal_to_string(p, &s));
  return take(s);
}

std::string join(const json& arr, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) out += sep;
    out += arr[i].dump();
  }
  return out;
}

std::string pairs_text(const json& pairing) {
  std::string out;
  for (const auto& p : pairing.at("pairs")) {
    if (!out.empty()) out += ' ';
    out += "(" + join(p) + ")";
  }
  return out;
}

void print_path(const json& path, bool as_json) {
  if (as_json) {
    std::cout << path.dump() << "\n";
    return;
  }
  const auto& script = path.at("script");
  const auto& steps = path.at("steps");
  std::cout << "start: " << join(script.at(0)) << "\n";
  for (std::size_t k = 1; k < script.size(); ++k) {
    std::cout << "step " << k << ": " << script.at(k).dump() << " -> "
              << join(steps.at(k - 1)) << "\n";
  }
  std::cout << "end: " << join(path.at("end")) << "\n";
}

struct Options {
  bool json_output = false;

  std::string word, other, file;
  std::size_t rotation = 0;
  int t0 = 0;
  std::string side = "both";
  bool stem_input = false;
  std::optional<long long> level_cap;
  std::size_t petal_bound = 0;
  std::size_t depth_bound = 0;
  bool bidirectional = false;
  bool no_prefilter = false;
  unsigned threads = 1;
  bool no_invariants = false;
  int n = 0;
  std::optional<std::uint64_t> seed;
};

std::uint64_t effective_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("PETALKIT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Failure{PK_PARSE_ERROR,
                    std::string("PETALKIT_SEED is not an integer: ") + env};
    }
  }
  return kDefaultSeed;
}

void cmd_canon(const Options& o) {
  auto p = parse_petal(o.word);
  if (o.json_output) {
    char* s = nullptr;
    check(pk_petal_to_json(p.get(), &s));
    std::cout << take(s) << "\n";
  } else {
    std::cout << petal_text(p.get()) << "\n";
  }
}

void cmd_pairs(const Options& o) {
  auto p = parse_petal(o.word);
  json out = json::object();
  for (auto [tag, side] : {std::pair{"L", PK_SIDE_LEFT}, std::pair{"R", PK_SIDE_RIGHT}}) {
    if (o.side != "both" && o.side != tag) continue;
    char* s = nullptr;
    check(pk_petal_pairing_json(p.get(), o.rotation, side, &s));
    out[tag] = json::parse(take(s));
  }
  if (o.json_output) {
    std::cout << out.dump() << "\n";
    return;
  }
  for (const auto& [tag, pairing] : out.items()) {
    std::cout << tag << ": " << pairs_text(pairing) << "\n";
  }
}

void cmd_to_stem(const Options& o) {
  auto p = parse_petal(o.word);
  pk_stem* raw = nullptr;
  check(pk_petal_to_stem(p.get(), o.rotation, o.t0, &raw));
  Stem s(raw);
  char* text = nullptr;
  check(o.json_output ? pk_stem_to_json(s.get(), &text)
                      : pk_stem_to_string(s.get(), &text));
  std::cout << take(text) << "\n";
}

void cmd_to_petal(const Options& o) {
  auto s = parse_stem(o.word);
  pk_petal* raw = nullptr;
  check(pk_stem_to_petal(s.get(), &raw));
  Petal p(raw);
  char* text = nullptr;
  check(o.json_output ? pk_petal_to_json(p.get(), &text)
                      : pk_petal_to_string(p.get(), &text));
  std::cout << take(text) << "\n";
}

void cmd_apply(const Options& o) {
  const auto script = read_source(o.file, true);
  char* out = nullptr;
  check(pk_apply_script_json(script.c_str(), &out));
  print_path(json::parse(take(out)), o.json_output);
}

void cmd_enumerate(const Options& o) {
  auto p = parse_petal(o.word);
  char* out = nullptr;
  check(pk_enumerate_moves_json(p.get(), o.level_cap.value_or(-1), &out));
  const auto moves = json::parse(take(out));
  if (o.json_output) {
    std::cout << moves.dump() << "\n";
    return;
  }
  for (const auto& entry : moves) {
    std::cout << entry.at("move").dump() << " -> " << join(entry.at("result"))
              << "\n";
  }
}

Diagram diagram_for(const Options& o) {
  pk_diagram* raw = nullptr;
  if (o.stem_input) {
    auto s = parse_stem(o.word);
    check(pk_diagram_from_stem(s.get(), &raw));
  } else {
    auto p = parse_petal(o.word);
    check(pk_diagram_from_petal(p.get(), &raw));
  }
  return Diagram(raw);
}

void cmd_diagram(const Options& o) {
  auto d = diagram_for(o);
  char* out = nullptr;
  check(pk_diagram_json(d.get(), &out));
  const auto j = json::parse(take(out));
  if (o.json_output) {
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << "stem: " << join(j.at("stem").at("word")) << "\n"
            << "crossings: " << j.at("crossings").size() << "\n"
            << "writhe: " << j.at("writhe").get<int>() << "\n"
            << "gauss: " << join(j.at("gauss"), " ") << "\n"
            << "signs: " << join(j.at("gauss_signs"), " ") << "\n"
            << "pd: " << j.at("pd").get<std::string>() << "\n";
}

void cmd_invariant(const Options& o) {
  auto d = diagram_for(o);
  char* out = nullptr;
  check(pk_alexander_json(d.get(), &out));
  std::cout << take(out) << "\n";
}

void cmd_connect(const Options& o) {
  auto from = parse_petal(o.word);
  auto to = parse_petal(o.other);
  pk_search_config cfg;
  pk_search_config_init(&cfg);
  if (o.petal_bound) cfg.petal_bound = o.petal_bound;
  if (o.depth_bound) cfg.depth_bound = o.depth_bound;
  cfg.bidirectional = o.bidirectional ? 1 : 0;
  cfg.invariant_prefilter = o.no_prefilter ? 0 : 1;
  cfg.threads = o.threads;
  char* out = nullptr;
  check(pk_find_path_json(from.get(), to.get(), &cfg, &out));
  const auto path = json::parse(take(out));
  if (!o.json_output) {
    std::cout << "path of " << path.at("steps").size() << " moves ("
              << path.at("states_visited").get<std::size_t>()
              << " states visited)\n";
  }
  print_path(path, o.json_output);
}

void cmd_verify(const Options& o) {
  const auto text = read_source(o.file, true);
  std::size_t moves = 0;
  std::size_t step = 0;
  const pk_status status =
      pk_verify_path_json(text.c_str(), o.no_invariants ? 0 : 1, &moves, &step);
  check(status);
  if (o.json_output) {
    std::cout << json{{"ok", true}, {"moves", moves},
                      {"invariants_checked", !o.no_invariants}}
                     .dump()
              << "\n";
  } else {
    std::cout << "OK (" << moves << " moves"
              << (o.no_invariants ? "" : ", invariant preserved") << ")\n";
  }
}

void cmd_random(const Options& o) {
  pk_petal* raw = nullptr;
  check(pk_random_petal(o.n, effective_seed(o), &raw));
  Petal p(raw);
  char* text = nullptr;
  check(o.json_output ? pk_petal_to_json(p.get(), &text)
                      : pk_petal_to_string(p.get(), &text));
  std::cout << take(text) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Petal permutation calculus for knots"};
  app.set_version_flag("--version", std::string(pk_version()));
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json_output, "Emit JSON");

  const char* word_help =
      "Comma-separated levels, '-' for stdin or @file";

  auto* canon = app.add_subcommand("canon", "Canonical rotation of a petal word");
  canon->add_option("word", o.word, word_help)->required();
  canon->callback([&] { cmd_canon(o); });

  auto* pairs = app.add_subcommand("pairs", "Left- and right-pairs of a petal word");
  pairs->add_option("word", o.word, word_help)->required();
  pairs->add_option("--rotation,-r", o.rotation, "Rotation of the canonical word");
  pairs->add_option("--side", o.side, "L, R or both")
      ->check(CLI::IsMember({"L", "R", "both"}));
  pairs->callback([&] { cmd_pairs(o); });

  auto* to_stem = app.add_subcommand("to-stem", "Petal word to stem word");
  to_stem->add_option("word", o.word, word_help)->required();
  to_stem->add_option("--rotation,-r", o.rotation, "Rotation of the canonical word");
  to_stem->add_option("--t0", o.t0, "Basepoint level");
  to_stem->callback([&] { cmd_to_stem(o); });

  auto* to_petal = app.add_subcommand("to-petal", "Stem word to petal word");
  to_petal->add_option("stem", o.word, word_help)->required();
  to_petal->callback([&] { cmd_to_petal(o); });

  auto* apply = app.add_subcommand("apply", "Replay a JSON move script");
  apply->add_option("script", o.file, "Script file or '-'")->required();
  apply->callback([&] { cmd_apply(o); });

  auto* enumerate = app.add_subcommand("enumerate", "List legal moves");
  enumerate->add_option("word", o.word, word_help)->required();
  enumerate->add_option("--level-cap", o.level_cap,
                        "Include additions up to this word length");
  enumerate->callback([&] { cmd_enumerate(o); });

  auto* diagram = app.add_subcommand("diagram", "Gauss and PD codes of the reduced stem diagram");
  diagram->add_option("word", o.word, word_help)->required();
  diagram->add_flag("--stem", o.stem_input, "Input is a stem word");
  diagram->callback([&] { cmd_diagram(o); });

  auto* invariant = app.add_subcommand("invariant", "Alexander polynomial and determinant");
  invariant->add_option("word", o.word, word_help)->required();
  invariant->add_flag("--stem", o.stem_input, "Input is a stem word");
  invariant->callback([&] { cmd_invariant(o); });

  auto* connect = app.add_subcommand("connect", "Search for a move path between two petal words");
  connect->add_option("from", o.word, word_help)->required();
  connect->add_option("to", o.other, word_help)->required();
  connect->add_option("--petal-bound", o.petal_bound, "Longest word explored (odd)");
  connect->add_option("--depth-bound", o.depth_bound, "Most moves in a path");
  connect->add_flag("--bidirectional", o.bidirectional, "Search from both ends");
  connect->add_flag("--no-prefilter", o.no_prefilter, "Skip the Alexander prefilter");
  connect->add_option("--threads", o.threads, "Worker threads for frontier expansion")
      ->check(CLI::Range(1u, 256u));
  connect->callback([&] { cmd_connect(o); });

  auto* verify = app.add_subcommand("verify", "Check a move script or path");
  verify->add_option("file", o.file, "Script file or '-'")->required();
  verify->add_flag("--no-invariants", o.no_invariants, "Skip Alexander checks");
  verify->callback([&] { cmd_verify(o); });

  auto* random = app.add_subcommand("random", "Uniform random petal word of length 2n+1");
  random->add_option("n", o.n, "n >= 0")->required()->check(CLI::NonNegativeNumber);
  random->add_option("--seed", o.seed, "Seed (default: $PETALKIT_SEED or 1)");
  random->callback([&] { cmd_random(o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Failure& f) {
    if (o.json_output) {
      std::cout << json{{"error", pk_status_name(f.status)}, {"message", f.message}}.dump()
                << "\n";
    } else {
      std::cerr << "error: " << pk_status_name(f.status) << ": " << f.message << "\n";
    }
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "error: ParseError: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
