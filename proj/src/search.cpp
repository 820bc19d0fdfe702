#include "petalkit/search.hpp"

#include <algorithm>
#include <random>
#include <thread>
#include <unordered_map>

#include "petalkit/invariants.hpp"

namespace petalkit {

namespace {

struct Visit {
  PetalPermutation parent;
  Move move;  // apply_move(parent, move) yields the visited word
  std::size_t depth = 0;
};

using VisitMap = std::unordered_map<CanonicalKey, Visit>;

// Legal moves of every frontier word, computed on up to `threads` workers.
// The result is indexed like the frontier, so scheduling cannot affect it.
std::vector<std::vector<LegalMove>> expand(
    const std::vector<PetalPermutation>& frontier, std::size_t cap,
    unsigned threads) {
  std::vector<std::vector<LegalMove>> out(frontier.size());
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, threads), frontier.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      out[i] = enumerate_legal_moves(frontier[i], cap);
    }
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < frontier.size(); i += workers) {
        out[i] = enumerate_legal_moves(frontier[i], cap);
      }
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

// Moves leading from root to `node` through the visit map.
std::vector<Move> trace_back(const VisitMap& visits, const PetalPermutation& root,
                             PetalPermutation node) {
  std::vector<Move> moves;
  while (node != root) {
    const auto& v = visits.at(canonical_key(node));
    moves.push_back(v.move);
    node = v.parent;
  }
  std::reverse(moves.begin(), moves.end());
  return moves;
}

struct Frontier {
  VisitMap visits;
  std::vector<PetalPermutation> frontier;
  std::size_t depth = 0;
};

MovePath unidirectional(const PetalPermutation& from,
                        const PetalPermutation& to, const SearchConfig& cfg,
                        SearchStats& stats) {
  Frontier fwd;
  fwd.visits.emplace(canonical_key(from), Visit{from, TrivialDeletion{}, 0});
  fwd.frontier.push_back(from);
  while (fwd.depth < cfg.depth_bound && !fwd.frontier.empty()) {
    const auto expanded = expand(fwd.frontier, cfg.petal_bound, cfg.threads);
    std::vector<PetalPermutation> next;
    ++fwd.depth;
    stats.depth_reached = fwd.depth;
    for (std::size_t i = 0; i < fwd.frontier.size(); ++i) {
      for (const auto& lm : expanded[i]) {
        if (lm.result.size() > cfg.petal_bound) continue;
        auto [it, inserted] = fwd.visits.try_emplace(
            canonical_key(lm.result), Visit{fwd.frontier[i], lm.move, fwd.depth});
        if (!inserted) continue;
        if (lm.result == to) {
          stats.states_visited = fwd.visits.size();
          return replay(from, trace_back(fwd.visits, from, to));
        }
        next.push_back(lm.result);
      }
    }
    fwd.frontier = std::move(next);
  }
  stats.states_visited = fwd.visits.size();
  throw Error(ErrorCode::BoundsExhausted,
              "no path within petal_bound " + std::to_string(cfg.petal_bound) +
                  " and depth_bound " + std::to_string(cfg.depth_bound) +
                  " (" + std::to_string(stats.states_visited) +
                  " states visited)");
}

MovePath bidirectional(const PetalPermutation& from,
                       const PetalPermutation& to, const SearchConfig& cfg,
                       SearchStats& stats) {
  Frontier sides[2];
  const PetalPermutation* roots[2] = {&from, &to};
  for (int s = 0; s < 2; ++s) {
    sides[s].visits.emplace(canonical_key(*roots[s]),
                            Visit{*roots[s], TrivialDeletion{}, 0});
    sides[s].frontier.push_back(*roots[s]);
  }

  while (sides[0].depth + sides[1].depth < cfg.depth_bound) {
    int s = sides[0].frontier.size() <= sides[1].frontier.size() ? 0 : 1;
    if (sides[s].frontier.empty()) s = 1 - s;
    if (sides[s].frontier.empty()) break;
    auto& grow = sides[s];
    const auto& other = sides[1 - s];

    const auto expanded = expand(grow.frontier, cfg.petal_bound, cfg.threads);
    std::vector<PetalPermutation> next;
    ++grow.depth;
    stats.depth_reached = sides[0].depth + sides[1].depth;
    std::optional<std::pair<std::size_t, CanonicalKey>> best;
    std::optional<PetalPermutation> meet;
    for (std::size_t i = 0; i < grow.frontier.size(); ++i) {
      for (const auto& lm : expanded[i]) {
        if (lm.result.size() > cfg.petal_bound) continue;
        auto key = canonical_key(lm.result);
        auto [it, inserted] = grow.visits.try_emplace(
            key, Visit{grow.frontier[i], lm.move, grow.depth});
        if (!inserted) continue;
        next.push_back(lm.result);
        auto hit = other.visits.find(key);
        if (hit == other.visits.end()) continue;
        std::pair<std::size_t, CanonicalKey> rank{grow.depth + hit->second.depth,
                                                  key};
        if (!best || rank < *best) {
          best = rank;
          meet = lm.result;
        }
      }
    }
    grow.frontier = std::move(next);
    if (meet) {
      stats.states_visited = sides[0].visits.size() + sides[1].visits.size();
      auto moves = trace_back(sides[0].visits, from, *meet);
      // Walk from the meeting word back to the goal, inverting the moves the
      // backward search recorded.
      PetalPermutation node = *meet;
      while (node != to) {
        const auto& v = sides[1].visits.at(canonical_key(node));
        moves.push_back(invert_move(v.move, v.parent));
        node = v.parent;
      }
      return replay(from, std::move(moves));
    }
  }
  stats.states_visited = sides[0].visits.size() + sides[1].visits.size();
  throw Error(ErrorCode::BoundsExhausted,
              "no path within petal_bound " + std::to_string(cfg.petal_bound) +
                  " and depth_bound " + std::to_string(cfg.depth_bound) +
                  " (" + std::to_string(stats.states_visited) +
                  " states visited)");
}

}  // namespace

void validate_config(const SearchConfig& cfg, const PetalPermutation& from,
                     const PetalPermutation& to) {
  if (cfg.petal_bound % 2 == 0) {
    throw Error(ErrorCode::InvalidConfig, "petal_bound must be odd");
  }
  if (cfg.petal_bound < std::max(from.size(), to.size())) {
    throw Error(ErrorCode::InvalidConfig,
                "petal_bound " + std::to_string(cfg.petal_bound) +
                    " is below the endpoint word lengths");
  }
}

MovePath replay(const PetalPermutation& start, std::vector<Move> moves) {
  MovePath path;
  path.start = start;
  path.moves = std::move(moves);
  PetalPermutation current = start;
  for (std::size_t k = 0; k < path.moves.size(); ++k) {
    try {
      current = apply_move(current, path.moves[k]);
    } catch (const Error& e) {
      throw Error(ErrorCode::IllegalMoveAtStep,
                  "step " + std::to_string(k + 1) + ": " + e.what());
    }
    path.steps.push_back(current);
  }
  path.end = current;
  return path;
}

MovePath find_path(const PetalPermutation& from, const PetalPermutation& to,
                   const SearchConfig& cfg, SearchStats* stats) {
  validate_config(cfg, from, to);
  if (cfg.invariant_prefilter) {
    const auto a = alexander_of_petal(from);
    const auto b = alexander_of_petal(to);
    if (!(a == b)) {
      throw Error(ErrorCode::InvariantMismatch,
                  "Alexander polynomials differ: " + a.polynomial.to_string() +
                      " vs " + b.polynomial.to_string());
    }
  }
  SearchStats local;
  SearchStats& s = stats ? *stats : local;
  s = {};
  if (from == to) {
    s.states_visited = 1;
    return replay(from, {});
  }
  return cfg.bidirectional ? bidirectional(from, to, cfg, s)
                           : unidirectional(from, to, cfg, s);
}

std::optional<PathFailure> verify_path(const MovePath& path,
                                       bool check_invariants) {
  if (!path.steps.empty() && path.steps.size() != path.moves.size()) {
    return PathFailure{ErrorCode::ReplayMismatchAtStep,
                       std::min(path.steps.size(), path.moves.size()) + 1,
                       "path lists " + std::to_string(path.steps.size()) +
                           " steps for " + std::to_string(path.moves.size()) +
                           " moves"};
  }
  PetalPermutation current = path.start;
  std::optional<AlexanderResult> invariant;
  if (check_invariants) invariant = alexander_of_petal(current);
  for (std::size_t k = 0; k < path.moves.size(); ++k) {
    const std::size_t step = k + 1;
    try {
      current = apply_move(current, path.moves[k]);
    } catch (const Error& e) {
      return PathFailure{ErrorCode::IllegalMoveAtStep, step,
                         std::string(e.name()) + ": " + e.what()};
    }
    if (!path.steps.empty() && path.steps[k] != current) {
      return PathFailure{ErrorCode::ReplayMismatchAtStep, step,
                         "listed (" + path.steps[k].to_string() +
                             ") but replay gives (" + current.to_string() + ")"};
    }
    if (invariant) {
      auto next = alexander_of_petal(current);
      if (!(next == *invariant)) {
        return PathFailure{ErrorCode::InvariantChangedAtStep, step,
                           invariant->polynomial.to_string() + " became " +
                               next.polynomial.to_string()};
      }
    }
  }
  if (path.end && *path.end != current) {
    return PathFailure{ErrorCode::ReplayMismatchAtStep, path.moves.size(),
                       "listed end (" + path.end->to_string() +
                           ") but replay gives (" + current.to_string() + ")"};
  }
  return std::nullopt;
}

PetalPermutation random_petal(int n, std::uint64_t seed) {
  if (n < 0) throw Error(ErrorCode::InvalidConfig, "n must be >= 0");
  std::vector<int> word(static_cast<std::size_t>(2 * n + 1));
  for (std::size_t i = 0; i < word.size(); ++i) word[i] = static_cast<int>(i);
  std::mt19937_64 rng(seed);
  std::shuffle(word.begin() + 1, word.end(), rng);
  return PetalPermutation::from_word(word);
}

CanonicalKey canonical_key(const PetalPermutation& sigma) {
  CanonicalKey key;
  key.reserve(2 * sigma.size());
  for (int v : sigma.word()) {
    key.push_back(static_cast<char>(v & 0xff));
    key.push_back(static_cast<char>((v >> 8) & 0xff));
  }
  return key;
}

}  // namespace petalkit
