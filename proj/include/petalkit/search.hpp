#pragma once

// Breadth-first exploration of the petal move graph.
//
// A failed search only means no path exists inside the configured bounds;
// it says nothing about whether the two knots differ.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "petalkit/core.hpp"
#include "petalkit/moves.hpp"

namespace petalkit {

struct SearchConfig {
  std::size_t petal_bound = 9;  // longest word explored; odd
  std::size_t depth_bound = 6;  // most moves in a path
  bool bidirectional = false;
  bool invariant_prefilter = true;
  unsigned threads = 1;
};

// Throws Error{InvalidConfig}.
void validate_config(const SearchConfig& cfg, const PetalPermutation& from,
                     const PetalPermutation& to);

struct MovePath {
  PetalPermutation start;
  std::vector<Move> moves;
  // Word after each move. May be empty for an unreplayed script.
  std::vector<PetalPermutation> steps;
  // Claimed final word, if recorded.
  std::optional<PetalPermutation> end;

  const PetalPermutation& final_word() const {
    if (end) return *end;
    return steps.empty() ? start : steps.back();
  }
};

// Applies moves in order, filling steps and end. Throws Error{IllegalMoveAtStep}.
MovePath replay(const PetalPermutation& start, std::vector<Move> moves);

struct SearchStats {
  std::size_t states_visited = 0;
  std::size_t depth_reached = 0;
};

// Shortest path by move count within the bounds. Throws
// Error{InvariantMismatch} (prefilter) or Error{BoundsExhausted}.
MovePath find_path(const PetalPermutation& from, const PetalPermutation& to,
                   const SearchConfig& cfg, SearchStats* stats = nullptr);

struct PathFailure {
  ErrorCode code = ErrorCode::Ok;
  std::size_t step = 0;  // 1-based index of the failing move
  std::string detail;
};

// nullopt when every move is legal, every listed step matches its replay and
// (optionally) the Alexander polynomial never changes.
std::optional<PathFailure> verify_path(const MovePath& path,
                                       bool check_invariants);

// Uniform over the (2n)! canonical words of length 2n+1.
PetalPermutation random_petal(int n, std::uint64_t seed);

// Byte string, equal exactly when the canonical words are equal. Stable
// across runs and platforms.
using CanonicalKey = std::string;
CanonicalKey canonical_key(const PetalPermutation& sigma);

}  // namespace petalkit
