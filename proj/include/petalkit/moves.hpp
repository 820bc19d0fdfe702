#pragma once

// Trivial petal addition/deletion and crossing exchange on petal
// permutations. Every move is expressed relative to a rotation of the
// canonical word of the permutation it is applied to.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "petalkit/core.hpp"
#include "petalkit/error.hpp"

namespace petalkit {

enum class Orientation { Ascending, Descending };

// Insert m(m+1) (Ascending) or (m+1)m (Descending) after index `position`
// of the rotated word, shifting every entry >= m up by two.
struct TrivialAddition {
  Rotation rotation;
  std::size_t position = 0;
  int m = 0;
  Orientation orientation = Orientation::Ascending;
  bool operator==(const TrivialAddition&) const = default;
};

// Remove the cyclically adjacent pair at `position`, `position+1` of the
// rotated word. The two values must be consecutive integers.
struct TrivialDeletion {
  Rotation rotation;
  std::size_t position = 0;
  bool operator==(const TrivialDeletion&) const = default;
};

// Swap m <-> m+1 and w <-> w+1 in the rotated word.
struct CrossingExchange {
  Rotation rotation;
  Side side = Side::Left;
  int m = 0;
  int w = 0;
  bool operator==(const CrossingExchange&) const = default;
};

using Move = std::variant<TrivialAddition, TrivialDeletion, CrossingExchange>;

PetalPermutation apply_trivial_addition(const PetalPermutation& sigma,
                                        const TrivialAddition& a);

std::vector<TrivialDeletion> find_deletable_pairs(
    const PetalPermutation& sigma);

PetalPermutation apply_trivial_deletion(const PetalPermutation& sigma,
                                        const TrivialDeletion& d);

struct ExchangeViolation {
  ErrorCode code = ErrorCode::Ok;
  std::string detail;
  std::optional<Pair> offending;  // set for NestingViolation
};

// nullopt when the exchange is legal.
std::optional<ExchangeViolation> validate_crossing_exchange(
    const PetalPermutation& sigma, const CrossingExchange& x);

PetalPermutation apply_crossing_exchange(const PetalPermutation& sigma,
                                         const CrossingExchange& x);

PetalPermutation apply_move(const PetalPermutation& sigma, const Move& move);

// The move undoing `move`, expressed on apply_move(sigma_before, move).
// Throws Error{NotApplicable} if move does not apply to sigma_before.
Move invert_move(const Move& move, const PetalPermutation& sigma_before);

struct LegalMove {
  Move move;
  PetalPermutation result;
};

// Every deletion and crossing exchange, plus additions when level_cap is set
// and the grown word (length 2n+3) fits under it. One entry per distinct
// resulting word, keeping the move with the smallest serialization; output is
// sorted by that serialization.
std::vector<LegalMove> enumerate_legal_moves(
    const PetalPermutation& sigma, std::optional<std::size_t> level_cap = {});

// Compact JSON text of a move (keys sorted), used for ordering and display.
std::string serialize_move(const Move& move);

}  // namespace petalkit
