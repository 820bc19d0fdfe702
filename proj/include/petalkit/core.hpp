#pragma once

// Petal and stem permutations, left/right pairings and the conversions
// between the two representations.
//
// A petal permutation is a cyclic word on {0, ..., 2n}; it is stored in the
// rotation that begins with 0. A stem permutation is a linear word on
// {0, ..., 2n+1} whose first entry is the level of the basepoint. Levels are
// counted from the top of the axis downward.

#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace petalkit {

enum class Side { Left, Right };

// Selects the word W = rotate(canonical, offset) from the cyclic class.
struct Rotation {
  std::size_t offset = 0;
  auto operator<=>(const Rotation&) const = default;
};

class PetalPermutation {
 public:
  // The single-petal unknot (0).
  PetalPermutation() : word_{0} {}

  // Validates and canonicalizes. Throws Error{NotAPermutation|EvenLength}.
  static PetalPermutation from_word(std::span<const int> word);

  std::span<const int> word() const noexcept { return word_; }
  std::size_t size() const noexcept { return word_.size(); }
  int n() const noexcept { return static_cast<int>(word_.size() / 2); }
  int operator[](std::size_t i) const { return word_[i]; }

  // The word W for a rotation. Throws Error{InvalidRotation}.
  std::vector<int> rotated(Rotation r) const;

  // The rotation r with rotated(r) == word, for a word in this cyclic class.
  // Throws Error{InvalidRotation} if word is not such a rotation.
  Rotation rotation_of(std::span<const int> word) const;

  std::string to_string() const;

  auto operator<=>(const PetalPermutation&) const = default;

 private:
  explicit PetalPermutation(std::vector<int> canonical)
      : word_(std::move(canonical)) {}
  std::vector<int> word_;
};

PetalPermutation canonicalize_petal(std::span<const int> word);

// Comma-separated decimal levels, e.g. "0,3,1,4,2".
std::string join_levels(std::span<const int> word);
// Parses "0,3,1,4,2" (whitespace tolerated, optional surrounding parens or
// brackets). Throws Error{ParseError}.
std::vector<int> parse_levels(std::string_view text);

struct Pair {
  std::vector<int> entries;  // one entry for basepoint pairs, otherwise two
  bool is_basepoint() const noexcept { return entries.size() == 1; }
  bool operator==(const Pair&) const = default;
};

struct Pairing {
  Side side = Side::Left;
  std::vector<Pair> pairs;
};

// Left: (p0),(p1,p2),...,(p2n-1,p2n). Right: (p0,p1),...,(p2n-2,p2n-1),(p2n).
Pairing pairing(const PetalPermutation& sigma, Rotation r, Side side);

class StemPermutation {
 public:
  StemPermutation() : word_{0, 1} {}

  // Throws Error{NotAPermutation|OddLength}.
  static StemPermutation from_word(std::span<const int> word);

  std::span<const int> word() const noexcept { return word_; }
  std::size_t size() const noexcept { return word_.size(); }
  int n() const noexcept { return static_cast<int>(word_.size() / 2) - 1; }
  int basepoint_level() const noexcept { return word_.front(); }
  int operator[](std::size_t i) const { return word_[i]; }

  std::string to_string() const { return join_levels(word_); }

  auto operator<=>(const StemPermutation&) const = default;

 private:
  explicit StemPermutation(std::vector<int> word) : word_(std::move(word)) {}
  std::vector<int> word_;
};

PetalPermutation stem_to_petal(const StemPermutation& tau);

// Inserts level t0 in front of the rotated word, shifting entries >= t0 up by
// one. Throws Error{LevelOutOfRange|InvalidRotation}.
StemPermutation petal_to_stem(const PetalPermutation& sigma, Rotation r = {},
                              int t0 = 0);

struct StrandId {
  Side side = Side::Left;
  int index = 0;  // l_j: 0..n, r_i: 1..n+1
  auto operator<=>(const StrandId&) const = default;
};

std::string to_string(StrandId id);

struct Strand {
  StrandId id;
  // Endpoint levels in traversal order: levels[0] is met first.
  std::array<int, 2> levels{};

  int low() const noexcept { return levels[0] < levels[1] ? levels[0] : levels[1]; }
  int high() const noexcept { return levels[0] < levels[1] ? levels[1] : levels[0]; }
  bool operator==(const Strand&) const = default;
};

// l_0, r_1, l_1, ..., l_n, r_{n+1} in traversal order from the basepoint.
std::vector<Strand> strands(const StemPermutation& tau);

struct StrandPairLink {
  StrandId strand;
  Pair pair;
};

// l_0 <-> (p0), l_j <-> (p_{2j-1}, p_{2j}), r_i <-> (p_{2i-2}, p_{2i-1}),
// r_{n+1} <-> (p_{2n}).
std::vector<StrandPairLink> strand_pair_correspondence(
    const PetalPermutation& sigma, Rotation r);

}  // namespace petalkit
