#include "petalkit/moves.hpp"

#include <algorithm>
#include <map>
#include <type_traits>

namespace petalkit {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// The rotated word with the pair inserted at positions position+1,
// position+2 (before canonicalization).
std::vector<int> grown_word(const PetalPermutation& sigma,
                            const TrivialAddition& a) {
  const std::size_t len = sigma.size();
  if (a.position >= len) {
    throw Error(ErrorCode::PositionOutOfRange,
                "insertion position " + std::to_string(a.position) +
                    " out of range 0.." + std::to_string(len - 1));
  }
  if (a.m < 0 || a.m > static_cast<int>(len)) {
    throw Error(ErrorCode::LevelOutOfRange,
                "inserted level m=" + std::to_string(a.m) +
                    " out of range 0.." + std::to_string(len));
  }
  const auto w = sigma.rotated(a.rotation);
  auto shift = [m = a.m](int v) { return v < m ? v : v + 2; };
  std::vector<int> out;
  out.reserve(len + 2);
  for (std::size_t i = 0; i <= a.position; ++i) out.push_back(shift(w[i]));
  if (a.orientation == Orientation::Ascending) {
    out.push_back(a.m);
    out.push_back(a.m + 1);
  } else {
    out.push_back(a.m + 1);
    out.push_back(a.m);
  }
  for (std::size_t i = a.position + 1; i < len; ++i) out.push_back(shift(w[i]));
  return out;
}

struct Shrunk {
  std::vector<int> word;  // remaining entries, starting just after the pair
  int low = 0;            // smaller value of the deleted pair
  bool ascending = true;  // pair read as low, low+1
};

Shrunk shrunk_word(const PetalPermutation& sigma, const TrivialDeletion& d) {
  const std::size_t len = sigma.size();
  if (len == 1) {
    throw Error(ErrorCode::SingletonUnderflow,
                "cannot delete a pair from a single-petal word");
  }
  if (d.position >= len) {
    throw Error(ErrorCode::PositionOutOfRange,
                "deletion position " + std::to_string(d.position) +
                    " out of range 0.." + std::to_string(len - 1));
  }
  const auto w = sigma.rotated(d.rotation);
  const int first = w[d.position];
  const int second = w[(d.position + 1) % len];
  if (first - second != 1 && second - first != 1) {
    throw Error(ErrorCode::NotConsecutivePair,
                "entries " + std::to_string(first) + "," +
                    std::to_string(second) + " are not consecutive values");
  }
  Shrunk out;
  out.low = std::min(first, second);
  out.ascending = first < second;
  out.word.reserve(len - 2);
  for (std::size_t i = 0; i + 2 < len; ++i) {
    const int v = w[(d.position + 2 + i) % len];
    out.word.push_back(v > out.low + 1 ? v - 2 : v);
  }
  return out;
}

std::vector<int> exchanged_word(const PetalPermutation& sigma,
                                const CrossingExchange& x) {
  if (auto violation = validate_crossing_exchange(sigma, x)) {
    throw Error(violation->code, violation->detail);
  }
  auto w = sigma.rotated(x.rotation);
  for (int& v : w) {
    if (v == x.m) v = x.m + 1;
    else if (v == x.m + 1) v = x.m;
    else if (v == x.w) v = x.w + 1;
    else if (v == x.w + 1) v = x.w;
  }
  return w;
}

std::string pair_text(const Pair& p) {
  return "(" + join_levels(p.entries) + ")";
}

}  // namespace

PetalPermutation apply_trivial_addition(const PetalPermutation& sigma,
                                        const TrivialAddition& a) {
  return PetalPermutation::from_word(grown_word(sigma, a));
}

std::vector<TrivialDeletion> find_deletable_pairs(
    const PetalPermutation& sigma) {
  std::vector<TrivialDeletion> out;
  const std::size_t len = sigma.size();
  if (len < 3) return out;
  for (std::size_t k = 0; k < len; ++k) {
    const int diff = sigma[k] - sigma[(k + 1) % len];
    if (diff == 1 || diff == -1) out.push_back({Rotation{0}, k});
  }
  return out;
}

PetalPermutation apply_trivial_deletion(const PetalPermutation& sigma,
                                        const TrivialDeletion& d) {
  return PetalPermutation::from_word(shrunk_word(sigma, d).word);
}

std::optional<ExchangeViolation> validate_crossing_exchange(
    const PetalPermutation& sigma, const CrossingExchange& x) {
  const int top = static_cast<int>(sigma.size()) - 1;  // 2n
  if (x.w < x.m + 2) {
    return ExchangeViolation{ErrorCode::BadLevels,
                             "need w >= m+2, got m=" + std::to_string(x.m) +
                                 " w=" + std::to_string(x.w),
                             std::nullopt};
  }
  if (x.m < 0 || x.w + 1 > top) {
    return ExchangeViolation{ErrorCode::LevelOutOfRange,
                             "levels m=" + std::to_string(x.m) +
                                 " w+1=" + std::to_string(x.w + 1) +
                                 " outside 0.." + std::to_string(top),
                             std::nullopt};
  }
  if (x.rotation.offset >= sigma.size()) {
    return ExchangeViolation{ErrorCode::InvalidRotation,
                             "rotation " + std::to_string(x.rotation.offset) +
                                 " out of range",
                             std::nullopt};
  }
  const auto pairs = pairing(sigma, x.rotation, x.side);
  const int lo = x.m + 2;
  const int hi = x.w - 1;
  bool found_delta = false;
  bool found_delta_prime = false;
  for (const auto& p : pairs.pairs) {
    if (p.is_basepoint()) {
      const int b = p.entries[0];
      if (b == x.m || b == x.m + 1 || b == x.w || b == x.w + 1) {
        return ExchangeViolation{ErrorCode::BasepointPairInvolved,
                                 "basepoint pair " + pair_text(p) +
                                     " holds an exchanged level",
                                 p};
      }
      continue;
    }
    const int a = std::min(p.entries[0], p.entries[1]);
    const int b = std::max(p.entries[0], p.entries[1]);
    if (a == x.m && b == x.w + 1) found_delta = true;
    if (a == x.m + 1 && b == x.w) found_delta_prime = true;
  }
  if (!found_delta || !found_delta_prime) {
    return ExchangeViolation{
        ErrorCode::PairsNotFound,
        std::string("no ") + (x.side == Side::Left ? "left" : "right") +
            "-pairs with endpoints {" + std::to_string(x.m) + "," +
            std::to_string(x.w + 1) + "} and {" + std::to_string(x.m + 1) +
            "," + std::to_string(x.w) + "}",
        std::nullopt};
  }
  for (const auto& p : pairs.pairs) {
    std::size_t inside = 0;
    for (int v : p.entries) {
      if (v >= lo && v <= hi) ++inside;
    }
    if (inside != 0 && inside != p.entries.size()) {
      return ExchangeViolation{ErrorCode::NestingViolation,
                               "pair " + pair_text(p) +
                                   " straddles the interval [" +
                                   std::to_string(lo) + "," +
                                   std::to_string(hi) + "]",
                               p};
    }
  }
  return std::nullopt;
}

PetalPermutation apply_crossing_exchange(const PetalPermutation& sigma,
                                         const CrossingExchange& x) {
  return PetalPermutation::from_word(exchanged_word(sigma, x));
}

PetalPermutation apply_move(const PetalPermutation& sigma, const Move& move) {
  return std::visit(
      overloaded{
          [&](const TrivialAddition& a) {
            return apply_trivial_addition(sigma, a);
          },
          [&](const TrivialDeletion& d) {
            return apply_trivial_deletion(sigma, d);
          },
          [&](const CrossingExchange& x) {
            return apply_crossing_exchange(sigma, x);
          },
      },
      move);
}

Move invert_move(const Move& move, const PetalPermutation& sigma_before) {
  try {
    return std::visit(
        overloaded{
            [&](const TrivialAddition& a) -> Move {
              const auto grown = grown_word(sigma_before, a);
              const auto after = PetalPermutation::from_word(grown);
              return TrivialDeletion{after.rotation_of(grown), a.position + 1};
            },
            [&](const TrivialDeletion& d) -> Move {
              const auto shrunk = shrunk_word(sigma_before, d);
              const auto after = PetalPermutation::from_word(shrunk.word);
              return TrivialAddition{after.rotation_of(shrunk.word),
                                     shrunk.word.size() - 1, shrunk.low,
                                     shrunk.ascending ? Orientation::Ascending
                                                      : Orientation::Descending};
            },
            [&](const CrossingExchange& x) -> Move {
              const auto swapped = exchanged_word(sigma_before, x);
              const auto after = PetalPermutation::from_word(swapped);
              return CrossingExchange{after.rotation_of(swapped), x.side, x.m,
                                      x.w};
            },
        },
        move);
  } catch (const Error& e) {
    throw Error(ErrorCode::NotApplicable,
                "move " + serialize_move(move) + " does not apply to (" +
                    sigma_before.to_string() + "): " + e.what());
  }
}

std::vector<LegalMove> enumerate_legal_moves(
    const PetalPermutation& sigma, std::optional<std::size_t> level_cap) {
  const std::size_t len = sigma.size();
  // result word -> (serialization, move)
  std::map<PetalPermutation, std::pair<std::string, Move>> best;
  auto offer = [&](const Move& move, PetalPermutation result) {
    std::string key = serialize_move(move);
    auto it = best.find(result);
    if (it == best.end()) {
      best.emplace(std::move(result), std::make_pair(std::move(key), move));
    } else if (key < it->second.first) {
      it->second = {std::move(key), move};
    }
  };

  for (const auto& d : find_deletable_pairs(sigma)) {
    offer(d, apply_trivial_deletion(sigma, d));
  }

  for (std::size_t r = 0; r < len; ++r) {
    for (Side side : {Side::Left, Side::Right}) {
      const auto pairs = pairing(sigma, Rotation{r}, side);
      for (const auto& p : pairs.pairs) {
        if (p.is_basepoint()) continue;
        const int a = std::min(p.entries[0], p.entries[1]);
        const int b = std::max(p.entries[0], p.entries[1]);
        if (b < a + 3) continue;
        CrossingExchange x{Rotation{r}, side, a, b - 1};
        if (validate_crossing_exchange(sigma, x)) continue;
        offer(x, apply_crossing_exchange(sigma, x));
      }
    }
  }

  if (level_cap && len + 2 <= *level_cap) {
    for (std::size_t j = 0; j < len; ++j) {
      for (int m = 0; m <= static_cast<int>(len); ++m) {
        for (Orientation o : {Orientation::Ascending, Orientation::Descending}) {
          TrivialAddition a{Rotation{0}, j, m, o};
          offer(a, apply_trivial_addition(sigma, a));
        }
      }
    }
  }

  std::vector<std::pair<std::string, LegalMove>> keyed;
  keyed.reserve(best.size());
  for (auto& [result, entry] : best) {
    keyed.push_back({entry.first, LegalMove{entry.second, result}});
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<LegalMove> out;
  out.reserve(keyed.size());
  for (auto& [key, lm] : keyed) out.push_back(std::move(lm));
  return out;
}

// Matches nlohmann::json::dump() of move_to_json(move): keys in sorted order,
// no whitespace.
std::string serialize_move(const Move& move) {
  return std::visit(
      overloaded{
          [](const TrivialAddition& a) {
            return "{\"m\":" + std::to_string(a.m) + ",\"orient\":\"" +
                   (a.orientation == Orientation::Ascending ? "asc" : "desc") +
                   "\",\"pos\":" + std::to_string(a.position) +
                   ",\"rotation\":" + std::to_string(a.rotation.offset) +
                   ",\"type\":\"add\"}";
          },
          [](const TrivialDeletion& d) {
            return "{\"pos\":" + std::to_string(d.position) +
                   ",\"rotation\":" + std::to_string(d.rotation.offset) +
                   ",\"type\":\"del\"}";
          },
          [](const CrossingExchange& x) {
            return "{\"m\":" + std::to_string(x.m) +
                   ",\"rotation\":" + std::to_string(x.rotation.offset) +
                   ",\"side\":\"" + (x.side == Side::Left ? "L" : "R") +
                   "\",\"type\":\"xchg\",\"w\":" + std::to_string(x.w) + "}";
          },
      },
      move);
}

}  // namespace petalkit
