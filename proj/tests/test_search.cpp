#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>

#include "oracles.hpp"
#include "petalkit/error.hpp"
#include "petalkit/invariants.hpp"
#include "petalkit/search.hpp"

using namespace petalkit;

namespace {

PetalPermutation petal(std::vector<int> w) { return PetalPermutation::from_word(w); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Ok;
}

// The four-move chain from (0351642) to (135026478).
MovePath worked_chain() {
  return replay(petal({0, 3, 5, 1, 6, 4, 2}),
                {TrivialAddition{Rotation{0}, 3, 0, Orientation::Ascending},
                 TrivialAddition{Rotation{0}, 7, 2, Orientation::Ascending},
                 CrossingExchange{Rotation{0}, Side::Left, 1, 9},
                 TrivialDeletion{Rotation{0}, 2}});
}

}  // namespace

TEST_CASE("replay of the worked chain") {
  const auto path = worked_chain();
  REQUIRE(path.steps.size() == 4);
  CHECK(path.steps[0] == petal({2, 5, 7, 3, 0, 1, 8, 6, 4}));
  CHECK(path.steps[1] == petal({4, 7, 9, 2, 3, 5, 0, 1, 10, 8, 6}));
  CHECK(path.steps[2] == petal({0, 2, 9, 8, 6, 4, 7, 10, 1, 3, 5}));
  CHECK(path.steps[3] == petal({1, 3, 5, 0, 2, 6, 4, 7, 8}));
  CHECK(path.final_word() == petal({1, 3, 5, 0, 2, 6, 4, 7, 8}));
  CHECK_FALSE(verify_path(path, true));
}

TEST_CASE("replay reports the failing step") {
  bool threw = false;
  try {
    replay(petal({0, 1, 2}), {TrivialDeletion{Rotation{0}, 1}, TrivialDeletion{Rotation{0}, 0}});
  } catch (const Error& e) {
    threw = e.code() == ErrorCode::IllegalMoveAtStep;
    CHECK(std::string(e.what()).find('2') != std::string::npos);
  }
  CHECK(threw);
}

TEST_CASE("verify_path negative cases") {
  auto path = worked_chain();

  SUBCASE("forged exchange") {
    path.moves[2] = CrossingExchange{Rotation{0}, Side::Left, 1, 8};
    const auto f = verify_path(path, true);
    REQUIRE(f);
    CHECK(f->code == ErrorCode::IllegalMoveAtStep);
    CHECK(f->step == 3);
  }
  SUBCASE("wrong end word") {
    path.end = petal({0, 3, 1, 4, 2});
    const auto f = verify_path(path, false);
    REQUIRE(f);
    CHECK(f->code == ErrorCode::ReplayMismatchAtStep);
    CHECK(f->step == 4);
  }
  SUBCASE("wrong intermediate word") {
    path.steps[1] = petal({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
    const auto f = verify_path(path, false);
    REQUIRE(f);
    CHECK(f->code == ErrorCode::ReplayMismatchAtStep);
    CHECK(f->step == 2);
  }
  SUBCASE("step list of the wrong size") {
    path.steps.pop_back();
    const auto f = verify_path(path, false);
    REQUIRE(f);
    CHECK(f->code == ErrorCode::ReplayMismatchAtStep);
  }
  SUBCASE("unreplayed script") {
    path.steps.clear();
    path.end.reset();
    CHECK_FALSE(verify_path(path, true));
  }
}

TEST_CASE("find_path examples") {
  SearchConfig cfg;
  cfg.petal_bound = 11;
  cfg.depth_bound = 6;
  cfg.bidirectional = true;
  const auto from = petal({0, 3, 5, 1, 6, 4, 2});
  const auto to = petal({1, 3, 5, 0, 2, 6, 4, 7, 8});
  const auto path = find_path(from, to, cfg);
  CHECK(path.moves.size() <= 4);
  CHECK(path.final_word() == to);
  CHECK_FALSE(verify_path(path, true));

  SearchConfig one;
  one.petal_bound = 3;
  one.depth_bound = 1;
  const auto grow = find_path(petal({0}), petal({0, 1, 2}), one);
  REQUIRE(grow.moves.size() == 1);
  CHECK(std::holds_alternative<TrivialAddition>(grow.moves[0]));

  const auto same = find_path(from, from, cfg);
  CHECK(same.moves.empty());
  CHECK(same.final_word() == from);

  SearchConfig prefilter;
  prefilter.petal_bound = 7;
  CHECK(code_of([&] { find_path(petal({0, 3, 1, 4, 2}), from, prefilter); }) ==
        ErrorCode::InvariantMismatch);

  SearchConfig tight;
  tight.petal_bound = 5;
  tight.depth_bound = 1;
  tight.invariant_prefilter = false;
  CHECK(code_of([&] { find_path(petal({0, 3, 1, 4, 2}), petal({0}), tight); }) ==
        ErrorCode::BoundsExhausted);
}

TEST_CASE("search configuration is validated") {
  SearchConfig even;
  even.petal_bound = 8;
  CHECK(code_of([&] { validate_config(even, petal({0}), petal({0})); }) ==
        ErrorCode::InvalidConfig);
  SearchConfig small;
  small.petal_bound = 3;
  CHECK(code_of([&] {
          find_path(petal({0, 3, 1, 4, 2}), petal({0}), small);
        }) == ErrorCode::InvalidConfig);
}

TEST_CASE("unidirectional and bidirectional search agree on path length") {
  SearchConfig uni;
  uni.petal_bound = 7;
  uni.depth_bound = 4;
  SearchConfig bi = uni;
  bi.bidirectional = true;
  SearchConfig par = uni;
  par.threads = 4;
  for (const auto& p : oracle::all_petals(5)) {
    if (alexander_of_petal(p).polynomial != LaurentPolynomial(1)) continue;
    const auto a = find_path(p, petal({0}), uni);
    const auto b = find_path(p, petal({0}), bi);
    const auto c = find_path(p, petal({0}), par);
    CHECK(a.moves.size() == b.moves.size());
    CHECK(serialize_move(a.moves.front()) == serialize_move(c.moves.front()));
    CHECK(a.moves.size() == c.moves.size());
    CHECK_FALSE(verify_path(a, true));
    CHECK_FALSE(verify_path(b, true));
  }
}

TEST_CASE("search is symmetric") {
  SearchConfig cfg;
  cfg.petal_bound = 7;
  cfg.depth_bound = 3;
  cfg.bidirectional = true;
  const std::vector<std::pair<PetalPermutation, PetalPermutation>> cases{
      {petal({0, 1, 2}), petal({0, 2, 1, 3, 4})},
      {petal({0, 3, 1, 4, 2}), petal({0, 3, 6, 4, 1, 5, 2})},
      {petal({0, 2, 4, 1, 3}), petal({0, 3, 1, 4, 2})},
  };
  for (const auto& [a, b] : cases) {
    const bool forward = code_of([&] { find_path(a, b, cfg); }) == ErrorCode::Ok;
    const bool backward = code_of([&] { find_path(b, a, cfg); }) == ErrorCode::Ok;
    CHECK(forward == backward);
  }
}

TEST_CASE("find_path recovers random short walks") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const auto start = random_petal(static_cast<int>(rng() % 3), rng());
    auto cur = start;
    const std::size_t steps = rng() % 4;
    for (std::size_t s = 0; s < steps; ++s) {
      const auto moves = enumerate_legal_moves(cur, std::size_t{7});
      if (moves.empty()) break;
      cur = moves[rng() % moves.size()].result;
    }
    SearchConfig cfg;
    cfg.petal_bound = 7;
    cfg.depth_bound = 5;
    cfg.bidirectional = true;
    const auto path = find_path(start, cur, cfg);
    REQUIRE(path.moves.size() <= steps);
    REQUIRE_FALSE(verify_path(path, true));
    REQUIRE(path.final_word() == cur);
  }
}

TEST_CASE("random_petal") {
  CHECK(random_petal(0, 5) == petal({0}));
  CHECK(random_petal(4, 123) == random_petal(4, 123));
  CHECK(random_petal(3, 1).size() == 7);
  CHECK(code_of([] { random_petal(-1, 0); }) == ErrorCode::InvalidConfig);
}

TEST_CASE("random_petal is uniform for n = 2") {
  constexpr int kSamples = 100000;
  std::map<std::vector<int>, int> counts;
  for (int i = 0; i < kSamples; ++i) {
    const auto p = random_petal(2, static_cast<std::uint64_t>(i) * 2654435761u + 17);
    ++counts[std::vector<int>(p.word().begin(), p.word().end())];
  }
  CHECK(counts.size() == 24);
  // 23 degrees of freedom; the 0.999 quantile is about 49.7.
  CHECK(oracle::chi_squared_uniform(counts, 24, kSamples) < 49.7);
}

TEST_CASE("canonical keys") {
  CHECK(canonical_key(petal({3, 1, 4, 2, 0})) == canonical_key(petal({4, 2, 0, 3, 1})));
  CHECK(canonical_key(petal({0, 3, 1, 4, 2})) != canonical_key(petal({0, 3, 4, 1, 2})));
  // Fixed encoding: two little-endian bytes per level.
  CHECK(canonical_key(petal({0, 2, 1})) == std::string("\0\0\2\0\1\0", 6));
  for (const auto& a : oracle::all_petals(5)) {
    for (const auto& b : oracle::all_petals(5)) {
      REQUIRE((canonical_key(a) == canonical_key(b)) == (a == b));
    }
  }
}
