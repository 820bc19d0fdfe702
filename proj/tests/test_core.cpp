#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "petalkit/core.hpp"
#include "petalkit/error.hpp"

using namespace petalkit;

namespace {

PetalPermutation petal(std::vector<int> w) { return PetalPermutation::from_word(w); }
StemPermutation stem(std::vector<int> w) { return StemPermutation::from_word(w); }

std::vector<int> vec(std::span<const int> s) { return {s.begin(), s.end()}; }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Ok;
}

// Every canonical word of length 2n+1.
std::vector<PetalPermutation> all_petals(int length) {
  std::vector<int> rest(static_cast<std::size_t>(length - 1));
  std::iota(rest.begin(), rest.end(), 1);
  std::vector<PetalPermutation> out;
  do {
    std::vector<int> w{0};
    w.insert(w.end(), rest.begin(), rest.end());
    out.push_back(petal(w));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

}  // namespace

TEST_CASE("canonicalize rotates to the leading zero") {
  CHECK(vec(petal({3, 1, 4, 2, 0}).word()) == std::vector<int>{0, 3, 1, 4, 2});
  CHECK(vec(petal({6, 4, 2, 0, 3, 5, 1}).word()) ==
        std::vector<int>{0, 3, 5, 1, 6, 4, 2});
  CHECK(vec(petal({0}).word()) == std::vector<int>{0});
}

TEST_CASE("canonicalize rejects bad words") {
  CHECK(code_of([] { petal({0, 1}); }) == ErrorCode::EvenLength);
  CHECK(code_of([] { petal({}); }) == ErrorCode::EvenLength);
  CHECK(code_of([] { petal({0, 1, 1}); }) == ErrorCode::NotAPermutation);
  CHECK(code_of([] { petal({0, 1, 3}); }) == ErrorCode::NotAPermutation);
  CHECK(code_of([] { petal({0, -1, 2}); }) == ErrorCode::NotAPermutation);
}

TEST_CASE("canonical form is rotation invariant and idempotent") {
  for (const auto& p : all_petals(5)) {
    for (std::size_t k = 0; k < p.size(); ++k) {
      auto w = p.rotated(Rotation{k});
      CHECK(petal(w) == p);
      CHECK(p.rotation_of(w) == Rotation{k});
    }
    CHECK(petal(vec(p.word())) == p);
  }
  // Distinct cyclic classes stay distinct.
  CHECK(petal({0, 3, 1, 4, 2}) != petal({0, 3, 4, 1, 2}));
}

TEST_CASE("rotation bounds") {
  const auto p = petal({0, 1, 2});
  CHECK(code_of([&] { p.rotated(Rotation{3}); }) == ErrorCode::InvalidRotation);
  CHECK(code_of([&] { p.rotation_of(std::vector<int>{0, 2, 1}); }) ==
        ErrorCode::InvalidRotation);
}

TEST_CASE("parse_levels accepts the usual spellings") {
  CHECK(parse_levels("3,1,4,2,0") == std::vector<int>{3, 1, 4, 2, 0});
  CHECK(parse_levels(" (0, 10, 2) ") == std::vector<int>{0, 10, 2});
  CHECK(parse_levels("[5]") == std::vector<int>{5});
  CHECK(code_of([] { parse_levels("1,,2"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_levels("1,x"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_levels(""); }) == ErrorCode::ParseError);
}

TEST_CASE("pairing of the word 5321640") {
  // W = 5,3,2,1,6,4,0 is rotation 1 of the canonical word 0,5,3,2,1,6,4.
  const auto sigma = petal({5, 3, 2, 1, 6, 4, 0});
  const Rotation r = sigma.rotation_of(std::vector<int>{5, 3, 2, 1, 6, 4, 0});
  const auto left = pairing(sigma, r, Side::Left);
  const auto right = pairing(sigma, r, Side::Right);
  CHECK(left.pairs == std::vector<Pair>{{{5}}, {{3, 2}}, {{1, 6}}, {{4, 0}}});
  CHECK(right.pairs == std::vector<Pair>{{{5, 3}}, {{2, 1}}, {{6, 4}}, {{0}}});
  CHECK(pairing(petal({0}), Rotation{0}, Side::Left).pairs ==
        std::vector<Pair>{{{0}}});
}

TEST_CASE("pairings concatenate back to W with one basepoint pair") {
  for (const auto& p : all_petals(7)) {
    for (std::size_t k = 0; k < p.size(); ++k) {
      const auto w = p.rotated(Rotation{k});
      for (Side side : {Side::Left, Side::Right}) {
        const auto pr = pairing(p, Rotation{k}, side);
        std::vector<int> joined;
        int singletons = 0;
        for (const auto& pair : pr.pairs) {
          joined.insert(joined.end(), pair.entries.begin(), pair.entries.end());
          singletons += pair.is_basepoint();
        }
        CHECK(joined == w);
        CHECK(singletons == 1);
        CHECK((side == Side::Left ? pr.pairs.front() : pr.pairs.back())
                  .is_basepoint());
      }
    }
  }
}

TEST_CASE("stem_to_petal") {
  CHECK(stem_to_petal(stem({2, 4, 1, 5, 3, 0})) == petal({3, 1, 4, 2, 0}));
  CHECK(stem_to_petal(stem({0, 1})) == petal({0}));
  CHECK(stem_to_petal(stem({0, 4, 2, 5, 3, 1})) == petal({0, 3, 1, 4, 2}));
}

TEST_CASE("petal_to_stem") {
  const auto trefoil = petal({3, 1, 4, 2, 0});
  const auto r = trefoil.rotation_of(std::vector<int>{3, 1, 4, 2, 0});
  CHECK(petal_to_stem(trefoil, r, 2) == stem({2, 4, 1, 5, 3, 0}));
  CHECK(petal_to_stem(petal({0}), Rotation{0}, 0) == stem({0, 1}));
  CHECK(petal_to_stem(trefoil, r, 0) == stem({0, 4, 2, 5, 3, 1}));
  // Defaults: rotation 0 of the canonical word, t0 = 0.
  CHECK(petal_to_stem(trefoil) == stem({0, 1, 4, 2, 5, 3}));
  CHECK(code_of([&] { petal_to_stem(trefoil, r, 6); }) ==
        ErrorCode::LevelOutOfRange);
  CHECK(code_of([&] { petal_to_stem(trefoil, r, -1); }) ==
        ErrorCode::LevelOutOfRange);
  CHECK(code_of([&] { petal_to_stem(trefoil, Rotation{5}, 0); }) ==
        ErrorCode::InvalidRotation);
}

TEST_CASE("stem words are validated") {
  CHECK(code_of([] { stem({0, 1, 2}); }) == ErrorCode::OddLength);
  CHECK(code_of([] { stem({}); }) == ErrorCode::OddLength);
  CHECK(code_of([] { stem({0, 2}); }) == ErrorCode::NotAPermutation);
}

TEST_CASE("stem/petal round trip over every embedding, length <= 7") {
  for (int len : {1, 3, 5, 7}) {
    for (const auto& p : all_petals(len)) {
      for (std::size_t k = 0; k < p.size(); ++k) {
        for (int t0 = 0; t0 <= len; ++t0) {
          const auto tau = petal_to_stem(p, Rotation{k}, t0);
          CHECK(tau.basepoint_level() == t0);
          REQUIRE(stem_to_petal(tau) == p);
        }
      }
    }
  }
}

TEST_CASE("strands of the trefoil stem") {
  const auto s = strands(stem({2, 4, 1, 5, 3, 0}));
  REQUIRE(s.size() == 6);
  const std::vector<std::pair<std::string, std::array<int, 2>>> expected{
      {"l0", {2, 4}}, {"r1", {4, 1}}, {"l1", {1, 5}},
      {"r2", {5, 3}}, {"l2", {3, 0}}, {"r3", {0, 2}}};
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(to_string(s[i].id) == expected[i].first);
    CHECK(s[i].levels == expected[i].second);
  }
}

TEST_CASE("strands of small stems") {
  auto s = strands(stem({0, 1}));
  REQUIRE(s.size() == 2);
  CHECK(to_string(s[0].id) == "l0");
  CHECK(s[0].levels == std::array<int, 2>{0, 1});
  CHECK(to_string(s[1].id) == "r1");
  CHECK(s[1].levels == std::array<int, 2>{1, 0});

  s = strands(stem({0, 1, 2, 3}));
  REQUIRE(s.size() == 4);
  CHECK(s[2].levels == std::array<int, 2>{2, 3});
  CHECK(s[3].levels == std::array<int, 2>{3, 0});
  CHECK(to_string(s[3].id) == "r2");
}

TEST_CASE("every level lies on exactly two strands") {
  for (const auto& p : all_petals(7)) {
    const auto tau = petal_to_stem(p, Rotation{1}, 3);
    const auto s = strands(tau);
    CHECK(s.size() == tau.size());
    std::vector<int> uses(tau.size(), 0);
    for (const auto& st : s) {
      ++uses[static_cast<std::size_t>(st.levels[0])];
      ++uses[static_cast<std::size_t>(st.levels[1])];
    }
    CHECK(std::all_of(uses.begin(), uses.end(), [](int u) { return u == 2; }));
  }
}

TEST_CASE("strand/pair correspondence") {
  const auto sigma = petal({3, 1, 4, 2, 0});
  const auto r = sigma.rotation_of(std::vector<int>{3, 1, 4, 2, 0});
  const auto links = strand_pair_correspondence(sigma, r);
  auto find = [&](const std::string& name) {
    for (const auto& l : links) {
      if (to_string(l.strand) == name) return l.pair.entries;
    }
    return std::vector<int>{};
  };
  CHECK(find("l0") == std::vector<int>{3});
  CHECK(find("l1") == std::vector<int>{1, 4});
  CHECK(find("l2") == std::vector<int>{2, 0});
  CHECK(find("r1") == std::vector<int>{3, 1});
  CHECK(find("r2") == std::vector<int>{4, 2});
  CHECK(find("r3") == std::vector<int>{0});

  const auto unknot = strand_pair_correspondence(petal({0}), Rotation{0});
  REQUIRE(unknot.size() == 2);
  CHECK(to_string(unknot[0].strand) == "l0");
  CHECK(unknot[0].pair.entries == std::vector<int>{0});
  CHECK(to_string(unknot[1].strand) == "r1");
  CHECK(unknot[1].pair.entries == std::vector<int>{0});
}

TEST_CASE("corresponding strand levels are the pair entries shifted past t0") {
  for (const auto& p : all_petals(5)) {
    for (std::size_t k = 0; k < p.size(); ++k) {
      for (int t0 = 0; t0 <= 5; ++t0) {
        const auto tau = petal_to_stem(p, Rotation{k}, t0);
        const auto s = strands(tau);
        for (const auto& link : strand_pair_correspondence(p, Rotation{k})) {
          const auto it = std::find_if(s.begin(), s.end(), [&](const Strand& st) {
            return st.id == link.strand;
          });
          REQUIRE(it != s.end());
          // The stem levels of the strand, with the basepoint level removed,
          // are exactly the pair entries.
          std::vector<int> levels;
          for (int lv : it->levels) {
            if (it->id.index == 0 || it->id == StrandId{Side::Right, p.n() + 1}) {
              if (lv == t0) continue;
            }
            levels.push_back(lv > t0 ? lv - 1 : lv);
          }
          CHECK(levels == link.pair.entries);
        }
      }
    }
  }
}
