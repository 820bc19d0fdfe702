#include "petalkit/core.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "petalkit/error.hpp"

namespace petalkit {

namespace {

// Throws unless word is a permutation of {0, ..., size-1}.
void require_permutation(std::span<const int> word) {
  std::vector<bool> seen(word.size(), false);
  for (int v : word) {
    if (v < 0 || static_cast<std::size_t>(v) >= word.size()) {
      throw Error(ErrorCode::NotAPermutation,
                  "entry " + std::to_string(v) + " out of range 0.." +
                      std::to_string(static_cast<long>(word.size()) - 1));
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::NotAPermutation,
                  "duplicate entry " + std::to_string(v));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

}  // namespace

PetalPermutation PetalPermutation::from_word(std::span<const int> word) {
  if (word.size() % 2 == 0) {
    throw Error(ErrorCode::EvenLength,
                "petal word must have odd length, got " +
                    std::to_string(word.size()));
  }
  require_permutation(word);
  auto zero = std::find(word.begin(), word.end(), 0);
  std::vector<int> canonical;
  canonical.reserve(word.size());
  canonical.insert(canonical.end(), zero, word.end());
  canonical.insert(canonical.end(), word.begin(), zero);
  return PetalPermutation(std::move(canonical));
}

std::vector<int> PetalPermutation::rotated(Rotation r) const {
  if (r.offset >= word_.size()) {
    throw Error(ErrorCode::InvalidRotation,
                "rotation " + std::to_string(r.offset) +
                    " out of range for word of length " +
                    std::to_string(word_.size()));
  }
  std::vector<int> out(word_.begin() + static_cast<std::ptrdiff_t>(r.offset),
                       word_.end());
  out.insert(out.end(), word_.begin(),
             word_.begin() + static_cast<std::ptrdiff_t>(r.offset));
  return out;
}

Rotation PetalPermutation::rotation_of(std::span<const int> word) const {
  if (word.size() != word_.size() || word.empty()) {
    throw Error(ErrorCode::InvalidRotation, "word is not a rotation of " +
                                                to_string());
  }
  auto it = std::find(word_.begin(), word_.end(), word.front());
  if (it == word_.end()) {
    throw Error(ErrorCode::InvalidRotation, "word is not a rotation of " +
                                                to_string());
  }
  Rotation r{static_cast<std::size_t>(it - word_.begin())};
  auto candidate = rotated(r);
  if (!std::equal(candidate.begin(), candidate.end(), word.begin())) {
    throw Error(ErrorCode::InvalidRotation, "word is not a rotation of " +
                                                to_string());
  }
  return r;
}

std::string PetalPermutation::to_string() const { return join_levels(word_); }

PetalPermutation canonicalize_petal(std::span<const int> word) {
  return PetalPermutation::from_word(word);
}

std::string join_levels(std::span<const int> word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(word[i]);
  }
  return out;
}

std::vector<int> parse_levels(std::string_view text) {
  std::string cleaned;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    cleaned += c;
  }
  if (cleaned.size() >= 2 &&
      ((cleaned.front() == '(' && cleaned.back() == ')') ||
       (cleaned.front() == '[' && cleaned.back() == ']'))) {
    cleaned = cleaned.substr(1, cleaned.size() - 2);
  }
  if (cleaned.empty()) {
    throw Error(ErrorCode::ParseError, "empty level list");
  }
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= cleaned.size()) {
    std::size_t comma = cleaned.find(',', pos);
    if (comma == std::string::npos) comma = cleaned.size();
    std::string_view token(cleaned.data() + pos, comma - pos);
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() ||
        ptr != token.data() + token.size()) {
      throw Error(ErrorCode::ParseError,
                  "bad level '" + std::string(token) + "' in '" +
                      std::string(text) + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

Pairing pairing(const PetalPermutation& sigma, Rotation r, Side side) {
  const auto w = sigma.rotated(r);
  Pairing out;
  out.side = side;
  std::size_t i = 0;
  if (side == Side::Left) {
    out.pairs.push_back(Pair{{w[0]}});
    i = 1;
  }
  for (; i + 1 < w.size(); i += 2) {
    out.pairs.push_back(Pair{{w[i], w[i + 1]}});
  }
  if (side == Side::Right) out.pairs.push_back(Pair{{w.back()}});
  return out;
}

StemPermutation StemPermutation::from_word(std::span<const int> word) {
  if (word.empty() || word.size() % 2 != 0) {
    throw Error(ErrorCode::OddLength,
                "stem word must have even length >= 2, got " +
                    std::to_string(word.size()));
  }
  require_permutation(word);
  return StemPermutation(std::vector<int>(word.begin(), word.end()));
}

PetalPermutation stem_to_petal(const StemPermutation& tau) {
  const int base = tau.basepoint_level();
  std::vector<int> w;
  w.reserve(tau.size() - 1);
  for (std::size_t i = 1; i < tau.size(); ++i) {
    w.push_back(tau[i] > base ? tau[i] - 1 : tau[i]);
  }
  return PetalPermutation::from_word(w);
}

StemPermutation petal_to_stem(const PetalPermutation& sigma, Rotation r,
                              int t0) {
  const int top = static_cast<int>(sigma.size());  // 2n+1
  if (t0 < 0 || t0 > top) {
    throw Error(ErrorCode::LevelOutOfRange,
                "basepoint level " + std::to_string(t0) +
                    " out of range 0.." + std::to_string(top));
  }
  const auto w = sigma.rotated(r);
  std::vector<int> tau;
  tau.reserve(w.size() + 1);
  tau.push_back(t0);
  for (int v : w) tau.push_back(v >= t0 ? v + 1 : v);
  return StemPermutation::from_word(tau);
}

std::string to_string(StrandId id) {
  return (id.side == Side::Left ? "l" : "r") + std::to_string(id.index);
}

std::vector<Strand> strands(const StemPermutation& tau) {
  const auto t = tau.word();
  const std::size_t len = t.size();
  std::vector<Strand> out;
  out.reserve(len);
  // Strand k joins t_k to t_{k+1} (wrapping): even k is l_{k/2}, odd k is
  // r_{(k+1)/2}.
  for (std::size_t k = 0; k < len; ++k) {
    Strand s;
    if (k % 2 == 0) {
      s.id = {Side::Left, static_cast<int>(k / 2)};
    } else {
      s.id = {Side::Right, static_cast<int>((k + 1) / 2)};
    }
    s.levels = {t[k], t[(k + 1) % len]};
    out.push_back(s);
  }
  return out;
}

std::vector<StrandPairLink> strand_pair_correspondence(
    const PetalPermutation& sigma, Rotation r) {
  const auto left = pairing(sigma, r, Side::Left);
  const auto right = pairing(sigma, r, Side::Right);
  std::vector<StrandPairLink> out;
  out.reserve(left.pairs.size() + right.pairs.size());
  for (std::size_t j = 0; j < left.pairs.size(); ++j) {
    out.push_back({{Side::Left, static_cast<int>(j)}, left.pairs[j]});
  }
  for (std::size_t i = 0; i < right.pairs.size(); ++i) {
    out.push_back({{Side::Right, static_cast<int>(i + 1)}, right.pairs[i]});
  }
  return out;
}

}  // namespace petalkit
