#include "petalkit/diagram.hpp"

#include <algorithm>
#include <regex>

#include "petalkit/error.hpp"

namespace petalkit {

namespace {

int direction(const Strand& s) { return s.levels[0] < s.levels[1] ? 1 : -1; }

int sgn(long v) { return (v > 0) - (v < 0); }

// Walking a strand with increasing level at a point of its circle, the
// tangent is proportional to (k (c - y), |x|) in level coordinates, with
// k = +1 on the right and -1 on the left. Flipping to the y-up drawing frame
// and taking cross(T_over, T_under) leaves
// s_over * s_under * k * sgn(c_under - c_over).
int crossing_sign(const Strand& over, const Strand& under) {
  const int k = over.id.side == Side::Right ? 1 : -1;
  const long center_over = over.levels[0] + over.levels[1];
  const long center_under = under.levels[0] + under.levels[1];
  return direction(over) * direction(under) * k *
         sgn(center_under - center_over);
}

}  // namespace

bool strands_cross(const Strand& a, const Strand& b) {
  if (a.id.side != b.id.side) return false;
  const long d0 = a.levels[0], d1 = a.levels[1];
  const long l0 = b.levels[0], l1 = b.levels[1];
  return (d0 - l0) * (d1 - l0) * (d0 - l1) * (d1 - l1) < 0;
}

std::vector<std::pair<Strand, Strand>> crossing_pairs(
    const StemPermutation& tau) {
  const auto all = strands(tau);
  std::vector<std::pair<Strand, Strand>> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (strands_cross(all[i], all[j])) out.emplace_back(all[i], all[j]);
    }
  }
  return out;
}

Rational crossing_height(const Strand& a, const Strand& b) {
  if (!strands_cross(a, b)) {
    throw Error(ErrorCode::DoNotCross,
                to_string(a.id) + " and " + to_string(b.id) + " do not cross");
  }
  const std::int64_t pa = std::int64_t{a.levels[0]} * a.levels[1];
  const std::int64_t pb = std::int64_t{b.levels[0]} * b.levels[1];
  const std::int64_t sa = std::int64_t{a.levels[0]} + a.levels[1];
  const std::int64_t sb = std::int64_t{b.levels[0]} + b.levels[1];
  return Rational(pa - pb, sa - sb);
}

std::vector<Passage> ReducedStemDiagram::passages() const {
  std::vector<Passage> out;
  out.reserve(2 * crossings.size());
  for (std::size_t s = 0; s < strands.size(); ++s) {
    for (int id : strand_crossings[s]) {
      out.push_back({id, crossing(id).over == s});
    }
  }
  return out;
}

ReducedStemDiagram build_diagram(const StemPermutation& tau) {
  ReducedStemDiagram d;
  d.stem = tau;
  d.strands = strands(tau);
  const std::size_t count = d.strands.size();

  std::vector<Crossing> raw;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      const Strand& a = d.strands[i];
      const Strand& b = d.strands[j];
      if (!strands_cross(a, b)) continue;
      Crossing c;
      c.strand_a = i;
      c.strand_b = j;
      // l_i over l_j for i > j; r_i under r_j for i > j.
      c.over = a.id.side == Side::Left ? j : i;
      c.height = crossing_height(a, b);
      c.sign = crossing_sign(d.strands[c.over], d.strands[c.under()]);
      c.id = static_cast<int>(raw.size());  // provisional, 0-based
      raw.push_back(c);
    }
  }

  std::vector<std::vector<int>> along(count);
  for (const auto& c : raw) {
    along[c.strand_a].push_back(c.id);
    along[c.strand_b].push_back(c.id);
  }
  for (std::size_t s = 0; s < count; ++s) {
    const bool rising = direction(d.strands[s]) > 0;
    std::sort(along[s].begin(), along[s].end(), [&](int x, int y) {
      const auto& hx = raw[static_cast<std::size_t>(x)].height;
      const auto& hy = raw[static_cast<std::size_t>(y)].height;
      return rising ? hx < hy : hy < hx;
    });
  }

  // Renumber crossings 1..N by first appearance along the knot.
  std::vector<int> renumber(raw.size(), 0);
  int next = 1;
  for (const auto& seq : along) {
    for (int id : seq) {
      auto& slot = renumber[static_cast<std::size_t>(id)];
      if (slot == 0) slot = next++;
    }
  }
  d.crossings.resize(raw.size());
  for (auto c : raw) {
    const int fresh = renumber[static_cast<std::size_t>(c.id)];
    c.id = fresh;
    d.crossings[static_cast<std::size_t>(fresh - 1)] = c;
  }
  for (auto& seq : along) {
    for (int& id : seq) id = renumber[static_cast<std::size_t>(id)];
  }
  d.strand_crossings = std::move(along);
  return d;
}

ReducedStemDiagram petal_to_diagram(const PetalPermutation& sigma) {
  return build_diagram(petal_to_stem(sigma, Rotation{0}, 0));
}

int writhe(const ReducedStemDiagram& d) {
  int total = 0;
  for (const auto& c : d.crossings) total += c.sign;
  return total;
}

GaussCode to_gauss_code(const ReducedStemDiagram& d) {
  GaussCode g;
  for (const auto& p : d.passages()) {
    g.sequence.push_back(p.over ? p.crossing : -p.crossing);
    g.signs.push_back(d.crossing(p.crossing).sign);
  }
  return g;
}

GaussCode to_gauss_code(const StemPermutation& tau) {
  return to_gauss_code(build_diagram(tau));
}

PDCode to_pd_code(const ReducedStemDiagram& d) {
  const auto seq = d.passages();
  const int total = static_cast<int>(seq.size());
  std::vector<int> over_at(d.crossings.size() + 1, -1);
  std::vector<int> under_at(d.crossings.size() + 1, -1);
  for (int p = 0; p < total; ++p) {
    const auto& passage = seq[static_cast<std::size_t>(p)];
    (passage.over ? over_at : under_at)[static_cast<std::size_t>(passage.crossing)] = p;
  }
  auto incoming = [total](int p) { return p == 0 ? total : p; };
  auto outgoing = [](int p) { return p + 1; };

  PDCode pd;
  for (const auto& c : d.crossings) {
    const int pu = under_at[static_cast<std::size_t>(c.id)];
    const int po = over_at[static_cast<std::size_t>(c.id)];
    if (c.sign > 0) {
      pd.crossings.push_back(
          {incoming(pu), outgoing(po), outgoing(pu), incoming(po)});
    } else {
      pd.crossings.push_back(
          {incoming(pu), incoming(po), outgoing(pu), outgoing(po)});
    }
  }
  return pd;
}

PDCode to_pd_code(const StemPermutation& tau) {
  return to_pd_code(build_diagram(tau));
}

std::string format_pd_code(const PDCode& pd) {
  std::string out = "PD[";
  for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
    if (i) out += ", ";
    const auto& x = pd.crossings[i];
    out += "X[" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," +
           std::to_string(x[2]) + "," + std::to_string(x[3]) + "]";
  }
  out += "]";
  return out;
}

PDCode parse_pd_code(std::string_view text) {
  static const std::regex crossing_re(
      R"(\s*X\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*)");
  static const std::regex wrapped_re(R"(\s*PD\[(.*)\]\s*)");
  auto malformed = [&] {
    return Error(ErrorCode::ParseError, "malformed PD code: '" + std::string(text) + "'");
  };

  std::string body(text);
  std::smatch wrapped;
  if (std::regex_match(body, wrapped, wrapped_re)) body = wrapped[1].str();
  if (body.find_first_not_of(" \t\r\n") == std::string::npos) return {};

  PDCode pd;
  auto pos = body.cbegin();
  while (true) {
    std::smatch m;
    if (!std::regex_search(pos, body.cend(), m, crossing_re,
                           std::regex_constants::match_continuous)) {
      throw malformed();
    }
    pd.crossings.push_back({std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]),
                            std::stoi(m[4])});
    pos = m[0].second;
    if (pos == body.cend()) break;
    if (*pos != ',') throw malformed();
    ++pos;
  }
  return pd;
}

}  // namespace petalkit
