#pragma once

// Reduced stem diagrams. The axis is a vertical line with levels increasing
// downward; every strand is a half-circle whose diameter joins its two
// endpoint levels on the axis, left strands in x < 0 and right strands in
// x > 0. Two same-side strands cross exactly once when their level pairs
// interleave and are disjoint otherwise.
//
// Crossing signs use the usual right-handed convention in the drawing frame
// (x to the right, y up): positive when the over-strand tangent turns
// counterclockwise onto the under-strand tangent.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "petalkit/core.hpp"

namespace petalkit {

using Rational = boost::rational<std::int64_t>;

struct Crossing {
  int id = 0;                  // 1-based
  std::size_t strand_a = 0;    // index into ReducedStemDiagram::strands
  std::size_t strand_b = 0;    // strand_a < strand_b
  std::size_t over = 0;        // strand_a or strand_b
  Rational height;             // level coordinate of the intersection
  int sign = 0;                // +1 or -1

  std::size_t under() const noexcept { return over == strand_a ? strand_b : strand_a; }
};

// One visit of a crossing while walking the knot.
struct Passage {
  int crossing = 0;  // crossing id
  bool over = false;
};

struct ReducedStemDiagram {
  StemPermutation stem;
  std::vector<Strand> strands;
  std::vector<Crossing> crossings;  // ordered by id
  // Crossing ids met along each strand, in traversal order.
  std::vector<std::vector<int>> strand_crossings;

  // All 2N passages, starting from the basepoint.
  std::vector<Passage> passages() const;
  const Crossing& crossing(int id) const { return crossings.at(static_cast<std::size_t>(id - 1)); }
};

// Same-side strand pairs whose endpoint levels interleave:
// (d - l)(d' - l)(d - l')(d' - l') < 0.
std::vector<std::pair<Strand, Strand>> crossing_pairs(const StemPermutation& tau);

bool strands_cross(const Strand& a, const Strand& b);

// Level coordinate of the intersection of two crossing half-circles:
// (ab - cd) / (a + b - c - d). Throws Error{DoNotCross}.
Rational crossing_height(const Strand& a, const Strand& b);

ReducedStemDiagram build_diagram(const StemPermutation& tau);

// Default embedding: rotation 0 of the canonical word, basepoint level 0.
ReducedStemDiagram petal_to_diagram(const PetalPermutation& sigma);

int writhe(const ReducedStemDiagram& d);

struct GaussCode {
  std::vector<int> sequence;  // +id over-pass, -id under-pass
  std::vector<int> signs;     // crossing sign at each entry of sequence
};

GaussCode to_gauss_code(const ReducedStemDiagram& d);
GaussCode to_gauss_code(const StemPermutation& tau);

struct PDCode {
  // Arc labels counterclockwise from the incoming under-arc; arcs are
  // numbered 1..2N along the orientation starting at the basepoint.
  std::vector<std::array<int, 4>> crossings;
  bool operator==(const PDCode&) const = default;
};

PDCode to_pd_code(const ReducedStemDiagram& d);
PDCode to_pd_code(const StemPermutation& tau);

// "PD[X[1,5,2,4], X[3,1,4,6]]"; the empty code is "PD[]".
std::string format_pd_code(const PDCode& pd);
// Accepts the output of format_pd_code, with or without the PD[...] wrapper.
// Throws Error{ParseError}.
PDCode parse_pd_code(std::string_view text);

}  // namespace petalkit
