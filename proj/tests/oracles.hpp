#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the geometry or invariant code of the library: strands are rebuilt from the
// raw stem word, half-circles are sampled as polylines in floating point and
// intersected segment by segment.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "petalkit/core.hpp"

namespace oracle {

inline std::vector<petalkit::PetalPermutation> all_petals(int length) {
  std::vector<int> rest(static_cast<std::size_t>(length - 1));
  std::iota(rest.begin(), rest.end(), 1);
  std::vector<petalkit::PetalPermutation> out;
  do {
    std::vector<int> w{0};
    w.insert(w.end(), rest.begin(), rest.end());
    out.push_back(petalkit::PetalPermutation::from_word(w));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

inline std::vector<std::vector<int>> all_stem_words(int length) {
  std::vector<int> w(static_cast<std::size_t>(length));
  std::iota(w.begin(), w.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

struct Point {
  double x = 0;
  double y = 0;  // drawing frame: y grows upward, so y = -level
};

struct HalfCircle {
  int k = 0;       // position in traversal order
  bool left = true;
  int from = 0;    // level where traversal starts
  int to = 0;
  std::vector<Point> pts;  // sampled along the traversal direction
};

inline std::vector<HalfCircle> half_circles(const std::vector<int>& stem,
                                            int samples = 64) {
  const int len = static_cast<int>(stem.size());
  std::vector<HalfCircle> out;
  for (int k = 0; k < len; ++k) {
    HalfCircle h;
    h.k = k;
    h.left = k % 2 == 0;
    h.from = stem[static_cast<std::size_t>(k)];
    h.to = stem[static_cast<std::size_t>((k + 1) % len)];
    const double c = (h.from + h.to) / 2.0;
    const double r = (h.to - h.from) / 2.0;
    const double side = h.left ? -1.0 : 1.0;
    for (int i = 0; i <= samples; ++i) {
      const double th = M_PI * i / samples;
      const double level = c - r * std::cos(th);
      h.pts.push_back({side * std::abs(r) * std::sin(th), -level});
    }
    out.push_back(std::move(h));
  }
  return out;
}

struct Hit {
  Point at;
  Point dir_a;  // segment direction of the first curve
  Point dir_b;
};

inline double cross(Point u, Point v) { return u.x * v.y - u.y * v.x; }

// Segment intersections with half-open parameters so a hit on a shared
// vertex is counted once.
inline std::vector<Hit> intersect(const HalfCircle& a, const HalfCircle& b) {
  std::vector<Hit> hits;
  for (std::size_t i = 0; i + 1 < a.pts.size(); ++i) {
    const Point p = a.pts[i];
    const Point r{a.pts[i + 1].x - p.x, a.pts[i + 1].y - p.y};
    const double ylo_a = std::min(p.y, a.pts[i + 1].y);
    const double yhi_a = std::max(p.y, a.pts[i + 1].y);
    for (std::size_t j = 0; j + 1 < b.pts.size(); ++j) {
      const Point q = b.pts[j];
      const double ylo_b = std::min(q.y, b.pts[j + 1].y);
      const double yhi_b = std::max(q.y, b.pts[j + 1].y);
      if (yhi_b < ylo_a || yhi_a < ylo_b) continue;
      const Point s{b.pts[j + 1].x - q.x, b.pts[j + 1].y - q.y};
      const double den = cross(r, s);
      if (std::abs(den) < 1e-15) continue;
      const Point qp{q.x - p.x, q.y - p.y};
      const double t = cross(qp, s) / den;
      const double u = cross(qp, r) / den;
      if (t < 0 || t >= 1 || u < 0 || u >= 1) continue;
      hits.push_back({{p.x + t * r.x, p.y + t * r.y}, r, s});
    }
  }
  return hits;
}

struct OracleCrossing {
  int k_a = 0;  // traversal positions, k_a < k_b
  int k_b = 0;
  double level = 0;
  int sign = 0;
};

// Over/under from the stacking rule of stem diagrams: among left strands the
// later one passes over, among right strands the earlier one does.
inline std::vector<OracleCrossing> crossings(const std::vector<int>& stem,
                                             int samples = 64) {
  const auto hc = half_circles(stem, samples);
  std::vector<OracleCrossing> out;
  for (std::size_t a = 0; a < hc.size(); ++a) {
    for (std::size_t b = a + 1; b < hc.size(); ++b) {
      for (const Hit& h : intersect(hc[a], hc[b])) {
        // Endpoints on the axis are shared between consecutive strands and
        // are not crossings.
        if (std::abs(h.at.x) < 1e-9) continue;
        OracleCrossing c;
        c.k_a = hc[a].k;
        c.k_b = hc[b].k;
        c.level = -h.at.y;
        const bool a_over = !hc[a].left;
        const Point over = a_over ? h.dir_a : h.dir_b;
        const Point under = a_over ? h.dir_b : h.dir_a;
        c.sign = cross(over, under) > 0 ? 1 : -1;
        out.push_back(c);
      }
    }
  }
  return out;
}

// Determinant of an integer matrix by cofactor expansion along the first
// row; fine for the small matrices used in tests.
inline std::int64_t int_determinant(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  std::int64_t det = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    const std::int64_t term = m[0][col] * int_determinant(minor);
    det += (col % 2 == 0) ? term : -term;
  }
  return det;
}

// Chi-squared statistic of observed counts against a uniform law.
inline double chi_squared_uniform(const std::map<std::vector<int>, int>& counts,
                                  std::size_t categories, int samples) {
  const double expected = static_cast<double>(samples) / static_cast<double>(categories);
  double chi = 0;
  std::size_t seen = 0;
  for (const auto& [k, obs] : counts) {
    chi += (obs - expected) * (obs - expected) / expected;
    ++seen;
  }
  chi += static_cast<double>(categories - seen) * expected;
  return chi;
}

}  // namespace oracle
