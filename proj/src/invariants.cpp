#include "petalkit/invariants.hpp"

#include <cstdlib>
#include <utility>

#include "petalkit/error.hpp"

namespace petalkit {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::Internal, "polynomial coefficient overflow");
  }
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::Internal, "polynomial coefficient overflow");
  }
  return out;
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(std::int64_t constant) {
  add_term(0, constant);
}

LaurentPolynomial LaurentPolynomial::from_coefficients(
    const std::vector<std::int64_t>& coefficients, int lowest) {
  LaurentPolynomial p;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    p.add_term(lowest + static_cast<int>(i), coefficients[i]);
  }
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(std::int64_t c, int exponent) {
  LaurentPolynomial p;
  p.add_term(exponent, c);
  return p;
}

void LaurentPolynomial::add_term(int exponent, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

int LaurentPolynomial::min_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first;
}

int LaurentPolynomial::max_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first;
}

std::int64_t LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

std::vector<std::int64_t> LaurentPolynomial::coefficients() const {
  std::vector<std::int64_t> out;
  if (terms_.empty()) return out;
  out.assign(static_cast<std::size_t>(max_degree() - min_degree() + 1), 0);
  for (auto [e, c] : terms_) out[static_cast<std::size_t>(e - min_degree())] = c;
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out;
  for (auto [e, c] : terms_) out.terms_.emplace(e, checked_mul(c, -1));
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
  for (auto [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
  for (auto [e, c] : rhs.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a,
                            const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (auto [ea, ca] : a.terms_) {
    for (auto [eb, cb] : b.terms_) out.add_term(ea + eb, checked_mul(ca, cb));
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::divide_exact(
    const LaurentPolynomial& divisor) const {
  if (divisor.is_zero()) {
    throw Error(ErrorCode::Internal, "polynomial division by zero");
  }
  LaurentPolynomial quotient;
  LaurentPolynomial remainder = *this;
  const int lead_exp = divisor.max_degree();
  const std::int64_t lead = divisor.terms_.rbegin()->second;
  const int floor_exp = min_degree() - divisor.min_degree();
  while (!remainder.is_zero()) {
    const int e = remainder.max_degree() - lead_exp;
    const std::int64_t c = remainder.terms_.rbegin()->second;
    if (e < floor_exp || c % lead != 0) {
      throw Error(ErrorCode::Internal, "inexact polynomial division");
    }
    const auto term = monomial(c / lead, e);
    quotient += term;
    remainder -= term * divisor;
  }
  return quotient;
}

std::int64_t LaurentPolynomial::evaluate(std::int64_t t) const {
  std::int64_t total = 0;
  for (auto [e, c] : terms_) {
    std::int64_t power = 1;
    if (e < 0) {
      if (t != 1 && t != -1) {
        throw Error(ErrorCode::Internal,
                    "cannot evaluate negative powers at t=" + std::to_string(t));
      }
      power = (-e) % 2 == 0 ? 1 : t;
    } else {
      for (int i = 0; i < e; ++i) power = checked_mul(power, t);
    }
    total = checked_add(total, checked_mul(c, power));
  }
  return total;
}

LaurentPolynomial LaurentPolynomial::normalized() const {
  if (is_zero()) return {};
  const int shift = -min_degree();
  const std::int64_t sign = terms_.begin()->second < 0 ? -1 : 1;
  LaurentPolynomial out;
  for (auto [e, c] : terms_) out.terms_.emplace(e + shift, c * sign);
  return out;
}

std::string LaurentPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [e, c] = *it;
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || e == 0) out += std::to_string(mag);
    if (e != 0) {
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

LaurentPolynomial polynomial_determinant(
    std::vector<std::vector<LaurentPolynomial>> m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPolynomial(1);
  LaurentPolynomial previous(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return {};
      std::swap(m[k], m[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divide_exact(previous);
      }
      m[i][k] = {};
    }
    previous = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

AlexanderResult alexander_from_diagram(const ReducedStemDiagram& d) {
  const std::size_t n = d.crossings.size();
  if (n <= 1) return AlexanderResult{LaurentPolynomial(1), 1};

  const auto seq = d.passages();
  if (seq.size() != 2 * n) {
    throw Error(ErrorCode::DegenerateDiagram,
                "expected " + std::to_string(2 * n) + " passages, found " +
                    std::to_string(seq.size()));
  }
  std::size_t first_under = seq.size();
  for (std::size_t p = 0; p < seq.size(); ++p) {
    if (!seq[p].over) {
      first_under = p;
      break;
    }
  }
  if (first_under == seq.size()) {
    throw Error(ErrorCode::DegenerateDiagram, "diagram has no under-passes");
  }

  // Arcs run from one under-pass to the next; arc 0 starts right after the
  // first under-pass.
  std::vector<std::size_t> over_arc(n + 1), in_arc(n + 1), out_arc(n + 1);
  std::size_t arc = 0;
  for (std::size_t step = 1; step <= seq.size(); ++step) {
    const auto& p = seq[(first_under + step) % seq.size()];
    const auto id = static_cast<std::size_t>(p.crossing);
    if (p.over) {
      over_arc[id] = arc;
    } else {
      in_arc[id] = arc;
      arc = (arc + 1) % n;
      out_arc[id] = arc;
    }
  }

  const auto t = LaurentPolynomial::monomial(1, 1);
  const auto one_minus_t = LaurentPolynomial(1) - t;
  std::vector<std::vector<LaurentPolynomial>> matrix(
      n, std::vector<LaurentPolynomial>(n));
  for (const auto& c : d.crossings) {
    const auto row = static_cast<std::size_t>(c.id - 1);
    const auto id = static_cast<std::size_t>(c.id);
    matrix[row][over_arc[id]] += one_minus_t;
    // The under-arc on the left of the over-strand gets t.
    if (c.sign > 0) {
      matrix[row][out_arc[id]] += t;
      matrix[row][in_arc[id]] -= LaurentPolynomial(1);
    } else {
      matrix[row][in_arc[id]] += t;
      matrix[row][out_arc[id]] -= LaurentPolynomial(1);
    }
  }
  matrix.pop_back();
  for (auto& row : matrix) row.pop_back();

  const auto det = polynomial_determinant(std::move(matrix));
  if (det.is_zero()) {
    throw Error(ErrorCode::DegenerateDiagram, "Alexander minor vanished");
  }
  AlexanderResult out;
  out.polynomial = det.normalized();
  out.determinant =
      static_cast<std::uint64_t>(std::llabs(out.polynomial.evaluate_at_minus_one()));
  return out;
}

AlexanderResult alexander_of_petal(const PetalPermutation& sigma) {
  return alexander_from_diagram(petal_to_diagram(sigma));
}

}  // namespace petalkit
