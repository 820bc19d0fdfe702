#pragma once

// Alexander polynomial and determinant of knot diagrams.
//
// Note: a trivial Alexander polynomial does not certify that a knot is the
// unknot.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "petalkit/core.hpp"
#include "petalkit/diagram.hpp"

namespace petalkit {

// Integer Laurent polynomial in t. Zero coefficients are never stored.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(std::int64_t constant);  // NOLINT: implicit by intent
  // coefficients[i] multiplies t^(lowest + i).
  static LaurentPolynomial from_coefficients(
      const std::vector<std::int64_t>& coefficients, int lowest = 0);
  static LaurentPolynomial monomial(std::int64_t c, int exponent);

  bool is_zero() const noexcept { return terms_.empty(); }
  int min_degree() const;
  int max_degree() const;
  std::int64_t coefficient(int exponent) const;
  const std::map<int, std::int64_t>& terms() const noexcept { return terms_; }

  // Dense list from min_degree() to max_degree(); empty for zero.
  std::vector<std::int64_t> coefficients() const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

  // Exact division; throws Error{Internal} if divisor does not divide.
  LaurentPolynomial divide_exact(const LaurentPolynomial& divisor) const;

  std::int64_t evaluate(std::int64_t t) const;  // requires t = +-1 when negative exponents exist
  std::int64_t evaluate_at_minus_one() const { return evaluate(-1); }

  // Multiply by +-t^k so the lowest exponent is 0 and the constant term is
  // positive.
  LaurentPolynomial normalized() const;

  std::string to_string() const;  // e.g. "t^2 - 3t + 1"

  bool operator==(const LaurentPolynomial&) const = default;

 private:
  void add_term(int exponent, std::int64_t c);
  std::map<int, std::int64_t> terms_;
};

struct AlexanderResult {
  LaurentPolynomial polynomial;  // normalized
  std::uint64_t determinant = 1; // |polynomial(-1)|
  bool operator==(const AlexanderResult&) const = default;
};

// Wirtinger presentation and Fox calculus: one relation per crossing, one
// row and one column deleted, determinant by fraction-free elimination.
AlexanderResult alexander_from_diagram(const ReducedStemDiagram& d);

AlexanderResult alexander_of_petal(const PetalPermutation& sigma);

// Determinant of a square polynomial matrix (Bareiss elimination).
LaurentPolynomial polynomial_determinant(
    std::vector<std::vector<LaurentPolynomial>> matrix);

}  // namespace petalkit
