#pragma once

// Exact nonnegativity decision for binary quartic forms
//   q(r, s) = c0 r^4 + c1 r^3 s + c2 r^2 s^2 + c3 r s^3 + c4 s^4.

#include <array>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "symq/rational.hpp"
#include "symq/univariate.hpp"

namespace symq {

struct BinaryQuartic {
  /// c[i] multiplies r^(4-i) s^i.
  std::array<Rational, 5> c{};

  [[nodiscard]] Rational operator()(const Rational& r, const Rational& s) const;
  [[nodiscard]] bool is_zero() const;
  /// q(t, 1) as a univariate polynomial in t.
  [[nodiscard]] UPoly dehomogenize() const;
  /// Coefficients as `c0 c1 c2 c3 c4` in num/den form.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const BinaryQuartic&, const BinaryQuartic&) = default;
};

/// lambda * (r - s)^4.
BinaryQuartic scaled_fourth_power_of_difference(const Rational& lambda);

/// Evidence that q >= 0 everywhere: u(t) = q(t, 1) has `distinct_real_roots`
/// real roots and is positive at one sample point in each gap between them
/// (none of the samples is a root), and q(1, 0) >= 0.
struct NonnegWitness {
  bool identically_zero = false;
  std::size_t distinct_real_roots = 0;
  std::vector<Rational> samples;
};

/// q(r, s) = value < 0.
struct QuarticCounterexample {
  Rational r;
  Rational s;
  Rational value;
};

using QuarticVerdict = std::variant<NonnegWitness, QuarticCounterexample>;

QuarticVerdict binary_quartic_nonneg(const BinaryQuartic& q);

}  // namespace symq
