#pragma once

// Dense univariate polynomials over the rationals, with the pieces needed
// for exact real-root isolation (gcd, square-free part, Sturm sequences).

#include <cstddef>
#include <vector>

#include "symq/rational.hpp"

namespace symq {

class UPoly {
 public:
  UPoly() = default;
  /// coeffs[i] multiplies t^i; trailing zeros are trimmed.
  explicit UPoly(std::vector<Rational> coeffs);

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
  [[nodiscard]] const Rational& leading() const { return coeffs_.back(); }

  [[nodiscard]] Rational operator()(const Rational& t) const;
  [[nodiscard]] UPoly derivative() const;
  [[nodiscard]] UPoly monic() const;

  friend UPoly operator-(const UPoly& a);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  UPoly quotient;
  UPoly remainder;
};

/// Throws std::domain_error when dividing by zero.
DivMod divmod(const UPoly& a, const UPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

/// p / gcd(p, p'), made monic. Same real roots as p, all simple.
UPoly square_free_part(const UPoly& p);

/// Sturm chain p, p', -rem(p, p'), ...
std::vector<UPoly> sturm_sequence(const UPoly& p);

/// Distinct real roots of the chain's head in the half-open interval (a, b].
std::size_t count_roots(const std::vector<UPoly>& chain, const Rational& a, const Rational& b);

/// Distinct real roots over the whole line.
std::size_t count_real_roots(const std::vector<UPoly>& chain);

/// All roots have absolute value strictly below this bound.
Rational cauchy_root_bound(const UPoly& p);

/// Open interval (lo, hi) with rational, non-root endpoints holding exactly
/// one real root.
struct RootInterval {
  Rational lo;
  Rational hi;
};

/// Isolates every real root of a square-free p; intervals are ascending and
/// pairwise separated (hi_i < root_{i+1}).
std::vector<RootInterval> isolate_real_roots(const UPoly& p);

}  // namespace symq
