#pragma once

// Exact PSD decision for symmetric quartic forms in n >= 4 variables.
//
// A symmetric n-ary quartic is nonnegative everywhere iff it is nonnegative
// on points with at most two distinct coordinates. Up to symmetry those
// are the split points (r, ..., r, s, ..., s) with k leading r's, so the
// decision reduces to n + 1 binary quartics in (r, s).

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symq/binary_quartic.hpp"
#include "symq/polynomial.hpp"

namespace symq {

enum class PsdPrecondition { NotQuartic, TooFewVariables, NotSymmetric };

class PsdPreconditionError : public std::invalid_argument {
 public:
  PsdPreconditionError(PsdPrecondition kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}
  [[nodiscard]] PsdPrecondition kind() const { return kind_; }

 private:
  PsdPrecondition kind_;
};

/// f(r, ..., r, s, ..., s) with k leading r's, as a binary quartic.
struct BinaryRestriction {
  std::size_t k = 0;
  BinaryQuartic q;
};

/// (r, ..., r, s, ..., s) with k copies of r and n - k copies of s.
Point split_point(std::size_t n, std::size_t k, const Rational& r, const Rational& s);

/// Requires f to be a symmetric homogeneous quartic and k <= n.
BinaryRestriction restrict_split(const Polynomial& f, std::size_t k);

QuarticVerdict binary_quartic_nonneg(const BinaryRestriction& restriction);

struct RestrictionCheck {
  BinaryRestriction restriction;
  QuarticVerdict verdict;
};

struct PsdCertificate {
  std::size_t n = 0;
  /// One entry per k = 0..n, ascending.
  std::vector<RestrictionCheck> restrictions;
  bool psd = false;
  /// Set iff !psd; f(counterexample) == counterexample_value < 0.
  std::optional<Point> counterexample;
  Rational counterexample_value;
};

/// Throws PsdPreconditionError if f is not a quartic form, has fewer than 4
/// variables or is not symmetric.
PsdCertificate check_psd(const Polynomial& f);

/// Deterministic text block: n, one line per k, and the verdict.
std::string to_text(const PsdCertificate& cert);

/// k(n-k)(m-k)(n-m-k) with m = floor(n/2): the multiple of (r-s)^4 that
/// L_n takes at the split with k leading r's.
long Ln_split_coefficient(std::size_t n, std::size_t k);

/// Checks restrict_split(make_L(n), k) == Ln_split_coefficient(n, k) (r-s)^4
/// for every k in 0..n.
bool verify_Ln_restricted_formula(std::size_t n);

}  // namespace symq
