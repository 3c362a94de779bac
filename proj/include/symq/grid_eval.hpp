#pragma once

// Batched evaluation of integer-coefficient forms on small integer points.
//
// This is the sampling path used where no exact decision procedure applies
// (degree >= 6 forms) and as an independent sanity check on PSD verdicts.
// A form is first scaled by a positive integer so all coefficients are
// integers; the scaled form has the same sign pattern. The inner kernel has
// a scalar reference implementation and an AVX2 variant, chosen at runtime.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "symq/polynomial.hpp"

namespace symq {

enum class GridKernel { Auto, Scalar, Avx2 };

/// Positive multiple of a form with int32 coefficients, stored term-major.
struct IntegerForm {
  std::size_t n = 0;
  std::vector<std::int32_t> coeffs;
  /// exponents[t * n + v] is the exponent of x_v in term t.
  std::vector<std::uint8_t> exponents;
  /// Largest |coordinate| the overflow bounds were checked for.
  std::int32_t max_abs_coord = 0;
};

/// Returns nullopt when the scaled form does not fit the kernels' integer
/// ranges for coordinates bounded by max_abs_coord: every monomial value
/// must fit in int32 and the sum of |coefficient * monomial| in int62.
std::optional<IntegerForm> to_integer_form(const Polynomial& f, std::int32_t max_abs_coord);

/// Points are given structure-of-arrays: coords[v * count + p] is
/// coordinate v of point p, |coordinate| <= form.max_abs_coord.
/// Writes count values to out.
void eval_batch_scalar(const IntegerForm& form, std::span<const std::int32_t> coords,
                       std::size_t count, std::span<std::int64_t> out);
void eval_batch_avx2(const IntegerForm& form, std::span<const std::int32_t> coords,
                     std::size_t count, std::span<std::int64_t> out);

bool avx2_available();

/// Dispatches to the requested kernel; Auto picks AVX2 when available.
/// Requesting Avx2 on a machine without it throws std::runtime_error.
void eval_batch(const IntegerForm& form, std::span<const std::int32_t> coords,
                std::size_t count, std::span<std::int64_t> out,
                GridKernel kernel = GridKernel::Auto);

struct GridSearchResult {
  std::size_t points_checked = 0;
  /// Value of the original (unscaled) form at argmin.
  Rational minimum;
  /// First grid point, in enumeration order, attaining the minimum.
  Point argmin;
  [[nodiscard]] bool found_negative() const { return minimum.sign() < 0; }
};

/// Evaluates f at every point of values^n (odometer order, last coordinate
/// fastest). Falls back to exact rational evaluation when the integer
/// kernels cannot represent f.
GridSearchResult grid_search(const Polynomial& f, std::span<const std::int32_t> values,
                             GridKernel kernel = GridKernel::Auto);

}  // namespace symq
