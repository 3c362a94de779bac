#include "symq/grid_eval.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace symq {

std::optional<IntegerForm> to_integer_form(const Polynomial& f, std::int32_t max_abs_coord) {
  if (max_abs_coord < 0) throw std::invalid_argument("max_abs_coord must be nonnegative");
  mpz_class scale = 1;
  for (const auto& [m, c] : f.terms()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.denominator().get_mpz_t());

  const mpz_class int32_max = std::numeric_limits<std::int32_t>::max();
  const mpz_class sum_limit = mpz_class(1) << 62;
  mpz_class magnitude = 0;

  IntegerForm out;
  out.n = f.num_vars();
  out.max_abs_coord = max_abs_coord;
  for (const auto& [m, c] : f.terms()) {
    const mpz_class scaled = c.numerator() * (scale / c.denominator());
    if (abs(scaled) > int32_max) return std::nullopt;
    mpz_class mono_bound;
    mpz_pow_ui(mono_bound.get_mpz_t(), mpz_class(max_abs_coord).get_mpz_t(), m.degree());
    if (mono_bound > int32_max) return std::nullopt;
    magnitude += abs(scaled) * mono_bound;
    if (magnitude >= sum_limit) return std::nullopt;
    for (const Exponent e : m.exponents()) {
      if (e > std::numeric_limits<std::uint8_t>::max()) return std::nullopt;
      out.exponents.push_back(static_cast<std::uint8_t>(e));
    }
    out.coeffs.push_back(static_cast<std::int32_t>(scaled.get_si()));
  }
  return out;
}

bool avx2_available() {
#if defined(SYMQ_WITH_AVX2)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

#if !defined(SYMQ_WITH_AVX2)
void eval_batch_avx2(const IntegerForm&, std::span<const std::int32_t>, std::size_t,
                     std::span<std::int64_t>) {
  throw std::runtime_error("AVX2 kernel not compiled in");
}
#endif

void eval_batch(const IntegerForm& form, std::span<const std::int32_t> coords,
                std::size_t count, std::span<std::int64_t> out, GridKernel kernel) {
  if (coords.size() < form.n * count || out.size() < count) {
    throw std::invalid_argument("eval_batch: buffer too small");
  }
  switch (kernel) {
    case GridKernel::Scalar:
      eval_batch_scalar(form, coords, count, out);
      return;
    case GridKernel::Avx2:
      if (!avx2_available()) throw std::runtime_error("AVX2 kernel unavailable on this machine");
      eval_batch_avx2(form, coords, count, out);
      return;
    case GridKernel::Auto:
      if (avx2_available()) {
        eval_batch_avx2(form, coords, count, out);
      } else {
        eval_batch_scalar(form, coords, count, out);
      }
      return;
  }
}

GridSearchResult grid_search(const Polynomial& f, std::span<const std::int32_t> values,
                             GridKernel kernel) {
  if (values.empty()) throw std::invalid_argument("grid_search: empty value set");
  const std::size_t n = f.num_vars();
  std::size_t total = 1;
  for (std::size_t v = 0; v < n; ++v) {
    if (total > (std::size_t{1} << 40) / values.size()) {
      throw std::invalid_argument("grid_search: grid too large");
    }
    total *= values.size();
  }

  std::int32_t max_abs = 0;
  for (const auto x : values) max_abs = std::max(max_abs, x < 0 ? -x : x);
  const auto form = to_integer_form(f, max_abs);

  constexpr std::size_t kBatch = 4096;
  std::vector<std::size_t> digits(n, 0);
  std::vector<std::int32_t> coords(n * kBatch);
  std::vector<std::int64_t> values_out(kBatch);

  GridSearchResult result;
  std::vector<std::size_t> best_digits(n, 0);
  std::optional<std::int64_t> best_scaled;
  std::optional<Rational> best_exact;

  auto to_point = [&](const std::vector<std::size_t>& d) {
    Point p(n);
    for (std::size_t v = 0; v < n; ++v) p[v] = Rational(values[d[v]]);
    return p;
  };
  auto decode = [&](std::size_t index) {
    std::vector<std::size_t> d(n);
    for (std::size_t v = n; v-- > 0;) {
      d[v] = index % values.size();
      index /= values.size();
    }
    return d;
  };
  auto advance = [&]() {
    for (std::size_t v = n; v-- > 0;) {
      if (++digits[v] < values.size()) return;
      digits[v] = 0;
    }
  };

  std::size_t done = 0;
  while (done < total) {
    const std::size_t count = std::min(kBatch, total - done);
    if (form) {
      for (std::size_t p = 0; p < count; ++p) {
        for (std::size_t v = 0; v < n; ++v) coords[v * count + p] = values[digits[v]];
        advance();
      }
      eval_batch(*form, coords, count, values_out, kernel);
      for (std::size_t p = 0; p < count; ++p) {
        if (!best_scaled || values_out[p] < *best_scaled) {
          best_scaled = values_out[p];
          best_digits = decode(done + p);
        }
      }
    } else {
      for (std::size_t p = 0; p < count; ++p) {
        const Rational value = eval(f, to_point(digits));
        if (!best_exact || value < *best_exact) {
          best_exact = value;
          best_digits = digits;
        }
        advance();
      }
    }
    done += count;
  }

  result.points_checked = total;
  result.argmin = to_point(best_digits);
  result.minimum = eval(f, result.argmin);
  return result;
}

}  // namespace symq
