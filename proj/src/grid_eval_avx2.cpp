#include <immintrin.h>

#include <algorithm>

#include "symq/grid_eval.hpp"

namespace symq {

// Eight points per step: monomial values are formed in 32-bit lanes, then
// widened to two 4x64 halves for the coefficient multiply-accumulate.
void eval_batch_avx2(const IntegerForm& form, std::span<const std::int32_t> coords,
                     std::size_t count, std::span<std::int64_t> out) {
  const std::size_t n = form.n;
  const std::size_t vec_end = count - count % 8;
  std::fill(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(count), 0);

  for (std::size_t p = 0; p < vec_end; p += 8) {
    __m256i acc_lo = _mm256_setzero_si256();
    __m256i acc_hi = _mm256_setzero_si256();
    for (std::size_t t = 0; t < form.coeffs.size(); ++t) {
      __m256i mono = _mm256_set1_epi32(1);
      for (std::size_t v = 0; v < n; ++v) {
        const unsigned e = form.exponents[t * n + v];
        if (e == 0) continue;
        const __m256i x = _mm256_loadu_si256(
            reinterpret_cast<const __m256i*>(coords.data() + v * count + p));
        for (unsigned rep = 0; rep < e; ++rep) mono = _mm256_mullo_epi32(mono, x);
      }
      const __m256i c = _mm256_set1_epi64x(form.coeffs[t]);
      const __m256i lo = _mm256_cvtepi32_epi64(_mm256_castsi256_si128(mono));
      const __m256i hi = _mm256_cvtepi32_epi64(_mm256_extracti128_si256(mono, 1));
      acc_lo = _mm256_add_epi64(acc_lo, _mm256_mul_epi32(lo, c));
      acc_hi = _mm256_add_epi64(acc_hi, _mm256_mul_epi32(hi, c));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + p), acc_lo);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + p + 4), acc_hi);
  }

  for (std::size_t t = 0; t < form.coeffs.size(); ++t) {
    const std::int64_t c = form.coeffs[t];
    for (std::size_t p = vec_end; p < count; ++p) {
      std::int64_t mono = 1;
      for (std::size_t v = 0; v < n; ++v) {
        for (unsigned rep = 0; rep < form.exponents[t * n + v]; ++rep) {
          mono *= coords[v * count + p];
        }
      }
      out[p] += c * mono;
    }
  }
}

}  // namespace symq
