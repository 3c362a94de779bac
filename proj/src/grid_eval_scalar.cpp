#include "symq/grid_eval.hpp"

#include <algorithm>

namespace symq {

void eval_batch_scalar(const IntegerForm& form, std::span<const std::int32_t> coords,
                       std::size_t count, std::span<std::int64_t> out) {
  const std::size_t n = form.n;
  std::fill(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(count), 0);
  std::vector<std::int32_t> mono(count);
  for (std::size_t t = 0; t < form.coeffs.size(); ++t) {
    std::fill(mono.begin(), mono.end(), 1);
    for (std::size_t v = 0; v < n; ++v) {
      const unsigned e = form.exponents[t * n + v];
      const std::int32_t* x = coords.data() + v * count;
      for (unsigned rep = 0; rep < e; ++rep) {
        for (std::size_t p = 0; p < count; ++p) mono[p] *= x[p];
      }
    }
    const std::int64_t c = form.coeffs[t];
    for (std::size_t p = 0; p < count; ++p) out[p] += c * mono[p];
  }
}

}  // namespace symq
