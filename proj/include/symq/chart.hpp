#pragma once

// Which (n, 2d) admit psd forms that are not sums of squares. The answer is
// the same for general and for symmetric forms.

#include <cstddef>
#include <string>
#include <vector>

namespace symq {

struct ChartEntry {
  std::size_t n = 0;
  std::size_t two_d = 0;
  bool psd_equals_sos = false;
};

/// True iff n = 2, 2d = 2 or (n, 2d) = (3, 4).
bool psd_equals_sos(std::size_t n, std::size_t two_d);

/// Row-major by degree: 2d = 2, 4, ..., max_2d; n = 2..max_n within a row.
/// Requires max_n >= 2 and an even max_2d >= 2.
std::vector<ChartEntry> chart(std::size_t max_n, std::size_t max_2d);

/// Table with degrees down and variable counts across, `Y`/`N` cells (or
/// check mark / cross when unicode is set).
std::string render_chart(std::size_t max_n, std::size_t max_2d, bool unicode = false);

}  // namespace symq
