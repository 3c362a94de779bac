#include "symq/chart.hpp"

#include <stdexcept>

namespace symq {

bool psd_equals_sos(std::size_t n, std::size_t two_d) {
  return n == 2 || two_d == 2 || (n == 3 && two_d == 4);
}

std::vector<ChartEntry> chart(std::size_t max_n, std::size_t max_2d) {
  if (max_n < 2) throw std::invalid_argument("chart needs max_n >= 2");
  if (max_2d < 2 || max_2d % 2 != 0) throw std::invalid_argument("chart needs an even max_2d >= 2");
  std::vector<ChartEntry> out;
  for (std::size_t two_d = 2; two_d <= max_2d; two_d += 2) {
    for (std::size_t n = 2; n <= max_n; ++n) out.push_back({n, two_d, psd_equals_sos(n, two_d)});
  }
  return out;
}

std::string render_chart(std::size_t max_n, std::size_t max_2d, bool unicode) {
  const auto entries = chart(max_n, max_2d);
  const std::string yes = unicode ? "✓" : "Y";
  const std::string no = unicode ? "×" : "N";

  auto pad = [](std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
  };
  const std::size_t cell = std::to_string(max_n).size() + 1;
  const std::string corner = "deg\\var";

  std::string out = corner;
  for (std::size_t n = 2; n <= max_n; ++n) out += " " + pad(std::to_string(n), cell);
  while (!out.empty() && out.back() == ' ') out.pop_back();
  out += '\n';
  std::size_t i = 0;
  for (std::size_t two_d = 2; two_d <= max_2d; two_d += 2) {
    std::string line = pad(std::to_string(two_d), corner.size());
    for (std::size_t n = 2; n <= max_n; ++n, ++i) {
      // Symbols may be multi-byte; pad by display width, not byte count.
      line += " " + (entries[i].psd_equals_sos ? yes : no) + std::string(cell - 1, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

}  // namespace symq
