#pragma once

// Constructors for the symmetric forms studied by this toolkit. Every
// constructor returns a fully expanded Polynomial.

#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "symq/polynomial.hpp"

namespace symq {

/// m(n-m) * sum_{i<j} (x_i-x_j)^4 - (sum_{i<j} (x_i-x_j)^2)^2 with
/// m = floor(n/2). Requires n >= 4.
Polynomial make_L(std::size_t n);

/// L_{2m+1}(x_1, ..., x_{2m}, 0). Requires an even argument >= 4.
Polynomial make_C(std::size_t two_m);

/// Choi-Lam quaternary quartic: sum x^2y^2 + sum x^2yz - 2xyzw.
Polynomial make_choi_lam_44();

/// Robinson's symmetric ternary sextic.
Polynomial make_robinson();

/// sum_i prod_{j != i} (x_i - x_j) in five variables.
Polynomial make_lax5();

/// (x_1 + ... + x_n)^{2i} * f. Requires f homogeneous and i >= 1.
Polynomial lift(const Polynomial& f, unsigned i);

/// Sum of all distinct monomials whose exponent vector is a permutation of
/// `pattern` (the monomial symmetric function m_pattern in pattern.size()
/// variables).
Polynomial symmetric_monomial_sum(std::span<const Exponent> pattern);

/// Malformed form id text, as opposed to a well-formed id whose parameters
/// are out of range (plain std::invalid_argument).
class FormSyntaxError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Named form. Text syntax: `L:<n>`, `C:<2m>`, `cl44`, `robinson`, `lax5`,
/// `lift:<base>:<i>`.
struct FormId {
  enum class Kind { L, C, ChoiLam44, Robinson, Lax5, Lifted };

  Kind kind = Kind::L;
  /// n for L, 2m for C, i for Lifted; unused otherwise.
  std::size_t param = 0;
  std::shared_ptr<const FormId> base;

  static FormId L(std::size_t n);
  static FormId C(std::size_t two_m);
  static FormId choi_lam_44();
  static FormId robinson();
  static FormId lax5();
  static FormId lifted(FormId base, std::size_t i);

  /// Throws std::invalid_argument on malformed text or violated parameter
  /// ranges.
  static FormId parse(std::string_view text);

  [[nodiscard]] std::string to_string() const;
};

Polynomial build_form(const FormId& id);

}  // namespace symq
