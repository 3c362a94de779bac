#pragma once

// Sparse multivariate polynomials with exact rational coefficients.
//
// A Polynomial owns a variable count n and a map from exponent vectors to
// nonzero coefficients. Terms are kept in graded lexicographic order
// (higher total degree first, ties broken by lexicographically larger
// exponent vector first), which is also the serialization order.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symq/rational.hpp"

namespace symq {

using Exponent = std::uint32_t;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents) : exponents_(std::move(exponents)) {}
  Monomial(std::initializer_list<Exponent> exponents) : exponents_(exponents) {}

  [[nodiscard]] std::size_t size() const { return exponents_.size(); }
  [[nodiscard]] unsigned degree() const;
  [[nodiscard]] Exponent operator[](std::size_t i) const { return exponents_[i]; }
  [[nodiscard]] std::span<const Exponent> exponents() const { return exponents_; }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exponents_;
};

/// Strict weak order placing a before b in canonical (graded lex) order.
struct GradedLexOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

using Point = std::vector<Rational>;

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexOrder>;

  Polynomial() = default;
  explicit Polynomial(std::size_t num_vars) : n_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, const Rational& c);
  /// x_i, zero-based.
  static Polynomial variable(std::size_t num_vars, std::size_t i);
  static Polynomial term(const Monomial& m, const Rational& c);

  [[nodiscard]] std::size_t num_vars() const { return n_; }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] std::size_t term_count() const { return terms_.size(); }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  /// Maximum total degree over the stored terms; 0 for the zero polynomial.
  [[nodiscard]] unsigned degree() const;
  [[nodiscard]] Rational coefficient(const Monomial& m) const;

  /// Adds c * m in place, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  void require_compatible(const Polynomial& other) const;
  void require_arity(const Monomial& m) const;

  std::size_t n_ = 0;
  TermMap terms_;
};

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial mul(const Polynomial& a, const Polynomial& b);
Polynomial pow(const Polynomial& base, unsigned exponent);

Rational eval(const Polynomial& f, std::span<const Rational> point);

/// Sets x_{var_index} = 0 and drops that variable, leaving n-1 variables.
Polynomial substitute_zero(const Polynomial& f, std::size_t var_index);

/// Renames x_i to x_{perm[i]}.
Polynomial permute_variables(const Polynomial& f, std::span<const std::size_t> perm);

bool is_homogeneous(const Polynomial& f, unsigned d);

/// Invariance under (x1 x2) and the cycle x1 -> x2 -> ... -> xn -> x1,
/// which together generate S_n.
bool is_symmetric(const Polynomial& f);

/// Canonical text form: a `poly n=<n> d=<d>` header, then one
/// `<num>/<den> <e1> ... <en>` line per term in graded lex order.
std::string to_text(const Polynomial& f);

/// Parses exactly one polynomial block.
Polynomial parse_polynomial(std::string_view text);

/// Parses any number of consecutive polynomial blocks.
std::vector<Polynomial> parse_polynomials(std::string_view text);

/// Human-readable rendering such as `x1^2 - 2*x1*x2 + x2^2`, for messages.
std::string to_pretty_string(const Polynomial& f);

}  // namespace symq
