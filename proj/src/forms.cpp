#include "symq/forms.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <vector>

namespace symq {

namespace {

Polynomial pairwise_power_sum(std::size_t n, unsigned power) {
  Polynomial out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Polynomial diff = Polynomial::variable(n, i) - Polynomial::variable(n, j);
      out += pow(diff, power);
    }
  }
  return out;
}

Polynomial linear_sum(std::size_t n) {
  Polynomial out(n);
  for (std::size_t i = 0; i < n; ++i) out += Polynomial::variable(n, i);
  return out;
}

}  // namespace

Polynomial make_L(std::size_t n) {
  if (n < 4) throw std::invalid_argument("L_n requires n >= 4, got " + std::to_string(n));
  const auto m = static_cast<long>(n / 2);
  const auto weight = Rational(m * (static_cast<long>(n) - m));
  const Polynomial squares = pairwise_power_sum(n, 2);
  return weight * pairwise_power_sum(n, 4) - squares * squares;
}

Polynomial make_C(std::size_t two_m) {
  if (two_m < 4 || two_m % 2 != 0) {
    throw std::invalid_argument("C_2m requires an even argument >= 4, got " +
                                std::to_string(two_m));
  }
  return substitute_zero(make_L(two_m + 1), two_m);
}

Polynomial symmetric_monomial_sum(std::span<const Exponent> pattern) {
  std::vector<Exponent> e(pattern.begin(), pattern.end());
  std::sort(e.begin(), e.end());
  Polynomial out(e.size());
  do {
    out.add_term(Monomial(e), Rational(1));
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

Polynomial make_choi_lam_44() {
  const std::vector<Exponent> squares{2, 2, 0, 0};
  const std::vector<Exponent> mixed{2, 1, 1, 0};
  Polynomial f = symmetric_monomial_sum(squares) + symmetric_monomial_sum(mixed);
  f.add_term(Monomial{1, 1, 1, 1}, Rational(-2));
  return f;
}

Polynomial make_robinson() {
  const std::vector<Exponent> sixth{6, 0, 0};
  const std::vector<Exponent> four_two{4, 2, 0};
  Polynomial r = symmetric_monomial_sum(sixth) - symmetric_monomial_sum(four_two);
  r.add_term(Monomial{2, 2, 2}, Rational(3));
  return r;
}

Polynomial make_lax5() {
  constexpr std::size_t n = 5;
  Polynomial out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial prod = Polynomial::constant(n, Rational(1));
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      prod *= Polynomial::variable(n, i) - Polynomial::variable(n, j);
    }
    out += prod;
  }
  return out;
}

Polynomial lift(const Polynomial& f, unsigned i) {
  if (i < 1) throw std::invalid_argument("lift requires i >= 1");
  if (!is_homogeneous(f, f.degree())) {
    throw std::invalid_argument("lift requires a homogeneous form");
  }
  return pow(linear_sum(f.num_vars()), 2 * i) * f;
}

FormId FormId::L(std::size_t n) {
  if (n < 4) throw std::invalid_argument("L:<n> requires n >= 4");
  return FormId{Kind::L, n, nullptr};
}

FormId FormId::C(std::size_t two_m) {
  if (two_m < 4 || two_m % 2 != 0) {
    throw std::invalid_argument("C:<2m> requires an even argument >= 4");
  }
  return FormId{Kind::C, two_m, nullptr};
}

FormId FormId::choi_lam_44() { return FormId{Kind::ChoiLam44, 0, nullptr}; }
FormId FormId::robinson() { return FormId{Kind::Robinson, 0, nullptr}; }
FormId FormId::lax5() { return FormId{Kind::Lax5, 0, nullptr}; }

FormId FormId::lifted(FormId base, std::size_t i) {
  if (i < 1) throw std::invalid_argument("lift:<base>:<i> requires i >= 1");
  return FormId{Kind::Lifted, i, std::make_shared<const FormId>(std::move(base))};
}

namespace {

std::size_t parse_size(std::string_view text, std::string_view whole) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw FormSyntaxError("malformed form id '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

FormId FormId::parse(std::string_view text) {
  if (text == "cl44") return choi_lam_44();
  if (text == "robinson") return robinson();
  if (text == "lax5") return lax5();
  if (text.starts_with("L:")) return L(parse_size(text.substr(2), text));
  if (text.starts_with("C:")) return C(parse_size(text.substr(2), text));
  if (text.starts_with("lift:")) {
    const std::string_view rest = text.substr(5);
    const auto colon = rest.rfind(':');
    if (colon == std::string_view::npos) {
      throw FormSyntaxError("malformed form id '" + std::string(text) + "'");
    }
    return lifted(parse(rest.substr(0, colon)), parse_size(rest.substr(colon + 1), text));
  }
  throw FormSyntaxError("unknown form id '" + std::string(text) + "'");
}

std::string FormId::to_string() const {
  switch (kind) {
    case Kind::L: return "L:" + std::to_string(param);
    case Kind::C: return "C:" + std::to_string(param);
    case Kind::ChoiLam44: return "cl44";
    case Kind::Robinson: return "robinson";
    case Kind::Lax5: return "lax5";
    case Kind::Lifted: return "lift:" + base->to_string() + ":" + std::to_string(param);
  }
  return {};
}

Polynomial build_form(const FormId& id) {
  switch (id.kind) {
    case FormId::Kind::L: return make_L(id.param);
    case FormId::Kind::C: return make_C(id.param);
    case FormId::Kind::ChoiLam44: return make_choi_lam_44();
    case FormId::Kind::Robinson: return make_robinson();
    case FormId::Kind::Lax5: return make_lax5();
    case FormId::Kind::Lifted:
      return lift(build_form(*id.base), static_cast<unsigned>(id.param));
  }
  throw std::logic_error("unreachable form kind");
}

}  // namespace symq
