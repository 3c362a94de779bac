#include "symq/polynomial.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace symq {

unsigned Monomial::degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), 0U);
}

bool GradedLexOrder::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da > db;
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
}

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& c) {
  Polynomial p(num_vars);
  p.add_term(Monomial(std::vector<Exponent>(num_vars, 0)), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t i) {
  if (i >= num_vars) throw std::out_of_range("variable index out of range");
  std::vector<Exponent> e(num_vars, 0);
  e[i] = 1;
  Polynomial p(num_vars);
  p.add_term(Monomial(std::move(e)), Rational(1));
  return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p(m.size());
  p.add_term(m, c);
  return p;
}

unsigned Polynomial::degree() const {
  // The first term in graded order has the largest total degree.
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

Rational Polynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::require_compatible(const Polynomial& other) const {
  if (n_ != other.n_) {
    throw std::invalid_argument("variable count mismatch: " + std::to_string(n_) + " vs " +
                                std::to_string(other.n_));
  }
}

void Polynomial::require_arity(const Monomial& m) const {
  if (m.size() != n_) {
    throw std::invalid_argument("monomial has " + std::to_string(m.size()) +
                                " exponents, polynomial has " + std::to_string(n_) +
                                " variables");
  }
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  require_arity(m);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_compatible(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  require_compatible(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_compatible(b);
  Polynomial out(a.n_);
  std::vector<Exponent> e(a.n_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.n_; ++i) e[i] = ma[i] + mb[i];
      out.add_term(Monomial(e), ca * cb);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }

Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial out = Polynomial::constant(base.num_vars(), Rational(1));
  Polynomial b = base;
  while (exponent != 0) {
    if (exponent & 1U) out *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return out;
}

Rational eval(const Polynomial& f, std::span<const Rational> point) {
  if (point.size() != f.num_vars()) {
    throw std::invalid_argument("point has " + std::to_string(point.size()) +
                                " coordinates, polynomial has " +
                                std::to_string(f.num_vars()) + " variables");
  }
  Rational total;
  for (const auto& [m, c] : f.terms()) {
    Rational v = c;
    for (std::size_t i = 0; i < m.size() && !v.is_zero(); ++i) {
      if (m[i] != 0) v *= pow(point[i], m[i]);
    }
    total += v;
  }
  return total;
}

Polynomial substitute_zero(const Polynomial& f, std::size_t var_index) {
  if (var_index >= f.num_vars()) {
    throw std::out_of_range("substitute_zero: index " + std::to_string(var_index) +
                            " out of range for " + std::to_string(f.num_vars()) +
                            " variables");
  }
  Polynomial out(f.num_vars() - 1);
  std::vector<Exponent> e;
  for (const auto& [m, c] : f.terms()) {
    if (m[var_index] != 0) continue;
    e.assign(m.exponents().begin(), m.exponents().end());
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(var_index));
    out.add_term(Monomial(e), c);
  }
  return out;
}

Polynomial permute_variables(const Polynomial& f, std::span<const std::size_t> perm) {
  const std::size_t n = f.num_vars();
  if (perm.size() != n) throw std::invalid_argument("permutation length mismatch");
  std::vector<bool> seen(n, false);
  for (const std::size_t p : perm) {
    if (p >= n || seen[p]) throw std::invalid_argument("not a permutation");
    seen[p] = true;
  }
  Polynomial out(n);
  std::vector<Exponent> e(n);
  for (const auto& [m, c] : f.terms()) {
    for (std::size_t i = 0; i < n; ++i) e[perm[i]] = m[i];
    out.add_term(Monomial(e), c);
  }
  return out;
}

bool is_homogeneous(const Polynomial& f, unsigned d) {
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

bool is_symmetric(const Polynomial& f) {
  const std::size_t n = f.num_vars();
  if (n < 2) return true;
  std::vector<std::size_t> swap01(n);
  std::iota(swap01.begin(), swap01.end(), std::size_t{0});
  std::swap(swap01[0], swap01[1]);
  std::vector<std::size_t> cycle(n);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return permute_variables(f, swap01) == f && permute_variables(f, cycle) == f;
}

std::string to_text(const Polynomial& f) {
  std::string out = "poly n=" + std::to_string(f.num_vars()) +
                    " d=" + std::to_string(f.degree()) + "\n";
  for (const auto& [m, c] : f.terms()) {
    out += c.to_string();
    for (const Exponent e : m.exponents()) {
      out += ' ';
      out += std::to_string(e);
    }
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::size_t parse_count(std::string_view token, std::string_view key, std::size_t line_no) {
  if (token.substr(0, key.size()) != key) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": expected '" +
                                std::string(key) + "<int>'");
  }
  token.remove_prefix(key.size());
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": bad integer after '" +
                                std::string(key) + "'");
  }
  return value;
}

struct Block {
  Polynomial poly;
  unsigned declared_degree = 0;
  std::size_t header_line = 0;
};

void finish_block(const Block& b, std::vector<Polynomial>& out) {
  if (b.poly.degree() != b.declared_degree) {
    throw std::invalid_argument("line " + std::to_string(b.header_line) + ": header says d=" +
                                std::to_string(b.declared_degree) + " but terms have degree " +
                                std::to_string(b.poly.degree()));
  }
  out.push_back(b.poly);
}

}  // namespace

std::vector<Polynomial> parse_polynomials(std::string_view text) {
  std::vector<Polynomial> out;
  std::optional<Block> current;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    const std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;

    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;

    if (tokens[0] == "poly") {
      if (tokens.size() != 3) {
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": header must be 'poly n=<n> d=<d>'");
      }
      if (current) finish_block(*current, out);
      const std::size_t n = parse_count(tokens[1], "n=", line_no);
      const std::size_t d = parse_count(tokens[2], "d=", line_no);
      current = Block{Polynomial(n), static_cast<unsigned>(d), line_no};
      continue;
    }

    if (!current) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": term line before 'poly' header");
    }
    const std::size_t n = current->poly.num_vars();
    if (tokens.size() != n + 1) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(n) + " exponents, got " +
                                  std::to_string(tokens.size() - 1));
    }
    Rational c;
    try {
      c = Rational::parse(tokens[0]);
    } catch (const std::exception& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (c.is_zero()) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": zero coefficient");
    }
    std::vector<Exponent> e(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto tok = tokens[i + 1];
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), e[i]);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": bad exponent '" +
                                    std::string(tok) + "'");
      }
    }
    Monomial m(std::move(e));
    if (current->poly.terms().contains(m)) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": duplicate monomial");
    }
    current->poly.add_term(m, c);
  }
  if (current) finish_block(*current, out);
  return out;
}

Polynomial parse_polynomial(std::string_view text) {
  auto polys = parse_polynomials(text);
  if (polys.size() != 1) {
    throw std::invalid_argument("expected exactly one polynomial, found " +
                                std::to_string(polys.size()));
  }
  return std::move(polys.front());
}

std::string to_pretty_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool constant = m.degree() == 0;
    const bool unit = mag == Rational(1);
    if (!unit || constant) {
      if (mag.is_integer()) {
        os << mag.numerator().get_str();
      } else {
        os << mag.to_string();
      }
    }
    bool need_star = !unit || constant;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) os << "*";
      os << "x" << (i + 1);
      if (m[i] > 1) os << "^" << m[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace symq
