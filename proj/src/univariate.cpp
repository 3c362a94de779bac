#include "symq/univariate.hpp"

#include <algorithm>
#include <stdexcept>

namespace symq {

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UPoly::operator()(const Rational& t) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

UPoly UPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  }
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  UPoly out = *this;
  const Rational lead = leading();
  for (auto& c : out.coeffs_) c /= lead;
  return out;
}

UPoly operator-(const UPoly& a) {
  UPoly out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(std::move(c));
}

DivMod divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UPoly{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    const Rational factor = rem[static_cast<std::size_t>(i)] / b.leading();
    quot[static_cast<std::size_t>(i - db)] = factor;
    if (factor.is_zero()) continue;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i - db + j)] -= factor * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a;
  UPoly y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly square_free_part(const UPoly& p) {
  if (p.degree() <= 0) return p.monic();
  return divmod(p, gcd(p, p.derivative())).quotient.monic();
}

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  UPoly next = p.derivative();
  while (!next.is_zero()) {
    chain.push_back(next);
    const auto& a = chain[chain.size() - 2];
    next = -divmod(a, chain.back()).remainder;
  }
  return chain;
}

namespace {

std::size_t sign_changes(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int prev = 0;
  for (const int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

std::size_t variations_at(const std::vector<UPoly>& chain, const Rational& t) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) signs.push_back(p(t).sign());
  return sign_changes(signs);
}

std::size_t variations_at_infinity(const std::vector<UPoly>& chain, bool negative) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) {
    int s = p.leading().sign();
    if (negative && p.degree() % 2 != 0) s = -s;
    signs.push_back(s);
  }
  return sign_changes(signs);
}

}  // namespace

std::size_t count_roots(const std::vector<UPoly>& chain, const Rational& a, const Rational& b) {
  if (chain.empty() || !(a < b)) return 0;
  return variations_at(chain, a) - variations_at(chain, b);
}

std::size_t count_real_roots(const std::vector<UPoly>& chain) {
  if (chain.empty()) return 0;
  return variations_at_infinity(chain, true) - variations_at_infinity(chain, false);
}

Rational cauchy_root_bound(const UPoly& p) {
  Rational worst;
  if (p.degree() <= 0) return Rational(1);
  for (int i = 0; i < p.degree(); ++i) {
    worst = std::max(worst, abs(p.coeffs()[static_cast<std::size_t>(i)] / p.leading()));
  }
  return worst + Rational(1);
}

std::vector<RootInterval> isolate_real_roots(const UPoly& p) {
  std::vector<RootInterval> out;
  if (p.degree() <= 0) return out;
  const auto chain = sturm_sequence(p);
  const Rational bound = cauchy_root_bound(p);
  const Rational two(2);

  // Bisect (-bound, bound] into half-open cells holding one root each,
  // left to right.
  std::vector<RootInterval> pending{{-bound, bound}};
  std::vector<RootInterval> cells;
  while (!pending.empty()) {
    const RootInterval cell = pending.back();
    pending.pop_back();
    const std::size_t c = count_roots(chain, cell.lo, cell.hi);
    if (c == 0) continue;
    if (c == 1) {
      cells.push_back(cell);
      continue;
    }
    const Rational mid = (cell.lo + cell.hi) / two;
    pending.push_back({mid, cell.hi});
    pending.push_back({cell.lo, mid});
  }

  // Move endpoints off the roots so each cell becomes an open interval
  // whose endpoints are safe sample points.
  for (RootInterval cell : cells) {
    for (;;) {
      if (p(cell.hi).is_zero()) {
        const Rational root = cell.hi;
        Rational eps = (cell.hi - cell.lo) / two;
        for (;;) {
          const Rational lo = root - eps;
          const Rational hi = root + eps;
          if (!p(lo).is_zero() && !p(hi).is_zero() && count_roots(chain, lo, hi) == 1) {
            cell = {lo, hi};
            break;
          }
          eps /= two;
        }
        break;
      }
      if (!p(cell.lo).is_zero()) break;
      const Rational mid = (cell.lo + cell.hi) / two;
      if (!p(mid).is_zero() && count_roots(chain, cell.lo, mid) == 0) {
        cell.lo = mid;
      } else {
        cell.hi = mid;
      }
    }
    out.push_back(cell);
  }
  return out;
}

}  // namespace symq
