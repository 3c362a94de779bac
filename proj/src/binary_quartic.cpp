#include "symq/binary_quartic.hpp"

namespace symq {

Rational BinaryQuartic::operator()(const Rational& r, const Rational& s) const {
  Rational total;
  for (unsigned i = 0; i < 5; ++i) {
    if (c[i].is_zero()) continue;
    total += c[i] * pow(r, 4 - i) * pow(s, i);
  }
  return total;
}

bool BinaryQuartic::is_zero() const {
  for (const auto& x : c) {
    if (!x.is_zero()) return false;
  }
  return true;
}

UPoly BinaryQuartic::dehomogenize() const {
  return UPoly({c[4], c[3], c[2], c[1], c[0]});
}

std::string BinaryQuartic::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i != 0) out += ' ';
    out += c[i].to_string();
  }
  return out;
}

BinaryQuartic scaled_fourth_power_of_difference(const Rational& lambda) {
  return BinaryQuartic{{lambda, Rational(-4) * lambda, Rational(6) * lambda,
                        Rational(-4) * lambda, lambda}};
}

namespace {

QuarticCounterexample witness_at(const BinaryQuartic& q, const Rational& r, const Rational& s) {
  return {r, s, q(r, s)};
}

}  // namespace

QuarticVerdict binary_quartic_nonneg(const BinaryQuartic& q) {
  if (q.is_zero()) return NonnegWitness{true, 0, {}};
  if (q.c[0].sign() < 0) return witness_at(q, Rational(1), Rational(0));
  if (q.c[4].sign() < 0) return witness_at(q, Rational(0), Rational(1));

  // For s != 0, q(r, s) = s^4 u(r/s), so q >= 0 iff u >= 0 on the real line.
  // u only changes sign at its real roots, which are the roots of its
  // square-free part; one sample per gap decides the sign pattern.
  const UPoly u = q.dehomogenize();
  const auto intervals = isolate_real_roots(square_free_part(u));

  NonnegWitness witness{false, intervals.size(), {}};
  if (intervals.empty()) {
    witness.samples.push_back(Rational(0));
  } else {
    witness.samples.push_back(intervals.front().lo);
    for (const auto& cell : intervals) witness.samples.push_back(cell.hi);
  }
  for (const auto& t : witness.samples) {
    if (u(t).sign() < 0) {
      // t = a/b with b > 0; (a, b) is an integral point with the same sign.
      return witness_at(q, Rational(mpq_class(t.numerator())),
                        Rational(mpq_class(t.denominator())));
    }
  }
  return witness;
}

}  // namespace symq
