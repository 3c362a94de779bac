#include "symq/psd.hpp"

#include <algorithm>
#include <numeric>

#include "symq/forms.hpp"

namespace symq {

namespace {

void require_symmetric_quartic(const Polynomial& f) {
  if (!is_homogeneous(f, 4)) {
    throw PsdPreconditionError(PsdPrecondition::NotQuartic,
                               "form must be a homogeneous quartic (degree " +
                                   std::to_string(f.degree()) + " given)");
  }
  if (!is_symmetric(f)) {
    throw PsdPreconditionError(PsdPrecondition::NotSymmetric, "form is not symmetric");
  }
}

}  // namespace

Point split_point(std::size_t n, std::size_t k, const Rational& r, const Rational& s) {
  if (k > n) throw std::out_of_range("split size exceeds variable count");
  Point p(n, s);
  std::fill(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k), r);
  return p;
}

BinaryRestriction restrict_split(const Polynomial& f, std::size_t k) {
  require_symmetric_quartic(f);
  if (k > f.num_vars()) throw std::out_of_range("split size exceeds variable count");
  BinaryRestriction out{k, {}};
  for (const auto& [m, c] : f.terms()) {
    const auto e = m.exponents();
    const unsigned r_degree = std::accumulate(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(k), 0U);
    out.q.c[4 - r_degree] += c;
  }
  return out;
}

QuarticVerdict binary_quartic_nonneg(const BinaryRestriction& restriction) {
  return binary_quartic_nonneg(restriction.q);
}

PsdCertificate check_psd(const Polynomial& f) {
  if (!is_homogeneous(f, 4)) {
    throw PsdPreconditionError(PsdPrecondition::NotQuartic,
                               "form must be a homogeneous quartic (degree " +
                                   std::to_string(f.degree()) + " given)");
  }
  if (f.num_vars() < 4) {
    throw PsdPreconditionError(PsdPrecondition::TooFewVariables,
                               "the two-value test set needs n >= 4 (n=" +
                                   std::to_string(f.num_vars()) + " given)");
  }
  require_symmetric_quartic(f);

  const std::size_t n = f.num_vars();
  PsdCertificate cert;
  cert.n = n;
  cert.psd = true;
  for (std::size_t k = 0; k <= n; ++k) {
    BinaryRestriction restriction = restrict_split(f, k);
    QuarticVerdict verdict = binary_quartic_nonneg(restriction.q);
    if (cert.psd) {
      if (const auto* bad = std::get_if<QuarticCounterexample>(&verdict)) {
        cert.psd = false;
        cert.counterexample = split_point(n, k, bad->r, bad->s);
        cert.counterexample_value = eval(f, *cert.counterexample);
        if (cert.counterexample_value.sign() >= 0) {
          throw std::logic_error("restriction counterexample does not lift to the form");
        }
      }
    }
    cert.restrictions.push_back({std::move(restriction), std::move(verdict)});
  }
  return cert;
}

std::string to_text(const PsdCertificate& cert) {
  std::string out = "psd-certificate n=" + std::to_string(cert.n) + "\n";
  for (const auto& [restriction, verdict] : cert.restrictions) {
    out += "k=" + std::to_string(restriction.k) + " q=" + restriction.q.to_string();
    if (const auto* w = std::get_if<NonnegWitness>(&verdict)) {
      if (w->identically_zero) {
        out += " nonneg zero";
      } else {
        out += " nonneg roots=" + std::to_string(w->distinct_real_roots) + " samples=";
        for (std::size_t i = 0; i < w->samples.size(); ++i) {
          if (i != 0) out += ',';
          out += w->samples[i].to_string();
        }
      }
    } else {
      const auto& bad = std::get<QuarticCounterexample>(verdict);
      out += " negative r=" + bad.r.to_string() + " s=" + bad.s.to_string() +
             " value=" + bad.value.to_string();
    }
    out += '\n';
  }
  if (cert.psd) {
    out += "verdict psd\n";
  } else {
    out += "verdict not_psd point=";
    for (std::size_t i = 0; i < cert.counterexample->size(); ++i) {
      if (i != 0) out += ',';
      out += (*cert.counterexample)[i].to_string();
    }
    out += " value=" + cert.counterexample_value.to_string() + "\n";
  }
  return out;
}

long Ln_split_coefficient(std::size_t n, std::size_t k) {
  const auto nn = static_cast<long>(n);
  const auto kk = static_cast<long>(k);
  const long m = nn / 2;
  return kk * (nn - kk) * (m - kk) * (nn - m - kk);
}

bool verify_Ln_restricted_formula(std::size_t n) {
  const Polynomial L = make_L(n);
  for (std::size_t k = 0; k <= n; ++k) {
    const auto expected = scaled_fourth_power_of_difference(Rational(Ln_split_coefficient(n, k)));
    if (restrict_split(L, k).q != expected) return false;
  }
  return true;
}

}  // namespace symq
