#include "symq/sos.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <map>
#include <random>
#include <stdexcept>

#include "symq/forms.hpp"

namespace symq {

Point ZeroSet::point(std::size_t i) const {
  Point p;
  p.reserve(n);
  for (const auto bit : points.at(i)) p.emplace_back(static_cast<long>(bit));
  return p;
}

ZeroSet enumerate_zero_points(std::size_t n, std::span<const std::size_t> weights) {
  if (n > 24) throw std::invalid_argument("0/1 enumeration limited to n <= 24");
  ZeroSet z;
  z.n = n;
  z.weights.assign(weights.begin(), weights.end());
  std::sort(z.weights.begin(), z.weights.end());
  z.weights.erase(std::unique(z.weights.begin(), z.weights.end()), z.weights.end());
  for (const auto w : z.weights) {
    if (w > n) {
      throw std::invalid_argument("weight " + std::to_string(w) + " exceeds n=" +
                                  std::to_string(n));
    }
  }
  // x_1 is the most significant coordinate, so counting up is lexicographic.
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    const auto w = static_cast<std::size_t>(std::popcount(mask));
    if (!std::binary_search(z.weights.begin(), z.weights.end(), w)) continue;
    std::vector<std::uint8_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint8_t>((mask >> (n - 1 - i)) & 1U);
    z.points.push_back(std::move(p));
  }
  return z;
}

std::vector<std::size_t> default_weights(std::size_t n) { return {n / 2, n / 2 + 1}; }

bool verify_zeros(const Polynomial& f, const ZeroSet& z) {
  if (f.num_vars() != z.n) {
    throw std::invalid_argument("zero set has " + std::to_string(z.n) +
                                " coordinates, form has " + std::to_string(f.num_vars()));
  }
  for (std::size_t i = 0; i < z.points.size(); ++i) {
    if (!eval(f, z.point(i)).is_zero()) return false;
  }
  return true;
}

std::size_t QuadraticCoefficientVector::cross_index(std::size_t n, std::size_t i, std::size_t j) {
  if (i == j || i >= n || j >= n) throw std::out_of_range("bad cross-term index");
  if (i > j) std::swap(i, j);
  // Pairs (0,1)..(0,n-1), (1,2).. precede (i, j).
  return n + i * n - i * (i + 1) / 2 + (j - i - 1);
}

Polynomial QuadraticCoefficientVector::to_polynomial() const {
  if (values.size() != dimension(n)) throw std::invalid_argument("coefficient vector size mismatch");
  Polynomial h(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Exponent> e(n, 0);
    e[i] = 2;
    h.add_term(Monomial(std::move(e)), values[square_index(i)]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Exponent> e(n, 0);
      e[i] = e[j] = 1;
      h.add_term(Monomial(std::move(e)), values[cross_index(n, i, j)]);
    }
  }
  return h;
}

QuadraticCoefficientVector QuadraticCoefficientVector::from_polynomial(const Polynomial& q) {
  if (!is_homogeneous(q, 2)) throw std::invalid_argument("not a quadratic form");
  const std::size_t n = q.num_vars();
  QuadraticCoefficientVector out{n, std::vector<Rational>(dimension(n))};
  for (const auto& [m, c] : q.terms()) {
    std::vector<std::size_t> support;
    for (std::size_t v = 0; v < n; ++v) {
      for (Exponent r = 0; r < m[v]; ++r) support.push_back(v);
    }
    out.values[support[0] == support[1] ? square_index(support[0])
                                        : cross_index(n, support[0], support[1])] = c;
  }
  return out;
}

RationalMatrix vanishing_constraint_matrix(const ZeroSet& z) {
  const std::size_t n = z.n;
  RationalMatrix m(z.points.size(), QuadraticCoefficientVector::dimension(n));
  for (std::size_t r = 0; r < z.points.size(); ++r) {
    const auto& p = z.points[r];
    for (std::size_t i = 0; i < n; ++i) {
      if (p[i] == 0) continue;
      m(r, QuadraticCoefficientVector::square_index(i)) = Rational(1);
      for (std::size_t j = i + 1; j < n; ++j) {
        if (p[j] != 0) m(r, QuadraticCoefficientVector::cross_index(n, i, j)) = Rational(1);
      }
    }
  }
  return m;
}

std::uint64_t form_hash(const Polynomial& f) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char ch : to_text(f)) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ULL;
  }
  return h;
}

NonSosCertificate certify_not_sos(const Polynomial& f, const ZeroSet& z, std::uint64_t replay_seed) {
  if (f.is_zero()) throw std::invalid_argument("certify_not_sos: form is zero");
  if (!is_homogeneous(f, 4)) {
    throw std::invalid_argument("certify_not_sos: form must be a quartic (degree " +
                                std::to_string(f.degree()) + " given)");
  }
  if (f.num_vars() != z.n) {
    throw std::invalid_argument("certify_not_sos: zero set has " + std::to_string(z.n) +
                                " coordinates, form has " + std::to_string(f.num_vars()));
  }

  NonSosCertificate cert;
  cert.form_hash = form_hash(f);
  cert.n = z.n;
  cert.weights = z.weights;
  cert.zero_points = z.points.size();
  cert.zeros_verified = verify_zeros(f, z);
  const RationalMatrix m = vanishing_constraint_matrix(z);
  cert.constraint_rows = m.rows();
  cert.unknowns = m.cols();
  cert.kernel_dimension = kernel_dimension(m);
  cert.replay_seed = replay_seed;
  if (z.n >= 4 && z.weights == default_weights(z.n)) {
    cert.replay = replay_lemma_subtractions(z.n, replay_seed) ? ReplayStatus::Passed
                                                              : ReplayStatus::Failed;
  }
  cert.verdict = cert.zeros_verified && cert.kernel_dimension == 0 ? SosVerdict::NotSos
                                                                   : SosVerdict::Inconclusive;
  return cert;
}

std::string to_text(const NonSosCertificate& cert) {
  char hash[32];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(cert.form_hash));
  std::string weights;
  for (std::size_t i = 0; i < cert.weights.size(); ++i) {
    if (i != 0) weights += ',';
    weights += std::to_string(cert.weights[i]);
  }
  const char* replay = cert.replay == ReplayStatus::Passed   ? "passed"
                       : cert.replay == ReplayStatus::Failed ? "failed"
                                                             : "not_run";
  std::string out = "not-sos-certificate\n";
  out += "form-hash fnv1a64:" + std::string(hash) + "\n";
  out += "n " + std::to_string(cert.n) + "\n";
  out += "weights " + weights + "\n";
  out += "zero-points " + std::to_string(cert.zero_points) +
         " verified=" + (cert.zeros_verified ? "true" : "false") + "\n";
  out += "constraint-rows " + std::to_string(cert.constraint_rows) + "\n";
  out += "unknowns " + std::to_string(cert.unknowns) + "\n";
  out += "kernel-dimension " + std::to_string(cert.kernel_dimension) + "\n";
  out += "lemma-replay seed=" + std::to_string(cert.replay_seed) + " status=" + replay + "\n";
  if (cert.verdict == SosVerdict::NotSos) {
    out += "argument every quadratic summand of an SOS decomposition vanishes on all " +
           std::to_string(cert.zero_points) +
           " zero points; only the zero quadratic does, and the form is nonzero\n";
    out += "verdict not_sos\n";
  } else {
    out += std::string("argument ") +
           (cert.zeros_verified ? "nontrivial quadratics vanish on the zero points"
                                : "the form does not vanish on every listed point") +
           "\n";
    out += "verdict inconclusive\n";
  }
  return out;
}

namespace {

std::vector<Rational> row_for(const ZeroSet& z, const RationalMatrix& m,
                              const std::map<std::vector<std::uint8_t>, std::size_t>& index,
                              std::span<const std::size_t> ones) {
  std::vector<std::uint8_t> p(z.n, 0);
  for (const auto i : ones) p[i] = 1;
  const auto it = index.find(p);
  if (it == index.end()) return {};
  const auto r = m.row(it->second);
  return {r.begin(), r.end()};
}

std::vector<Rational> difference(std::span<const Rational> a, std::span<const Rational> b) {
  std::vector<Rational> out(a.begin(), a.end());
  for (std::size_t c = 0; c < out.size(); ++c) out[c] -= b[c];
  return out;
}

std::vector<std::size_t> with(std::span<const std::size_t> base, std::initializer_list<std::size_t> extra) {
  std::vector<std::size_t> out(base.begin(), base.end());
  out.insert(out.end(), extra);
  return out;
}

struct ReplayContext {
  explicit ReplayContext(std::size_t n)
      : z(enumerate_zero_points(n, default_weights(n))), mat(vanishing_constraint_matrix(z)) {
    for (std::size_t r = 0; r < z.points.size(); ++r) index.emplace(z.points[r], r);
  }
  ZeroSet z;
  RationalMatrix mat;
  std::map<std::vector<std::uint8_t>, std::size_t> index;
};

SubtractionReplay replay_with(const ReplayContext& ctx, std::size_t i, std::size_t j,
                              std::size_t k, std::span<const std::size_t> S) {
  const std::size_t n = ctx.z.n;
  const std::size_t m = n / 2;
  if (n < 4) throw std::invalid_argument("subtraction replay requires n >= 4");
  if (i >= n || j >= n || k >= n || i == j || i == k || j == k) {
    throw std::invalid_argument("i, j, k must be distinct indices below n");
  }
  if (S.size() + 1 != m) throw std::invalid_argument("|S| must equal m - 1");
  for (const auto l : S) {
    if (l >= n || l == i || l == j || l == k || std::count(S.begin(), S.end(), l) != 1) {
      throw std::invalid_argument("S must be distinct indices outside {i, j, k}");
    }
  }

  const auto& [z, mat, index] = ctx;
  SubtractionReplay out;
  const auto r_i = row_for(z, mat, index, with(S, {i}));
  const auto r_ik = row_for(z, mat, index, with(S, {i, k}));
  const auto r_j = row_for(z, mat, index, with(S, {j}));
  const auto r_jk = row_for(z, mat, index, with(S, {j, k}));
  if (r_i.empty() || r_ik.empty() || r_j.empty() || r_jk.empty()) return out;

  out.diff_ik = difference(r_ik, r_i);
  out.diff_jk = difference(r_jk, r_j);
  out.relation = difference(out.diff_ik, out.diff_jk);

  using Q = QuadraticCoefficientVector;
  const std::size_t dim = Q::dimension(n);
  auto expected_diff = [&](std::size_t other) {
    std::vector<Rational> e(dim);
    e[Q::square_index(k)] = Rational(1);
    for (const auto l : S) e[Q::cross_index(n, k, l)] = Rational(1);
    e[Q::cross_index(n, other, k)] = Rational(1);
    return e;
  };
  std::vector<Rational> expected_relation(dim);
  expected_relation[Q::cross_index(n, i, k)] = Rational(1);
  expected_relation[Q::cross_index(n, j, k)] = Rational(-1);

  out.matches = out.diff_ik == expected_diff(i) && out.diff_jk == expected_diff(j) &&
                out.relation == expected_relation;
  return out;
}

}  // namespace

SubtractionReplay replay_subtraction(std::size_t n, std::size_t i, std::size_t j, std::size_t k,
                                     std::span<const std::size_t> S) {
  if (n < 4) throw std::invalid_argument("subtraction replay requires n >= 4");
  return replay_with(ReplayContext(n), i, j, k, S);
}

Rational lemma_final_scalar(std::size_t m) {
  const auto mm = static_cast<long>(m);
  return Rational(-mm * mm) + Rational(mm * (mm - 1), 2);
}

bool replay_lemma_subtractions(std::size_t n, std::uint64_t seed, std::size_t trials) {
  if (n < 4) throw std::invalid_argument("lemma replay requires n >= 4");
  const std::size_t m = n / 2;

  const ReplayContext ctx(n);
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<std::size_t> order(n);
    for (std::size_t v = 0; v < n; ++v) order[v] = v;
    // Fisher-Yates with plain modulo so the draw sequence is fixed by the seed.
    for (std::size_t v = n - 1; v > 0; --v) std::swap(order[v], order[rng() % (v + 1)]);
    const std::vector<std::size_t> S(order.begin() + 3, order.begin() + 3 + static_cast<std::ptrdiff_t>(m - 1));
    if (!replay_with(ctx, order[0], order[1], order[2], S).matches) return false;
  }

  // With every a_ij = u = 1, the weight-m rows force a_k = -m; the weight-m point
  // then yields the scalar below, which must be nonzero.
  QuadraticCoefficientVector h{n, std::vector<Rational>(QuadraticCoefficientVector::dimension(n), Rational(1))};
  for (std::size_t v = 0; v < n; ++v) h.values[QuadraticCoefficientVector::square_index(v)] = Rational(-static_cast<long>(m));
  const Point weight_m = [&] {
    Point p(n, Rational(0));
    for (std::size_t v = 0; v < m; ++v) p[v] = Rational(1);
    return p;
  }();
  const Rational scalar = eval(h.to_polynomial(), weight_m);
  return scalar == lemma_final_scalar(m) && !scalar.is_zero();
}

Polynomial expand(const SosIdentity& id) {
  Polynomial total(id.target.num_vars());
  for (const auto& [g, h] : id.summands) {
    const Polynomial gh = g * h;
    total += gh * gh;
  }
  return total;
}

bool verify_sos_identity(const SosIdentity& id) {
  for (const auto& [g, h] : id.summands) {
    if (g.num_vars() != id.target.num_vars() || h.num_vars() != id.target.num_vars()) return false;
  }
  return expand(id) == id.target;
}

SosIdentity Ln_even_sos_identity(std::size_t two_m) {
  if (two_m < 4 || two_m % 2 != 0) throw std::invalid_argument("requires an even argument >= 4");
  const std::size_t n = two_m;
  const auto m = Rational(static_cast<long>(n / 2));
  Polynomial total(n);
  for (std::size_t v = 0; v < n; ++v) total += Polynomial::variable(n, v);

  SosIdentity id{make_L(n), {}};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Polynomial xi = Polynomial::variable(n, i);
      const Polynomial xj = Polynomial::variable(n, j);
      id.summands.emplace_back(xi - xj, m * (xi + xj) - total);
    }
  }
  return id;
}

std::string summands_to_text(std::span<const std::pair<Polynomial, Polynomial>> summands) {
  std::string out;
  for (const auto& [g, h] : summands) out += to_text(g) + to_text(h);
  return out;
}

std::vector<std::pair<Polynomial, Polynomial>> parse_summands(std::string_view text) {
  auto polys = parse_polynomials(text);
  if (polys.size() % 2 != 0) {
    throw std::invalid_argument("summands file must hold an even number of polynomial blocks");
  }
  std::vector<std::pair<Polynomial, Polynomial>> out;
  for (std::size_t i = 0; i < polys.size(); i += 2) {
    out.emplace_back(std::move(polys[i]), std::move(polys[i + 1]));
  }
  return out;
}

}  // namespace symq
