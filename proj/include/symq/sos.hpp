#pragma once

// Non-SOS certificates for quartic forms and exact SOS identity checks.
//
// Zero-forcing argument: if f = sum_t h_t^2 with f a quartic, every h_t is a
// quadratic form and h_t vanishes wherever f does. If the only quadratic
// form vanishing on a set of real zeros of f is 0, every h_t is 0, which
// contradicts f != 0. The engine checks the zeros exactly and decides the
// second condition as "kernel of the vanishing-constraint matrix is {0}".

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symq/linalg.hpp"
#include "symq/polynomial.hpp"

namespace symq {

/// All 0/1 points in n coordinates whose weight (number of 1's) is in
/// `weights`, in ascending lexicographic order.
struct ZeroSet {
  std::size_t n = 0;
  std::vector<std::size_t> weights;  // sorted, unique
  std::vector<std::vector<std::uint8_t>> points;

  [[nodiscard]] Point point(std::size_t i) const;
};

ZeroSet enumerate_zero_points(std::size_t n, std::span<const std::size_t> weights);

/// {m, m+1} with m = floor(n/2).
std::vector<std::size_t> default_weights(std::size_t n);

/// True iff f vanishes exactly at every point of z.
bool verify_zeros(const Polynomial& f, const ZeroSet& z);

/// Coordinates of h = sum_i a_i x_i^2 + sum_{i<j} a_ij x_i x_j. Index layout:
/// a_1..a_n first, then a_ij in lexicographic (i, j) order.
struct QuadraticCoefficientVector {
  std::size_t n = 0;
  std::vector<Rational> values;

  static std::size_t dimension(std::size_t n) { return n + n * (n - 1) / 2; }
  /// Column of a_i (zero-based i).
  static std::size_t square_index(std::size_t i) { return i; }
  /// Column of a_ij, i != j (zero-based, either order).
  static std::size_t cross_index(std::size_t n, std::size_t i, std::size_t j);

  [[nodiscard]] Polynomial to_polynomial() const;
  /// Throws std::invalid_argument unless q is a quadratic form.
  static QuadraticCoefficientVector from_polynomial(const Polynomial& q);
};

/// One row per zero point: the monomial basis x_1^2..x_n^2, x_1x_2..x_{n-1}x_n
/// evaluated there.
RationalMatrix vanishing_constraint_matrix(const ZeroSet& z);

enum class SosVerdict { NotSos, Inconclusive };
enum class ReplayStatus { NotRun, Passed, Failed };

struct NonSosCertificate {
  std::uint64_t form_hash = 0;
  std::size_t n = 0;
  std::vector<std::size_t> weights;
  std::size_t zero_points = 0;
  bool zeros_verified = false;
  std::size_t constraint_rows = 0;
  std::size_t unknowns = 0;
  std::size_t kernel_dimension = 0;
  std::uint64_t replay_seed = 0;
  ReplayStatus replay = ReplayStatus::NotRun;
  SosVerdict verdict = SosVerdict::Inconclusive;
};

/// Requires f to be a nonzero quartic form with f.num_vars() == z.n.
/// The index-subtraction replay runs whenever z uses the weights {m, m+1}.
NonSosCertificate certify_not_sos(const Polynomial& f, const ZeroSet& z,
                                  std::uint64_t replay_seed = 0);

std::string to_text(const NonSosCertificate& cert);

/// 64-bit FNV-1a of the canonical text form.
std::uint64_t form_hash(const Polynomial& f);

/// Row differences predicted by the hand elimination for fixed distinct
/// i, j, k and an index set S (|S| = m - 1, disjoint from {i, j, k}).
struct SubtractionReplay {
  std::vector<Rational> diff_ik;   // row(S+{i,k}) - row(S+{i})
  std::vector<Rational> diff_jk;   // row(S+{j,k}) - row(S+{j})
  std::vector<Rational> relation;  // diff_ik - diff_jk
  bool matches = false;
};

SubtractionReplay replay_subtraction(std::size_t n, std::size_t i, std::size_t j, std::size_t k,
                                     std::span<const std::size_t> S);

/// -m^2 + m(m-1)/2: h(1,..,1,0,..,0) with m ones once all a_ij = 1 and
/// a_k = -m.
Rational lemma_final_scalar(std::size_t m);

/// Seeded random replay of the subtraction identities on the weights
/// {m, m+1} matrix, plus the final nonzero-scalar step. Requires n >= 4.
bool replay_lemma_subtractions(std::size_t n, std::uint64_t seed = 0, std::size_t trials = 32);

/// target = sum (g * h)^2, checked exactly.
struct SosIdentity {
  Polynomial target;
  std::vector<std::pair<Polynomial, Polynomial>> summands;
};

Polynomial expand(const SosIdentity& id);
bool verify_sos_identity(const SosIdentity& id);

/// L_{2m} = sum_{i<j} ((x_i - x_j) * (-(x_1+...+x_{2m}) + m(x_i + x_j)))^2.
SosIdentity Ln_even_sos_identity(std::size_t two_m);

/// Summands as consecutive polynomial blocks, two per pair (g then h).
std::string summands_to_text(std::span<const std::pair<Polynomial, Polynomial>> summands);
std::vector<std::pair<Polynomial, Polynomial>> parse_summands(std::string_view text);

}  // namespace symq
