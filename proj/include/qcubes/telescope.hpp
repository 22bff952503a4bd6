#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>

#include "qcubes/qpoly.hpp"
#include "qcubes/report.hpp"

namespace qcubes {

/// A named sequence of positive integers a(1), a(2), ...
/// The term function must be pure.
struct SequenceSpec {
  std::string name;
  std::function<Exponent(Exponent)> term;

  /// a(j), throwing PreconditionViolation unless a(j) >= 1.
  Exponent at(Exponent j) const;
};

namespace sequences {
SequenceSpec constant_one();
SequenceSpec identity();        // j
SequenceSpec squares();         // j^2
SequenceSpec cubes();           // j^3
SequenceSpec odd();             // 2j - 1
SequenceSpec half_powers_of_three();  // (3^j - 1) / 2
/// Deterministic pseudo-random terms in [1, max_term], fixed by seed.
SequenceSpec seeded_random(std::uint64_t seed, Exponent max_term, Exponent length);
}  // namespace sequences

enum class TelescopeDirection { kForward, kBackward };

/// Both sides of the telescoping identity
///   forward:  sum_j q^{a(1)+...+a(j-1)} [a(j)]_q = [a(1)+...+a(n)]_q
///   backward: sum_j q^{a(j+1)+...+a(n)} [a(j)]_q = [a(1)+...+a(n)]_q
/// fully expanded. Only feasible when the total fits in memory.
std::pair<LaurentPoly, LaurentPoly> telescope_sides(const SequenceSpec& seq, Exponent n, TelescopeDirection dir);

/// Totals up to this many terms are compared fully expanded; above it both
/// sides are compared after multiplication by (1 - q), which is injective,
/// so [a]_q is represented by the two-term 1 - q^a.
inline constexpr Exponent kExpandedTermLimit = Exponent{1} << 21;

VerificationReport forward_telescope(const SequenceSpec& seq, Exponent n);
VerificationReport backward_telescope(const SequenceSpec& seq, Exponent n);

/// Checks, for every m = 1..n, that the partial sum up to m equals the one
/// up to m-1 plus the m-th summand and that it matches [S_m]_q, together
/// with the one-step identities
///   [S]_q + q^S [a]_q = [S + a]_q        (forward)
///   q^a [S]_q + [a]_q = [S + a]_q        (backward).
VerificationReport verify_partial_sums(const SequenceSpec& seq, Exponent n, TelescopeDirection dir);

enum class DifferenceKind { kGarrettHummel, kWarnaar, kZhaoFeng, kTriangularQint };

std::string_view to_string(DifferenceKind kind);

/// Left side (a difference of squares) and right side (collapsed to a
/// polynomial) of the consecutive-difference identity of the given kind:
///   garrett_hummel:  G(n)^2 -       G(n-1)^2 = q^{n-1}[n]^2 ([n-1] + [n+1]) / [2]
///   warnaar:         G(n)^2 - q^2 * G(n-1)^2 = [n]^2 [n]_{q^2}
///   zhao_feng:       G(n)^2 - q^4 * G(n-1)^2 = [n]^2 (1 + q^2 - 2q^{n+1}) / (1 - q^2)
///   triangular_qint: [T(n)]^2 - q^n [T(n-1)]^2 = [n] [n^2]
/// where G(n) is the Gaussian binomial [n+1 choose 2]_q.
/// Throws NotPolynomial if a fractional right side has a pole.
std::pair<LaurentPoly, LaurentPoly> difference_sides(DifferenceKind kind, Exponent n);

VerificationReport difference_identity(DifferenceKind kind, Exponent n);

}  // namespace qcubes
