#pragma once

#include <cstdint>

#include "qcubes/qpoly.hpp"

namespace qcubes {

/// The q-integer [n]_{q^b} = 1 + q^b + ... + q^{(n-1)b}; zero for n = 0.
/// Requires n >= 0 and b >= 1.
LaurentPoly q_int(Exponent n, Exponent base_power = 1);

/// Gaussian binomial coefficient [n choose k]_q; zero when k < 0 or k > n.
///
/// Computed by the product formula and by both Pascal recurrences; a
/// disagreement throws InternalInconsistency. Results are memoized.
LaurentPoly gauss_binomial(Exponent n, Exponent k);

// The three computation routes, exposed for cross-checking.
LaurentPoly gauss_binomial_product(Exponent n, Exponent k);
LaurentPoly gauss_binomial_pascal_left(Exponent n, Exponent k);   // q^k [n k] + [n k-1]
LaurentPoly gauss_binomial_pascal_right(Exponent n, Exponent k);  // [n k] + q^{n-k+1} [n k-1]

/// n(n+1)/2.
Exponent triangular(Exponent n);

/// Ordinary binomial coefficient, zero outside 0 <= k <= n.
mpz_class binomial(Exponent n, Exponent k);

}  // namespace qcubes
