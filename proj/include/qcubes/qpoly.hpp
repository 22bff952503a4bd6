#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qcubes {

using Exponent = std::int64_t;

// Overflow-checked exponent arithmetic. Every exponent that reaches a
// polynomial goes through these; overflow throws std::overflow_error.
Exponent checked_add(Exponent a, Exponent b);
Exponent checked_sub(Exponent a, Exponent b);
Exponent checked_mul(Exponent a, Exponent b);
Exponent checked_pow(Exponent base, unsigned exp);

/**
 * Sparse Laurent polynomial in q with arbitrary-precision integer
 * coefficients.
 *
 * Terms are kept sorted by strictly increasing exponent and no stored
 * coefficient is zero, so the zero polynomial is the empty term list and
 * structural equality is polynomial equality.
 */
class LaurentPoly {
 public:
  struct Term {
    Exponent exp;
    mpz_class coeff;

    friend bool operator==(const Term& a, const Term& b) { return a.exp == b.exp && a.coeff == b.coeff; }
  };

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor): integers embed as constants
  LaurentPoly(const mpz_class& c);  // NOLINT(google-explicit-constructor)

  /// Builds a polynomial from terms in any order; equal exponents are
  /// combined and zero coefficients dropped.
  static LaurentPoly from_terms(std::vector<Term> terms);

  /// Builds c_0 + c_1 q + ... from a dense coefficient vector (offset by shift).
  static LaurentPoly from_dense(std::span<const mpz_class> coeffs, Exponent shift = 0);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  // Precondition for the following four: !is_zero().
  Exponent min_exponent() const { return terms_.front().exp; }
  Exponent max_exponent() const { return terms_.back().exp; }
  const mpz_class& leading_coeff() const { return terms_.back().coeff; }
  const mpz_class& trailing_coeff() const { return terms_.front().coeff; }

  /// Coefficient of q^e (zero when absent).
  mpz_class coeff(Exponent e) const;

  /// Multiplies by q^e.
  LaurentPoly shifted(Exponent e) const;
  LaurentPoly scaled(const mpz_class& c) const;

  /// Nonnegative gcd of all coefficients; zero for the zero polynomial.
  mpz_class content() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<Term> terms_;
};

/// coeff * q^exp, or the zero polynomial when coeff is zero.
LaurentPoly monomial(const mpz_class& coeff, Exponent exp);

/// The indeterminate q^exp.
inline LaurentPoly q_pow(Exponent exp) { return monomial(1, exp); }

/// Returns c with a = b * c. Throws DivisionByZero when b is zero and
/// NonzeroRemainder when b does not divide a in Z[q, 1/q].
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// Replaces q by q^base: every exponent e becomes base * e. Requires base >= 1.
LaurentPoly substitute_power(const LaurentPoly& a, Exponent base);

/// Value at q = 1, i.e. the sum of all coefficients.
mpz_class eval_at_one(const LaurentPoly& a);

LaurentPoly pow(const LaurentPoly& a, unsigned k);

/// Sum of many polynomials, accumulated in one pass.
LaurentPoly sum(std::span<const LaurentPoly> parts);

/// Canonical text: ascending exponents, `c*q^e`, e.g. `1 + 2*q + q^2`,
/// `q^-3 + 1`, `1 - q^2`; the zero polynomial renders as `0`.
std::string to_string(const LaurentPoly& p);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/**
 * Quotient of two Laurent polynomials in canonical form.
 *
 * Canonical means: num and den are coprime over Q[q]; den has lowest
 * exponent 0 and a positive leading coefficient; the integer contents of
 * num and den are jointly coprime. Equal rational functions therefore have
 * identical fields.
 */
class RationalFn {
 public:
  RationalFn() : num_(), den_(1) {}
  RationalFn(LaurentPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFn(long c) : RationalFn(LaurentPoly(c)) {}           // NOLINT(google-explicit-constructor)

  /// Reduces num / den to canonical form. Throws DivisionByZero when den is zero.
  static RationalFn normalize(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_polynomial() const { return den_ == LaurentPoly(1); }
  bool is_zero() const { return num_.is_zero(); }

  RationalFn operator-() const;
  RationalFn& operator+=(const RationalFn& rhs);
  RationalFn& operator-=(const RationalFn& rhs);
  RationalFn& operator*=(const RationalFn& rhs);
  RationalFn& operator/=(const RationalFn& rhs);

  friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
  friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
  friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
  friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }
  friend bool operator==(const RationalFn& a, const RationalFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  struct Canonical {};
  RationalFn(LaurentPoly num, LaurentPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

  LaurentPoly num_;
  LaurentPoly den_;
};

inline RationalFn rf_normalize(LaurentPoly num, LaurentPoly den) {
  return RationalFn::normalize(std::move(num), std::move(den));
}

/// The polynomial a rational function equals. Throws NotPolynomial when the
/// canonical denominator is not 1.
LaurentPoly rf_to_poly(const RationalFn& r);

/// Primitive gcd of two ordinary polynomials (nonnegative exponents):
/// content 1, positive leading coefficient, and zero lowest exponent unless
/// q divides both. gcd(0, 0) is 0.
LaurentPoly primitive_gcd(const LaurentPoly& a, const LaurentPoly& b);

std::string to_string(const RationalFn& r);

}  // namespace qcubes
