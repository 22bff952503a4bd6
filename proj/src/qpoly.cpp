#include "qcubes/qpoly.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "qcubes/errors.hpp"

namespace qcubes {

Exponent checked_add(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow in addition");
  return r;
}

Exponent checked_sub(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("exponent overflow in subtraction");
  return r;
}

Exponent checked_mul(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("exponent overflow in multiplication");
  return r;
}

Exponent checked_pow(Exponent base, unsigned exp) {
  Exponent r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

namespace {

// Dense accumulation pays off when the exponent span is not much larger
// than the number of generated terms.
constexpr std::size_t kDenseSlack = 1024;
constexpr Exponent kDenseLimit = Exponent{1} << 28;

bool use_dense(Exponent span, std::size_t work) {
  return span <= kDenseLimit && static_cast<std::size_t>(span) <= 4 * work + kDenseSlack;
}

std::vector<LaurentPoly::Term> compress_sorted(std::vector<LaurentPoly::Term> terms) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff += t.coeff;
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

using Dense = std::vector<mpz_class>;

// Dense coefficient vector of an ordinary polynomial (lowest exponent >= 0).
Dense to_dense(const LaurentPoly& p) {
  Dense d(p.is_zero() ? 0 : static_cast<std::size_t>(p.max_exponent()) + 1);
  for (const auto& t : p.terms()) d[static_cast<std::size_t>(t.exp)] = t.coeff;
  return d;
}

void trim(Dense& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

mpz_class dense_content(const Dense& d) {
  mpz_class g = 0;
  for (const auto& c : d) {
    if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(Dense& d) {
  mpz_class g = dense_content(d);
  if (g == 0) return;
  if (d.back() < 0) g = -g;
  if (g == 1) return;
  for (auto& c : d) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b (b nonzero), computed in place on a.
void pseudo_remainder(Dense& a, const Dense& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (a.size() > db && !a.empty()) {
    mpz_class la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) {
      if (b[i] != 0) mpz_submul(a[i + shift].get_mpz_t(), la.get_mpz_t(), b[i].get_mpz_t());
    }
    trim(a);
    // Keep coefficient growth in check; dividing by the content does not
    // change the gcd.
    make_primitive(a);
  }
}

Dense dense_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  if (a.size() < b.size()) std::swap(a, b);
  if (b.empty()) {
    make_primitive(a);
    return a;
  }
  make_primitive(a);
  make_primitive(b);
  while (!b.empty()) {
    if (b.size() == 1) return Dense{mpz_class(1)};
    pseudo_remainder(a, b);
    std::swap(a, b);
  }
  make_primitive(a);
  return a;
}

LaurentPoly divexact_scalar(const LaurentPoly& p, const mpz_class& c) {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
    terms.push_back({t.exp, std::move(q)});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.push_back({0, mpz_class(c)});
}

LaurentPoly::LaurentPoly(const mpz_class& c) {
  if (c != 0) terms_.push_back({0, c});
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
  LaurentPoly p;
  p.terms_ = compress_sorted(std::move(terms));
  return p;
}

LaurentPoly LaurentPoly::from_dense(std::span<const mpz_class> coeffs, Exponent shift) {
  LaurentPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) p.terms_.push_back({checked_add(shift, static_cast<Exponent>(i)), coeffs[i]});
  }
  return p;
}

mpz_class LaurentPoly::coeff(Exponent e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, Exponent x) { return t.exp < x; });
  if (it != terms_.end() && it->exp == e) return it->coeff;
  return 0;
}

LaurentPoly LaurentPoly::shifted(Exponent e) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.exp = checked_add(t.exp, e);
  return p;
}

LaurentPoly LaurentPoly::scaled(const mpz_class& c) const {
  if (c == 0) return {};
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

mpz_class LaurentPoly::content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->exp < b->exp)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exp < a->exp) {
      out.push_back(*b++);
    } else {
      mpz_class c = a->coeff + b->coeff;
      if (c != 0) out.push_back({a->exp, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_monomial()) return a.shifted(b.min_exponent()).scaled(b.trailing_coeff());
  if (a.is_monomial()) return b.shifted(a.min_exponent()).scaled(a.trailing_coeff());

  const Exponent lo = checked_add(a.min_exponent(), b.min_exponent());
  const Exponent hi = checked_add(a.max_exponent(), b.max_exponent());
  const Exponent span = checked_add(checked_sub(hi, lo), 1);
  const std::size_t work = a.size() * b.size();

  if (use_dense(span, work)) {
    Dense buf(static_cast<std::size_t>(span));
    for (const auto& ta : a.terms()) {
      const Exponent base = ta.exp - a.min_exponent();
      for (const auto& tb : b.terms()) {
        auto& slot = buf[static_cast<std::size_t>(base + tb.exp - b.min_exponent())];
        mpz_addmul(slot.get_mpz_t(), ta.coeff.get_mpz_t(), tb.coeff.get_mpz_t());
      }
    }
    return LaurentPoly::from_dense(buf, lo);
  }

  std::vector<LaurentPoly::Term> terms;
  terms.reserve(work);
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) terms.push_back({ta.exp + tb.exp, ta.coeff * tb.coeff});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly monomial(const mpz_class& coeff, Exponent exp) {
  if (coeff == 0) return {};
  return LaurentPoly::from_terms({{exp, coeff}});
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return {};
  const Exponent shift = checked_sub(a.min_exponent(), b.min_exponent());
  if (b.is_monomial()) {
    const mpz_class& c = b.trailing_coeff();
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(a.size());
    for (const auto& t : a.terms()) {
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t()))
        throw NonzeroRemainder("coefficient not divisible by " + c.get_str());
      mpz_class qc;
      mpz_divexact(qc.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
      terms.push_back({t.exp - b.min_exponent(), std::move(qc)});
    }
    return LaurentPoly::from_terms(std::move(terms));
  }

  // Units of Z[q, 1/q] are +-q^k, so divide the shifted ordinary parts.
  Dense rem = to_dense(a.shifted(-a.min_exponent()));
  const LaurentPoly divisor = b.shifted(-b.min_exponent());
  const std::size_t db = static_cast<std::size_t>(divisor.max_exponent());
  if (rem.size() <= db) throw NonzeroRemainder("divisor degree exceeds dividend degree");
  const mpz_class& lead = divisor.leading_coeff();

  Dense quot(rem.size() - db);
  for (std::size_t i = quot.size(); i-- > 0;) {
    mpz_class& top = rem[i + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw NonzeroRemainder("leading coefficient does not divide");
    mpz_divexact(quot[i].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (const auto& t : divisor.terms()) {
      auto& slot = rem[i + static_cast<std::size_t>(t.exp)];
      mpz_submul(slot.get_mpz_t(), quot[i].get_mpz_t(), t.coeff.get_mpz_t());
    }
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (rem[i] != 0) throw NonzeroRemainder("nonzero remainder in " + to_string(a) + " / " + to_string(b));
  }
  return LaurentPoly::from_dense(quot, shift);
}

LaurentPoly substitute_power(const LaurentPoly& a, Exponent base) {
  if (base < 1) throw PreconditionViolation("substitute_power requires base >= 1");
  std::vector<LaurentPoly::Term> terms = a.terms();
  for (auto& t : terms) t.exp = checked_mul(t.exp, base);
  return LaurentPoly::from_terms(std::move(terms));
}

mpz_class eval_at_one(const LaurentPoly& a) {
  mpz_class s = 0;
  for (const auto& t : a.terms()) s += t.coeff;
  return s;
}

LaurentPoly pow(const LaurentPoly& a, unsigned k) {
  LaurentPoly result(1);
  LaurentPoly base = a;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

LaurentPoly sum(std::span<const LaurentPoly> parts) {
  std::size_t total = 0;
  Exponent lo = std::numeric_limits<Exponent>::max();
  Exponent hi = std::numeric_limits<Exponent>::min();
  for (const auto& p : parts) {
    if (p.is_zero()) continue;
    total += p.size();
    lo = std::min(lo, p.min_exponent());
    hi = std::max(hi, p.max_exponent());
  }
  if (total == 0) return {};
  const Exponent span = checked_add(checked_sub(hi, lo), 1);
  if (use_dense(span, total)) {
    Dense buf(static_cast<std::size_t>(span));
    for (const auto& p : parts) {
      for (const auto& t : p.terms()) buf[static_cast<std::size_t>(t.exp - lo)] += t.coeff;
    }
    return LaurentPoly::from_dense(buf, lo);
  }
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(total);
  for (const auto& p : parts) terms.insert(terms.end(), p.terms().begin(), p.terms().end());
  return LaurentPoly::from_terms(std::move(terms));
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    mpz_class mag = abs(t.coeff);
    if (t.exp == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'q';
    if (t.exp != 1) os << '^' << t.exp;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }

LaurentPoly primitive_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero() || b.is_zero()) {
    const LaurentPoly& p = a.is_zero() ? b : a;
    mpz_class c = p.content();
    if (p.leading_coeff() < 0) c = -c;
    return divexact_scalar(p, c);
  }
  const Exponent common = std::min(a.min_exponent(), b.min_exponent());
  Dense g = dense_gcd(to_dense(a.shifted(-a.min_exponent())), to_dense(b.shifted(-b.min_exponent())));
  return LaurentPoly::from_dense(g, common);
}

RationalFn RationalFn::normalize(LaurentPoly num, LaurentPoly den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) return RationalFn(LaurentPoly(), LaurentPoly(1), Canonical{});
  const Exponent num_shift = num.min_exponent();
  const Exponent den_shift = den.min_exponent();
  LaurentPoly n = num.shifted(-num_shift);
  LaurentPoly d = den.shifted(-den_shift);
  if (!d.is_monomial()) {
    LaurentPoly g = primitive_gcd(n, d);
    if (!(g == LaurentPoly(1))) {
      n = exact_div(n, g);
      d = exact_div(d, g);
    }
  }
  mpz_class c = gcd(n.content(), d.content());
  if (d.leading_coeff() < 0) c = -c;
  if (c != 1) {
    n = divexact_scalar(n, c);
    d = divexact_scalar(d, c);
  }
  return RationalFn(n.shifted(checked_sub(num_shift, den_shift)), std::move(d), Canonical{});
}

RationalFn RationalFn::operator-() const { return RationalFn(-num_, den_, Canonical{}); }

RationalFn& RationalFn::operator+=(const RationalFn& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) return *this = normalize(num_ + rhs.num_, den_);
  if (rhs.is_polynomial()) return *this = normalize(num_ + rhs.num_ * den_, den_);
  if (is_polynomial()) return *this = normalize(num_ * rhs.den_ + rhs.num_, rhs.den_);
  const LaurentPoly g = primitive_gcd(den_, rhs.den_);
  const LaurentPoly left = exact_div(rhs.den_, g);
  const LaurentPoly right = exact_div(den_, g);
  return *this = normalize(num_ * left + rhs.num_ * right, den_ * left);
}

RationalFn& RationalFn::operator-=(const RationalFn& rhs) { return *this += -rhs; }

RationalFn& RationalFn::operator*=(const RationalFn& rhs) {
  if (is_polynomial() && rhs.is_polynomial()) {
    num_ *= rhs.num_;
    return *this;
  }
  return *this = normalize(num_ * rhs.num_, den_ * rhs.den_);
}

RationalFn& RationalFn::operator/=(const RationalFn& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  return *this = normalize(num_ * rhs.den_, den_ * rhs.num_);
}

LaurentPoly rf_to_poly(const RationalFn& r) {
  if (!r.is_polynomial()) throw NotPolynomial("not a polynomial: " + to_string(r));
  return r.num();
}

std::string to_string(const RationalFn& r) {
  if (r.is_polynomial()) return to_string(r.num());
  return "(" + to_string(r.num()) + ") / (" + to_string(r.den()) + ")";
}

}  // namespace qcubes
