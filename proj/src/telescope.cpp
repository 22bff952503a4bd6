#include "qcubes/telescope.hpp"

#include <random>
#include <vector>

#include "qcubes/errors.hpp"
#include "qcubes/qcalc.hpp"

namespace qcubes {

Exponent SequenceSpec::at(Exponent j) const {
  const Exponent v = term(j);
  if (v < 1) {
    throw PreconditionViolation("sequence " + name + " has non-positive term a(" + std::to_string(j) +
                                ") = " + std::to_string(v));
  }
  return v;
}

namespace sequences {

SequenceSpec constant_one() {
  return {"one", [](Exponent) { return Exponent{1}; }};
}

SequenceSpec identity() {
  return {"j", [](Exponent j) { return j; }};
}

SequenceSpec squares() {
  return {"j^2", [](Exponent j) { return checked_mul(j, j); }};
}

SequenceSpec cubes() {
  return {"j^3", [](Exponent j) { return checked_pow(j, 3); }};
}

SequenceSpec odd() {
  return {"2j-1", [](Exponent j) { return checked_sub(checked_mul(2, j), 1); }};
}

SequenceSpec half_powers_of_three() {
  return {"(3^j-1)/2", [](Exponent j) { return (checked_pow(3, static_cast<unsigned>(j)) - 1) / 2; }};
}

SequenceSpec seeded_random(std::uint64_t seed, Exponent max_term, Exponent length) {
  std::mt19937_64 rng(seed);
  std::vector<Exponent> values(static_cast<std::size_t>(length));
  for (auto& v : values) v = 1 + static_cast<Exponent>(rng() % static_cast<std::uint64_t>(max_term));
  return {"random#" + std::to_string(seed), [values = std::move(values)](Exponent j) {
            if (j < 1 || j > static_cast<Exponent>(values.size()))
              throw IndexOutOfRange("random sequence index out of range");
            return values[static_cast<std::size_t>(j - 1)];
          }};
}

}  // namespace sequences

namespace {

// [a]_q either expanded or multiplied by (1 - q).
LaurentPoly q_int_in(bool expanded, Exponent a) {
  if (expanded) return q_int(a);
  return LaurentPoly(1) - q_pow(a);
}

struct Prepared {
  std::vector<Exponent> terms;   // a(1..n)
  std::vector<Exponent> prefix;  // prefix[m] = a(1) + ... + a(m)
  Exponent total() const { return prefix.back(); }
};

Prepared prepare(const SequenceSpec& seq, Exponent n) {
  if (n < 1) throw PreconditionViolation("telescope requires n >= 1");
  Prepared p;
  p.prefix.push_back(0);
  for (Exponent j = 1; j <= n; ++j) {
    p.terms.push_back(seq.at(j));
    p.prefix.push_back(checked_add(p.prefix.back(), p.terms.back()));
  }
  return p;
}

// Exponent of the weight on summand j (1-based) in a sum of length m.
Exponent weight_exponent(const Prepared& p, Exponent j, Exponent m, TelescopeDirection dir) {
  const auto idx = static_cast<std::size_t>(j);
  if (dir == TelescopeDirection::kForward) return p.prefix[idx - 1];
  return p.prefix[static_cast<std::size_t>(m)] - p.prefix[idx];
}

std::pair<LaurentPoly, LaurentPoly> sides(const Prepared& p, bool expanded, TelescopeDirection dir) {
  const auto n = static_cast<Exponent>(p.terms.size());
  std::vector<LaurentPoly> summands;
  summands.reserve(p.terms.size());
  for (Exponent j = 1; j <= n; ++j) {
    summands.push_back(q_int_in(expanded, p.terms[static_cast<std::size_t>(j - 1)])
                           .shifted(weight_exponent(p, j, n, dir)));
  }
  return {sum(summands), q_int_in(expanded, p.total())};
}

std::string direction_id(TelescopeDirection dir, const SequenceSpec& seq) {
  return std::string(dir == TelescopeDirection::kForward ? "forward_telescope" : "backward_telescope") + "[" +
         seq.name + "]";
}

VerificationReport run_telescope(const SequenceSpec& seq, Exponent n, TelescopeDirection dir) {
  const std::string id = direction_id(dir, seq);
  const Assignment params{{"n", n}};
  return timed_check(id, params, [&] {
    const Prepared p = prepare(seq, n);
    const auto [lhs, rhs] = sides(p, p.total() <= kExpandedTermLimit, dir);
    return compare_sides(id, params, lhs, rhs);
  });
}

}  // namespace

std::pair<LaurentPoly, LaurentPoly> telescope_sides(const SequenceSpec& seq, Exponent n, TelescopeDirection dir) {
  return sides(prepare(seq, n), true, dir);
}

VerificationReport forward_telescope(const SequenceSpec& seq, Exponent n) {
  return run_telescope(seq, n, TelescopeDirection::kForward);
}

VerificationReport backward_telescope(const SequenceSpec& seq, Exponent n) {
  return run_telescope(seq, n, TelescopeDirection::kBackward);
}

VerificationReport verify_partial_sums(const SequenceSpec& seq, Exponent n, TelescopeDirection dir) {
  const std::string id = direction_id(dir, seq) + ".partial";
  const Assignment params{{"n", n}};
  return timed_check(id, params, [&] {
    const Prepared p = prepare(seq, n);
    const bool expanded = p.total() <= kExpandedTermLimit;
    LaurentPoly running;  // partial sum for m - 1
    for (Exponent m = 1; m <= n; ++m) {
      const auto mi = static_cast<std::size_t>(m);
      const Exponent a = p.terms[mi - 1];
      const LaurentPoly qa = q_int_in(expanded, a);
      const LaurentPoly previous_total = q_int_in(expanded, p.prefix[mi - 1]);
      const LaurentPoly current_total = q_int_in(expanded, p.prefix[mi]);

      LaurentPoly step;
      if (dir == TelescopeDirection::kForward) {
        running += qa.shifted(p.prefix[mi - 1]);
        step = previous_total + qa.shifted(p.prefix[mi - 1]);
      } else {
        running = running.shifted(a) + qa;
        step = previous_total.shifted(a) + qa;
      }
      if (!(step == current_total)) {
        auto r = compare_sides(id, Assignment{{"n", m}}, step, current_total);
        r.error = "one-step identity fails at m=" + std::to_string(m);
        return r;
      }

      Prepared prefix_only{std::vector<Exponent>(p.terms.begin(), p.terms.begin() + m),
                           std::vector<Exponent>(p.prefix.begin(), p.prefix.begin() + m + 1)};
      const auto [direct, rhs] = sides(prefix_only, expanded, dir);
      if (!(direct == running) || !(running == rhs)) {
        auto r = compare_sides(id, Assignment{{"n", m}}, running, rhs);
        if (r.passed()) r = compare_sides(id, Assignment{{"n", m}}, running, direct);
        r.error = "partial sum mismatch at m=" + std::to_string(m);
        return r;
      }
    }
    return compare_sides(id, params, running, q_int_in(expanded, p.total()));
  });
}

std::string_view to_string(DifferenceKind kind) {
  switch (kind) {
    case DifferenceKind::kGarrettHummel:
      return "garrett_hummel";
    case DifferenceKind::kWarnaar:
      return "warnaar";
    case DifferenceKind::kZhaoFeng:
      return "zhao_feng";
    case DifferenceKind::kTriangularQint:
      return "triangular_qint";
  }
  return "unknown";
}

std::pair<LaurentPoly, LaurentPoly> difference_sides(DifferenceKind kind, Exponent n) {
  if (n < 1) throw PreconditionViolation("difference identity requires n >= 1");
  const LaurentPoly qn = q_int(n);
  if (kind == DifferenceKind::kTriangularQint) {
    const LaurentPoly lhs = pow(q_int(triangular(n)), 2) - pow(q_int(triangular(n - 1)), 2).shifted(n);
    return {lhs, qn * q_int(checked_mul(n, n))};
  }

  const LaurentPoly g_hi = pow(gauss_binomial(n + 1, 2), 2);
  const LaurentPoly g_lo = pow(gauss_binomial(n, 2), 2);
  switch (kind) {
    case DifferenceKind::kGarrettHummel: {
      const RationalFn rhs =
          RationalFn(pow(qn, 2).shifted(n - 1)) * rf_normalize(q_int(n - 1) + q_int(n + 1), q_int(2));
      return {g_hi - g_lo, rf_to_poly(rhs)};
    }
    case DifferenceKind::kWarnaar:
      return {g_hi - g_lo.shifted(2), pow(qn, 2) * q_int(n, 2)};
    case DifferenceKind::kZhaoFeng: {
      const LaurentPoly top = LaurentPoly(1) + q_pow(2) - monomial(2, n + 1);
      const RationalFn rhs = RationalFn(pow(qn, 2)) * rf_normalize(top, LaurentPoly(1) - q_pow(2));
      return {g_hi - g_lo.shifted(4), rf_to_poly(rhs)};
    }
    case DifferenceKind::kTriangularQint:
      break;
  }
  throw PreconditionViolation("unknown difference kind");
}

VerificationReport difference_identity(DifferenceKind kind, Exponent n) {
  const std::string id = "difference:" + std::string(to_string(kind));
  const Assignment params{{"n", n}};
  return timed_check(id, params, [&] {
    const auto [lhs, rhs] = difference_sides(kind, n);
    return compare_sides(id, params, lhs, rhs);
  });
}

}  // namespace qcubes
