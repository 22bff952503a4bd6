#include "qcubes/identities.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <utility>

#include "qcubes/errors.hpp"
#include "qcubes/qcalc.hpp"
#include "qcubes/telescope.hpp"

namespace qcubes {

namespace {

using A = Assignment;

LaurentPoly qi(Exponent n, Exponent base = 1) { return q_int(n, base); }
LaurentPoly qp(Exponent e) { return q_pow(e); }
Exponent tri(Exponent n) { return triangular(n); }
Exponent sq(Exponent n) { return checked_mul(n, n); }
Exponent ipow(Exponent b, Exponent e) { return checked_pow(b, static_cast<unsigned>(e)); }

Exponent half_exact(Exponent v) {
  if (v % 2 != 0) throw InternalInconsistency("expected an even exponent, got " + std::to_string(v));
  return v / 2;
}

template <typename F>
LaurentPoly poly_sum(Exponent lo, Exponent hi, F term) {
  std::vector<LaurentPoly> parts;
  if (hi >= lo) parts.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (Exponent i = lo; i <= hi; ++i) parts.push_back(term(i));
  return sum(parts);
}

// Summands with denominators stay rational functions until the very end.
template <typename F>
RationalFn rf_sum(Exponent lo, Exponent hi, F term) {
  RationalFn total;
  for (Exponent i = lo; i <= hi; ++i) total += term(i);
  return total;
}

template <typename F>
mpz_class int_sum(Exponent lo, Exponent hi, F term) {
  mpz_class total = 0;
  for (Exponent i = lo; i <= hi; ++i) total += term(i);
  return total;
}

mpz_class z(Exponent v) { return mpz_class(static_cast<long>(v)); }

mpz_class zpow(Exponent b, Exponent e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(e));
  return r;
}

mpz_class ztri(Exponent n) { return z(n) * z(n + 1) / 2; }

std::function<bool(const A&)> at_least(Exponent n_min) {
  return [n_min](const A& a) { return a.get("n") >= n_min; };
}

std::vector<IdentityDescriptor> build_catalog() {
  std::vector<IdentityDescriptor> c;

  auto add = [&c](IdentityDescriptor d) { c.push_back(std::move(d)); };
  const LaurentPoly one(1);

  add({.id = "eq6_garrett_hummel",
       .label = "Eq. (6)",
       .params = {"n"},
       .domain = "n >= 1",
       .valid = at_least(1),
       .lhs =
           [](const A& a) {
             return rf_sum(1, a.get("n"), [](Exponent k) {
               return RationalFn(pow(qi(k), 2).shifted(k - 1)) * rf_normalize(qi(k - 1) + qi(k + 1), qi(2));
             });
           },
       .rhs = [](const A& a) { return RationalFn(pow(gauss_binomial(a.get("n") + 1, 2), 2)); },
       .classical = "sum_{k=1}^n k^2 ((k-1)+(k+1))/2 = T(n)^2",
       .classical_sum = [](const A& a) -> mpz_class { return int_sum(1, a.get("n"), [](Exponent k) -> mpz_class { return z(k) * z(k) * z(k); }); },
       .classical_value = [](const A& a) -> mpz_class { return ztri(a.get("n")) * ztri(a.get("n")); },
       .default_ranges = {{"n", 1, 40}},
       .note = "right side is the squared Gaussian binomial; the unsquared form fails at n = 2"});

  add({.id = "eq7_warnaar",
       .label = "Eq. (7)",
       .params = {"n"},
       .domain = "n >= 1",
       .valid = at_least(1),
       .lhs =
           [](const A& a) {
             const Exponent n = a.get("n");
             return RationalFn(poly_sum(1, n, [n](Exponent k) { return (pow(qi(k), 2) * qi(k, 2)).shifted(2 * n - 2 * k); }));
           },
       .rhs = [](const A& a) { return RationalFn(pow(gauss_binomial(a.get("n") + 1, 2), 2)); },
       .classical = "sum_{k=1}^n k^3 = T(n)^2",
       .classical_sum = [](const A& a) -> mpz_class { return int_sum(1, a.get("n"), [](Exponent k) -> mpz_class { return z(k) * z(k) * z(k); }); },
       .classical_value = [](const A& a) -> mpz_class { return ztri(a.get("n")) * ztri(a.get("n")); },
       .default_ranges = {{"n", 1, 40}}});

  add({.id = "eq8_zhao_feng",
       .label = "Eq. (8)",
       .params = {"n"},
       .domain = "n >= 0",
       .valid = at_least(0),
       .lhs =
           [one](const A& a) {
             const Exponent n = a.get("n");
             return rf_sum(0, n, [n, one](Exponent k) {
               const LaurentPoly top = one + qp(2) - monomial(2, k + 1);
               return RationalFn(pow(qi(k), 2).shifted(4 * (n - k))) * rf_normalize(top, one - qp(2));
             });
           },
       .rhs = [](const A& a) { return RationalFn(pow(gauss_binomial(a.get("n") + 1, 2), 2)); },
       .classical = "sum_{k=0}^n k^2 * k = T(n)^2",
       .classical_sum = [](const A& a) -> mpz_class { return int_sum(0, a.get("n"), [](Exponent k) -> mpz_class { return z(k) * z(k) * z(k); }); },
       .classical_value = [](const A& a) -> mpz_class { return ztri(a.get("n")) * ztri(a.get("n")); },
       .default_ranges = {{"n", 0, 40}}});

  add({.id = "eq10_theorem1",
       .label = "Eq. (10), Theorem 1",
       .params = {"n"},
       .domain = "n >= 1",
       .valid = at_least(1),
       .lhs =
           [](const A& a) {
             const Exponent n = a.get("n");
             return RationalFn(
                 poly_sum(1, n, [n](Exponent j) { return (qi(j) * qi(sq(j))).shifted(tri(n) - tri(j)); }));
           },
       .rhs = [](const A& a) { return RationalFn(pow(qi(tri(a.get("n"))), 2)); },
       .classical = "1^3 + 2^3 + ... + n^3 = T(n)^2 = (1 + 2 + ... + n)^2",
       .classical_sum = [](const A& a) -> mpz_class { return int_sum(1, a.get("n"), [](Exponent j) -> mpz_class { return z(j) * z(j) * z(j); }); },
       .classical_value =
           [](const A& a) -> mpz_class {
             const mpz_class s = int_sum(1, a.get("n"), [](Exponent j) -> mpz_class { return z(j); });
             return s * s;
           },
       .default_ranges = {{"n", 1, 40}}});

  add({.id = "eq11_odd_sum",
       .label = "Eq. (11)",
       .params = {"n"},
       .domain = "n >= 1",
       .valid = at_least(1),
       .lhs =
           [](const A& a) {
             const Exponent n = a.get("n");
             return RationalFn(poly_sum(1, n, [n](Exponent k) { return qi(2 * k - 1).shifted(n - k); }));
           },
       .rhs = [](const A& a) { return RationalFn(pow(qi(a.get("n")), 2)); },
       .classical = "1 + 3 + ... + (2n-1) = n^2",
       .classical_sum = [](const A& a) -> mpz_class { return int_sum(1, a.get("n"), [](Exponent k) -> mpz_class { return z(2 * k - 1); }); },
       .classical_value = [](const A& a) -> mpz_class { return z(a.get("n")) * z(a.get("n")); },
       .default_ranges = {{"n", 1, 60}}});

  add({.id = "eq14_wheatstone_group",
       .label = "Eq. (14)",
       .params = {"n"},
       .domain = "n >= 1",
       .valid = at_least(1),
       .lhs =
           [](const A& a) {
             const Exponent n = a.get("n");
             return RationalFn(poly_sum(1, n, [n](Exponent j) { return qi(sq(n) - n + 2 * j - 1).shifted(n - j); }));
           },
       .rhs = [](const A& a) { return RationalFn(qi(a.get("n")) * qi(sq(a.get("n")))); },
       .classical = "(n^2-n+1) + (n^2-n+3) + ... + (n^2+n-1) = n^3",
       .classical_sum =
           [](const A& a) -> mpz_class {
             const Exponent n = a.get("n");
             return int_sum(1, n, [n](Exponent j) -> mpz_class { return z(sq(n) - n + 2 * j - 1); });
           },
       .classical_value = [](const A& a) -> mpz_class { return zpow(a.get("n"), 3); },
       .default_ranges = {{"n", 1, 60}}});

  const auto cube_telescope = [](TelescopeDirection dir) {
    return [dir](const A& a) { return RationalFn(telescope_sides(sequences::cubes(), a.get("n"), dir).first); };
  };
  const auto cube_total = [](const A& a) { return RationalFn(qi(ipow(tri(a.get("n")), 2))); };

  add({.id = "eq17_cube_forward",
       .label = "Eq. (17), Theorem 2",
       .params = {"n"},
       .domain = "n >= 1",
       .valid = at_least(1),
       .lhs = cube_telescope(TelescopeDirection::kForward),
       .rhs = cube_total,
       .classical = "sum_{j=1}^n j^3 = T(n)^2",
       .classical_sum = [](const A& a) -> mpz_class { return int_sum(1, a.get("n"), [](Exponent j) -> mpz_class { return zpow(j, 3); }); },
       .classical_value = [](const A& a) -> mpz_class { return ztri(a.get("n")) * ztri(a.get("n")); },
       .default_ranges = {{"n", 1, 30}},
       .note = "forward telescope with a(j) = j^3: weight q^{T(j-1)^2}, total [T(n)^2]_q"});

  add({.id = "eq18_cube_backward",
       .label = "Eq. (18), Theorem 2",
       .params = {"n"},
       .domain = "n >= 1",
       .valid = at_least(1),
       .lhs = cube_telescope(TelescopeDirection::kBackward),
       .rhs = cube_total,
       .classical = "sum_{j=1}^n j^3 = T(n)^2",
       .classical_sum = [](const A& a) -> mpz_class { return int_sum(1, a.get("n"), [](Exponent j) -> mpz_class { return zpow(j, 3); }); },
       .classical_value = [](const A& a) -> mpz_class { return ztri(a.get("n")) * ztri(a.get("n")); },
       .default_ranges = {{"n", 1, 30}},
       .note = "backward telescope with a(j) = j^3: weight q^{(j+1)^3+...+n^3}, total [T(n)^2]_q"});

  const auto nk_valid = [](const A& a) { return a.get("n") >= 1 && a.get("k") >= 1; };

  add({.id = "eq19_binsum_a",
       .label = "Eq. (19)",
       .params = {"n", "k"},
       .domain = "n >= 1, k >= 1 (k > n gives 0 = 0)",
       .valid = nk_valid,
       .lhs =
           [](const A& a) {
             const Exponent k = a.get("k");
             return RationalFn(poly_sum(1, a.get("n"), [k](Exponent j) { return gauss_binomial(j, k).shifted(j - 1); }));
           },
       .rhs = [](const A& a) { return RationalFn(gauss_binomial(a.get("n") + 1, a.get("k") + 1).shifted(a.get("k") - 1)); },
       .classical = "sum_{j=1}^n C(j,k) = C(n+1,k+1)",
       .classical_sum =
           [](const A& a) -> mpz_class {
             const Exponent k = a.get("k");
             return int_sum(1, a.get("n"), [k](Exponent j) -> mpz_class { return binomial(j, k); });
           },
       .classical_value = [](const A& a) -> mpz_class { return binomial(a.get("n") + 1, a.get("k") + 1); },
       .default_ranges = {{"n", 1, 20}, {"k", 1, 20}}});

  add({.id = "eq20_binsum_b",
       .label = "Eq. (20)",
       .params = {"n", "k"},
       .domain = "n >= 1, k >= 1 (k > n gives 0 = 0)",
       .valid = nk_valid,
       .lhs =
           [](const A& a) {
             const Exponent n = a.get("n");
             const Exponent k = a.get("k");
             return RationalFn(
                 poly_sum(1, n, [n, k](Exponent j) { return gauss_binomial(j, k).shifted((k + 1) * (n - j)); }));
           },
       .rhs = [](const A& a) { return RationalFn(gauss_binomial(a.get("n") + 1, a.get("k") + 1)); },
       .classical = "sum_{j=1}^n C(j,k) = C(n+1,k+1)",
       .classical_sum =
           [](const A& a) -> mpz_class {
             const Exponent k = a.get("k");
             return int_sum(1, a.get("n"), [k](Exponent j) -> mpz_class { return binomial(j, k); });
           },
       .classical_value = [](const A& a) -> mpz_class { return binomial(a.get("n") + 1, a.get("k") + 1); },
       .default_ranges = {{"n", 1, 20}, {"k", 1, 20}}});

  add({.id = "cube_expansion",
       .label = "expansion of [n]^3 before Eq. (21)",
       .params = {"n"},
       .domain = "n >= 1",
       .valid = at_least(1),
       .lhs = [](const A& a) { return RationalFn(pow(qi(a.get("n")), 3)); },
       .rhs =
           [](const A& a) {
             const Exponent n = a.get("n");
             const LaurentPoly c23 = qi(2) * qi(3);
             return RationalFn((c23 * gauss_binomial(n, 3)).shifted(3) + c23 * gauss_binomial(n, 2) +
                               qi(n).shifted(n - 1));
           },
       .classical = "n^3 = 6 C(n,3) + 6 C(n,2) + n",
       .classical_sum = [](const A& a) -> mpz_class { return zpow(a.get("n"), 3); },
       .classical_value =
           [](const A& a) -> mpz_class {
             const Exponent n = a.get("n");
             return 6 * binomial(n, 3) + 6 * binomial(n, 2) + z(n);
           },
       .default_ranges = {{"n", 1, 30}}});

  const auto aux_rhs = [one](Exponent n) {
    return RationalFn(gauss_binomial(n + 1, 2)) * rf_normalize(one + qp(n) + qp(n + 1), one + qp(1) + qp(2));
  };

  add({.id = "eq21_qcube_sum",
       .label = "Eq. (21)",
       .params = {"n"},
       .domain = "n >= 1",
       .valid = at_least(1),
       .lhs = [](const A& a) { return RationalFn(poly_sum(1, a.get("n"), [](Exponent j) { return pow(qi(j), 3).shifted(j - 1); })); },
       .rhs =
           [aux_rhs](const A& a) {
             const Exponent n = a.get("n");
             const LaurentPoly c23 = qi(2) * qi(3);
             return RationalFn((c23 * gauss_binomial(n + 1, 4)).shifted(5) + (c23 * gauss_binomial(n + 1, 3)).shifted(1)) +
                    aux_rhs(n);
           },
       .classical = "sum_{j=1}^n j^3 = 6 C(n+1,4) + 6 C(n+1,3) + C(n+1,2)",
       .classical_sum = [](const A& a) -> mpz_class { return int_sum(1, a.get("n"), [](Exponent j) -> mpz_class { return zpow(j, 3); }); },
       .classical_value =
           [](const A& a) -> mpz_class {
             const Exponent n = a.get("n");
             return 6 * binomial(n + 1, 4) + 6 * binomial(n + 1, 3) + binomial(n + 1, 2);
           },
       .default_ranges = {{"n", 1, 30}}});

  add({.id = "eq21_aux",
       .label = "auxiliary sum in the derivation of Eq. (21)",
       .params = {"n"},
       .domain = "n >= 1",
       .valid = at_least(1),
       .lhs = [](const A& a) { return RationalFn(poly_sum(1, a.get("n"), [](Exponent j) { return qi(j).shifted(2 * (j - 1)); })); },
       .rhs = [aux_rhs](const A& a) { return aux_rhs(a.get("n")); },
       .classical = "1 + 2 + ... + n = T(n)",
       .classical_sum = [](const A& a) -> mpz_class { return int_sum(1, a.get("n"), [](Exponent j) -> mpz_class { return z(j); }); },
       .classical_value = [](const A& a) -> mpz_class { return ztri(a.get("n")); },
       .default_ranges = {{"n", 1, 30}}});

  add({.id = "eq24_luthy",
       .label = "Eq. (24)",
       .params = {"n", "k"},
       .domain = "n >= 1, k >= 0",
       .valid = [](const A& a) { return a.get("n") >= 1 && a.get("k") >= 0; },
       .lhs =
           [](const A& a) {
             const Exponent n = a.get("n");
             const Exponent k = a.get("k");
             const Exponent nk = ipow(n, k);
             const Exponent nk1 = checked_mul(nk, n);
             return RationalFn(poly_sum(1, nk, [=](Exponent j) { return qi(nk1 - nk + 2 * j - 1).shifted(nk - j); }));
           },
       .rhs =
           [](const A& a) {
             const Exponent nk = ipow(a.get("n"), a.get("k"));
             return RationalFn(qi(nk) * qi(checked_mul(nk, a.get("n"))));
           },
       .classical = "sum_{j=1}^{n^k} (n^{k+1} - n^k + 2j - 1) = n^{2k+1}",
       .classical_sum =
           [](const A& a) -> mpz_class {
             const Exponent n = a.get("n");
             const Exponent nk = ipow(n, a.get("k"));
             return int_sum(1, nk, [=](Exponent j) -> mpz_class { return z(nk * n - nk + 2 * j - 1); });
           },
       .classical_value = [](const A& a) -> mpz_class { return zpow(a.get("n"), 2 * a.get("k") + 1); },
       .default_ranges = {{"n", 2, 5}, {"k", 0, 4}}});

  add({.id = "eq25",
       .label = "Eq. (25)",
       .params = {"n"},
       .domain = "n >= 1",
       .valid = at_least(1),
       .lhs =
           [](const A& a) {
             const Exponent n = a.get("n");
             return RationalFn(poly_sum(0, n - 1, [n](Exponent j) { return qi(n + 1 + 2 * j).shifted(n - 1 - j); }));
           },
       .rhs = [](const A& a) { return RationalFn(qi(2) * qi(a.get("n")) * qi(a.get("n"), 2)); },
       .classical = "sum_{j=0}^{n-1} (n+1+2j) = 2n^2",
       .classical_sum =
           [](const A& a) -> mpz_class {
             const Exponent n = a.get("n");
             return int_sum(0, n - 1, [n](Exponent j) -> mpz_class { return z(n + 1 + 2 * j); });
           },
       .classical_value = [](const A& a) -> mpz_class { return 2 * z(a.get("n")) * z(a.get("n")); },
       .default_ranges = {{"n", 1, 40}}});

  add({.id = "eq26",
       .label = "Eq. (26)",
       .params = {"n", "m"},
       .domain = "n >= 0, m >= 0",
       .valid = [](const A& a) { return a.get("n") >= 0 && a.get("m") >= 0; },
       .lhs =
           [](const A& a) {
             const Exponent n = a.get("n");
             const Exponent m = a.get("m");
             return RationalFn(poly_sum(0, n, [=](Exponent k) { return qi(m * n + k, 2).shifted(n - k); }));
           },
       .rhs =
           [](const A& a) {
             const Exponent n = a.get("n");
             const Exponent odd = 2 * a.get("m") + 1;
             // [x]_{q^0} degenerates to the integer x.
             const LaurentPoly factor = n == 0 ? LaurentPoly(static_cast<long>(odd)) : qi(odd, n);
             return RationalFn(gauss_binomial(n + 1, 2) * factor);
           },
       .classical = "sum_{k=0}^n (mn+k) = T(n)(2m+1)",
       .classical_sum =
           [](const A& a) -> mpz_class {
             const Exponent n = a.get("n");
             const Exponent m = a.get("m");
             return int_sum(0, n, [=](Exponent k) -> mpz_class { return z(m * n + k); });
           },
       .classical_value = [](const A& a) -> mpz_class { return ztri(a.get("n")) * z(2 * a.get("m") + 1); },
       .default_ranges = {{"n", 0, 15}, {"m", 0, 6}}});

  // a(n) = (3^n - 1)/2 bounds the blocks below: j runs over a(n)+1..a(n+1).
  const auto a3 = [](Exponent n) { return half_exact(ipow(3, n) - 1); };

  add({.id = "eq29_theorem3",
       .label = "Eq. (29), Theorem 3",
       .params = {"n"},
       .domain = "n >= 0",
       .valid = at_least(0),
       .lhs =
           [a3](const A& a) {
             const Exponent n = a.get("n");
             const Exponent top = ipow(3, n + 1);
             return RationalFn(poly_sum(a3(n) + 1, a3(n + 1), [top](Exponent j) {
               return qi(j, 2).shifted(half_exact(top - 1 - 2 * j));
             }));
           },
       .rhs =
           [](const A& a) {
             const Exponent p = ipow(3, a.get("n"));
             return RationalFn(qi(p) * qi(p, 2));
           },
       .classical = "sum_{j=(3^n+1)/2}^{(3^{n+1}-1)/2} j = 3^{2n}",
       .classical_sum = [a3](const A& a) -> mpz_class { return int_sum(a3(a.get("n")) + 1, a3(a.get("n") + 1), [](Exponent j) -> mpz_class { return z(j); }); },
       .classical_value = [](const A& a) -> mpz_class { return zpow(3, 2 * a.get("n")); },
       .default_ranges = {{"n", 0, 6}}});

  add({.id = "eq30_theorem3",
       .label = "Eq. (30), Theorem 3",
       .params = {"n"},
       .domain = "n >= 0",
       .valid = at_least(0),
       .lhs =
           [a3](const A& a) {
             const Exponent top = ipow(3, a.get("n") + 1);
             return RationalFn(poly_sum(1, a3(a.get("n") + 1), [top](Exponent j) {
               return qi(j, 2).shifted(half_exact(top - 2 * j - 1));
             }));
           },
       .rhs = [a3](const A& a) { return RationalFn(gauss_binomial(a3(a.get("n") + 1) + 1, 2)); },
       .extra_forms = {{"block_sum",
                        [](const A& a) {
                          const Exponent n = a.get("n");
                          const Exponent top = ipow(3, n + 1);
                          return RationalFn(poly_sum(0, n, [top](Exponent k) {
                            const Exponent p = ipow(3, k);
                            return (qi(p) * qi(p, 2)).shifted(half_exact(top - 3 * p));
                          }));
                        }}},
       .classical = "sum_{j=1}^{(3^{n+1}-1)/2} j = sum_{k=0}^n 3^{2k}",
       .classical_sum = [a3](const A& a) -> mpz_class { return int_sum(1, a3(a.get("n") + 1), [](Exponent j) -> mpz_class { return z(j); }); },
       .classical_value = [](const A& a) -> mpz_class { return int_sum(0, a.get("n"), [](Exponent k) -> mpz_class { return zpow(3, 2 * k); }); },
       .default_ranges = {{"n", 0, 6}},
       .note = "right side read as the Gaussian binomial [(3^{n+1}+1)/2 choose 2]_q"});

  add({.id = "eq31_schlosser",
       .label = "Eq. (31)",
       .params = {"n"},
       .domain = "n >= 0",
       .valid = at_least(0),
       .lhs =
           [](const A& a) {
             const Exponent n = a.get("n");
             return RationalFn(poly_sum(0, n, [n](Exponent k) { return qi(k, 2).shifted(n - k); }));
           },
       .rhs = [](const A& a) { return RationalFn(gauss_binomial(a.get("n") + 1, 2)); },
       .classical = "0 + 1 + ... + n = T(n)",
       .classical_sum = [](const A& a) -> mpz_class { return int_sum(0, a.get("n"), [](Exponent k) -> mpz_class { return z(k); }); },
       .classical_value = [](const A& a) -> mpz_class { return ztri(a.get("n")); },
       .default_ranges = {{"n", 0, 40}}});

  add({.id = "eq32",
       .label = "Eq. (32)",
       .params = {"n"},
       .domain = "n >= 1",
       .valid = at_least(1),
       .lhs =
           [](const A& a) {
             const Exponent n = a.get("n");
             return RationalFn(poly_sum(0, n - 1, [n](Exponent j) {
               return qi(2 * (n + 1) * j + 1).shifted(sq(n) - 1 - (n + 1) * j);
             }));
           },
       .rhs = [](const A& a) { return RationalFn(qi(sq(a.get("n"))) * qi(a.get("n"), a.get("n") + 1)); },
       .classical = "sum_{j=0}^{n-1} (2(n+1)j + 1) = n^3",
       .classical_sum =
           [](const A& a) -> mpz_class {
             const Exponent n = a.get("n");
             return int_sum(0, n - 1, [n](Exponent j) -> mpz_class { return z(2 * (n + 1) * j + 1); });
           },
       .classical_value = [](const A& a) -> mpz_class { return zpow(a.get("n"), 3); },
       .default_ranges = {{"n", 1, 20}}});

  add({.id = "eq33",
       .label = "Eq. (33)",
       .params = {"n"},
       .domain = "n >= 1",
       .valid = at_least(1),
       .lhs =
           [](const A& a) {
             const Exponent n = a.get("n");
             return RationalFn(poly_sum(0, n - 1, [n](Exponent k) { return qi((2 * k + 1) * n).shifted(n * (n - 1) - n * k); }));
           },
       .rhs = [](const A& a) { return RationalFn(qi(sq(a.get("n"))) * qi(a.get("n"), a.get("n"))); },
       .classical = "sum_{k=0}^{n-1} (2k+1) n = n^3",
       .classical_sum =
           [](const A& a) -> mpz_class {
             const Exponent n = a.get("n");
             return int_sum(0, n - 1, [n](Exponent k) -> mpz_class { return z((2 * k + 1) * n); });
           },
       .classical_value = [](const A& a) -> mpz_class { return zpow(a.get("n"), 3); },
       .default_ranges = {{"n", 1, 20}}});

  add({.id = "eq34",
       .label = "Eq. (34)",
       .params = {"n", "m"},
       .domain = "n >= 1, m >= 0",
       .valid = [](const A& a) { return a.get("n") >= 1 && a.get("m") >= 0; },
       .lhs =
           [](const A& a) {
             const Exponent n = a.get("n");
             const Exponent nm = ipow(n, a.get("m"));
             return RationalFn(poly_sum(0, n - 1, [=](Exponent k) {
               return qi(checked_mul(2 * k + 1, nm)).shifted(checked_mul(nm, n - 1) - checked_mul(k, nm));
             }));
           },
       .rhs =
           [](const A& a) {
             const Exponent n = a.get("n");
             const Exponent nm = ipow(n, a.get("m"));
             return RationalFn(qi(checked_mul(nm, n)) * qi(n, nm));
           },
       .classical = "sum_{k=0}^{n-1} (2k+1) n^m = n^{m+2}",
       .classical_sum =
           [](const A& a) -> mpz_class {
             const Exponent n = a.get("n");
             const mpz_class nm = zpow(n, a.get("m"));
             return int_sum(0, n - 1, [&](Exponent k) -> mpz_class { return z(2 * k + 1) * nm; });
           },
       .classical_value = [](const A& a) -> mpz_class { return zpow(a.get("n"), a.get("m") + 2); },
       .default_ranges = {{"n", 1, 8}, {"m", 0, 3}}});

  add({.id = "eq35_theorem4a",
       .label = "Eq. (35), Theorem 4",
       .params = {"n"},
       .domain = "n >= 1",
       .valid = at_least(1),
       .lhs =
           [](const A& a) {
             const Exponent n = a.get("n");
             return RationalFn(poly_sum(0, n - 1, [n](Exponent j) { return qi(tri(n) + n * j).shifted(tri(n - 1) - tri(j)); }));
           },
       .rhs =
           [](const A& a) {
             const Exponent n = a.get("n");
             return RationalFn(qi(sq(n)) * poly_sum(0, n - 1, [n](Exponent j) { return qp(tri(n - 1) - tri(j)); }));
           },
       .classical = "sum_{j=0}^{n-1} (T(n) + nj) = n^2 * n",
       .classical_sum =
           [](const A& a) -> mpz_class {
             const Exponent n = a.get("n");
             return int_sum(0, n - 1, [n](Exponent j) -> mpz_class { return z(tri(n) + n * j); });
           },
       .classical_value = [](const A& a) -> mpz_class { return zpow(a.get("n"), 3); },
       .default_ranges = {{"n", 1, 25}}});

  add({.id = "eq36_theorem4b",
       .label = "Eq. (36), Theorem 4",
       .params = {"n"},
       .domain = "n >= 1",
       .valid = at_least(1),
       .lhs =
           [](const A& a) {
             const Exponent n = a.get("n");
             return RationalFn(poly_sum(0, n - 1, [n](Exponent j) { return qi(tri(n) + n * j, 2).shifted(n * (n - 1) - n * j); }));
           },
       .rhs = [](const A& a) { return RationalFn(qi(sq(a.get("n")), 2) * qi(a.get("n"), a.get("n"))); },
       .classical = "sum_{j=0}^{n-1} (T(n) + nj) = n^3",
       .classical_sum =
           [](const A& a) -> mpz_class {
             const Exponent n = a.get("n");
             return int_sum(0, n - 1, [n](Exponent j) -> mpz_class { return z(tri(n) + n * j); });
           },
       .classical_value = [](const A& a) -> mpz_class { return zpow(a.get("n"), 3); },
       .default_ranges = {{"n", 1, 25}}});

  add({.id = "eq37_theorem4c",
       .label = "Eq. (37), Theorem 4",
       .params = {"n"},
       .domain = "n >= 1",
       .valid = at_least(1),
       .lhs =
           [](const A& a) {
             const Exponent n = a.get("n");
             const LaurentPoly g = gauss_binomial(n + 1, 2);
             const LaurentPoly qn = qi(n);
             return RationalFn(poly_sum(0, n - 1, [&](Exponent j) {
               return g.shifted(n - 1 - j) + (qn * qi(j, 2)).shifted(2 * n - j);
             }));
           },
       .rhs = [](const A& a) { return RationalFn(pow(qi(a.get("n")), 2) * qi(a.get("n"), 2)); },
       .classical = "sum_{j=0}^{n-1} (T(n) + nj) = n^3",
       .classical_sum =
           [](const A& a) -> mpz_class {
             const Exponent n = a.get("n");
             return int_sum(0, n - 1, [n](Exponent j) -> mpz_class { return z(tri(n) + n * j); });
           },
       .classical_value = [](const A& a) -> mpz_class { return zpow(a.get("n"), 3); },
       .default_ranges = {{"n", 1, 25}},
       .note = "first summand uses the Gaussian binomial [n+1 choose 2]_q; with [T(n)]_q the identity fails at n = 3"});

  add({.id = "eq38_theorem5",
       .label = "Eq. (38), Theorem 5",
       .params = {"n"},
       .domain = "n >= 1",
       .valid = at_least(1),
       .lhs =
           [](const A& a) {
             const Exponent n = a.get("n");
             return RationalFn(poly_sum(0, 2 * n, [n](Exponent j) { return qi(sq(2 * n - 1) + 8 * j).shifted(8 * n - 4 * j); }));
           },
       .rhs =
           [](const A& a) {
             const Exponent m = 2 * a.get("n") + 1;
             return RationalFn(qi(m) * qi(m, 4) * qi(m, m));
           },
       .classical = "sum_{j=0}^{2n} ((2n-1)^2 + 8j) = (2n+1)^3",
       .classical_sum =
           [](const A& a) -> mpz_class {
             const Exponent n = a.get("n");
             return int_sum(0, 2 * n, [n](Exponent j) -> mpz_class { return z(sq(2 * n - 1) + 8 * j); });
           },
       .classical_value = [](const A& a) -> mpz_class { return zpow(2 * a.get("n") + 1, 3); },
       .default_ranges = {{"n", 1, 20}},
       .note = "q-integers in base q; base -q does not balance the sides"});

  return c;
}

void validate(const IdentityDescriptor& d, const Assignment& params) {
  if (params.params().size() != d.params.size()) {
    throw InvalidParams(d.id + " expects parameters " + std::to_string(d.params.size()) + ", got " +
                        params.to_string());
  }
  for (const auto& name : d.params) {
    if (!params.has(name)) throw InvalidParams(d.id + " requires parameter " + name);
  }
  if (!d.valid(params)) throw InvalidParams(d.id + " requires " + d.domain + ", got " + params.to_string());
}

LaurentPoly as_ordinary_polynomial(const RationalFn& r, const std::string& side) {
  LaurentPoly p;
  try {
    p = rf_to_poly(r);
  } catch (const NotPolynomial& e) {
    throw NotPolynomial(side + ": " + e.what());
  }
  if (!p.is_zero() && p.min_exponent() < 0) {
    throw NotPolynomial(side + ": negative exponent in " + to_string(p));
  }
  return p;
}

}  // namespace

const std::vector<IdentityDescriptor>& list_identities() {
  static const std::vector<IdentityDescriptor> catalog = build_catalog();
  return catalog;
}

const IdentityDescriptor& find_identity(std::string_view id) {
  for (const auto& d : list_identities()) {
    if (d.id == id) return d;
  }
  throw UnknownIdentity(std::string(id));
}

RationalFn build_side(std::string_view id, Side side, const Assignment& params) {
  const IdentityDescriptor& d = find_identity(id);
  validate(d, params);
  return side == Side::kLhs ? d.lhs(params) : d.rhs(params);
}

VerificationReport verify_instance(std::string_view id, const Assignment& params) {
  const IdentityDescriptor& d = find_identity(id);
  validate(d, params);
  return timed_check(d.id, params, [&] {
    const LaurentPoly lhs = as_ordinary_polynomial(d.lhs(params), "lhs");
    const LaurentPoly rhs = as_ordinary_polynomial(d.rhs(params), "rhs");
    VerificationReport r = compare_sides(d.id, params, lhs, rhs);
    if (!r.passed()) return r;
    for (const auto& form : d.extra_forms) {
      const LaurentPoly extra = as_ordinary_polynomial(form.build(params), form.name);
      if (!(extra == lhs)) {
        r = compare_sides(d.id, params, lhs, extra);
        r.error = "form " + form.name + " differs from lhs";
        return r;
      }
    }
    return r;
  });
}

std::vector<Assignment> expand_grid(const IdentityDescriptor& d, const std::vector<ParamRange>& ranges) {
  std::vector<const ParamRange*> ordered;
  for (const auto& name : d.params) {
    auto it = std::find_if(ranges.begin(), ranges.end(), [&](const ParamRange& r) { return r.name == name; });
    if (it == ranges.end()) throw InvalidParams(d.id + " needs a range for " + name);
    if (it->lo > it->hi) throw InvalidParams("empty range for " + name);
    ordered.push_back(&*it);
  }
  for (const auto& r : ranges) {
    if (std::find(d.params.begin(), d.params.end(), r.name) == d.params.end())
      throw InvalidParams(d.id + " has no parameter " + r.name);
  }

  std::vector<Assignment> out;
  std::vector<Exponent> cur;
  for (const auto* r : ordered) cur.push_back(r->lo);
  while (true) {
    std::vector<Param> ps;
    for (std::size_t i = 0; i < ordered.size(); ++i) ps.push_back({ordered[i]->name, cur[i]});
    out.emplace_back(std::move(ps));
    // Odometer increment, last parameter fastest.
    std::size_t pos = ordered.size();
    while (pos > 0) {
      --pos;
      if (cur[pos] < ordered[pos]->hi) {
        ++cur[pos];
        break;
      }
      cur[pos] = ordered[pos]->lo;
      if (pos == 0) return out;
    }
    if (ordered.empty()) return out;
  }
}

GridReport verify_grid(std::string_view id, const std::vector<ParamRange>& ranges, unsigned threads) {
  const IdentityDescriptor& d = find_identity(id);
  const std::vector<Assignment> grid = expand_grid(d, ranges);
  for (const auto& a : grid) validate(d, a);

  GridReport report;
  report.id = d.id;
  report.instances.resize(grid.size());
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(grid.size()));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) report.instances[i] = verify_instance(d.id, grid[i]);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return report;
}

VerificationReport classical_limit_check(std::string_view id, const Assignment& params) {
  const IdentityDescriptor& d = find_identity(id);
  validate(d, params);
  return timed_check(d.id, params, [&] {
    const mpz_class lhs = eval_at_one(as_ordinary_polynomial(d.lhs(params), "lhs"));
    const mpz_class rhs = eval_at_one(as_ordinary_polynomial(d.rhs(params), "rhs"));
    const mpz_class classical_sum = d.classical_sum(params);
    const mpz_class classical_value = d.classical_value(params);
    VerificationReport r;
    r.id = d.id;
    r.params = params;
    if (lhs == rhs && rhs == classical_sum && classical_sum == classical_value) {
      r.outcome = Outcome::kPass;
    } else {
      r.outcome = Outcome::kFail;
      r.lhs = lhs.get_str();
      r.rhs = rhs.get_str();
      r.error = "classical sum " + classical_sum.get_str() + ", closed form " + classical_value.get_str();
    }
    return r;
  });
}

}  // namespace qcubes
