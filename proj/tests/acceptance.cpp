// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qcubes/identities.hpp"
#include "qcubes/lattice.hpp"
#include "qcubes/qcalc.hpp"
#include "qcubes/telescope.hpp"

using namespace qcubes;

namespace {

// Collects failures for one criterion; the first few are printed.
struct Check {
  int failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ == 0) first = what;
  }

  void report(const VerificationReport& r) {
    expect(r.passed(), to_text_line(r) + (r.error.empty() ? "" : " (" + r.error + ")"));
  }

  void grid(const std::string& id, const std::vector<ParamRange>& ranges) {
    for (const auto& r : verify_grid(id, ranges).instances) report(r);
  }
};

struct Criterion {
  int number;
  std::string title;
  double time_limit_s;  // 0 = no limit
  std::function<void(Check&)> body;
};

using Clock = std::chrono::steady_clock;

void cube_sum_grid(Check& c) {
  c.grid("eq10_theorem1", {{"n", 1, 40}});
  const LaurentPoly rhs = rf_to_poly(build_side("eq10_theorem1", Side::kRhs, {{"n", 40}}));
  c.expect(rhs == pow(q_int(820), 2), "right side at n=40 is not [820]^2");
  c.expect(rhs.max_exponent() == 1638, "right side at n=40 has degree " + std::to_string(rhs.max_exponent()));
}

void prior_analogues(Check& c) {
  c.grid("eq6_garrett_hummel", {{"n", 1, 40}});
  c.grid("eq7_warnaar", {{"n", 1, 40}});
  c.grid("eq8_zhao_feng", {{"n", 0, 40}});
}

void odd_sums(Check& c) {
  for (const char* id : {"eq11_odd_sum", "eq14_wheatstone_group"}) {
    c.grid(id, {{"n", 1, 60}});
    for (Exponent n = 1; n <= 60; ++n) c.report(classical_limit_check(id, {{"n", n}}));
  }
  for (Exponent n = 1; n <= 60; ++n) {
    mpz_class odd = 0;
    for (Exponent k = 1; k <= n; ++k) odd += 2 * k - 1;
    c.expect(odd == n * n, "sum of the first n odd numbers at n=" + std::to_string(n));
  }
}

void telescoping(Check& c) {
  std::vector<SequenceSpec> seqs = {sequences::identity(), sequences::squares(), sequences::cubes(),
                                    sequences::odd(), sequences::half_powers_of_three()};
  for (std::uint64_t seed = 1; seed <= 20; ++seed) seqs.push_back(sequences::seeded_random(seed, 100, 30));
  for (const auto& s : seqs) {
    for (Exponent n = 1; n <= 30; ++n) {
      c.report(forward_telescope(s, n));
      c.report(backward_telescope(s, n));
    }
    c.report(verify_partial_sums(s, 30, TelescopeDirection::kForward));
    c.report(verify_partial_sums(s, 30, TelescopeDirection::kBackward));
  }
  c.grid("eq17_cube_forward", {{"n", 1, 30}});
  c.grid("eq18_cube_backward", {{"n", 1, 30}});
}

void differences(Check& c) {
  for (auto kind : {DifferenceKind::kGarrettHummel, DifferenceKind::kWarnaar, DifferenceKind::kZhaoFeng,
                    DifferenceKind::kTriangularQint}) {
    for (Exponent n = 1; n <= 40; ++n) c.report(difference_identity(kind, n));
  }
}

void lattice_oracle(Check& c) {
  for (Exponent n = 1; n <= 12; ++n) c.report(verify_hook_partition(n));
  for (Exponent n = 1; n <= 8; ++n) {
    c.report(verify_region_partition(n));
    const Exponent t = triangular(n);
    for (Exponent j = 1; j <= n; ++j) {
      c.report(verify_region_weight(j, n));
      const PointSet r = region_points(j, n);
      const LaurentPoly summand = (pow(q_int(j), 2) * q_int(j, j)).shifted(t - triangular(j));
      const std::string at = " at j=" + std::to_string(j) + ", n=" + std::to_string(n);
      c.expect(weight_of(r, t) == summand, "region weight differs from the summand" + at);
      c.expect(static_cast<Exponent>(r.size()) == j * j * j, "region size" + at);
    }
  }
  // The 6 x 6 weight matrix, rows top to bottom.
  const char* golden[6][6] = {{"q^5", "q^6", "q^7", "q^8", "q^9", "q^10"}, {"q^4", "q^5", "q^6", "q^7", "q^8", "q^9"},
                              {"q^3", "q^4", "q^5", "q^6", "q^7", "q^8"},  {"q^2", "q^3", "q^4", "q^5", "q^6", "q^7"},
                              {"q", "q^2", "q^3", "q^4", "q^5", "q^6"},    {"1", "q", "q^2", "q^3", "q^4", "q^5"}};
  std::string expected;
  for (Exponent j = 0; j < 6; ++j) {
    for (Exponent i = 0; i < 6; ++i) {
      const std::string entry = to_string(q_pow(weight_exponent({i, j}, 6)));
      c.expect(entry == golden[j][i], "matrix entry (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      expected += (i > 0 ? " " : "") + std::string(golden[j][i]);
    }
    expected += '\n';
  }
  c.expect(render_weight_matrix(6) == expected, "rendered matrix differs from the golden layout");
}

void region_chains(Check& c) {
  for (Exponent j = 1; j <= 15; j += 2) c.report(odd_region_identity(j));
  for (Exponent ell = 1; ell <= 8; ++ell) c.report(even_region_identity(ell));
}

void binomial_sums(Check& c) {
  for (const char* id : {"eq19_binsum_a", "eq20_binsum_b"}) {
    for (Exponent n = 1; n <= 20; ++n) {
      for (Exponent k = 1; k <= n; ++k) c.report(verify_instance(id, {{"n", n}, {"k", k}}));
    }
  }
  for (const char* id : {"cube_expansion", "eq21_qcube_sum", "eq21_aux"}) c.grid(id, {{"n", 1, 30}});
}

void luthy(Check& c) {
  c.grid("eq24_luthy", {{"n", 2, 5}, {"k", 0, 4}});
  for (Exponent n = 2; n <= 5; ++n) {
    for (Exponent k = 0; k <= 4; ++k) c.report(classical_limit_check("eq24_luthy", {{"n", n}, {"k", k}}));
  }
  // 5 + 7 + 9 + 11 = 2^5.
  const Assignment a{{"n", 2}, {"k", 2}};
  c.expect(eval_at_one(rf_to_poly(build_side("eq24_luthy", Side::kLhs, a))) == 32, "left side at q=1 is not 32");
  c.expect(eval_at_one(rf_to_poly(build_side("eq24_luthy", Side::kRhs, a))) == 32, "right side at q=1 is not 32");
  c.expect(5 + 7 + 9 + 11 == 32, "5+7+9+11");
}

void later_identities(Check& c) {
  c.grid("eq25", {{"n", 1, 40}});
  c.grid("eq26", {{"n", 0, 15}, {"m", 0, 6}});
  for (const char* id : {"eq29_theorem3", "eq30_theorem3", "eq31_schlosser"}) c.grid(id, {{"n", 0, 6}});
  c.expect(find_identity("eq30_theorem3").extra_forms.size() == 1, "block identity lacks its third form");
  for (const char* id : {"eq32", "eq33"}) c.grid(id, {{"n", 1, 20}});
  c.grid("eq34", {{"n", 1, 8}, {"m", 0, 3}});
  for (const char* id : {"eq35_theorem4a", "eq36_theorem4b", "eq37_theorem4c"}) c.grid(id, {{"n", 1, 25}});
  c.grid("eq38_theorem5", {{"n", 1, 20}});

  // The full default run, as `verify --all` does it.
  const auto start = Clock::now();
  for (const auto& d : list_identities()) c.grid(d.id, d.default_ranges);
  const double s = std::chrono::duration<double>(Clock::now() - start).count();
  c.expect(s < 30.0, "full default run took " + std::to_string(s) + " s");
}

void cross_oracles(Check& c) {
  for (Exponent n = 0; n <= 30; ++n) {
    for (Exponent k = 0; k <= n; ++k) {
      const LaurentPoly product = gauss_binomial_product(n, k);
      const std::string at = " at n=" + std::to_string(n) + ", k=" + std::to_string(k);
      c.expect(product == gauss_binomial_pascal_left(n, k), "left recurrence" + at);
      c.expect(product == gauss_binomial_pascal_right(n, k), "right recurrence" + at);
    }
  }
  for (Exponent n = 1; n <= 8; ++n) {
    LaurentPoly enumerated;
    for (Exponent j = 1; j <= n; ++j) enumerated += weight_of(region_points(j, n), triangular(n));
    c.expect(enumerated == rf_to_poly(build_side("eq10_theorem1", Side::kLhs, {{"n", n}})),
             "lattice enumeration at n=" + std::to_string(n));
  }
  for (Exponent n = 1; n <= 10; ++n) {
    const LaurentPoly odd = rf_to_poly(build_side("eq11_odd_sum", Side::kLhs, {{"n", triangular(n)}}));
    c.expect(odd == rf_to_poly(build_side("eq10_theorem1", Side::kLhs, {{"n", n}})),
             "odd sum at T(n) vs cube sum at n=" + std::to_string(n));
  }
}

void classical_suite(Check& c) {
  for (const auto& d : list_identities()) {
    for (const auto& a : expand_grid(d, d.default_ranges)) c.report(classical_limit_check(d.id, a));
  }
  for (Exponent n = 1; n <= 40; ++n) {
    const LaurentPoly lhs = rf_to_poly(build_side("eq10_theorem1", Side::kLhs, {{"n", n}}));
    mpz_class cubes = 0;
    for (Exponent j = 1; j <= n; ++j) cubes += j * j * j;
    const mpz_class t = triangular(n);
    c.expect(eval_at_one(lhs) == cubes && cubes == t * t, "sum of cubes at n=" + std::to_string(n));
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "cube sum identity, n = 1..40, [820]^2 at n = 40", 2.0, cube_sum_grid},
      {2, "three earlier q-analogues of the cube sum, n up to 40", 3.0, prior_analogues},
      {3, "odd-number sums and grouped odd sums, n = 1..60, with q = 1 values", 0, odd_sums},
      {4, "forward and backward telescoping for 25 sequences, n = 1..30", 0, telescoping},
      {5, "four difference identities, n = 1..40", 0, differences},
      {6, "lattice hooks, regions and the 6 x 6 weight matrix", 0, lattice_oracle},
      {7, "odd and even region chains", 0, region_chains},
      {8, "Gaussian binomial sums and the q-cube expansion", 0, binomial_sums},
      {9, "odd-number blocks summing to powers, with q = 1 values", 0, luthy},
      {10, "remaining identities and the full default run under 30 s", 0, later_identities},
      {11, "independent oracles agree", 0, cross_oracles},
      {12, "q = 1 limits of every catalog entry", 0, classical_suite},
  };

  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    const auto start = Clock::now();
    try {
      cr.body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(Clock::now() - start).count();
    if (cr.time_limit_s > 0 && s >= cr.time_limit_s) {
      c.expect(false, "took " + std::to_string(s) + " s, limit " + std::to_string(cr.time_limit_s) + " s");
    }
    const bool ok = c.failures == 0;
    if (!ok) ++failed;
    std::printf("%s  criterion %2d: %s (%.2f s)\n", ok ? "PASS" : "FAIL", cr.number, cr.title.c_str(), s);
    if (!ok) std::printf("      %d failure(s), first: %s\n", c.failures, c.first.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
