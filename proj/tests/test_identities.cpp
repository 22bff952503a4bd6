#include <doctest.h>

#include <set>

#include "qcubes/errors.hpp"
#include "qcubes/identities.hpp"
#include "qcubes/lattice.hpp"
#include "qcubes/qcalc.hpp"

using namespace qcubes;

namespace {

const LaurentPoly q = q_pow(1);

LaurentPoly side(const char* id, Side s, const Assignment& a) { return rf_to_poly(build_side(id, s, a)); }

}  // namespace

TEST_CASE("catalog census") {
  const auto& all = list_identities();
  CHECK(all.size() >= 24);
  std::set<std::string> ids;
  for (const auto& d : all) {
    CAPTURE(d.id);
    CHECK(ids.insert(d.id).second);
    CHECK(!d.label.empty());
    CHECK(!d.params.empty());
    CHECK(!d.classical.empty());
    CHECK(d.lhs);
    CHECK(d.rhs);
    CHECK(d.valid);
    CHECK(d.classical_sum);
    CHECK(d.classical_value);
    CHECK(d.default_ranges.size() == d.params.size());
    CHECK(&find_identity(d.id) == &d);
  }
  for (const char* id : {"eq6_garrett_hummel", "eq10_theorem1", "eq24_luthy", "eq30_theorem3", "eq38_theorem5"})
    CHECK(ids.count(id) == 1);
  CHECK_THROWS_AS(find_identity("nope"), UnknownIdentity);
}

TEST_CASE("build_side examples") {
  CHECK(side("eq11_odd_sum", Side::kLhs, {{"n", 2}}) == 1 + 2 * q + q_pow(2));
  CHECK(side("eq14_wheatstone_group", Side::kLhs, {{"n", 2}}) == q * q_int(3) + q_int(5));
  CHECK(side("eq10_theorem1", Side::kRhs, {{"n", 2}}) == 1 + 2 * q + 3 * q_pow(2) + 2 * q_pow(3) + q_pow(4));
  CHECK(side("eq10_theorem1", Side::kLhs, {{"n", 1}}) == LaurentPoly(1));
  CHECK(side("eq24_luthy", Side::kRhs, {{"n", 2}, {"k", 1}}) == q_int(2) * q_int(4));
}

TEST_CASE("verify_instance examples and errors") {
  CHECK(verify_instance("eq10_theorem1", {{"n", 2}}).passed());
  CHECK(verify_instance("eq38_theorem5", {{"n", 1}}).passed());
  CHECK_THROWS_AS(verify_instance("eq10_theorem1", {{"n", 0}}), InvalidParams);
  CHECK_THROWS_AS(verify_instance("eq10_theorem1", {{"m", 2}}), InvalidParams);
  CHECK_THROWS_AS(verify_instance("eq10_theorem1", {{"n", 2}, {"k", 1}}), InvalidParams);
  CHECK_THROWS_AS(verify_instance("nope", {{"n", 2}}), UnknownIdentity);
  CHECK_THROWS_AS(build_side("nope", Side::kLhs, {{"n", 2}}), UnknownIdentity);
}

TEST_CASE("compare_sides renders both sides on failure") {
  const VerificationReport r = compare_sides("x", {{"n", 1}}, 1 + q, 1 - q);
  CHECK(r.outcome == Outcome::kFail);
  CHECK(r.lhs == "1 + q");
  CHECK(r.rhs == "1 - q");
  CHECK(to_text_line(r) == "x n=1 FAIL");
}

TEST_CASE("grid expansion") {
  const auto& d = find_identity("eq26");
  const auto grid = expand_grid(d, {{"n", 0, 2}, {"m", 5, 6}});
  REQUIRE(grid.size() == 6);
  CHECK(grid[0] == Assignment{{"n", 0}, {"m", 5}});
  CHECK(grid[1] == Assignment{{"n", 0}, {"m", 6}});
  CHECK(grid[5] == Assignment{{"n", 2}, {"m", 6}});
  // Range order in the request does not matter.
  CHECK(expand_grid(d, {{"m", 5, 6}, {"n", 0, 2}}) == grid);
  CHECK_THROWS_AS(expand_grid(d, {{"n", 0, 2}}), InvalidParams);
  CHECK_THROWS_AS(expand_grid(d, {{"n", 2, 0}, {"m", 0, 1}}), InvalidParams);
  CHECK_THROWS_AS(expand_grid(d, {{"n", 0, 2}, {"m", 0, 1}, {"k", 0, 1}}), InvalidParams);
}

TEST_CASE("grid examples") {
  const GridReport odd = verify_grid("eq11_odd_sum", {{"n", 1, 40}});
  CHECK(odd.instances.size() == 40);
  CHECK(odd.passed());
  CHECK(!odd.first_failure());
  CHECK(verify_grid("eq26", {{"n", 0, 15}, {"m", 0, 6}}).passed());
  CHECK(verify_grid("eq19_binsum_a", {{"n", 1, 12}, {"k", 1, 12}}).passed());
}

TEST_CASE("every default grid passes") {
  for (const auto& d : list_identities()) {
    CAPTURE(d.id);
    const GridReport g = verify_grid(d.id, d.default_ranges);
    CHECK(g.passed());
    if (const auto bad = g.first_failure()) {
      CAPTURE(to_text_line(g.instances[*bad]));
      CAPTURE(g.instances[*bad].error);
      CHECK(false);
    }
  }
}

TEST_CASE("classical limits") {
  const VerificationReport cubes = classical_limit_check("eq10_theorem1", {{"n", 4}});
  CHECK(cubes.passed());

  REQUIRE(find_identity("eq10_theorem1").classical_value(Assignment{{"n", 4}}) == 100);
  CHECK(eval_at_one(side("eq10_theorem1", Side::kLhs, {{"n", 4}})) == 100);

  CHECK(classical_limit_check("eq24_luthy", {{"n", 2}, {"k", 1}}).passed());
  CHECK(eval_at_one(side("eq24_luthy", Side::kLhs, {{"n", 2}, {"k", 1}})) == 8);
  // 5 + 7 + 9 + 11 = 2^5.
  CHECK(classical_limit_check("eq24_luthy", {{"n", 2}, {"k", 2}}).passed());
  CHECK(eval_at_one(side("eq24_luthy", Side::kLhs, {{"n", 2}, {"k", 2}})) == 32);
  CHECK(find_identity("eq24_luthy").classical_sum(Assignment{{"n", 2}, {"k", 2}}) == 32);

  for (const auto& d : list_identities()) {
    for (const auto& a : expand_grid(d, d.default_ranges)) {
      CAPTURE(d.id);
      CAPTURE(a.to_string());
      CHECK(classical_limit_check(d.id, a).passed());
    }
  }
}

TEST_CASE("three forms of the block identity agree") {
  const auto& d = find_identity("eq30_theorem3");
  REQUIRE(d.extra_forms.size() == 1);
  for (Exponent n = 0; n <= 5; ++n) {
    const Assignment a{{"n", n}};
    const LaurentPoly lhs = rf_to_poly(d.lhs(a));
    CHECK(lhs == rf_to_poly(d.rhs(a)));
    CHECK(lhs == rf_to_poly(d.extra_forms[0].build(a)));
  }
}

TEST_CASE("odd sum at a triangular number is the cube sum") {
  for (Exponent n = 1; n <= 10; ++n) {
    const LaurentPoly odd_sum = side("eq11_odd_sum", Side::kLhs, {{"n", triangular(n)}});
    CHECK(odd_sum == side("eq10_theorem1", Side::kRhs, {{"n", n}}));
  }
}

TEST_CASE("lattice regions enumerate the cube sum") {
  for (Exponent n = 1; n <= 8; ++n) {
    LaurentPoly enumerated;
    for (Exponent j = 1; j <= n; ++j) enumerated += weight_of(region_points(j, n), triangular(n));
    CHECK(enumerated == side("eq10_theorem1", Side::kLhs, {{"n", n}}));
  }
}

TEST_CASE("grid results do not depend on the thread count") {
  const std::vector<ParamRange> ranges{{"n", 1, 5}, {"k", 0, 3}};
  const GridReport one = verify_grid("eq24_luthy", ranges, 1);
  const GridReport four = verify_grid("eq24_luthy", ranges, 4);
  REQUIRE(one.instances.size() == four.instances.size());
  for (std::size_t i = 0; i < one.instances.size(); ++i) {
    CHECK(to_json(one.instances[i], false) == to_json(four.instances[i], false));
  }
  const auto grid = expand_grid(find_identity("eq24_luthy"), ranges);
  for (std::size_t i = 0; i < grid.size(); ++i) CHECK(four.instances[i].params == grid[i]);
}
