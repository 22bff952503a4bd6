#include <doctest.h>

#include "qcubes/errors.hpp"
#include "qcubes/identities.hpp"
#include "qcubes/qcalc.hpp"
#include "qcubes/telescope.hpp"

using namespace qcubes;

namespace {

const LaurentPoly q = q_pow(1);

std::vector<SequenceSpec> sample_sequences() {
  std::vector<SequenceSpec> out = {sequences::constant_one(), sequences::identity(), sequences::squares(),
                                   sequences::cubes(), sequences::odd(), sequences::half_powers_of_three()};
  out.push_back(sequences::seeded_random(3, 40, 12));
  return out;
}

}  // namespace

TEST_CASE("forward telescope examples") {
  const auto [lhs, rhs] = telescope_sides(sequences::cubes(), 2, TelescopeDirection::kForward);
  CHECK(lhs == q_int(1) + q * q_int(8));
  CHECK(rhs == q_int(9));
  CHECK(forward_telescope(sequences::cubes(), 2).passed());

  for (Exponent k = 1; k <= 10; ++k) {
    CHECK(telescope_sides(sequences::constant_one(), k, TelescopeDirection::kForward).first == q_int(k));
    CHECK(forward_telescope(sequences::constant_one(), k).passed());
  }
  for (const auto& s : sample_sequences()) {
    CHECK(telescope_sides(s, 1, TelescopeDirection::kForward).first == q_int(s.at(1)));
    CHECK(forward_telescope(s, 1).passed());
  }
}

TEST_CASE("backward telescope examples") {
  const auto [lhs, rhs] = telescope_sides(sequences::cubes(), 2, TelescopeDirection::kBackward);
  CHECK(lhs == q_pow(8) * q_int(1) + q_int(8));
  CHECK(rhs == q_int(9));
  CHECK(backward_telescope(sequences::cubes(), 2).passed());
  CHECK(backward_telescope(sequences::constant_one(), 7).passed());
  for (const auto& s : sample_sequences()) CHECK(backward_telescope(s, 1).passed());
}

TEST_CASE("report contents") {
  const VerificationReport r = forward_telescope(sequences::squares(), 4);
  CHECK(r.id == "forward_telescope[j^2]");
  CHECK(r.params == Assignment{{"n", 4}});
  CHECK(r.outcome == Outcome::kPass);
  CHECK(r.lhs.empty());
}

TEST_CASE("non-positive terms violate the precondition") {
  const SequenceSpec bad{"zero at 3", [](Exponent j) { return j == 3 ? Exponent{0} : j; }};
  CHECK_THROWS_AS(telescope_sides(bad, 4, TelescopeDirection::kForward), PreconditionViolation);
  const VerificationReport r = forward_telescope(bad, 4);
  CHECK(r.outcome == Outcome::kError);
  CHECK(r.error.find("non-positive") != std::string::npos);
  CHECK(forward_telescope(bad, 2).passed());
  CHECK(forward_telescope(sequences::identity(), 0).outcome == Outcome::kError);
}

TEST_CASE("classical value of both sides is the plain sum") {
  for (const auto& s : sample_sequences()) {
    for (Exponent n = 1; n <= 8; ++n) {
      Exponent total = 0;
      for (Exponent j = 1; j <= n; ++j) total += s.at(j);
      for (auto dir : {TelescopeDirection::kForward, TelescopeDirection::kBackward}) {
        const auto [lhs, rhs] = telescope_sides(s, n, dir);
        CHECK(eval_at_one(lhs) == total);
        CHECK(eval_at_one(rhs) == total);
      }
    }
  }
}

TEST_CASE("partial sums") {
  for (const auto& s : sample_sequences()) {
    CHECK(verify_partial_sums(s, 10, TelescopeDirection::kForward).passed());
    CHECK(verify_partial_sums(s, 10, TelescopeDirection::kBackward).passed());
  }
}

TEST_CASE("huge totals are compared after clearing the denominator") {
  // (3^30 - 1)/2 alone is about 10^14, far beyond expansion.
  CHECK(forward_telescope(sequences::half_powers_of_three(), 30).passed());
  CHECK(backward_telescope(sequences::half_powers_of_three(), 30).passed());
  CHECK(verify_partial_sums(sequences::half_powers_of_three(), 30, TelescopeDirection::kForward).passed());
}

TEST_CASE("difference identity examples") {
  const auto [lhs, rhs] = difference_sides(DifferenceKind::kTriangularQint, 2);
  CHECK(lhs == 1 + 2 * q + 2 * q_pow(2) + 2 * q_pow(3) + q_pow(4));
  CHECK(rhs == q_int(2) * q_int(4));
  CHECK(difference_identity(DifferenceKind::kTriangularQint, 2).passed());

  const auto [w_lhs, w_rhs] = difference_sides(DifferenceKind::kWarnaar, 1);
  CHECK(w_lhs == LaurentPoly(1));
  CHECK(w_rhs == LaurentPoly(1));

  const auto [g_lhs, g_rhs] = difference_sides(DifferenceKind::kGarrettHummel, 1);
  CHECK(g_lhs == LaurentPoly(1));
  CHECK(g_rhs == LaurentPoly(1));

  CHECK(difference_identity(DifferenceKind::kZhaoFeng, 1).passed());
  CHECK(difference_identity(DifferenceKind::kWarnaar, 0).outcome == Outcome::kError);
}

TEST_CASE("difference identities hold for n <= 25") {
  for (auto kind : {DifferenceKind::kGarrettHummel, DifferenceKind::kWarnaar, DifferenceKind::kZhaoFeng,
                    DifferenceKind::kTriangularQint}) {
    for (Exponent n = 1; n <= 25; ++n) {
      CAPTURE(n);
      CHECK(difference_identity(kind, n).passed());
    }
  }
}

TEST_CASE("weighted differences sum to the full identities") {
  struct Case {
    DifferenceKind kind;
    const char* id;
  };
  const Case cases[] = {{DifferenceKind::kGarrettHummel, "eq6_garrett_hummel"},
                        {DifferenceKind::kWarnaar, "eq7_warnaar"},
                        {DifferenceKind::kZhaoFeng, "eq8_zhao_feng"},
                        {DifferenceKind::kTriangularQint, "eq10_theorem1"}};
  for (const auto& c : cases) {
    for (Exponent n = 1; n <= 20; ++n) {
      LaurentPoly telescoped;
      LaurentPoly weighted_rhs;
      for (Exponent j = 1; j <= n; ++j) {
        Exponent weight = 0;
        switch (c.kind) {
          case DifferenceKind::kGarrettHummel:
            weight = 0;
            break;
          case DifferenceKind::kWarnaar:
            weight = 2 * (n - j);
            break;
          case DifferenceKind::kZhaoFeng:
            weight = 4 * (n - j);
            break;
          case DifferenceKind::kTriangularQint:
            weight = triangular(n) - triangular(j);
            break;
        }
        const auto [diff, closed] = difference_sides(c.kind, j);
        telescoped += diff.shifted(weight);
        weighted_rhs += closed.shifted(weight);
      }
      const Assignment a{{"n", n}};
      CAPTURE(c.id);
      CAPTURE(n);
      CHECK(telescoped == rf_to_poly(build_side(c.id, Side::kRhs, a)));
      CHECK(weighted_rhs == rf_to_poly(build_side(c.id, Side::kLhs, a)));
    }
  }
}
