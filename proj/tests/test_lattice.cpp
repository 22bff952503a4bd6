#include <doctest.h>

#include <algorithm>
#include <set>

#include "qcubes/errors.hpp"
#include "qcubes/lattice.hpp"
#include "qcubes/qcalc.hpp"

using namespace qcubes;

namespace {

const LaurentPoly q = q_pow(1);

std::set<LatticePoint> as_set(const PointSet& ps) { return {ps.begin(), ps.end()}; }

// Brute-force weight: sum over the points of q^{i + n - 1 - j}.
LaurentPoly weight_by_hand(const PointSet& ps, Exponent n) {
  LaurentPoly w;
  for (const auto& p : ps) w += q_pow(p.i + n - 1 - p.j);
  return w;
}

}  // namespace

TEST_CASE("square and hook weights") {
  CHECK(weight_of(square_points(6), 6) == pow(q_int(6), 2));
  CHECK(weight_of(hook_points(1, 6), 6) == q_pow(5));
  CHECK(weight_of(hook_points(2, 6), 6) == q_pow(4) * q_int(3));
  CHECK(weight_of(hook_points(3, 6), 6) == q_pow(3) * q_int(5));
  CHECK(weight_of(hook_points(6, 6), 6) == q_int(11));
  CHECK(hook_points(2, 6) == PointSet{{1, 0}, {1, 1}, {0, 1}});
}

TEST_CASE("weight matrix golden") {
  const char* expected =
      "q^5 q^6 q^7 q^8 q^9 q^10\n"
      "q^4 q^5 q^6 q^7 q^8 q^9\n"
      "q^3 q^4 q^5 q^6 q^7 q^8\n"
      "q^2 q^3 q^4 q^5 q^6 q^7\n"
      "q q^2 q^3 q^4 q^5 q^6\n"
      "1 q q^2 q^3 q^4 q^5\n";
  CHECK(render_weight_matrix(6) == expected);
  CHECK(render_weight_matrix(1) == "1\n");
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS(weight_exponent({6, 0}, 6), PointOutOfRange);
  CHECK_THROWS_AS(weight_exponent({0, -1}, 6), PointOutOfRange);
  CHECK_THROWS_AS(weight_of(PointSet{{0, 0}, {3, 3}}, 3), PointOutOfRange);
  CHECK_THROWS_AS(hook_points(0, 4), IndexOutOfRange);
  CHECK_THROWS_AS(hook_points(5, 4), IndexOutOfRange);
  CHECK_THROWS_AS(region_points(0, 3), IndexOutOfRange);
  CHECK_THROWS_AS(region_points(4, 3), IndexOutOfRange);
  CHECK(odd_region_identity(2).outcome == Outcome::kError);
  CHECK(even_region_identity(0).outcome == Outcome::kError);
}

TEST_CASE("hooks partition the square") {
  for (Exponent n = 1; n <= 20; ++n) {
    CAPTURE(n);
    CHECK(verify_hook_partition(n).passed());
    std::set<LatticePoint> seen;
    std::size_t total = 0;
    for (Exponent k = 1; k <= n; ++k) {
      const PointSet h = hook_points(k, n);
      CHECK(h.size() == static_cast<std::size_t>(2 * k - 1));
      CHECK(weight_of(h, n) == q_int(2 * k - 1).shifted(n - k));
      total += h.size();
      seen.insert(h.begin(), h.end());
    }
    CHECK(total == seen.size());
    CHECK(seen == as_set(square_points(n)));
  }
}

TEST_CASE("region examples") {
  CHECK(region_points(2, 2).size() == 8);
  CHECK(region_points(3, 3).size() == 27);
  CHECK(weight_of(region_points(1, 1), 1) == LaurentPoly(1));
  CHECK(weight_of(region_points(2, 2), 3) == q_int(2) * q_int(4));
  CHECK(weight_of(region_points(1, 2), 3) == q_pow(2));
}

TEST_CASE("region weights and partition") {
  for (Exponent n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(verify_region_partition(n).passed());
    for (Exponent j = 1; j <= n; ++j) {
      CAPTURE(j);
      CHECK(verify_region_weight(j, n).passed());
      const PointSet r = region_points(j, n);
      CHECK(r.size() == static_cast<std::size_t>(j * j * j));
      CHECK(weight_of(r, triangular(n)) == weight_by_hand(r, triangular(n)));
    }
  }
}

TEST_CASE("weight is additive over disjoint unions") {
  const Exponent n = 10;
  for (Exponent a = 1; a <= n; ++a) {
    for (Exponent b = a + 1; b <= n; ++b) {
      PointSet both = hook_points(a, n);
      const PointSet hb = hook_points(b, n);
      both.insert(both.end(), hb.begin(), hb.end());
      CHECK(weight_of(both, n) == weight_of(hook_points(a, n), n) + weight_of(hb, n));
    }
  }
}

TEST_CASE("odd region tiling") {
  const auto squares = odd_region_squares(3, 3);
  CHECK(squares.size() == 3);
  for (const auto& b : squares) {
    CHECK(b.width == 3);
    CHECK(b.height == 3);
  }
  for (Exponent j = 1; j <= 9; j += 2) {
    for (Exponent n = j; n <= j + 2; ++n) {
      CAPTURE(j);
      CAPTURE(n);
      CHECK(verify_odd_region_tiling(j, n).passed());
    }
    CHECK(odd_region_identity(j).passed());
  }
}

TEST_CASE("even region chain") {
  for (Exponent ell = 1; ell <= 12; ++ell) {
    CAPTURE(ell);
    const VerificationReport r = even_region_identity(ell);
    CHECK(r.params == Assignment{{"l", ell}});
    CHECK(r.passed());
  }
}

TEST_CASE("block geometry") {
  const Block b{2, 1, 3, 2};
  CHECK(b.points().size() == 6);
  CHECK(b.base_point() == LatticePoint{2, 2});
  const auto pts = b.points();
  CHECK(std::all_of(pts.begin(), pts.end(), [&](const LatticePoint& p) {
    return weight_exponent(p, 5) >= weight_exponent(b.base_point(), 5);
  }));
}
