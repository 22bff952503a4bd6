#include "qcubes/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qcubes/errors.hpp"
#include "qcubes/qcalc.hpp"

namespace qcubes {

namespace {

void require_positive(Exponent v, const char* what) {
  if (v < 1) throw IndexOutOfRange(std::string(what) + " must be >= 1");
}

bool same_set(PointSet a, PointSet b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool has_duplicates(PointSet points) {
  std::sort(points.begin(), points.end());
  return std::adjacent_find(points.begin(), points.end()) != points.end();
}

VerificationReport failure(std::string id, Assignment params, std::string why) {
  VerificationReport r;
  r.id = std::move(id);
  r.params = std::move(params);
  r.outcome = Outcome::kFail;
  r.error = std::move(why);
  return r;
}

VerificationReport pass(std::string id, Assignment params) {
  VerificationReport r;
  r.id = std::move(id);
  r.params = std::move(params);
  r.outcome = Outcome::kPass;
  return r;
}

}  // namespace

Exponent weight_exponent(const LatticePoint& p, Exponent n) {
  if (p.i < 0 || p.j < 0 || p.i >= n || p.j >= n) {
    throw PointOutOfRange("point (" + std::to_string(p.i) + ", " + std::to_string(p.j) + ") outside S_" +
                          std::to_string(n));
  }
  return p.i + (n - 1 - p.j);
}

LaurentPoly weight_of(const PointSet& points, Exponent n) {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(points.size());
  for (const auto& p : points) terms.push_back({weight_exponent(p, n), mpz_class(1)});
  return LaurentPoly::from_terms(std::move(terms));
}

PointSet square_points(Exponent n) {
  require_positive(n, "square side");
  PointSet out;
  out.reserve(static_cast<std::size_t>(n * n));
  for (Exponent j = 0; j < n; ++j) {
    for (Exponent i = 0; i < n; ++i) out.push_back({i, j});
  }
  return out;
}

PointSet hook_points(Exponent k, Exponent n) {
  if (k < 1 || k > n) {
    throw IndexOutOfRange("hook index " + std::to_string(k) + " outside 1.." + std::to_string(n));
  }
  PointSet out;
  out.reserve(static_cast<std::size_t>(2 * k - 1));
  for (Exponent j = 0; j < k; ++j) out.push_back({k - 1, j});
  for (Exponent i = k - 2; i >= 0; --i) out.push_back({i, k - 1});
  return out;
}

VerificationReport verify_hook_partition(Exponent n) {
  const std::string id = "hook_partition";
  const Assignment params{{"n", n}};
  return timed_check(id, params, [&] {
    require_positive(n, "n");
    PointSet all;
    LaurentPoly total;
    for (Exponent k = 1; k <= n; ++k) {
      const PointSet hook = hook_points(k, n);
      if (static_cast<Exponent>(hook.size()) != 2 * k - 1) return failure(id, params, "hook size");
      const LaurentPoly w = weight_of(hook, n);
      if (!(w == q_int(2 * k - 1).shifted(n - k))) {
        auto r = compare_sides(id, params, w, q_int(2 * k - 1).shifted(n - k));
        r.error = "weight of h_" + std::to_string(k);
        return r;
      }
      total += w;
      all.insert(all.end(), hook.begin(), hook.end());
    }
    if (has_duplicates(all)) return failure(id, params, "hooks overlap");
    if (!same_set(all, square_points(n))) return failure(id, params, "hooks do not cover S_n");
    if (!(weight_of(square_points(n), n) == pow(q_int(n), 2))) return failure(id, params, "weight of S_n");
    return compare_sides(id, params, total, pow(q_int(n), 2));
  });
}

PointSet region_points(Exponent j, Exponent n) {
  if (j < 1 || j > n) {
    throw IndexOutOfRange("region index " + std::to_string(j) + " outside 1.." + std::to_string(n));
  }
  const Exponent side = triangular(n);
  PointSet out;
  for (Exponent k = triangular(j - 1) + 1; k <= triangular(j); ++k) {
    const PointSet hook = hook_points(k, side);
    out.insert(out.end(), hook.begin(), hook.end());
  }
  return out;
}

VerificationReport verify_region_weight(Exponent j, Exponent n) {
  const std::string id = "region_weight";
  const Assignment params{{"j", j}, {"n", n}};
  return timed_check(id, params, [&] {
    const PointSet region = region_points(j, n);
    if (static_cast<Exponent>(region.size()) != checked_pow(j, 3)) return failure(id, params, "|R_j| != j^3");
    const LaurentPoly expected = (q_int(j) * q_int(j * j)).shifted(triangular(n) - triangular(j));
    return compare_sides(id, params, weight_of(region, triangular(n)), expected);
  });
}

VerificationReport verify_region_partition(Exponent n) {
  const std::string id = "region_partition";
  const Assignment params{{"n", n}};
  return timed_check(id, params, [&] {
    require_positive(n, "n");
    const Exponent side = triangular(n);
    PointSet all;
    LaurentPoly total;
    for (Exponent j = 1; j <= n; ++j) {
      const PointSet region = region_points(j, n);
      total += weight_of(region, side);
      all.insert(all.end(), region.begin(), region.end());
    }
    if (has_duplicates(all)) return failure(id, params, "regions overlap");
    if (!same_set(all, square_points(side))) return failure(id, params, "regions do not cover S_T(n)");
    return compare_sides(id, params, total, pow(q_int(side), 2));
  });
}

PointSet Block::points() const {
  PointSet out;
  out.reserve(static_cast<std::size_t>(width * height));
  for (Exponent dj = 0; dj < height; ++dj) {
    for (Exponent di = 0; di < width; ++di) out.push_back({i0 + di, j0 + dj});
  }
  return out;
}

LatticePoint Block::base_point() const { return {i0, j0 + height - 1}; }

std::vector<Block> odd_region_squares(Exponent j, Exponent n) {
  if (j < 1 || j > n || j % 2 == 0) throw IndexOutOfRange("odd_region_squares requires odd j in 1..n");
  const Exponent inner = triangular(j - 1);
  std::vector<Block> out;
  // Vertical arm: columns inner..inner+j-1, rows 0..T(j)-1.
  for (Exponent t = 0; t < (j + 1) / 2; ++t) out.push_back({inner, t * j, j, j});
  // Horizontal arm: rows inner..inner+j-1, columns 0..inner-1.
  for (Exponent s = 0; s < (j - 1) / 2; ++s) out.push_back({s * j, inner, j, j});
  return out;
}

VerificationReport verify_odd_region_tiling(Exponent j, Exponent n) {
  const std::string id = "odd_region_tiling";
  const Assignment params{{"j", j}, {"n", n}};
  return timed_check(id, params, [&] {
    const Exponent side = triangular(n);
    const std::vector<Block> squares = odd_region_squares(j, n);
    PointSet covered;
    std::set<Exponent> base_exponents;
    for (const auto& sq : squares) {
      const PointSet pts = sq.points();
      covered.insert(covered.end(), pts.begin(), pts.end());
      const Exponent base = weight_exponent(sq.base_point(), side);
      // The base point is the lightest point of the square.
      if (!(weight_of(pts, side) == pow(q_int(j), 2).shifted(base))) return failure(id, params, "base point");
      base_exponents.insert(base);
    }
    if (has_duplicates(covered)) return failure(id, params, "squares overlap");
    if (!same_set(covered, region_points(j, n))) return failure(id, params, "squares do not tile R_j");
    std::set<Exponent> expected;
    for (Exponent m = 0; m < j; ++m) expected.insert(side - triangular(j) + m * j);
    if (base_exponents != expected) return failure(id, params, "base point weights");
    return pass(id, params);
  });
}

VerificationReport odd_region_identity(Exponent j) {
  const std::string id = "odd_region_identity";
  const Assignment params{{"j", j}};
  return timed_check(id, params, [&] {
    if (j < 1 || j % 2 == 0) throw PreconditionViolation("odd_region_identity requires odd j >= 1");
    const LaurentPoly square = pow(q_int(j), 2);
    std::vector<LaurentPoly> stacked;
    for (Exponent m = 0; m < j; ++m) stacked.push_back(square.shifted(m * j));
    const LaurentPoly squares = sum(stacked);
    if (eval_at_one(squares) != checked_pow(j, 3)) return failure(id, params, "point count != j^3");
    const LaurentPoly based = square * q_int(j, j);
    const LaurentPoly closed = q_int(j) * q_int(j * j);
    if (!(squares == based)) return compare_sides(id, params, squares, based);
    return compare_sides(id, params, based, closed);
  });
}

VerificationReport even_region_identity(Exponent ell) {
  const std::string id = "even_region_identity";
  const Assignment params{{"l", ell}};
  return timed_check(id, params, [&] {
    if (ell < 1) throw PreconditionViolation("even_region_identity requires l >= 1");
    const Exponent j = 2 * ell;
    const Exponent top = checked_sub(checked_mul(j, j), ell);  // 4l^2 - l
    const LaurentPoly qj = q_int(j);
    const LaurentPoly ql = q_int(ell);
    const LaurentPoly one(1);

    // j-1 squares plus the upper and the left rectangle.
    std::vector<LaurentPoly> parts;
    for (Exponent m = 0; m <= j - 2; ++m) parts.push_back(pow(qj, 2).shifted(ell + j * m));
    parts.push_back((qj * ql).shifted(top));
    parts.push_back(qj * ql);
    const RationalFn step1 = sum(parts);
    if (eval_at_one(rf_to_poly(step1)) != checked_pow(j, 3)) return failure(id, params, "point count != j^3");

    const RationalFn ratio = rf_normalize(one - q_pow(j), one - q_pow(ell));
    RationalFn inner2 = RationalFn(q_pow(top)) + one;
    for (Exponent m = 0; m <= j - 2; ++m) inner2 += RationalFn(q_pow(ell + j * m)) * ratio;
    const RationalFn step2 = RationalFn(qj * ql) * inner2;

    const RationalFn inner3 =
        rf_normalize(q_pow(ell) - q_pow(top), one - q_pow(ell)) + RationalFn(q_pow(top)) + one;
    const RationalFn step3 = RationalFn(qj * ql) * inner3;

    const RationalFn step4 = RationalFn(qj) * rf_normalize(one - q_pow(ell), one - q_pow(1)) *
                             rf_normalize(one - q_pow(j * j), one - q_pow(ell));
    const LaurentPoly closed = qj * q_int(j * j);

    const LaurentPoly chain[] = {rf_to_poly(step1), rf_to_poly(step2), rf_to_poly(step3), rf_to_poly(step4)};
    for (const auto& step : chain) {
      if (!(step == closed)) return compare_sides(id, params, step, closed);
    }
    return pass(id, params);
  });
}

std::string render_weight_matrix(Exponent n) {
  require_positive(n, "n");
  std::ostringstream os;
  for (Exponent j = 0; j < n; ++j) {
    for (Exponent i = 0; i < n; ++i) {
      if (i > 0) os << ' ';
      os << to_string(q_pow(weight_exponent({i, j}, n)));
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace qcubes
