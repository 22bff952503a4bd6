#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qcubes/qpoly.hpp"
#include "qcubes/report.hpp"

namespace qcubes {

/// Point (i, j) of the weighted square S_n = {0 <= i, j < n}. The weight of
/// (i, j) in S_n is q^{i + (n-1-j)}: i grows to the right and j grows
/// downwards, so the bottom-left corner has weight 1.
struct LatticePoint {
  Exponent i;
  Exponent j;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

using PointSet = std::vector<LatticePoint>;

/// Weight exponent of p in S_n; throws PointOutOfRange outside S_n.
Exponent weight_exponent(const LatticePoint& p, Exponent n);

/// Sum of q^{weight} over the points, all of which must lie in S_n.
LaurentPoly weight_of(const PointSet& points, Exponent n);

PointSet square_points(Exponent n);

/// The hook h_k: column k-1 from the top down to row k-1, then row k-1
/// back to column 0. Has 2k-1 points. Requires 1 <= k <= n.
PointSet hook_points(Exponent k, Exponent n);

/// Hooks h_1..h_n are disjoint, cover S_n, and h_k weighs q^{n-k}[2k-1]_q.
VerificationReport verify_hook_partition(Exponent n);

/// R_j: the union of hooks h_{T(j-1)+1}, ..., h_{T(j)} inside S_{T(n)},
/// j^3 points in all. Requires 1 <= j <= n.
PointSet region_points(Exponent j, Exponent n);

/// weight(R_j) = q^{T(n)-T(j)} [j]_q [j^2]_q and |R_j| = j^3.
VerificationReport verify_region_weight(Exponent j, Exponent n);

/// R_1..R_n are disjoint, cover S_{T(n)}, and their weights add to [T(n)]_q^2.
VerificationReport verify_region_partition(Exponent n);

/// Axis-aligned rectangle of lattice points with top-left corner (i0, j0).
struct Block {
  Exponent i0;
  Exponent j0;
  Exponent width;
  Exponent height;

  PointSet points() const;
  /// The minimal-weight point, i.e. the bottom-left corner (i0, j0+height-1).
  LatticePoint base_point() const;
};

/// For odd j, the j squares of side j tiling R_j: (j+1)/2 stacked in the
/// vertical arm and (j-1)/2 side by side in the horizontal arm.
std::vector<Block> odd_region_squares(Exponent j, Exponent n);

/// The squares of odd_region_squares tile R_j exactly and their base points
/// weigh q^{T(n)-T(j)} q^{mj} for m = 0..j-1.
VerificationReport verify_odd_region_tiling(Exponent j, Exponent n);

/// Odd j: [j]^2 (1 + q^j + ... + q^{(j-1)j}) = [j]^2 [j]_{q^j} = [j] [j^2].
VerificationReport odd_region_identity(Exponent j);

/// j = 2l: the weight chain of j-1 squares and two j x l rectangles,
///   sum_{m<2l-1} q^{l+2lm}[2l]^2 + q^{4l^2-l}[2l][l] + [2l][l]
///     = [2l][l] (sum_m q^{l+2lm} [2l]/[l] + q^{4l^2-l} + 1)
///     = [2l][l] ((q^l - q^{4l^2-l}) / (1 - q^l) + q^{4l^2-l} + 1)
///     = [2l] (1-q^l)/(1-q) (1-q^{4l^2})/(1-q^l)
///     = [2l] [4l^2],
/// every step built as a rational function and asserted polynomial.
VerificationReport even_region_identity(Exponent ell);

/// The weights of S_n as a matrix, rows top to bottom, entries as
/// monomials separated by single spaces, one row per line.
std::string render_weight_matrix(Exponent n);

}  // namespace qcubes
