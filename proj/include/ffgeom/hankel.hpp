#pragma once

#include <vector>

#include "ffgeom/periodic.hpp"

namespace ffgeom {

/// Delta_alpha(m, n): entry (i, j) is the coefficient of x^{-(i+j-1)} in alpha
/// (1-indexed). Empty when m <= 0 or n <= 0.
MatFq hankel(const KElem& alpha, int m, int n);

/// Blocks Delta_{alpha_i}(max(ell + e_i, 0), n) stacked in order.
MatFq hankel_stack(const KVec& alpha, const std::vector<int>& exps, int ell, int n);

struct CovradScan {
  QExp radius;
  int gamma = 0;
  /// ell values tested, with whether the rank condition held.
  std::vector<std::pair<int, bool>> steps;
};

/// Covering radius of Lambda(alpha, q^N) (or of Lambda for a plain S) by the
/// rank search: gamma is the largest ell with rank = sum max(ell + e_i, 0),
/// and the radius is q^{-(1 + gamma)}.
CovradScan covrad_scan(const PeriodicLattice& s, const ConvexBody& c);
QExp covrad_periodic(const PeriodicLattice& s, const ConvexBody& c);

struct CovradBounds {
  /// Exponent of the lower bound, an exact rational.
  BigRational lower;
  QExp upper;
};

/// lower = -(1 + max_i (N + 1 - sum_{j > d-i} e_j) / i), upper = e_d - 1.
CovradBounds covrad_bounds(const Lattice& l, int N, const ConvexBody& c);

}  // namespace ffgeom
