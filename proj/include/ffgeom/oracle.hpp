#pragma once

#include <cstdint>
#include <vector>

#include "ffgeom/periodic.hpp"

namespace ffgeom {

/// Brute-force reference computations. They work from definitions (explicit
/// point enumeration, grids over the fundamental domain) and share no code
/// with the closed forms beyond arithmetic and the reduced basis of Lambda.

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

/// Enumeration budget: FFGEOM_BUDGET if set, otherwise kDefaultBudget.
std::uint64_t default_budget();

struct Window {
  int R = 0;
  int M = 0;
  std::uint64_t budget = kDefaultBudget;
};

using RatVec = std::vector<RationalFunc>;

/// All points of S with ||p||_C <= q^R, in ambient coordinates, sorted and
/// duplicate-free. Needs exact (rational) input. Throws BudgetExceeded.
std::vector<RatVec> enumerate_points(const PeriodicLattice& s, const ConvexBody& c, int R,
                                     std::uint64_t budget = default_budget());

/// |enumerate_points(s, c, R)| by the same walk, without building the points.
std::uint64_t count_window(const PeriodicLattice& s, const ConvexBody& c, int R,
                           std::uint64_t budget = default_budget());

/// max over u in D of min over cell points f of ||u - f||_C, with u on the
/// depth-M coefficient grid. The literal grid is used when it fits the
/// budget, otherwise an equivalent count of coefficient-prefix classes.
/// Throws PrecisionTooCoarse unless the result exceeds q^{e_d - M}.
enum class GridMode { Auto, Literal, Prefix };
QExp covrad_oracle(const PeriodicLattice& s, const ConvexBody& c, int M, std::uint64_t budget = default_budget(),
                   GridMode mode = GridMode::Auto);

/// Default depth N + |e_1| + |e_d| + 4 (e from the reduced basis for C).
int default_grid_depth(const PeriodicLattice& s, const ConvexBody& c);

/// e_i = least R at which the points of norm <= q^R span dimension >= i.
std::vector<int> succmin_oracle(const PeriodicLattice& s, const ConvexBody& c,
                                std::uint64_t budget = default_budget());

/// Smallest R at which the window density is stationary.
int density_threshold(const PeriodicLattice& s, const ConvexBody& c, std::uint64_t budget = default_budget());

/// m((S + C') ∩ B(0, q^R)) / q^{dR}, C' = x^{e_1 - 1} C the densest packing body,
/// evaluated as #(S ∩ B(0, q^R)) m(C') / q^{dR}. Requires R >= density_threshold.
BigRational density_oracle(const PeriodicLattice& s, const ConvexBody& c, int R,
                           std::uint64_t budget = default_budget());

}  // namespace ffgeom
