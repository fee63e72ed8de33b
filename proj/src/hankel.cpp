#include "ffgeom/hankel.hpp"

#include <algorithm>

namespace ffgeom {

MatFq hankel(const KElem& alpha, int m, int n) {
  const Field& F = alpha.field();
  if (m <= 0 || n <= 0) return MatFq(F, 0, std::max(n, 0));
  MatFq h(F, static_cast<std::size_t>(m), static_cast<std::size_t>(n));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      try {
        h(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = alpha.coeff(-(i + j - 1));
      } catch (const InsufficientPrecision&) {
        throw InsufficientPrecision("Hankel matrix of order " + std::to_string(m) + "x" + std::to_string(n) +
                                        " needs coefficients down to x^" + std::to_string(-(m + n - 1)),
                                    -(m + n - 1));
      }
    }
  return h;
}

MatFq hankel_stack(const KVec& alpha, const std::vector<int>& exps, int ell, int n) {
  const Field& F = alpha.at(0).field();
  MatFq s(F, 0, static_cast<std::size_t>(std::max(n, 0)));
  for (std::size_t i = 0; i < alpha.size(); ++i) s = s.stacked(hankel(alpha[i], std::max(ell + exps[i], 0), n));
  return s;
}

CovradScan covrad_scan(const PeriodicLattice& s, const ConvexBody& c) {
  if (s.kind() == PeriodicLattice::Kind::Coset)
    throw std::invalid_argument("the Hankel covering radius needs an alpha lattice; use the oracle");
  CellModel m = cell_model(s, c);
  KVec alpha;
  for (const auto& a : m.alpha) alpha.push_back(a.frac());
  const std::vector<int>& e = m.basis.exps;
  const int n = s.N() + 1;

  // At ell = -e_d every block is empty and the condition holds trivially;
  // the condition set is downward closed, so scan up to the first failure.
  CovradScan out;
  int ell = -e.back();
  out.steps.emplace_back(ell, true);
  for (;;) {
    const int next = ell + 1;
    int rows = 0;
    for (int ei : e) rows += std::max(next + ei, 0);
    bool holds = false;
    if (rows <= n) holds = rank_fq(hankel_stack(alpha, e, next, n)) == static_cast<std::size_t>(rows);
    out.steps.emplace_back(next, holds);
    if (!holds) break;
    ell = next;
  }
  out.gamma = ell;
  out.radius = QExp(-(1 + ell));
  return out;
}

QExp covrad_periodic(const PeriodicLattice& s, const ConvexBody& c) { return covrad_scan(s, c).radius; }

CovradBounds covrad_bounds(const Lattice& l, int N, const ConvexBody& c) {
  const std::vector<int> e = reduce_lattice(l, c).exps;
  const int d = static_cast<int>(e.size());
  BigRational best;
  for (int i = 1; i <= d; ++i) {
    int tail = 0;
    for (int j = d - i; j < d; ++j) tail += e[static_cast<std::size_t>(j)];
    BigRational v(BigInt(N + 1 - tail), BigInt(i));
    if (i == 1 || v > best) best = v;
  }
  return {-(1 + best), QExp(e.back() - 1)};
}

}  // namespace ffgeom
