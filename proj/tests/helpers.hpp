#pragma once

#include <vector>

#include "ffgeom/parse.hpp"
#include "ffgeom/periodic.hpp"

namespace testing {

using namespace ffgeom;

inline MatRat ratmat(const Field& F, const std::vector<std::vector<const char*>>& rows) {
  MatRat m(rows.size(), rows[0].size(), RationalFunc(F));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = parse_element(F, rows[i][j]);
  return m;
}

inline KVec kvec(const Field& F, const std::vector<const char*>& xs) {
  KVec v;
  for (const char* s : xs) v.push_back(parse_kelem(F, s));
  return v;
}

inline Lattice lattice(const Field& F, const std::vector<std::vector<const char*>>& rows) {
  return Lattice(ratmat(F, rows));
}

/// q = 2, Lambda = R^2, alpha = (x^-1, x^-2), N = 1.
inline PeriodicLattice W(int N = 1) {
  const Field& F = Field::prime(2);
  return make_alpha_lattice(Lattice::standard(F, 2), kvec(F, {"x^-1", "x^-2"}), N, Frame::Reduced);
}

inline ConvexBody unit(const Field& F, std::size_t d) { return ConvexBody::identity(F, d); }

}  // namespace testing
