#include <doctest.h>

#include <random>

#include "ffgeom/errors.hpp"
#include "ffgeom/hankel.hpp"
#include "helpers.hpp"

using namespace ffgeom;
using testing::kvec;
using testing::lattice;
using testing::unit;
using testing::W;

namespace {

std::vector<std::vector<Field::Elt>> entries(const MatFq& m) {
  std::vector<std::vector<Field::Elt>> out(m.rows(), std::vector<Field::Elt>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

}  // namespace

TEST_CASE("hankel examples") {
  const Field& F = Field::prime(2);
  using Rows = std::vector<std::vector<Field::Elt>>;
  CHECK(entries(hankel(parse_kelem(F, "x^-1"), 2, 2)) == Rows{{1, 0}, {0, 0}});
  auto e = hankel(parse_kelem(F, "x^-1"), 0, 2);
  CHECK(e.rows() == 0);
  CHECK(rank_fq(e) == 0);
  CHECK(hankel(parse_kelem(F, "x^-1"), -3, 2).rows() == 0);

  const Field& F5 = Field::prime(5);
  // a1, a2, a3 = 1, 2, 3
  CHECK(entries(hankel(parse_kelem(F5, "x^-1 + 2x^-2 + 3x^-3"), 2, 2)) == Rows{{1, 2}, {2, 3}});
  CHECK(entries(hankel(parse_kelem(F5, "x^-1 + 2x^-2 + 3x^-3 + 4x^-4"), 2, 3)) == Rows{{1, 2, 3}, {2, 3, 4}});

  auto trunc = parse_kelem(F, "{floor: -3, top: -1, coeffs: [1,1,0]}");
  CHECK(hankel(trunc, 2, 2).rows() == 2);
  try {
    hankel(trunc, 2, 3);
    FAIL("expected InsufficientPrecision");
  } catch (const InsufficientPrecision& ex) {
    CHECK(ex.required_floor() == -4);
  }
}

TEST_CASE("covrad_periodic examples") {
  auto scan = covrad_scan(W(), unit(Field::prime(2), 2));
  CHECK(scan.gamma == 1);
  CHECK(scan.radius == QExp(-2));

  const Field& F = Field::prime(3);
  auto R3 = PeriodicLattice::plain(Lattice::standard(F, 3));
  CHECK(covrad_periodic(R3, unit(F, 3)) == QExp(-1));
  auto L = lattice(F, {{"x", "0"}, {"0", "x^-1"}});
  CHECK(covrad_periodic(PeriodicLattice::plain(L), unit(F, 2)) == covrad_lattice(L, unit(F, 2)));
  CHECK_THROWS_AS(covrad_periodic(PeriodicLattice::coset(Lattice::standard(F, 2), {kvec(F, {"x^-1", "0"})},
                                                         Frame::Reduced),
                                  unit(F, 2)),
                  std::invalid_argument);
}

TEST_CASE("covrad_bounds examples") {
  const Field& F = Field::prime(2);
  auto b = covrad_bounds(Lattice::standard(F, 2), 1, unit(F, 2));
  CHECK(b.lower == -3);
  CHECK(b.upper == QExp(-1));
  auto b0 = covrad_bounds(Lattice::standard(F, 4), 0, unit(F, 4));
  CHECK(b0.lower == -2);
  CHECK(b0.upper == QExp(-1));
  // W: -3 <= -2 <= -1
  CHECK(b.lower <= -2);
  // fractional lower bound: e = (0, 0, 0), N = 1 gives max(2, 1, 2/3)
  auto b3 = covrad_bounds(Lattice::standard(F, 3), 1, unit(F, 3));
  CHECK(b3.lower == -3);
  auto L = lattice(F, {{"x^2", "0"}, {"0", "x^-1"}});
  auto bl = covrad_bounds(L, 2, unit(F, 2));
  // e = (-1, 2): i=1: 3-2 = 1, i=2: (3-1)/2 = 1
  CHECK(bl.lower == -2);
  CHECK(bl.upper == QExp(1));
}

namespace {

KVec random_alpha(const Field& F, std::mt19937_64& rng, std::size_t d, int depth) {
  KVec a;
  for (std::size_t i = 0; i < d; ++i) {
    RationalFunc r(F);
    for (int k = 1; k <= depth; ++k)
      r += RationalFunc::x_pow(F, -k).scaled(static_cast<Field::Elt>(rng() % F.q()));
    Poly den(F, {1, 1, 0, 1});
    r += RationalFunc(Poly::one(F), den).scaled(static_cast<Field::Elt>(1 + rng() % (F.q() - 1)));
    a.push_back(KElem(r));
  }
  return a;
}

}  // namespace

TEST_CASE("downward closure, bounds and locality on random alpha lattices") {
  std::mt19937_64 rng(17);
  int tested = 0;
  for (int t = 0; t < 120; ++t) {
    const Field& F = Field::prime(rng() % 2 ? 2 : 3);
    const std::size_t d = 2 + rng() % 2;
    const int N = static_cast<int>(rng() % 3);
    MatRat g = identity_rat(F, d);
    g(0, 0) = RationalFunc::x_pow(F, static_cast<int>(rng() % 3) - 1);
    g(d - 1, 0) = RationalFunc(Poly(F, {0, 1}));
    std::optional<PeriodicLattice> s;
    try {
      s = make_alpha_lattice(Lattice(g), random_alpha(F, rng, d, 4), N, Frame::Reduced);
    } catch (const NRational&) {
      continue;
    }
    ++tested;
    const auto C = unit(F, d);
    auto scan = covrad_scan(*s, C);
    bool seen_fail = false;
    for (auto [ell, holds] : scan.steps) {
      if (seen_fail) CHECK_FALSE(holds);
      if (!holds) seen_fail = true;
    }
    auto b = covrad_bounds(s->lattice(), N, C);
    CHECK(BigRational(scan.radius.exp()) >= b.lower);
    CHECK(scan.radius <= b.upper);
    CHECK(scan.radius <= covrad_lattice(s->lattice(), C));

    // perturbing alpha below the deepest coefficient the scan reads
    const auto e = reduce_lattice(s->lattice(), C).exps;
    const int need = scan.gamma + 1 + e.back() + N + 1;
    KVec moved;
    for (const auto& a : s->alpha())
      moved.push_back(KElem(a.rational() + RationalFunc::x_pow(F, -need - static_cast<int>(rng() % 3))));
    try {
      auto sm = make_alpha_lattice(s->lattice(), moved, N, Frame::Reduced);
      CHECK(covrad_periodic(sm, C) == scan.radius);
    } catch (const NRational&) {
    }
  }
  CHECK(tested > 60);
}
