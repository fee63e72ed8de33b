#include <doctest.h>

#include <algorithm>

#include "ffgeom/errors.hpp"
#include "ffgeom/oracle.hpp"
#include "ffgeom/periodic.hpp"
#include "ffgeom/verify.hpp"
#include "helpers.hpp"

using namespace ffgeom;
using testing::kvec;
using testing::lattice;
using testing::unit;
using testing::W;

TEST_CASE("make_alpha_lattice checks N-irrationality") {
  const Field& F = Field::prime(2);
  const auto R2 = Lattice::standard(F, 2);
  CHECK_NOTHROW(make_alpha_lattice(R2, kvec(F, {"1/(x^3+x+1)", "0"}), 1, Frame::Ambient));
  try {
    make_alpha_lattice(R2, kvec(F, {"1/x", "0"}), 1, Frame::Ambient);
    FAIL("expected NRational");
  } catch (const NRational& e) {
    CHECK(e.witness() == Poly::x(F));
  }
  try {
    make_alpha_lattice(R2, kvec(F, {"x^2+1", "x"}), 3, Frame::Ambient);
    FAIL("expected NRational");
  } catch (const NRational& e) {
    CHECK(e.witness().is_one());
  }
  // alpha is reduced into the fundamental domain
  auto s = make_alpha_lattice(R2, kvec(F, {"x + x^-1", "1 + x^-2"}), 1, Frame::Ambient);
  CHECK(s.alpha()[0].rational() == parse_element(F, "x^-1"));
  CHECK(s.period_size() == 2);
}

TEST_CASE("make_alpha_lattice with truncated alpha") {
  const Field& F = Field::prime(2);
  const auto R2 = Lattice::standard(F, 2);
  auto a = kvec(F, {"{floor: -8, top: -1, coeffs: [1,0,1,1,0,0,1,0]}", "{floor: -8, top: -1, coeffs: [0,1,0,0,1,1,1,1]}"});
  auto s = make_alpha_lattice(R2, a, 2, Frame::Reduced);
  CHECK_FALSE(s.is_exact());
  CHECK(succ_minima_periodic(s, unit(F, 2)).exps.size() == 2);
  // known only to x^-1 and zero there: x * alpha has no known digits
  auto b = kvec(F, {"{floor: -1, top: -1, coeffs: [0]}", "{floor: -1, top: -1, coeffs: [0]}"});
  CHECK_THROWS_AS(make_alpha_lattice(R2, b, 0, Frame::Reduced), InsufficientPrecision);
}

TEST_CASE("frac_orbit of W") {
  auto s = W();
  const Field& F = s.field();
  auto orbit = frac_orbit(s);
  REQUIRE(orbit.size() == 4);
  const char* expect[4][2] = {{"0", "0"}, {"x^-1", "x^-2"}, {"0", "x^-1"}, {"x^-1", "x^-1 + x^-2"}};
  for (int i = 0; i < 4; ++i) {
    CHECK(orbit[static_cast<std::size_t>(i)].Q == poly_from_index(F, static_cast<std::uint64_t>(i), 1));
    for (int j = 0; j < 2; ++j)
      CHECK(orbit[static_cast<std::size_t>(i)].coords[static_cast<std::size_t>(j)].rational() ==
            parse_element(F, expect[i][j]));
  }
  CHECK(orbit[0].norm.is_bottom());
  for (int i = 1; i < 4; ++i) CHECK(orbit[static_cast<std::size_t>(i)].norm == QExp(-1));

  auto plain = frac_orbit(PeriodicLattice::plain(Lattice::standard(F, 2)));
  REQUIRE(plain.size() == 1);
  CHECK(plain[0].norm.is_bottom());
}

TEST_CASE("successive minima examples") {
  auto s = W();
  const Field& F = s.field();
  auto m = succ_minima_periodic(s, unit(F, 2));
  CHECK(m.exps == std::vector<int>{-1, -1});
  CHECK(m.witnesses[0][0].rational() == parse_element(F, "x^-1"));
  CHECK(m.witnesses[0][1].rational() == parse_element(F, "x^-2"));
  CHECK(m.witnesses[1][0].rational().is_zero());
  CHECK(m.witnesses[1][1].rational() == parse_element(F, "x^-1"));

  CHECK(succ_minima_periodic(W(0), unit(F, 2)).exps == std::vector<int>{-1, 0});
  auto L = lattice(F, {{"x", "0"}, {"0", "x^-1"}});
  CHECK(succ_minima_periodic(PeriodicLattice::plain(L), unit(F, 2)).exps == std::vector<int>{-1, 1});
}

TEST_CASE("packing radius and density examples") {
  const Field& F = Field::prime(2);
  auto R2 = PeriodicLattice::plain(Lattice::standard(F, 2));
  CHECK(packing_radius(R2, unit(F, 2)) == QExp(-1));
  CHECK(packing_radius(W(), unit(F, 2)) == QExp(-2));
  auto xW = make_alpha_lattice(Lattice::standard(F, 2).scaled(1), kvec(F, {"1", "x^-1"}), 1, Frame::Ambient);
  CHECK(packing_radius(xW, unit(F, 2)) == QExp(-1));

  CHECK(packing_density(R2, unit(F, 2)) == 1);
  CHECK(packing_density(W(), unit(F, 2)) == 1);
  CHECK(packing_density(W(0), unit(F, 2)) == BigRational(1, 2));
}

TEST_CASE("count_points examples") {
  const Field& F = Field::prime(2);
  CHECK(count_points(PeriodicLattice::plain(Lattice::standard(F, 2)), unit(F, 2), 0) == 4);
  CHECK(count_points(PeriodicLattice::plain(Lattice::standard(Field::prime(3), 3)), unit(Field::prime(3), 3), 0) == 27);
  CHECK(count_points(W(), unit(F, 2), 0) == 16);
  CHECK(count_points(W(), unit(F, 2), 1) == 64);
}

TEST_CASE("minkowski_search") {
  const Field& F = Field::prime(2);
  auto r = minkowski_search(W(), ConvexBody::ball(F, 2, -1));
  CHECK(r.measure == QExp(-2));
  CHECK(r.weak_threshold == QExp(-4));
  REQUIRE(r.point.has_value());
  CHECK((*r.point)[0].rational() == parse_element(F, "x^-1"));
  CHECK((*r.point)[1].rational() == parse_element(F, "x^-2"));

  auto p = minkowski_search(PeriodicLattice::plain(Lattice::standard(F, 2)), ConvexBody::ball(F, 2, -1));
  CHECK(p.measure == QExp(-2));
  CHECK_FALSE(p.hypothesis);
  CHECK_FALSE(p.point.has_value());

  auto big = minkowski_search(W(), ConvexBody::ball(F, 2, 3));
  CHECK(big.hypothesis);
  CHECK(big.point.has_value());
}

TEST_CASE("the weaker measure threshold does not force a point") {
  // C = x^-2 O^2: the four cell points of W fall into four C-classes, so the
  // measure is 4/16 > det/q^{n+d} = 1/16, yet lambda_1 = q^-1 > q^-2.
  const Field& F = Field::prime(2);
  auto r = minkowski_search(W(), ConvexBody::ball(F, 2, -2));
  CHECK(r.measure == QExp(-2));
  CHECK(r.measure > r.weak_threshold);
  CHECK_FALSE(r.hypothesis);
  CHECK_FALSE(r.point.has_value());
}

TEST_CASE("d invariant and bounds") {
  const Field& F = Field::prime(2);
  CHECK(d_invariant(W(), unit(F, 2)) == QExp(-2));
  auto rep = check_bounds(W(), unit(F, 2));
  CHECK(rep.lambda1_ok);
  CHECK(rep.product_ok);
  CHECK(2 * rep.exps[0] == rep.log_det - rep.period - rep.log_volume);
  REQUIRE(rep.sandwich.has_value());
  // x * x^-1 = 1: the denominator condition fails on W, but the bounds still meet
  CHECK_FALSE(rep.sandwich->hypothesis);
  CHECK(rep.sandwich->evaluated);
  CHECK(rep.sandwich->holds);
  CHECK(rep.sandwich->lower == -2);
  CHECK(rep.sandwich->upper == -2);
  CHECK(rep.sandwich->ok);

  // alpha_1 = alpha_2: every 2x2 determinant vanishes
  auto same = make_alpha_lattice(Lattice::standard(F, 2), kvec(F, {"1/(x^2+x+1)", "1/(x^2+x+1)"}), 1,
                                 Frame::Reduced);
  CHECK(d_invariant(same, unit(F, 2)) == QExp(-2));
  auto sr = check_bounds(same, unit(F, 2));
  CHECK(sr.sandwich->hypothesis);
  CHECK(sr.sandwich->holds);

  auto plain = check_bounds(PeriodicLattice::plain(Lattice::standard(F, 3)), unit(F, 3));
  CHECK(plain.ok());
  CHECK_FALSE(plain.sandwich.has_value());
}

TEST_CASE("coset form") {
  const Field& F = Field::prime(3);
  const auto R2 = Lattice::standard(F, 2);
  auto s = PeriodicLattice::coset(R2, {kvec(F, {"x^-1", "0"}), kvec(F, {"0", "x^-2"})}, Frame::Reduced);
  CHECK(s.period_size() == 2);
  CHECK(succ_minima_periodic(s, unit(F, 2)).exps == std::vector<int>{-2, -1});
  CHECK(count_points(s, unit(F, 2), 0) == 9 * 9);
  CHECK_THROWS(PeriodicLattice::coset(R2, {kvec(F, {"x^-1", "0"}), kvec(F, {"2x^-1", "0"})}, Frame::Reduced));
  CHECK_THROWS(PeriodicLattice::coset(R2, {kvec(F, {"1", "0"})}, Frame::Reduced));
}

TEST_CASE("packing radius is maximal and minima are monotone in N") {
  Sampler rs(3);
  for (int t = 0; t < 40; ++t) {
    const Field& F = Field::prime(t % 2 ? 2 : 3);
    Lattice l(rs.matrix(F, 2, -1, 1));
    ConvexBody C = t % 3 ? ConvexBody::identity(F, 2) : ConvexBody(rs.matrix(F, 2, -1, 0));
    const int N = t % 3;
    auto s = rs.alpha_lattice(l, N);
    const int r = packing_radius(s, C).exp();

    // translates of x^r C around distinct points are disjoint, those of x^{r+1} C are not
    auto pts = enumerate_points(s, C, r + 1);
    QExp closest;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        KVec diff;
        for (std::size_t k = 0; k < 2; ++k) diff.push_back(KElem(pts[i][k] - pts[j][k]));
        QExp n = norm_in_body(diff, C);
        if (closest.is_bottom() || n < closest) closest = n;
      }
    CHECK(closest > QExp(r));
    CHECK(closest <= QExp(r + 1));

    // a larger N adds points: no minimum grows
    try {
      auto bigger = make_alpha_lattice(l, s.alpha(), N + 1, Frame::Reduced);
      auto a = succ_minima_periodic(s, C).exps, b = succ_minima_periodic(bigger, C).exps;
      for (std::size_t i = 0; i < a.size(); ++i) CHECK(b[i] <= a[i]);
    } catch (const NRational&) {
    }
  }
}

TEST_CASE("truncated alpha gives the exact minima") {
  // frac(x alpha) = x frac(alpha) when frac(alpha) starts at x^-2; such exact
  // dependences must not surface as precision errors
  Sampler rs(5);
  for (int t = 0; t < 120; ++t) {
    const Field& F = Field::of_order(std::vector<std::uint32_t>{2, 3, 4}[t % 3]);
    const std::size_t d = t % 4 < 2 ? 2 : 3;
    const int N = t % 3;
    Lattice l(rs.matrix(F, d, -1, 1));
    ConvexBody C = t % 2 ? ConvexBody::identity(F, d) : ConvexBody(rs.matrix(F, d, -1, 0));
    auto s = rs.alpha_lattice(l, N);
    // a coordinate with Q alpha_i polynomial hides an exact zero that no
    // truncation can certify; those inputs raise InsufficientPrecision
    if (std::any_of(s.alpha().begin(), s.alpha().end(),
                    [&](const KElem& a) { return a.rational().den().deg() <= N; }))
      continue;
    KVec cut;
    for (const auto& a : s.alpha()) cut.push_back(KElem(expand_rational(a.rational(), -40).truncated(-40)));
    auto tr = make_alpha_lattice(l, cut, N, Frame::Reduced);
    REQUIRE_FALSE(tr.is_exact());
    CHECK(succ_minima_periodic(tr, C).exps == succ_minima_periodic(s, C).exps);
  }
  const Field& F4 = Field::of_order(4);
  auto s = make_alpha_lattice(Lattice::standard(F4, 2),
                              {KElem(expand_rational(parse_element(F4, "x^-1"), -30).truncated(-30)),
                               KElem(expand_rational(parse_element(F4, "(x+1)/(x^3+x+1)"), -30).truncated(-30))},
                              1, Frame::Ambient);
  CHECK(succ_minima_periodic(s, unit(F4, 2)).exps ==
        succ_minima_periodic(make_alpha_lattice(Lattice::standard(F4, 2), kvec(F4, {"x^-1", "(x+1)/(x^3+x+1)"}), 1,
                                                Frame::Ambient),
                             unit(F4, 2))
            .exps);
}
