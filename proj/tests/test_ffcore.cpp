#include <doctest.h>

#include <random>

#include "ffgeom/errors.hpp"
#include "ffgeom/kelem.hpp"
#include "ffgeom/parse.hpp"
#include "ffgeom/series.hpp"

using namespace ffgeom;

namespace {

RationalFunc el(const Field& F, const char* s) { return parse_element(F, s); }

Poly random_poly(const Field& F, std::mt19937_64& rng, int maxdeg) {
  std::vector<Field::Elt> c(static_cast<std::size_t>(maxdeg + 1));
  for (auto& v : c) v = static_cast<Field::Elt>(rng() % F.q());
  return Poly(F, c);
}

}  // namespace

TEST_CASE("field axioms hold exhaustively for small q") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 8u, 9u}) {
    CAPTURE(q);
    const Field& F = Field::of_order(q);
    CHECK(F.q() == q);
    bool ok = true;
    for (Field::Elt a = 0; a < q; ++a) {
      ok &= F.add(a, 0) == a && F.mul(a, 1) == a && F.add(a, F.neg(a)) == 0;
      if (a) ok &= F.mul(a, F.inv(a)) == 1;
      for (Field::Elt b = 0; b < q; ++b) {
        ok &= F.add(a, b) == F.add(b, a) && F.mul(a, b) == F.mul(b, a);
        ok &= F.sub(F.add(a, b), b) == a;
        for (Field::Elt c = 0; c < q; ++c) {
          ok &= F.add(F.add(a, b), c) == F.add(a, F.add(b, c));
          ok &= F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c));
          ok &= F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c));
        }
      }
    }
    CHECK(ok);
    // the multiplicative group is cyclic of order q-1
    for (Field::Elt a = 1; a < q; ++a) CHECK(F.pow(a, q - 1) == 1);
  }
}

TEST_CASE("field construction validates its input") {
  CHECK_THROWS(Field::prime(4));
  CHECK_THROWS(Field::prime(19));
  CHECK_THROWS(Field::extension(2, {1, 0, 1}));  // t^2+1 = (t+1)^2
  CHECK_NOTHROW(Field::extension(2, {1, 1, 1}));
  CHECK(&Field::extension(2, {1, 1, 1}) == &Field::of_order(4));
  CHECK_THROWS(Field::of_order(6));
  CHECK_THROWS(Field::of_order(1u << 17));
}

TEST_CASE("abs_value reads off degrees") {
  const Field& F = Field::prime(2);
  CHECK(abs_value(el(F, "x^2+1")) == QExp(2));
  CHECK(abs_value(el(F, "1/(x^3+x+1)")) == QExp(-3));
  CHECK(abs_value(RationalFunc(F)).is_bottom());
  CHECK(QExp() < QExp(-1000));
}

TEST_CASE("ultrametric inequality on sampled pairs") {
  std::mt19937_64 rng(11);
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const Field& F = Field::of_order(q);
    for (int it = 0; it < 300; ++it) {
      RationalFunc a(random_poly(F, rng, 4), random_poly(F, rng, 3) + Poly::monomial(F, 1, 4));
      RationalFunc b(random_poly(F, rng, 5), random_poly(F, rng, 2) + Poly::monomial(F, 1, 3));
      CHECK((a * b).abs() == a.abs() * b.abs());
      CHECK((a + b).abs() <= max(a.abs(), b.abs()));
      if (a.abs() != b.abs()) CHECK((a + b).abs() == max(a.abs(), b.abs()));
    }
  }
}

TEST_CASE("rational functions are canonical") {
  const Field& F = Field::prime(3);
  RationalFunc a(Poly(F, {2, 2}), Poly(F, {1, 1}));  // (2x+2)/(x+1) = 2
  CHECK(a == RationalFunc::constant(F, 2));
  RationalFunc b(Poly(F, {0, 1}), Poly(F, {0, 2}));
  CHECK(b == RationalFunc::constant(F, 2));  // x/(2x) = 1/2 = 2 mod 3
  CHECK(b.den().is_one());
  CHECK_THROWS(RationalFunc(Poly::one(F), Poly(F)));
}

TEST_CASE("expand_rational examples") {
  const Field& F = Field::prime(2);
  auto s1 = expand_rational(el(F, "x/x"), -5);
  CHECK(s1.exact());
  CHECK(s1.top() == 0);
  CHECK(s1.coeff(0) == 1);
  CHECK(s1.coeff(-3) == 0);

  auto s2 = expand_rational(el(F, "1/x"), -3);
  CHECK(s2.exact());
  CHECK(s2.top() == -1);

  // Frozen by an independent recurrence: 1/(1+y^2+y^3), y = 1/x.
  auto s3 = expand_rational(el(F, "1/(x^3+x+1)"), -12);
  CHECK_FALSE(s3.exact());
  CHECK(s3.floor() == -12);
  const int expect[] = {1, 0, 1, 1, 1, 0, 0, 1, 0, 1};
  for (int i = 0; i < 10; ++i) CHECK(s3.coeff(-3 - i) == static_cast<Field::Elt>(expect[i]));
  CHECK_THROWS_AS(s3.coeff(-13), InsufficientPrecision);
}

TEST_CASE("expand_rational multiplied back by the denominator reproduces the numerator") {
  std::mt19937_64 rng(5);
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const Field& F = Field::of_order(q);
    for (int it = 0; it < 100; ++it) {
      Poly den = random_poly(F, rng, 3) + Poly::monomial(F, 1, 4);
      Poly num = random_poly(F, rng, 6);
      RationalFunc f(num, den);
      const int floor = -10;
      auto s = expand_rational(f, floor);
      auto back = s * LaurentSeries::from_laurent(RationalFunc(f.den()));
      // known down to floor + deg den
      for (int e = back.top(); e >= back.floor(); --e) CHECK(back.coeff(e) == f.num().coeff(e));
      if (!s.exact()) CHECK(back.floor() <= floor + f.den().deg());
      // deeper expansions agree on the shared range
      auto deeper = expand_rational(f, floor - 7);
      for (int e = s.top(); e >= floor; --e) CHECK(deeper.coeff(e) == s.coeff(e));
    }
  }
}

TEST_CASE("frac_part") {
  const Field& F = Field::prime(2);
  auto s = LaurentSeries::from_laurent(el(F, "x^2 + 1 + x^-1"));
  auto f = frac_part(s);
  CHECK(f.is_exact_zero() == false);
  CHECK(f.to_rational().value() == el(F, "x^-1"));
  CHECK(frac_part(LaurentSeries::from_laurent(el(F, "x^3+x"))).is_exact_zero());

  auto g = frac_part(expand_rational(el(F, "(x^3+1)/(x^3+x+1)"), -15));
  auto h = expand_rational(el(F, "x/(x^3+x+1)"), -15);  // (x^3+1) = 1*(x^3+x+1) + x
  for (int e = -1; e >= -15; --e) CHECK(g.coeff(e) == h.coeff(e));
  CHECK(el(F, "(x^3+1)/(x^3+x+1)").frac_part() == el(F, "x/(x^3+x+1)"));
}

TEST_CASE("frac_part is linear and idempotent") {
  std::mt19937_64 rng(9);
  const Field& F = Field::prime(3);
  for (int it = 0; it < 100; ++it) {
    RationalFunc a(random_poly(F, rng, 5), random_poly(F, rng, 2) + Poly::monomial(F, 1, 3));
    RationalFunc b(random_poly(F, rng, 5), random_poly(F, rng, 2) + Poly::monomial(F, 1, 3));
    auto sa = expand_rational(a, -9), sb = expand_rational(b, -9);
    Field::Elt c = static_cast<Field::Elt>(rng() % 3);
    auto lhs = frac_part(sa.scaled(c) + sb);
    auto rhs = frac_part(sa).scaled(c) + frac_part(sb);
    CHECK(lhs == rhs);
    CHECK(frac_part(frac_part(sa)) == frac_part(sa));
    CHECK((a.scaled(c) + b).frac_part() == a.frac_part().scaled(c) + b.frac_part());
  }
}

TEST_CASE("series arithmetic tracks precision") {
  const Field& F = Field::prime(2);
  LaurentSeries a(F, -1, {1, 0, 0, 0, 0}, -5, false);
  auto z = a + a;
  CHECK(z.known_zero());
  CHECK(z.floor() == -5);
  CHECK_THROWS_AS(z.abs(), InsufficientPrecision);

  auto p = LaurentSeries::from_laurent(el(F, "x")) * LaurentSeries::from_laurent(el(F, "x^-1 + x^-2"));
  CHECK(p.exact());
  CHECK(p.to_rational().value() == el(F, "1 + x^-1"));

  LaurentSeries u(F, 0, {1, 1, 0, 1}, -3, false);
  LaurentSeries v(F, 2, {1}, 2, true);
  CHECK((u * v).floor() == -1);
  LaurentSeries w(F, 2, {1, 0, 1}, 0, false);
  CHECK((u * w).floor() == std::max(-3 + 2, 0 + 0));
  CHECK((u + w).floor() == 0);
  CHECK((u + v).floor() == -3);
}

TEST_CASE("mixed KElem arithmetic is limited by the series operand only") {
  const Field& F = Field::prime(3);
  RationalFunc r = el(F, "1/(x^2+1)");
  LaurentSeries s = expand_rational(el(F, "(x+2)/(x^3+x+1)"), -10);
  KElem prod = KElem(r) * KElem(s);
  auto exact = expand_rational(r * el(F, "(x+2)/(x^3+x+1)"), -30);
  const auto& ps = prod.series();
  CHECK(ps.floor() == -12);  // s known to x^-10, |r| = q^-2
  for (int e = ps.top(); e >= ps.floor(); --e) CHECK(ps.coeff(e) == exact.coeff(e));
}

TEST_CASE("element grammar") {
  const Field& F4 = Field::of_order(4);
  auto a = parse_element(F4, "x^2 + (t+1)*x + 1");
  CHECK(a.num().deg() == 2);
  CHECK(a.num().coeff(1) == F4.add(F4.gen(), 1));
  CHECK(format(a) == "x^2 + (t + 1)*x + 1");
  CHECK(parse_element(F4, format(a)) == a);

  const Field& F2 = Field::prime(2);
  CHECK(format(el(F2, "x^-1 + x^-2")) == "x^-1 + x^-2");
  CHECK(format(el(F2, "1/(x^3+x+1)")) == "1 / (x^3 + x + 1)");
  CHECK(el(F2, "(x+1)^2") == el(F2, "x^2+1"));
  CHECK(el(F2, "2x") == RationalFunc(F2));
  CHECK(el(Field::prime(5), "7") == RationalFunc::constant(Field::prime(5), 2));
  CHECK_THROWS_AS(el(F2, "x +"), ParseError);
  CHECK_THROWS_AS(el(F2, "t"), ParseError);
  CHECK_THROWS_AS(el(F2, "1/0"), ParseError);
  CHECK_THROWS_AS(el(F2, "x^y"), ParseError);

  auto s = parse_series_literal(F2, "{floor: -12, top: -1, coeffs: [1,0,0,0,0,0,0,0,0,0,0,1]}");
  CHECK(s.floor() == -12);
  CHECK(s.coeff(-12) == 1);
  CHECK_FALSE(s.exact());
  CHECK(parse_series_literal(F2, format(s)) == s);
  CHECK(parse_kelem(F2, "{floor: -3, coeffs: [1, 1], exact: true}").is_exact());
  CHECK_THROWS_AS(parse_series_literal(F2, "{floor: -3, top: -1, coeffs: [1]}"), ParseError);
  CHECK(parse_modulus(3, "t^2+1") == std::vector<std::uint32_t>{1, 0, 1});
}
