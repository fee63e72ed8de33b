#include <doctest.h>

#include <random>

#include "ffgeom/errors.hpp"
#include "ffgeom/matrix.hpp"
#include "ffgeom/parse.hpp"

using namespace ffgeom;

namespace {

MatPoly polymat(const Field& F, std::vector<std::vector<const char*>> rows) {
  MatPoly m(rows.size(), rows[0].size(), Poly(F));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = parse_element(F, rows[i][j]).num();
  return m;
}

MatRat ratmat(const Field& F, std::vector<std::vector<const char*>> rows) {
  MatRat m(rows.size(), rows[0].size(), RationalFunc(F));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = parse_element(F, rows[i][j]);
  return m;
}

MatPoly random_polymat(const Field& F, std::mt19937_64& rng, std::size_t n, int maxdeg) {
  MatPoly m(n, n, Poly(F));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Field::Elt> c(static_cast<std::size_t>(rng() % static_cast<unsigned>(maxdeg + 1)) + 1);
      for (auto& v : c) v = static_cast<Field::Elt>(rng() % F.q());
      m(i, j) = Poly(F, c);
    }
  return m;
}

}  // namespace

TEST_CASE("rank_fq examples") {
  const Field& F = Field::prime(2);
  MatFq a(F, 2, 2);
  a(0, 0) = a(1, 1) = 1;
  CHECK(rank_fq(a) == 2);
  CHECK(rank_fq(MatFq(F, 3, 2)) == 0);
  MatFq b(F, 2, 2);
  b(0, 0) = b(1, 0) = 1;
  CHECK(rank_fq(b) == 1);
  CHECK(rank_fq(MatFq(F, 0, 4)) == 0);
  CHECK(rank_fq(MatFq(F, 4, 0)) == 0);
}

TEST_CASE("rank_fq is transpose invariant and kernels are kernels") {
  std::mt19937_64 rng(3);
  for (std::uint32_t q : {2u, 3u, 4u, 9u}) {
    const Field& F = Field::of_order(q);
    for (int it = 0; it < 200; ++it) {
      const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
      MatFq m(F, r, c);
      // low-rank-ish: many zeros
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rng() % 3 ? static_cast<Field::Elt>(rng() % q) : 0;
      const auto rk = rank_fq(m);
      CHECK(rk == rank_fq(m.transposed()));
      CHECK(rk <= std::min(r, c));
      auto k = kernel_vector(m);
      CHECK(k.has_value() == (rk < c));
      if (k) {
        for (std::size_t i = 0; i < r; ++i) {
          Field::Elt s = 0;
          for (std::size_t j = 0; j < c; ++j) s = F.add(s, F.mul(m(i, j), (*k)[j]));
          CHECK(s == 0);
        }
      }
    }
  }
}

TEST_CASE("det_poly examples") {
  const Field& F = Field::prime(2);
  CHECK(det_poly(polymat(F, {{"x", "0"}, {"0", "x"}})) == parse_element(F, "x^2").num());
  CHECK(det_poly(polymat(F, {{"x", "x+1"}, {"1", "1"}})).is_one());
  CHECK(det_poly(polymat(F, {{"x", "x^2"}, {"1", "x"}})).is_zero());
  const Field& F3 = Field::prime(3);
  // needs a row swap
  CHECK(det_poly(polymat(F3, {{"0", "1"}, {"1", "0"}})) == Poly::constant(F3, 2));
}

TEST_CASE("det_poly agrees with cofactor expansion") {
  std::mt19937_64 rng(17);
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const Field& F = Field::of_order(q);
    for (int it = 0; it < 60; ++it) {
      const std::size_t n = 2 + rng() % 3;
      MatPoly m = random_polymat(F, rng, n, 2);
      MatK mk(n, n, KElem::zero(F));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mk(i, j) = KElem(m(i, j));
      CHECK(KElem(det_poly(m)).rational() == det_k(mk).rational());
    }
  }
}

TEST_CASE("popov_reduce examples") {
  const Field& F = Field::prime(2);
  auto r1 = popov_reduce(polymat(F, {{"x^2", "0"}, {"0", "x"}}));
  CHECK(r1.degrees == std::vector<int>{1, 2});
  CHECK(r1.reduced(1, 0) == Poly::x(F));
  auto r2 = popov_reduce(polymat(F, {{"x", "x+1"}, {"1", "1"}}));
  CHECK(r2.degrees == std::vector<int>{0, 0});
  CHECK_THROWS_AS(popov_reduce(polymat(F, {{"x", "x^2"}, {"1", "x"}})), SingularInput);
}

TEST_CASE("popov_reduce postconditions on random matrices") {
  std::mt19937_64 rng(23);
  int tested = 0;
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const Field& F = Field::of_order(q);
    for (int it = 0; it < 80; ++it) {
      const std::size_t n = 2 + rng() % 3;
      MatPoly m = random_polymat(F, rng, n, 3);
      Poly dm = det_poly(m);
      if (dm.is_zero()) continue;
      ++tested;
      auto res = popov_reduce(m);
      CHECK(det_poly(res.transform).deg() == 0);
      CHECK(m * res.transform == res.reduced);
      int sum = 0;
      for (int d : res.degrees) sum += d;
      CHECK(sum == dm.deg());
      CHECK(std::is_sorted(res.degrees.begin(), res.degrees.end()));
      MatFq lead(F, n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) lead(i, j) = res.reduced(i, j).coeff(res.degrees[j]);
      CHECK(rank_fq(lead) == n);
    }
  }
  CHECK(tested > 100);
}

TEST_CASE("rank_rational") {
  const Field& F = Field::prime(2);
  CHECK(rank_rational(identity_rat(F, 3)) == 3);
  CHECK(rank_rational(ratmat(F, {{"x", "x^2"}, {"1/x", "1"}})) == 1);
  CHECK(rank_rational(ratmat(F, {{"1/x", "0"}, {"x^-2", "x^-1"}})) == 2);
  CHECK(rank_rational(ratmat(F, {{"1/(x+1)", "x/(x+1)", "1"}, {"1", "x", "x+1"}})) == 1);
  CHECK(rank_rational(ratmat(F, {{"1", "0", "1"}, {"0", "1", "1"}, {"1", "1", "0"}})) == 2);

  RationalSpan span(2);
  CHECK(span.add({parse_element(F, "1/x"), parse_element(F, "1")}));
  CHECK_FALSE(span.add({parse_element(F, "1"), parse_element(F, "x")}));
  CHECK(span.add({parse_element(F, "1"), parse_element(F, "0")}));
  CHECK(span.rank() == 2);
}

TEST_CASE("inverse and adjugate") {
  std::mt19937_64 rng(31);
  const Field& F = Field::prime(3);
  for (int it = 0; it < 40; ++it) {
    const std::size_t n = 2 + rng() % 2;
    MatPoly m = random_polymat(F, rng, n, 2);
    if (det_poly(m).is_zero()) continue;
    MatRat r = to_rat(m);
    CHECK(r * inverse(r) == identity_rat(F, n));
  }
  CHECK_THROWS_AS(inverse(ratmat(F, {{"1", "1"}, {"1", "1"}})), SingularInput);
}
