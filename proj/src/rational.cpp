#include "ffgeom/rational.hpp"

#include <stdexcept>

namespace ffgeom {

RationalFunc::RationalFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::one(num_.field());
    return;
  }
  if (!den_.is_one()) {
    Poly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    const auto l = den_.lead();
    if (l != 1) {
      const auto li = num_.field().inv(l);
      num_ = num_.scaled(li);
      den_ = den_.scaled(li);
    }
  }
}

RationalFunc RationalFunc::x_pow(const Field& f, int k) {
  if (k >= 0) return {Poly::monomial(f, 1, k)};
  return {Poly::one(f), Poly::monomial(f, 1, -k), NoNormalize{}};
}

bool RationalFunc::is_laurent_poly() const noexcept {
  const auto& c = den_.coeffs();
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (c[i]) return false;
  return true;
}

QExp RationalFunc::abs() const {
  if (num_.is_zero()) return QExp::bottom();
  return QExp(num_.deg() - den_.deg());
}

RationalFunc RationalFunc::frac_part() const {
  if (den_.is_one()) return RationalFunc(field());
  return {num_ % den_, den_, NoNormalize{}};
}

RationalFunc RationalFunc::operator-() const { return {-num_, den_, NoNormalize{}}; }

RationalFunc RationalFunc::operator+(const RationalFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return {num_ + o.num_, den_};
  return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}

RationalFunc RationalFunc::operator-(const RationalFunc& o) const { return *this + (-o); }

RationalFunc RationalFunc::operator*(const RationalFunc& o) const {
  if (is_zero() || o.is_zero()) return RationalFunc(field());
  if (den_.is_one() && o.den_.is_one()) return {num_ * o.num_, den_, NoNormalize{}};
  // Cross-cancel before multiplying.
  Poly g1 = gcd(num_, o.den_);
  Poly g2 = gcd(o.num_, den_);
  Poly n = (num_ / g1) * (o.num_ / g2);
  Poly d = (den_ / g2) * (o.den_ / g1);
  return {std::move(n), std::move(d)};
}

RationalFunc RationalFunc::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational function");
  return {den_, num_};
}

RationalFunc RationalFunc::operator/(const RationalFunc& o) const { return *this * o.inverse(); }

RationalFunc RationalFunc::scaled(Field::Elt c) const {
  if (c == 0) return RationalFunc(field());
  return {num_.scaled(c), den_, NoNormalize{}};
}

RationalFunc RationalFunc::times_poly(const Poly& p) const { return *this * RationalFunc(p); }

}  // namespace ffgeom
