#include "ffgeom/kelem.hpp"

#include <algorithm>

#include "ffgeom/errors.hpp"

namespace ffgeom {

KElem::KElem(LaurentSeries s) : v_(s) {
  if (auto r = s.to_rational()) v_ = std::move(*r);
}

const Field& KElem::field() const noexcept {
  return std::visit([](const auto& x) -> const Field& { return x.field(); }, v_);
}

QExp KElem::abs() const { return is_exact() ? rational().abs() : series().abs(); }

Field::Elt KElem::coeff(int e) const {
  if (is_exact()) return expand_rational(rational(), e).coeff(e);
  return series().coeff(e);
}

LaurentSeries KElem::to_series(int floor) const {
  if (is_exact()) return expand_rational(rational(), floor);
  return series();
}

KElem KElem::frac() const {
  if (is_exact()) return rational().frac_part();
  return frac_part(series());
}

KElem KElem::operator-() const {
  if (is_exact()) return -rational();
  return -series();
}

KElem KElem::operator+(const KElem& o) const {
  if (is_exact() && o.is_exact()) return rational() + o.rational();
  if (is_exact()) return expand_rational(rational(), o.series().floor()) + o.series();
  if (o.is_exact()) return series() + expand_rational(o.rational(), series().floor());
  return series() + o.series();
}

KElem KElem::operator-(const KElem& o) const { return *this + (-o); }

namespace {

// r * s with r exact: expand r so its truncation does not limit the product.
LaurentSeries mul_mixed(const RationalFunc& r, const LaurentSeries& s) {
  if (r.is_zero()) return LaurentSeries::exact_zero(r.field());
  const int tr = r.abs().exp();
  const int floor = s.floor() + tr - s.top();
  return expand_rational(r, std::min(floor, tr)) * s;
}

}  // namespace

KElem KElem::operator*(const KElem& o) const {
  if (is_exact() && o.is_exact()) return rational() * o.rational();
  if (is_exact()) return mul_mixed(rational(), o.series());
  if (o.is_exact()) return mul_mixed(o.rational(), series());
  return series() * o.series();
}

KElem KElem::scaled(Field::Elt c) const {
  if (is_exact()) return rational().scaled(c);
  return series().scaled(c);
}

KElem KElem::times_poly(const Poly& p) const {
  if (is_exact()) return rational().times_poly(p);
  return *this * KElem(p);
}

QExp sup_norm(const KVec& v) { return sup_norm(v, std::vector<int>(v.size(), 0)); }

QExp sup_norm(const KVec& v, const std::vector<int>& shifts) {
  // A series known to vanish down to its floor f is bounded by q^(f-1); the
  // max is still determined when a known entry beats every such bound.
  QExp m, bound;
  int need = InsufficientPrecision::kUnknownFloor;
  bool open = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const KElem& x = v[i];
    if (x.is_exact() || !x.series().known_zero()) {
      m = max(m, x.abs().shifted(shifts[i]));
      continue;
    }
    open = true;
    bound = max(bound, QExp(x.series().floor() - 1 + shifts[i]));
    need = std::min(need, x.series().floor() - 1);
  }
  if (open && !(m > bound))
    throw InsufficientPrecision("entries vanish down to their precision floor; the norm is undetermined", need);
  return m;
}

}  // namespace ffgeom
