#include "ffgeom/series.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "ffgeom/errors.hpp"

namespace ffgeom {

LaurentSeries::LaurentSeries(const Field& f, int top, std::vector<Elt> coeffs, int floor, bool exact)
    : F_(&f), top_(top), floor_(floor), c_(std::move(coeffs)), exact_(exact) {
  if (floor_ > top_ + 1) throw std::invalid_argument("series floor above top+1");
  if (static_cast<int>(c_.size()) != top_ - floor_ + 1)
    throw std::invalid_argument("series coefficient count must be top-floor+1, got " +
                                std::to_string(c_.size()));
  normalize();
}

LaurentSeries LaurentSeries::zero(const Field& f, int floor) { return {f, floor - 1, {}, floor, false}; }

LaurentSeries LaurentSeries::exact_zero(const Field& f) { return {f, -1, {}, 0, true}; }

LaurentSeries LaurentSeries::from_laurent(const RationalFunc& f) {
  if (!f.is_laurent_poly()) throw std::invalid_argument("not a Laurent polynomial");
  if (f.is_zero()) return exact_zero(f.field());
  const int shift = f.den().deg();
  const auto& n = f.num().coeffs();
  std::vector<Elt> c(n.rbegin(), n.rend());
  return {f.field(), f.num().deg() - shift, std::move(c), -shift, true};
}

void LaurentSeries::normalize() {
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    top_ -= static_cast<int>(lead);
  }
  if (exact_) {
    while (!c_.empty() && c_.back() == 0) {
      c_.pop_back();
      ++floor_;
    }
    if (c_.empty()) {
      top_ = -1;
      floor_ = 0;
    }
  }
}

LaurentSeries::Elt LaurentSeries::coeff(int e) const {
  if (e > top_) return 0;
  if (e >= floor_) return c_[static_cast<std::size_t>(top_ - e)];
  if (exact_) return 0;
  throw InsufficientPrecision("coefficient of x^" + std::to_string(e) +
                                  " is below the known precision floor " + std::to_string(floor_),
                              e);
}

QExp LaurentSeries::abs() const {
  if (!known_zero()) return QExp(top_);
  if (exact_) return QExp::bottom();
  throw InsufficientPrecision("series vanishes down to its precision floor " +
                                  std::to_string(floor_) + "; its absolute value is undetermined",
                              floor_ - 1);
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& v : r.c_) v = F_->neg(v);
  return r;
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
  const bool ex = exact_ && o.exact_;
  int fl;
  if (ex) {
    fl = std::min(floor_, o.floor_);
  } else if (exact_) {
    fl = o.floor_;
  } else if (o.exact_) {
    fl = floor_;
  } else {
    fl = std::max(floor_, o.floor_);
  }
  const int tp = std::max({top_, o.top_, fl - 1});
  std::vector<Elt> c(static_cast<std::size_t>(tp - fl + 1));
  for (int e = tp; e >= fl; --e) c[static_cast<std::size_t>(tp - e)] = F_->add(coeff(e), o.coeff(e));
  return {*F_, tp, std::move(c), fl, ex};
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + (-o); }

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
  if (is_exact_zero() || o.is_exact_zero()) return exact_zero(*F_);
  const bool ex = exact_ && o.exact_;
  int fl;
  if (ex) {
    fl = floor_ + o.floor_;
  } else {
    // Unknown tails contribute only at exponents below floor_a + top_b (resp. floor_b + top_a).
    fl = std::numeric_limits<int>::min() / 4;
    if (!exact_) fl = std::max(fl, floor_ + o.top_);
    if (!o.exact_) fl = std::max(fl, o.floor_ + top_);
  }
  const int tp = std::max(top_ + o.top_, fl - 1);
  std::vector<Elt> c(static_cast<std::size_t>(tp - fl + 1), 0);
  for (int i = top_; i >= floor_; --i) {
    const Elt a = c_[static_cast<std::size_t>(top_ - i)];
    if (!a) continue;
    for (int j = o.top_; j >= o.floor_; --j) {
      const int e = i + j;
      if (e < fl) break;
      const Elt b = o.c_[static_cast<std::size_t>(o.top_ - j)];
      if (b) c[static_cast<std::size_t>(tp - e)] = F_->add(c[static_cast<std::size_t>(tp - e)], F_->mul(a, b));
    }
  }
  return {*F_, tp, std::move(c), fl, ex};
}

LaurentSeries LaurentSeries::scaled(Elt c) const {
  if (c == 0) return exact_ ? exact_zero(*F_) : zero(*F_, floor_);
  LaurentSeries r = *this;
  for (auto& v : r.c_) v = F_->mul(v, c);
  return r;
}

LaurentSeries LaurentSeries::shifted(int k) const {
  if (is_exact_zero()) return *this;
  LaurentSeries r = *this;
  r.top_ += k;
  r.floor_ += k;
  return r;
}

LaurentSeries LaurentSeries::truncated(int floor) const {
  if (!exact_ && floor <= floor_) return *this;
  const int tp = std::max(top_, floor - 1);
  std::vector<Elt> c(static_cast<std::size_t>(tp - floor + 1));
  for (int e = tp; e >= floor; --e) c[static_cast<std::size_t>(tp - e)] = coeff(e);
  return {*F_, tp, std::move(c), floor, false};
}

std::optional<RationalFunc> LaurentSeries::to_rational() const {
  if (!exact_) return std::nullopt;
  if (known_zero()) return RationalFunc(*F_);
  // Value = x^{floor} * sum c_e x^{e - floor}.
  std::vector<Elt> n(static_cast<std::size_t>(top_ - floor_ + 1));
  for (int e = floor_; e <= top_; ++e) n[static_cast<std::size_t>(e - floor_)] = coeff(e);
  return RationalFunc(Poly(*F_, std::move(n))) * RationalFunc::x_pow(*F_, floor_);
}

bool LaurentSeries::operator==(const LaurentSeries& o) const noexcept {
  return F_ == o.F_ && top_ == o.top_ && floor_ == o.floor_ && exact_ == o.exact_ && c_ == o.c_;
}

LaurentSeries expand_rational(const RationalFunc& f, int floor) {
  const Field& F = f.field();
  if (f.is_zero()) return LaurentSeries::exact_zero(F);
  const Poly& n = f.num();
  const Poly& d = f.den();
  const int a = n.deg();
  const int b = d.deg();
  const int top = a - b;
  if (top < floor) return LaurentSeries::zero(F, floor);
  // Remainder r indexed by exponent - base; covers exponents base..a.
  const int base = std::min(floor, 0);
  std::vector<Field::Elt> r(static_cast<std::size_t>(a - base + 1), 0);
  for (int e = 0; e <= a; ++e) r[static_cast<std::size_t>(e - base)] = n.coeff(e);
  const Field::Elt linv = F.inv(d.lead());
  std::vector<Field::Elt> c(static_cast<std::size_t>(top - floor + 1), 0);
  for (int e = top; e >= floor; --e) {
    const Field::Elt ce = F.mul(r[static_cast<std::size_t>(e + b - base)], linv);
    c[static_cast<std::size_t>(top - e)] = ce;
    if (!ce) continue;
    for (int i = 0; i <= b; ++i) {
      const auto di = d.coeff(i);
      if (di) {
        auto& slot = r[static_cast<std::size_t>(e + i - base)];
        slot = F.sub(slot, F.mul(ce, di));
      }
    }
  }
  const bool exact = std::all_of(r.begin(), r.end(), [](auto v) { return v == 0; });
  return {F, top, std::move(c), floor, exact};
}

LaurentSeries frac_part(const LaurentSeries& s) {
  const Field& F = s.field();
  if (s.exact() && s.known_zero()) return s;
  const int fl = std::min(s.floor(), 0);
  const int tp = std::min(s.top(), -1);
  if (tp < fl) return s.exact() ? LaurentSeries::exact_zero(F) : LaurentSeries::zero(F, fl);
  std::vector<Field::Elt> c(static_cast<std::size_t>(tp - fl + 1));
  for (int e = tp; e >= fl; --e) c[static_cast<std::size_t>(tp - e)] = s.coeff(e);
  return {F, tp, std::move(c), fl, s.exact()};
}

}  // namespace ffgeom
