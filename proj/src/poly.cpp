#include "ffgeom/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace ffgeom {

Poly Poly::monomial(const Field& f, Elt c, int k) {
  if (k < 0) throw std::invalid_argument("negative exponent in polynomial monomial");
  std::vector<Elt> v(static_cast<std::size_t>(k) + 1, 0);
  v.back() = c;
  return Poly(f, std::move(v));
}

int Poly::low_deg() const noexcept {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i]) return static_cast<int>(i);
  return kDegZero;
}

Poly Poly::operator-() const {
  Poly r(*F_);
  r.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = F_->neg(c_[i]);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = F_->add(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = F_->sub(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(*F_);
  std::vector<Elt> r(c_.size() + o.c_.size() - 1, 0);
  const Field& F = *F_;
  if (F.k() == 1) {
    // Accumulate in 64 bits and reduce once per output coefficient.
    const std::uint64_t p = F.p();
    std::vector<std::uint64_t> acc(r.size(), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!c_[i]) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) acc[i + j] += std::uint64_t(c_[i]) * o.c_[j];
    }
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<Elt>(acc[i] % p);
  } else {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!c_[i]) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j)
        r[i + j] = F.add(r[i + j], F.mul(c_[i], o.c_[j]));
    }
  }
  return Poly(F, std::move(r));
}

Poly Poly::scaled(Elt c) const {
  if (c == 0) return Poly(*F_);
  Poly r = *this;
  for (auto& v : r.c_) v = F_->mul(v, c);
  return r;
}

Poly Poly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("negative shift");
  if (is_zero()) return *this;
  Poly r(*F_);
  r.c_.assign(static_cast<std::size_t>(k), 0);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly Poly::unshifted(int k) const {
  if (is_zero() || k <= 0) return *this;
  if (k > low_deg()) throw std::invalid_argument("unshift past lowest term");
  return Poly(*F_, std::vector<Elt>(c_.begin() + k, c_.end()));
}

void Poly::add_scaled_shift(const Poly& o, Elt c, int k) {
  if (c == 0 || o.is_zero()) return;
  const std::size_t need = o.c_.size() + static_cast<std::size_t>(k);
  if (need > c_.size()) c_.resize(need, 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    c_[i + static_cast<std::size_t>(k)] =
        F_->add(c_[i + static_cast<std::size_t>(k)], F_->mul(c, o.c_[i]));
  trim();
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (deg() < d.deg()) return {Poly(*F_), *this};
  const Field& F = *F_;
  std::vector<Elt> rem = c_;
  std::vector<Elt> quo(c_.size() - d.c_.size() + 1, 0);
  const Elt linv = F.inv(d.lead());
  const std::size_t dn = d.c_.size();
  for (std::size_t top = rem.size(); top-- >= dn;) {
    const Elt c = F.mul(rem[top], linv);
    if (c) {
      const std::size_t shift = top + 1 - dn;
      quo[shift] = c;
      for (std::size_t i = 0; i < dn; ++i)
        rem[shift + i] = F.sub(rem[shift + i], F.mul(c, d.c_[i]));
    }
    if (top == dn - 1) break;
  }
  rem.resize(dn - 1);
  return {Poly(F, std::move(quo)), Poly(F, std::move(rem))};
}

Poly Poly::monic() const {
  if (is_zero() || lead() == 1) return *this;
  return scaled(F_->inv(lead()));
}

bool Poly::operator<(const Poly& o) const noexcept {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  return std::lexicographical_compare(c_.rbegin(), c_.rend(), o.c_.rbegin(), o.c_.rend());
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  return (a / gcd(a, b) * b).monic();
}

Poly pow(const Poly& a, unsigned e) {
  Poly r = Poly::one(a.field());
  Poly base = a;
  while (e) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

std::size_t PolyHash::operator()(const Poly& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto c : p.coeffs()) h = (h ^ c) * 1099511628211ull;
  return h;
}

Poly poly_from_index(const Field& f, std::uint64_t index, int n) {
  std::vector<Field::Elt> c(static_cast<std::size_t>(n + 1), 0);
  for (auto& v : c) {
    v = static_cast<Field::Elt>(index % f.q());
    index /= f.q();
  }
  return Poly(f, std::move(c));
}

}  // namespace ffgeom
