#pragma once

#include "ffgeom/poly.hpp"
#include "ffgeom/qexp.hpp"

namespace ffgeom {

/// Element of F_q(x) in canonical form: gcd(num, den) = 1, den monic.
class RationalFunc {
 public:
  explicit RationalFunc(const Field& f) : num_(f), den_(Poly::one(f)) {}
  RationalFunc(Poly num) : num_(std::move(num)), den_(Poly::one(num_.field())) {}  // NOLINT
  /// Normalizes; throws std::domain_error if den = 0.
  RationalFunc(Poly num, Poly den);

  /// x^k for any integer k.
  static RationalFunc x_pow(const Field& f, int k);
  static RationalFunc constant(const Field& f, Field::Elt c) { return {Poly::constant(f, c)}; }

  const Field& field() const noexcept { return num_.field(); }
  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_poly() const noexcept { return den_.is_one(); }
  /// den = x^k for some k >= 0 (a Laurent polynomial).
  bool is_laurent_poly() const noexcept;

  /// |f| = q^{deg num - deg den}.
  QExp abs() const;
  /// Polynomial part (quotient of num by den).
  Poly poly_part() const { return num_ / den_; }
  /// The part of the x^{-1}-expansion with exponents <= -1.
  RationalFunc frac_part() const;

  RationalFunc operator-() const;
  RationalFunc operator+(const RationalFunc& o) const;
  RationalFunc operator-(const RationalFunc& o) const;
  RationalFunc operator*(const RationalFunc& o) const;
  RationalFunc operator/(const RationalFunc& o) const;
  RationalFunc& operator+=(const RationalFunc& o) { return *this = *this + o; }
  RationalFunc& operator-=(const RationalFunc& o) { return *this = *this - o; }
  RationalFunc& operator*=(const RationalFunc& o) { return *this = *this * o; }
  RationalFunc inverse() const;
  RationalFunc scaled(Field::Elt c) const;
  RationalFunc times_poly(const Poly& p) const;

  bool operator==(const RationalFunc& o) const noexcept { return num_ == o.num_ && den_ == o.den_; }

 private:
  struct NoNormalize {};
  RationalFunc(Poly num, Poly den, NoNormalize) : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

/// abs_value: |f| as a power of q (bottom for f = 0).
inline QExp abs_value(const RationalFunc& f) { return f.abs(); }

}  // namespace ffgeom
