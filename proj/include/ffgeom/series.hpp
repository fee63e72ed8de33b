#pragma once

#include <optional>
#include <vector>

#include "ffgeom/field.hpp"
#include "ffgeom/qexp.hpp"
#include "ffgeom/rational.hpp"

namespace ffgeom {

/// A truncated element of F_q((x^{-1})).
///
/// Coefficients are known for exponents `top()` down to `floor()`. Below the
/// floor they are unknown, unless `exact()` is set, in which case they are
/// zero and the value is a Laurent polynomial. `top()` is the exponent of the
/// leading nonzero coefficient, or floor()-1 when every known coefficient is
/// zero. Operations never fabricate coefficients below the floor; reading one
/// throws InsufficientPrecision.
class LaurentSeries {
 public:
  using Elt = Field::Elt;

  /// `coeffs[i]` is the coefficient of x^{top - i}; must hold top-floor+1 entries.
  LaurentSeries(const Field& f, int top, std::vector<Elt> coeffs, int floor, bool exact);

  /// Known to be zero down to `floor`, unknown below.
  static LaurentSeries zero(const Field& f, int floor);
  static LaurentSeries exact_zero(const Field& f);
  /// Exact Laurent polynomial; throws std::invalid_argument unless den is a power of x.
  static LaurentSeries from_laurent(const RationalFunc& f);

  const Field& field() const noexcept { return *F_; }
  int top() const noexcept { return top_; }
  int floor() const noexcept { return floor_; }
  bool exact() const noexcept { return exact_; }
  bool known(int e) const noexcept { return exact_ || e >= floor_; }

  /// Coefficient of x^e; throws InsufficientPrecision below the floor.
  Elt coeff(int e) const;
  /// |s|; throws InsufficientPrecision if all known coefficients vanish on an inexact series.
  QExp abs() const;
  /// True when every known coefficient is zero.
  bool known_zero() const noexcept { return top_ < floor_; }
  bool is_exact_zero() const noexcept { return exact_ && known_zero(); }

  LaurentSeries operator-() const;
  LaurentSeries operator+(const LaurentSeries& o) const;
  LaurentSeries operator-(const LaurentSeries& o) const;
  LaurentSeries operator*(const LaurentSeries& o) const;
  LaurentSeries scaled(Elt c) const;
  /// Multiplication by x^k.
  LaurentSeries shifted(int k) const;
  /// Forget coefficients below `floor` (no-op if already coarser).
  LaurentSeries truncated(int floor) const;

  /// The Laurent polynomial, if exact.
  std::optional<RationalFunc> to_rational() const;

  /// Same known coefficients, floor and exactness.
  bool operator==(const LaurentSeries& o) const noexcept;

 private:
  void normalize();

  const Field* F_;
  int top_;
  int floor_;
  std::vector<Elt> c_;  // exponents top_ down to floor_
  bool exact_;
};

/// x^{-1}-adic expansion of f down to exponent `floor` (long division).
/// The result is exact iff the division terminates above the floor.
LaurentSeries expand_rational(const RationalFunc& f, int floor);

/// The part of s with exponents <= -1 (an element of x^{-1}F_q[[x^{-1}]]).
LaurentSeries frac_part(const LaurentSeries& s);

}  // namespace ffgeom
