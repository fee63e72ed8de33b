#pragma once

#include <variant>
#include <vector>

#include "ffgeom/rational.hpp"
#include "ffgeom/series.hpp"

namespace ffgeom {

/// An element of K_inf = F_q((x^{-1})) known either exactly, as a rational
/// function, or approximately, as a truncated series. Exact series inputs
/// (Laurent polynomials) are stored as rationals.
///
/// Mixed arithmetic expands the rational operand just deep enough that the
/// result's precision is limited by the series operand only.
class KElem {
 public:
  KElem(RationalFunc r) : v_(std::move(r)) {}  // NOLINT
  KElem(Poly p) : v_(RationalFunc(std::move(p))) {}  // NOLINT
  KElem(LaurentSeries s);  // NOLINT
  static KElem zero(const Field& f) { return RationalFunc(f); }
  static KElem one(const Field& f) { return RationalFunc::constant(f, 1); }

  const Field& field() const noexcept;
  bool is_exact() const noexcept { return std::holds_alternative<RationalFunc>(v_); }
  const RationalFunc& rational() const { return std::get<RationalFunc>(v_); }
  const LaurentSeries& series() const { return std::get<LaurentSeries>(v_); }

  /// |a|; throws InsufficientPrecision for an undetermined series.
  QExp abs() const;
  /// Exactly zero (false for series, whose tails are unknown).
  bool is_exact_zero() const noexcept { return is_exact() && rational().is_zero(); }
  /// Coefficient of x^e.
  Field::Elt coeff(int e) const;
  /// Expansion known at least down to `floor` (series keep their own floor).
  LaurentSeries to_series(int floor) const;

  KElem frac() const;
  KElem operator-() const;
  KElem operator+(const KElem& o) const;
  KElem operator-(const KElem& o) const;
  KElem operator*(const KElem& o) const;
  KElem scaled(Field::Elt c) const;
  KElem times_poly(const Poly& p) const;

 private:
  std::variant<RationalFunc, LaurentSeries> v_;
};

using KVec = std::vector<KElem>;

/// Sup norm max_i |v_i|. Entries that vanish to their precision floor are
/// tolerated while a known entry dominates their bound.
QExp sup_norm(const KVec& v);
/// max_i q^{shifts[i]} |v_i|, same rules.
QExp sup_norm(const KVec& v, const std::vector<int>& shifts);

}  // namespace ffgeom
