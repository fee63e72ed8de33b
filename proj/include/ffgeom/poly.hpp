#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ffgeom/field.hpp"

namespace ffgeom {

/// Polynomial in F_q[x], coefficients lowest degree first.
/// Invariant: no trailing zero coefficients (the zero polynomial is empty).
class Poly {
 public:
  using Elt = Field::Elt;
  /// deg(0); far enough from INT_MIN that sums of a few degrees do not overflow.
  static constexpr int kDegZero = -(1 << 28);

  explicit Poly(const Field& f) : F_(&f) {}
  Poly(const Field& f, std::vector<Elt> coeffs) : F_(&f), c_(std::move(coeffs)) { trim(); }

  static Poly constant(const Field& f, Elt c) { return Poly(f, {c}); }
  static Poly one(const Field& f) { return constant(f, 1); }
  /// c * x^k for k >= 0.
  static Poly monomial(const Field& f, Elt c, int k);
  static Poly x(const Field& f) { return monomial(f, 1, 1); }

  const Field& field() const noexcept { return *F_; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  int deg() const noexcept { return c_.empty() ? kDegZero : static_cast<int>(c_.size()) - 1; }
  /// Coefficient of x^i (0 outside the stored range).
  Elt coeff(int i) const noexcept {
    return i < 0 || i >= static_cast<int>(c_.size()) ? 0 : c_[static_cast<std::size_t>(i)];
  }
  Elt lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
  const std::vector<Elt>& coeffs() const noexcept { return c_; }
  /// Lowest exponent with a nonzero coefficient (kDegZero for 0).
  int low_deg() const noexcept;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(Elt c) const;
  /// Multiplication by x^k, k >= 0.
  Poly shifted(int k) const;
  /// Drop the factor x^k (k <= low_deg()).
  Poly unshifted(int k) const;
  /// this += c * x^k * o
  void add_scaled_shift(const Poly& o, Elt c, int k);

  /// Quotient and remainder; throws std::domain_error on division by zero.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }
  Poly monic() const;

  bool operator==(const Poly& o) const noexcept { return F_ == o.F_ && c_ == o.c_; }
  /// Total order (by degree, then coefficients from the top); used for hashing/sorting.
  bool operator<(const Poly& o) const noexcept;

 private:
  void trim() noexcept {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  const Field* F_;
  std::vector<Elt> c_;
};

/// Monic gcd (zero iff both are zero).
Poly gcd(Poly a, Poly b);
/// Monic lcm.
Poly lcm(const Poly& a, const Poly& b);
Poly pow(const Poly& a, unsigned e);

struct PolyHash {
  std::size_t operator()(const Poly& p) const noexcept;
};

/// Enumerates all polynomials of degree <= n (q^{n+1} of them) by their
/// coefficient vectors, index 0 first, the constant coefficient varying fastest.
Poly poly_from_index(const Field& f, std::uint64_t index, int n);

}  // namespace ffgeom
