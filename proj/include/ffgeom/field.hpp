#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ffgeom {

/// The finite field F_q = F_p[t]/(modulus), q = p^k.
///
/// Elements are packed as integers in [0, q): the base-p digits are the
/// coefficients of the residue polynomial in t, lowest degree first.
/// Arithmetic works directly on the digits, no lookup tables.
///
/// Fields are interned: `Field::prime`, `Field::extension` and
/// `Field::of_order` return references that stay valid for the lifetime of
/// the program, so values may hold plain `const Field*` pointers.
class Field {
 public:
  using Elt = std::uint32_t;

  static constexpr std::uint32_t kMaxPrime = 17;
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  /// F_p for a prime p <= 17.
  static const Field& prime(std::uint32_t p);
  /// F_p[t]/(modulus); `modulus` holds F_p coefficients lowest degree first
  /// and must be monic and irreducible of degree k >= 1.
  static const Field& extension(std::uint32_t p, std::vector<std::uint32_t> modulus);
  /// F_q with the lexicographically smallest monic irreducible modulus.
  static const Field& of_order(std::uint32_t q);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t k() const noexcept { return k_; }
  std::uint32_t q() const noexcept { return q_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Elt zero() const noexcept { return 0; }
  Elt one() const noexcept { return 1; }
  /// The class of t (equals the image of an integer when k = 1).
  Elt gen() const noexcept { return k_ == 1 ? 0 : p_; }

  Elt from_int(std::int64_t n) const noexcept;
  Elt from_digits(std::span<const std::uint32_t> digits) const;
  std::vector<std::uint32_t> digits(Elt a) const;

  Elt add(Elt a, Elt b) const noexcept;
  Elt sub(Elt a, Elt b) const noexcept;
  Elt neg(Elt a) const noexcept;
  Elt mul(Elt a, Elt b) const noexcept;
  /// Throws std::domain_error on zero.
  Elt inv(Elt a) const;
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  Elt pow(Elt a, std::uint64_t e) const noexcept;

  bool operator==(const Field& o) const noexcept { return this == &o; }

 private:
  Field(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t p_;
  std::uint32_t k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;  // monic, degree k; {0,1} when k = 1
};

bool is_prime(std::uint32_t n) noexcept;

/// Trial-division irreducibility test of a polynomial over F_p
/// (coefficients lowest degree first).
bool is_irreducible_mod_p(std::uint32_t p, std::span<const std::uint32_t> poly);

/// An element of F_q bundled with its field.
class Fq {
 public:
  Fq(const Field& f, Field::Elt v) : F_(&f), v_(v) {}
  static Fq from_int(const Field& f, std::int64_t n) { return {f, f.from_int(n)}; }

  const Field& field() const noexcept { return *F_; }
  Field::Elt value() const noexcept { return v_; }
  bool is_zero() const noexcept { return v_ == 0; }

  Fq operator+(const Fq& o) const { return {*F_, F_->add(v_, o.v_)}; }
  Fq operator-(const Fq& o) const { return {*F_, F_->sub(v_, o.v_)}; }
  Fq operator-() const { return {*F_, F_->neg(v_)}; }
  Fq operator*(const Fq& o) const { return {*F_, F_->mul(v_, o.v_)}; }
  Fq operator/(const Fq& o) const { return {*F_, F_->div(v_, o.v_)}; }
  Fq inverse() const { return {*F_, F_->inv(v_)}; }
  bool operator==(const Fq& o) const noexcept { return F_ == o.F_ && v_ == o.v_; }

 private:
  const Field* F_;
  Field::Elt v_;
};

}  // namespace ffgeom
