#pragma once

#include <compare>
#include <optional>
#include <string>

namespace ffgeom {

/// A value in q^Z ∪ {0}, stored as its exponent; `bottom` represents 0.
/// Every norm, volume, minimum and radius in the library is a QExp.
class QExp {
 public:
  constexpr QExp() = default;  // bottom
  constexpr explicit QExp(int e) : e_(e) {}
  static constexpr QExp bottom() { return QExp(); }

  constexpr bool is_bottom() const noexcept { return !e_.has_value(); }
  /// The exponent; throws std::bad_optional_access on bottom.
  constexpr int exp() const { return e_.value(); }

  /// Product of values = sum of exponents; bottom absorbs.
  constexpr QExp operator*(QExp o) const {
    return is_bottom() || o.is_bottom() ? QExp() : QExp(*e_ + *o.e_);
  }
  constexpr QExp operator/(QExp o) const { return is_bottom() ? QExp() : QExp(*e_ - o.exp()); }
  /// Multiply by q^k.
  constexpr QExp shifted(int k) const { return is_bottom() ? QExp() : QExp(*e_ + k); }

  constexpr bool operator==(const QExp&) const = default;
  constexpr std::strong_ordering operator<=>(const QExp& o) const {
    if (is_bottom() || o.is_bottom()) return !is_bottom() <=> !o.is_bottom();
    return *e_ <=> *o.e_;
  }

  /// "q^e", or "0" for bottom.
  std::string str() const { return is_bottom() ? "0" : "q^" + std::to_string(*e_); }

 private:
  std::optional<int> e_;
};

constexpr QExp max(QExp a, QExp b) { return a < b ? b : a; }
constexpr QExp min(QExp a, QExp b) { return b < a ? b : a; }

}  // namespace ffgeom
