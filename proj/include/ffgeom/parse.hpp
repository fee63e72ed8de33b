#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ffgeom/kelem.hpp"

namespace ffgeom {

/// Element strings.
///
/// An element is an arithmetic expression in `x` over F_q with + - * / ^,
/// parentheses, integer literals (reduced mod p) and, for extension fields,
/// the generator `t`. Exponents are integers and may be negative. Juxtaposition
/// multiplies, so `(t+1)x^2`, `(t+1)*x^2` and `x^-1 + 1/(x^3+x+1)` all parse.
/// Throws ParseError.
RationalFunc parse_element(const Field& f, std::string_view text);

/// Series literal `{floor: -12, top: -1, coeffs: [..], exact: false}`;
/// coefficients are listed from x^top down to x^floor and must be constants.
LaurentSeries parse_series_literal(const Field& f, std::string_view text);

/// A series literal if the text starts with '{', otherwise an element.
KElem parse_kelem(const Field& f, std::string_view text);

/// Monic modulus written as a polynomial in `t` over F_p, e.g. "t^2+t+1";
/// returns coefficients lowest degree first.
std::vector<std::uint32_t> parse_modulus(std::uint32_t p, std::string_view text);

std::string format_fq(const Field& f, Field::Elt a);
/// `c*x^k` terms, highest degree first, joined by " + ".
std::string format(const Poly& p);
/// Laurent polynomials print as polynomials with negative exponents;
/// other rationals as `(num) / (den)`.
std::string format(const RationalFunc& r);
std::string format(const LaurentSeries& s);
std::string format(const KElem& e);

}  // namespace ffgeom
