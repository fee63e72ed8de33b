#include "ffgeom/parse.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

#include "ffgeom/errors.hpp"

namespace ffgeom {

namespace {

class ExprParser {
 public:
  ExprParser(const Field& f, std::string_view text, char var, bool allow_gen)
      : F_(f), s_(text), var_(var), allow_gen_(allow_gen) {}

  RationalFunc parse() {
    RationalFunc r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunc expr() {
    RationalFunc r = term();
    for (;;) {
      if (accept('+')) {
        r += term();
      } else if (accept('-')) {
        r -= term();
      } else {
        return r;
      }
    }
  }

  bool starts_atom() {
    const char c = peek();
    return c == '(' || c == var_ || c == 't' || std::isdigit(static_cast<unsigned char>(c));
  }

  RationalFunc term() {
    RationalFunc r = unary();
    for (;;) {
      if (accept('*')) {
        r *= unary();
      } else if (accept('/')) {
        RationalFunc d = unary();
        if (d.is_zero()) fail("division by zero");
        r = r / d;
      } else if (starts_atom()) {
        r *= power();
      } else {
        return r;
      }
    }
  }

  RationalFunc unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  long integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    long v = 0;
    const char* b = s_.data() + start;
    if (*b == '+') ++b;
    auto [ptr, ec] = std::from_chars(b, s_.data() + pos_, v);
    if (ec != std::errc() || ptr != s_.data() + pos_) {
      pos_ = start;
      fail("expected an integer");
    }
    return v;
  }

  RationalFunc power() {
    RationalFunc base = atom();
    if (accept('^')) {
      bool paren = accept('(');
      const long e = integer();
      if (paren && !accept(')')) fail("expected ')'");
      if (e < -4096 || e > 4096) fail("exponent out of range");
      if (e < 0 && base.is_zero()) fail("negative power of zero");
      RationalFunc r = RationalFunc::constant(F_, 1);
      RationalFunc b = e < 0 ? base.inverse() : base;
      for (long k = 0; k < (e < 0 ? -e : e); ++k) r *= b;
      return r;
    }
    return base;
  }

  RationalFunc atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      RationalFunc r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (c == var_) {
      ++pos_;
      return RationalFunc(Poly::x(F_));
    }
    if (c == 't' && var_ != 't') {
      if (!allow_gen_ || F_.k() == 1) fail("generator 't' is only defined over extension fields");
      ++pos_;
      return RationalFunc::constant(F_, F_.gen());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      long long v = 0;
      auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
      if (ec != std::errc()) fail("integer literal out of range");
      return RationalFunc::constant(F_, F_.from_int(v));
    }
    fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
  }

  const Field& F_;
  std::string_view s_;
  char var_;
  bool allow_gen_;
  std::size_t pos_ = 0;
};

std::string format_terms(const std::vector<std::pair<int, std::string>>& terms, char var) {
  // terms: (exponent, coefficient string), highest exponent first.
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms) {
    if (!out.empty()) out += " + ";
    std::string mono;
    if (k == 1) {
      mono = std::string(1, var);
    } else if (k != 0) {
      mono = std::string(1, var) + "^" + std::to_string(k);
    }
    if (mono.empty()) {
      out += c;
    } else if (c == "1") {
      out += mono;
    } else {
      out += c + "*" + mono;
    }
  }
  return out;
}

}  // namespace

RationalFunc parse_element(const Field& f, std::string_view text) {
  return ExprParser(f, text, 'x', true).parse();
}

std::vector<std::uint32_t> parse_modulus(std::uint32_t p, std::string_view text) {
  const Field& fp = Field::prime(p);
  RationalFunc r = ExprParser(fp, text, 't', false).parse();
  if (!r.is_poly()) throw ParseError("modulus must be a polynomial in t");
  return r.num().coeffs();
}

LaurentSeries parse_series_literal(const Field& f, std::string_view text) {
  // Minimal reader for {key: value, ...} with keys floor, top, coeffs, exact.
  std::size_t pos = 0;
  auto ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& m) -> void {
    throw ParseError(m + " in series literal \"" + std::string(text) + "\"");
  };
  auto expect = [&](char c) {
    ws();
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  };
  std::optional<long> floor, top;
  std::optional<std::vector<Field::Elt>> coeffs;
  bool exact = false;

  expect('{');
  for (;;) {
    ws();
    if (pos < text.size() && text[pos] == '}') {
      ++pos;
      break;
    }
    std::size_t k0 = pos;
    while (pos < text.size() && (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '"')) ++pos;
    std::string key(text.substr(k0, pos - k0));
    std::erase(key, '"');
    expect(':');
    ws();
    if (key == "floor" || key == "top") {
      std::size_t v0 = pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      long v = 0;
      const char* b = text.data() + v0;
      if (*b == '+') ++b;
      auto [ptr, ec] = std::from_chars(b, text.data() + pos, v);
      if (ec != std::errc() || ptr != text.data() + pos) fail("bad integer for " + key);
      (key == "floor" ? floor : top) = v;
    } else if (key == "exact") {
      if (text.substr(pos, 4) == "true") {
        exact = true;
        pos += 4;
      } else if (text.substr(pos, 5) == "false") {
        pos += 5;
      } else {
        fail("exact must be true or false");
      }
    } else if (key == "coeffs") {
      expect('[');
      std::vector<Field::Elt> c;
      ws();
      if (pos < text.size() && text[pos] == ']') {
        ++pos;
      } else {
        for (;;) {
          // An entry runs to the next ',' or ']' at parenthesis depth 0.
          std::size_t e0 = pos;
          int depth = 0;
          while (pos < text.size() && !(depth == 0 && (text[pos] == ',' || text[pos] == ']'))) {
            if (text[pos] == '(') ++depth;
            if (text[pos] == ')') --depth;
            ++pos;
          }
          std::string_view entry = text.substr(e0, pos - e0);
          std::string cleaned(entry);
          std::erase(cleaned, '"');
          RationalFunc v = parse_element(f, cleaned);
          if (!v.is_poly() || v.num().deg() > 0) fail("coefficient must be a constant");
          c.push_back(v.num().coeff(0));
          if (pos >= text.size()) fail("unterminated coefficient list");
          if (text[pos++] == ']') break;
        }
      }
      coeffs = std::move(c);
    } else {
      fail("unknown key '" + key + "'");
    }
    ws();
    if (pos < text.size() && text[pos] == ',') ++pos;
  }
  ws();
  if (pos != text.size()) fail("trailing characters");
  if (!floor || !coeffs) fail("floor and coeffs are required");
  const long tp = top.value_or(*floor + static_cast<long>(coeffs->size()) - 1);
  if (static_cast<long>(coeffs->size()) != tp - *floor + 1)
    fail("coeffs must list top-floor+1 = " + std::to_string(tp - *floor + 1) + " entries");
  return {f, static_cast<int>(tp), std::move(*coeffs), static_cast<int>(*floor), exact};
}

KElem parse_kelem(const Field& f, std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '{') return parse_series_literal(f, text);
  return parse_element(f, text);
}

std::string format_fq(const Field& f, Field::Elt a) {
  if (a < f.p()) return std::to_string(a);
  auto d = f.digits(a);
  std::vector<std::pair<int, std::string>> terms;
  for (std::size_t i = d.size(); i-- > 0;)
    if (d[i]) terms.emplace_back(static_cast<int>(i), std::to_string(d[i]));
  return "(" + format_terms(terms, 't') + ")";
}

std::string format(const Poly& p) {
  std::vector<std::pair<int, std::string>> terms;
  for (int i = p.deg(); i >= 0; --i)
    if (p.coeff(i)) terms.emplace_back(i, format_fq(p.field(), p.coeff(i)));
  return format_terms(terms, 'x');
}

std::string format(const RationalFunc& r) {
  if (r.is_poly()) return format(r.num());
  if (r.is_laurent_poly()) {
    const int shift = r.den().deg();
    std::vector<std::pair<int, std::string>> terms;
    for (int i = r.num().deg(); i >= 0; --i)
      if (r.num().coeff(i)) terms.emplace_back(i - shift, format_fq(r.field(), r.num().coeff(i)));
    return format_terms(terms, 'x');
  }
  auto wrap = [](const Poly& p) {
    std::string s = format(p);
    return p.coeffs().size() > 1 || s.find(' ') != std::string::npos || s.find('*') != std::string::npos
               ? "(" + s + ")"
               : s;
  };
  return wrap(r.num()) + " / " + wrap(r.den());
}

std::string format(const LaurentSeries& s) {
  std::ostringstream os;
  os << "{floor: " << s.floor() << ", top: " << s.top() << ", coeffs: [";
  for (int e = s.top(); e >= s.floor(); --e) {
    if (e != s.top()) os << ", ";
    os << format_fq(s.field(), s.coeff(e));
  }
  os << "]";
  if (s.exact()) os << ", exact: true";
  os << "}";
  return os.str();
}

std::string format(const KElem& e) { return e.is_exact() ? format(e.rational()) : format(e.series()); }

}  // namespace ffgeom
