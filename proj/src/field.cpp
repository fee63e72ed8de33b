#include "ffgeom/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace ffgeom {

namespace {

struct Registry {
  std::mutex mu;
  std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::unique_ptr<Field>> fields;
};

Registry& registry() {
  static Registry r;
  return r;
}

// Remainder of a by b over F_p, both lowest degree first; b monic or not.
std::vector<std::uint32_t> mod_p_rem(std::uint32_t p, std::vector<std::uint32_t> a,
                                     std::span<const std::uint32_t> b) {
  auto trim = [](std::vector<std::uint32_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  std::size_t db = b.size();
  while (db > 0 && b[db - 1] == 0) --db;
  if (db == 0) throw std::domain_error("division by zero polynomial");
  std::uint32_t lead = b[db - 1];
  std::uint32_t lead_inv = 1;
  for (std::uint32_t e = p - 2, base = lead; e; e >>= 1, base = base * base % p)
    if (e & 1) lead_inv = lead_inv * base % p;
  while (a.size() >= db) {
    std::uint32_t c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - db;
    for (std::size_t i = 0; i < db; ++i)
      a[shift + i] = (a[shift + i] + (p - c) * b[i]) % p;
    trim(a);
  }
  return a;
}

}  // namespace

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible_mod_p(std::uint32_t p, std::span<const std::uint32_t> poly) {
  std::size_t n = poly.size();
  while (n > 0 && poly[n - 1] == 0) --n;
  if (n < 2) return false;  // constants are not irreducible
  const std::size_t deg = n - 1;
  if (deg == 1) return true;
  // Try every monic divisor of degree 1..deg/2.
  for (std::size_t dd = 1; 2 * dd <= deg; ++dd) {
    std::vector<std::uint32_t> cand(dd + 1, 0);
    cand[dd] = 1;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < dd; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t i = 0; i < dd; ++i) {
        cand[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      std::vector<std::uint32_t> a(poly.begin(), poly.begin() + static_cast<std::ptrdiff_t>(n));
      if (mod_p_rem(p, std::move(a), cand).empty()) return false;
    }
  }
  return true;
}

Field::Field(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), k_(static_cast<std::uint32_t>(modulus.size() - 1)), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < k_; ++i) q_ *= p_;
}

const Field& Field::prime(std::uint32_t p) {
  if (!is_prime(p) || p > kMaxPrime)
    throw std::invalid_argument("characteristic must be a prime <= 17, got " + std::to_string(p));
  return extension(p, {0, 1});
}

const Field& Field::extension(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p) || p > kMaxPrime)
    throw std::invalid_argument("characteristic must be a prime <= 17, got " + std::to_string(p));
  for (auto& c : modulus) c %= p;
  while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
  if (modulus.size() < 2) throw std::invalid_argument("modulus must have degree >= 1");
  if (modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
  const std::size_t k = modulus.size() - 1;
  if (k == 1) modulus = {0, 1};  // F_p itself; the representation ignores the root
  std::uint64_t q = 1;
  for (std::size_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) throw std::invalid_argument("field order exceeds 2^16");
  }
  if (k > 1 && !is_irreducible_mod_p(p, modulus))
    throw std::invalid_argument("modulus is reducible over F_" + std::to_string(p));

  auto& reg = registry();
  std::lock_guard lock(reg.mu);
  auto key = std::make_pair(p, modulus);
  auto it = reg.fields.find(key);
  if (it == reg.fields.end())
    it = reg.fields.emplace(key, std::unique_ptr<Field>(new Field(p, modulus))).first;
  return *it->second;
}

const Field& Field::of_order(std::uint32_t q) {
  std::uint32_t p = 0;
  for (std::uint32_t c = 2; c <= q; ++c)
    if (q % c == 0) {
      p = c;
      break;
    }
  if (p == 0) throw std::invalid_argument("field order must be >= 2");
  std::uint32_t k = 0;
  for (std::uint32_t r = q; r > 1; r /= p) {
    if (r % p != 0) throw std::invalid_argument("field order must be a prime power");
    ++k;
  }
  if (k == 1) return prime(p);
  std::vector<std::uint32_t> mod(k + 1, 0);
  mod[k] = 1;
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = idx;
    for (std::uint32_t i = 0; i < k; ++i) {
      mod[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (is_irreducible_mod_p(p, mod)) return extension(p, mod);
  }
  throw std::logic_error("no irreducible polynomial found");
}

Field::Elt Field::from_int(std::int64_t n) const noexcept {
  auto r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elt>(r);
}

Field::Elt Field::from_digits(std::span<const std::uint32_t> digits) const {
  // Reduce modulo the modulus first so longer digit strings are accepted.
  std::vector<std::uint32_t> d(digits.begin(), digits.end());
  for (auto& c : d) c %= p_;
  if (d.size() > k_) d = mod_p_rem(p_, std::move(d), modulus_);
  Elt v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + d[i];
  return v;
}

std::vector<std::uint32_t> Field::digits(Elt a) const {
  std::vector<std::uint32_t> d(k_, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

Field::Elt Field::add(Elt a, Elt b) const noexcept {
  if (k_ == 1) {
    Elt s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elt r = 0, w = 1;
  while (a || b) {
    Elt s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    r += s * w;
    w *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

Field::Elt Field::neg(Elt a) const noexcept {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  Elt r = 0, w = 1;
  while (a) {
    Elt c = a % p_;
    r += (c == 0 ? 0 : p_ - c) * w;
    w *= p_;
    a /= p_;
  }
  return r;
}

Field::Elt Field::sub(Elt a, Elt b) const noexcept { return add(a, neg(b)); }

Field::Elt Field::mul(Elt a, Elt b) const noexcept {
  if (k_ == 1) return a * b % p_;
  if (a == 0 || b == 0) return 0;
  std::uint32_t da[16] = {}, db[16] = {}, prod[32] = {};
  for (std::uint32_t i = 0; i < k_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  for (std::uint32_t i = 0; i < k_; ++i) {
    if (!da[i]) continue;
    for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  // Reduce by the monic modulus from the top.
  for (std::uint32_t top = 2 * k_ - 2; top >= k_; --top) {
    std::uint32_t c = prod[top];
    if (c) {
      prod[top] = 0;
      for (std::uint32_t i = 0; i < k_; ++i)
        prod[top - k_ + i] = (prod[top - k_ + i] + (p_ - c) * modulus_[i]) % p_;
    }
  }
  Elt r = 0;
  for (std::uint32_t i = k_; i-- > 0;) r = r * p_ + prod[i];
  return r;
}

Field::Elt Field::pow(Elt a, std::uint64_t e) const noexcept {
  Elt r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Field::Elt Field::inv(Elt a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_q");
  return pow(a, q_ - 2);
}

}  // namespace ffgeom
