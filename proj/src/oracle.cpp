#include "ffgeom/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <set>

namespace ffgeom {

std::uint64_t default_budget() {
  if (const char* env = std::getenv("FFGEOM_BUDGET")) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(env, env + std::strlen(env), v);
    if (ec == std::errc() && *p == '\0' && v > 0) return v;
  }
  return kDefaultBudget;
}

namespace {

void require_exact(const PeriodicLattice& s, const char* who) {
  if (!s.is_exact()) throw std::invalid_argument(std::string(who) + " needs exact (rational) input");
}

// Raw generators in reduced coordinates of Lambda: x^j alpha without
// fractional reduction for alpha lattices, the reps for coset lattices.
std::vector<RatVec> raw_generators(const PeriodicLattice& s) {
  std::vector<RatVec> out;
  if (s.kind() == PeriodicLattice::Kind::Alpha) {
    for (int j = 0; j <= s.N(); ++j) {
      RatVec g;
      for (const auto& a : s.alpha()) g.push_back(a.rational() * RationalFunc::x_pow(s.field(), j));
      out.push_back(std::move(g));
    }
  } else {
    for (const auto& r : s.generators()) {
      RatVec g;
      for (const auto& a : r) g.push_back(a.rational());
      out.push_back(std::move(g));
    }
  }
  return out;
}

// log_q of the largest entry of h (bounds ||v||_inf by q^hmax ||v||_C).
int body_spread(const ConvexBody& c) {
  QExp m;
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (std::size_t j = 0; j < c.dim(); ++j) m = max(m, c.h()(i, j).abs());
  return m.exp();
}

using PolyVec = std::vector<Poly>;

int max_deg(const PolyVec& v) {
  int m = Poly::kDegZero;
  for (const auto& p : v) m = std::max(m, p.deg());
  return m;
}

std::vector<std::uint32_t> point_key(const RatVec& p) {
  std::vector<std::uint32_t> k;
  for (const auto& r : p) {
    k.push_back(static_cast<std::uint32_t>(r.num().coeffs().size()));
    k.insert(k.end(), r.num().coeffs().begin(), r.num().coeffs().end());
    k.push_back(static_cast<std::uint32_t>(r.den().coeffs().size()));
    k.insert(k.end(), r.den().coeffs().begin(), r.den().coeffs().end());
  }
  return k;
}

// Walks the candidates V (f + a) with ||.||_C <= q^R and returns how many
// there are; with `out` set they are also collected (duplicates dropped).
std::uint64_t walk_window(const PeriodicLattice& s, const ConvexBody& c, int R, std::uint64_t budget,
                          std::vector<RatVec>* out) {
  require_exact(s, "enumerate_points");
  const Field& F = s.field();
  const std::size_t d = s.dim();
  const std::uint64_t q = F.q();
  const ReducedBasis& B = s.frame();
  const int Rinf = R + body_spread(c);

  // Points are V (f + a) for cell points f and polynomial vectors a. The test
  // ||.||_C <= q^R is made on W (f + a), W = adj(h) V, over a common
  // denominator, so the inner loop is polynomial arithmetic.
  const MatRat W = c.adj() * B.vectors;
  const std::vector<RatVec> gens = raw_generators(s);
  Poly den = Poly::one(F);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) den = lcm(den, W(i, j).den());
  Poly fden = Poly::one(F);
  for (const auto& g : gens)
    for (const auto& a : g) fden = lcm(fden, a.den());
  MatPoly Wn(d, d, Poly(F));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) Wn(i, j) = W(i, j).num() * (den / W(i, j).den());
  // ||W v||_inf / |det h| <= q^R  <=>  deg(Wn (fden v)) <= R + deg det h + deg den + deg fden
  const int limit = R + c.volume().exp() + den.deg() + fden.deg();
  std::vector<PolyVec> cols(d, PolyVec(d, Poly(F)));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) cols[j][i] = Wn(i, j) * fden;

  std::uint64_t cells = 1;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (cells > budget / q) throw BudgetExceeded("enumerate_points: cell exceeds the budget");
    cells *= q;
  }

  std::uint64_t work = 0, hits = 0;
  std::set<std::vector<std::uint32_t>> seen;
  for (std::uint64_t idx = 0; idx < cells; ++idx) {
    RatVec f(d, RationalFunc(F));
    std::uint64_t t = idx;
    for (const auto& g : gens) {
      const auto cj = static_cast<Field::Elt>(t % q);
      t /= q;
      if (cj)
        for (std::size_t i = 0; i < d; ++i) f[i] += g[i].scaled(cj);
    }
    // box: deg a_i <= max(Rinf - e_i, log|f_i|)
    std::vector<int> box(d);
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < d; ++i) {
      const QExp af = f[i].abs();
      box[i] = std::max(Rinf - B.exps[i], af.is_bottom() ? -1 : af.exp());
      for (int k = 0; k <= box[i]; ++k) {
        if (size > budget / q) throw BudgetExceeded("enumerate_points: window exceeds the budget");
        size *= q;
      }
    }
    work += size;
    if (work > budget) throw BudgetExceeded("enumerate_points: window exceeds the budget");

    PolyVec base(d, Poly(F));
    for (std::size_t j = 0; j < d; ++j) {
      const Poly fj = f[j].num() * (fden / f[j].den());
      for (std::size_t i = 0; i < d; ++i) base[i] += Wn(i, j) * fj;
    }
    // digits of a, (coordinate, degree) pairs in order
    std::vector<std::pair<std::size_t, int>> slots;
    for (std::size_t j = 0; j < d; ++j)
      for (int k = 0; k <= box[j]; ++k) slots.emplace_back(j, k);
    std::vector<Field::Elt> digit(slots.size(), 0);
    PolyVec cur = base;
    for (;;) {
      if (max_deg(cur) <= limit) {
        ++hits;
        if (out) {
          RatVec coords = f;
          for (std::size_t sidx = 0; sidx < slots.size(); ++sidx)
            if (digit[sidx])
              coords[slots[sidx].first] += RationalFunc(Poly::monomial(F, digit[sidx], slots[sidx].second));
          RatVec p = B.vectors * coords;
          if (seen.insert(point_key(p)).second) out->push_back(std::move(p));
        }
      }
      // next a: increment the mixed-radix counter, updating cur incrementally
      std::size_t sidx = 0;
      for (; sidx < slots.size(); ++sidx) {
        const auto [j, k] = slots[sidx];
        const Field::Elt old = digit[sidx];
        digit[sidx] = static_cast<Field::Elt>((old + 1) % q);
        const Field::Elt delta = F.sub(digit[sidx], old);
        for (std::size_t i = 0; i < d; ++i) cur[i].add_scaled_shift(cols[j][i], delta, k);
        if (digit[sidx] != 0) break;
      }
      if (sidx == slots.size()) break;
    }
  }
  return hits;
}

}  // namespace

std::vector<RatVec> enumerate_points(const PeriodicLattice& s, const ConvexBody& c, int R, std::uint64_t budget) {
  std::vector<RatVec> out;
  walk_window(s, c, R, budget, &out);
  std::sort(out.begin(), out.end(), [](const RatVec& a, const RatVec& b) { return point_key(a) < point_key(b); });
  return out;
}

std::uint64_t count_window(const PeriodicLattice& s, const ConvexBody& c, int R, std::uint64_t budget) {
  return walk_window(s, c, R, budget, nullptr);
}

int default_grid_depth(const PeriodicLattice& s, const ConvexBody& c) {
  const auto e = reduce_lattice(s.lattice(), c).exps;
  return s.N() + std::abs(e.front()) + std::abs(e.back()) + 4;
}

QExp covrad_oracle(const PeriodicLattice& s, const ConvexBody& c, int M, std::uint64_t budget, GridMode mode) {
  if (M < 1) throw std::invalid_argument("grid depth must be >= 1");
  CellModel m = cell_model(s, c);
  const std::size_t d = s.dim();
  const std::uint64_t q = s.field().q();
  const std::vector<int>& e = m.basis.exps;
  const int ed = e.back();
  const std::uint64_t cells = m.cell_size(budget);
  const std::size_t Mz = static_cast<std::size_t>(M);

  // digits[f][i*M + k-1] = coefficient of x^{-k} in <f_i>
  std::vector<std::vector<Field::Elt>> digits(cells, std::vector<Field::Elt>(d * Mz));
  for (std::uint64_t idx = 0; idx < cells; ++idx) {
    KVec f = m.combine(m.frac, m.coeffs(idx));
    for (std::size_t i = 0; i < d; ++i)
      for (int k = 1; k <= M; ++k) digits[idx][i * Mz + static_cast<std::size_t>(k - 1)] = f[i].coeff(-k);
  }

  auto pow_fits = [&](std::size_t k, std::uint64_t factor) {
    std::uint64_t v = factor;
    for (std::size_t t = 0; t < k; ++t) {
      if (v > budget / q) return false;
      v *= q;
    }
    return true;
  };

  int result;
  const bool literal = mode == GridMode::Literal || (mode == GridMode::Auto && pow_fits(d * Mz, cells));
  if (literal) {
    if (!pow_fits(d * Mz, cells)) throw BudgetExceeded("covrad_oracle: literal grid exceeds the budget");
    std::vector<Field::Elt> u(d * Mz, 0);
    result = std::numeric_limits<int>::min();
    const int floor_val = -M - 1;
    for (;;) {
      int best = std::numeric_limits<int>::max();
      for (std::uint64_t idx = 0; idx < cells && best > floor_val + ed; ++idx) {
        int worst = std::numeric_limits<int>::min();
        for (std::size_t i = 0; i < d; ++i) {
          int k = 1;
          while (k <= M && u[i * Mz + static_cast<std::size_t>(k - 1)] ==
                               digits[idx][i * Mz + static_cast<std::size_t>(k - 1)])
            ++k;
          const int comp = (k <= M ? -k : floor_val) + e[i];
          worst = std::max(worst, comp);
        }
        best = std::min(best, worst);
      }
      result = std::max(result, best);
      std::size_t t = 0;
      for (; t < u.size(); ++t) {
        u[t] = static_cast<Field::Elt>((u[t] + 1) % q);
        if (u[t] != 0) break;
      }
      if (t == u.size()) break;
    }
  } else {
    // covered(r): every prefix tuple (first max(e_i - r - 1, 0) digits of each
    // coordinate) is realized by some cell point.
    if (cells > budget) throw BudgetExceeded("covrad_oracle: cell exceeds the budget");
    result = ed - 1;  // K_i = 0 for all i: trivially covered
    for (int r = ed - 2; r >= ed - M - 1; --r) {
      std::size_t total = 0;
      std::vector<std::size_t> K(d);
      for (std::size_t i = 0; i < d; ++i) total += K[i] = static_cast<std::size_t>(std::max(e[i] - r - 1, 0));
      // q^total classes cannot be covered by fewer cell points
      std::uint64_t need = 1;
      bool too_many = false;
      for (std::size_t t = 0; t < total && !too_many; ++t) {
        if (need > cells / q) too_many = true;
        need *= q;
      }
      if (too_many) break;
      std::set<std::vector<Field::Elt>> classes;
      for (const auto& dg : digits) {
        std::vector<Field::Elt> key;
        for (std::size_t i = 0; i < d; ++i)
          key.insert(key.end(), dg.begin() + static_cast<std::ptrdiff_t>(i * Mz),
                     dg.begin() + static_cast<std::ptrdiff_t>(i * Mz + K[i]));
        classes.insert(std::move(key));
      }
      if (classes.size() != need) break;
      result = r;
    }
  }
  if (result <= ed - M)
    throw PrecisionTooCoarse("covering radius q^" + std::to_string(result) + " is not certified at grid depth " +
                             std::to_string(M) + "; increase M");
  return QExp(result);
}

std::vector<int> succmin_oracle(const PeriodicLattice& s, const ConvexBody& c, std::uint64_t budget) {
  require_exact(s, "succmin_oracle");
  const std::size_t d = s.dim();
  const auto lat = reduce_lattice(s.lattice(), c).exps;
  // Walk down until the window holds only 0, so that e_1 is above R.
  int R = lat.front() - 1;
  while (enumerate_points(s, c, R, budget).size() > 1) R -= 2;
  std::vector<int> e;
  RationalSpan span(d);
  while (e.size() < d) {
    ++R;
    if (R > lat.back()) throw std::logic_error("succmin_oracle: lattice vectors failed to span");
    for (const auto& p : enumerate_points(s, c, R, budget)) {
      if (span.rank() == d) break;
      if (span.add(p)) e.push_back(R);
    }
  }
  return e;
}

namespace {

int threshold_from(const PeriodicLattice& s, const ConvexBody& c, int e1) {
  return std::max({s.frame().exps.back(), e1 - 1 + body_spread(c), 0}) + 1;
}

}  // namespace

int density_threshold(const PeriodicLattice& s, const ConvexBody& c, std::uint64_t budget) {
  return threshold_from(s, c, succmin_oracle(s, c, budget).front());
}

BigRational density_oracle(const PeriodicLattice& s, const ConvexBody& c, int R, std::uint64_t budget) {
  const int e1 = succmin_oracle(s, c, budget).front();
  const int th = threshold_from(s, c, e1);
  if (R < th)
    throw std::invalid_argument("density_oracle: R = " + std::to_string(R) + " is below the stationary range R >= " +
                                std::to_string(th));
  const int d = static_cast<int>(s.dim());
  const auto count = count_window(s, ConvexBody::identity(s.field(), s.dim()), R, budget);
  const int e = d * (e1 - 1) + c.volume().exp() - d * R;
  return BigRational(BigInt(count)) * q_power(s.field().q(), e);
}

}  // namespace ffgeom
