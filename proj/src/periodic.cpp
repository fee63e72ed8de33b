#include "ffgeom/periodic.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <tuple>

namespace ffgeom {

namespace {

bool known_nonzero(const KElem& a) {
  return a.is_exact() ? !a.rational().is_zero() : !a.series().known_zero();
}

bool in_m(const KElem& a) {
  if (a.is_exact()) return a.rational().is_zero() || a.rational().abs() < QExp(0);
  return a.series().top() <= -1;
}

KVec zeros(const Field& f, std::size_t d) { return KVec(d, KElem::zero(f)); }

KVec frac_vec(const KVec& v) {
  KVec r;
  r.reserve(v.size());
  for (const auto& a : v) r.push_back(a.frac());
  return r;
}

// Cell points with coefficient vectors c != 0 must be nonzero vectors.
// Returns the first index whose combination is exactly zero.
std::optional<std::uint64_t> check_independent(const CellModel& m, std::uint64_t cap) {
  const std::uint64_t n = m.cell_size(cap);
  for (std::uint64_t idx = 1; idx < n; ++idx) {
    KVec v = m.combine(m.frac, m.coeffs(idx));
    bool nonzero = false, exact_zero = true;
    for (const auto& a : v) {
      nonzero |= known_nonzero(a);
      exact_zero &= a.is_exact_zero();
    }
    if (nonzero) continue;
    if (exact_zero) return idx;
    throw InsufficientPrecision("cell point " + std::to_string(idx) +
                                " is zero at the available precision; cannot decide independence");
  }
  return std::nullopt;
}

Poly coeffs_to_poly(const Field& f, const std::vector<Field::Elt>& c) { return Poly(f, c); }

}  // namespace

PeriodicLattice::PeriodicLattice(Lattice l, Kind k)
    : lattice_(std::move(l)), frame_(reduce_lattice(lattice_)), kind_(k),
      alpha_(zeros(lattice_.field(), lattice_.dim())) {}

PeriodicLattice PeriodicLattice::plain(const Lattice& l) { return PeriodicLattice(l, Kind::Plain); }

bool PeriodicLattice::is_exact() const {
  for (const auto& a : alpha_)
    if (!a.is_exact()) return false;
  for (const auto& g : gens_)
    for (const auto& a : g)
      if (!a.is_exact()) return false;
  return true;
}

PeriodicLattice PeriodicLattice::coset(const Lattice& l, const std::vector<KVec>& reps, Frame frame,
                                       std::uint64_t cap) {
  PeriodicLattice s(l, Kind::Coset);
  std::optional<int> floor;
  for (const auto& r : reps) {
    if (r.size() != l.dim()) throw std::invalid_argument("coset rep has wrong dimension");
    for (const auto& a : r) {
      if (a.is_exact()) continue;
      if (floor && *floor != a.series().floor())
        throw std::invalid_argument("coset reps must share one precision floor");
      floor = a.series().floor();
    }
    KVec c = frame == Frame::Ambient ? s.frame_.coords(r) : r;
    for (const auto& a : c)
      if (!in_m(a)) throw std::invalid_argument("coset rep does not lie in the fundamental domain");
    s.gens_.push_back(std::move(c));
  }
  CellModel m = cell_model(s, ConvexBody::identity(l.field(), l.dim()));
  if (auto idx = check_independent(m, cap))
    throw std::invalid_argument("coset reps are F_q-dependent (combination " + std::to_string(*idx) + ")");
  return s;
}

PeriodicLattice make_alpha_lattice(const Lattice& l, const KVec& alpha, int N, Frame frame, std::uint64_t cap) {
  if (alpha.size() != l.dim()) throw std::invalid_argument("alpha has wrong dimension");
  if (N < 0) throw std::invalid_argument("N must be >= 0");
  PeriodicLattice s(l, PeriodicLattice::Kind::Alpha);
  const Field& F = l.field();
  s.N_ = N;
  KVec a = frame == Frame::Ambient ? s.frame_.coords(alpha) : alpha;
  s.alpha_ = frac_vec(a);

  bool exact = true;
  Poly den = Poly::one(F);
  for (const auto& c : s.alpha_) {
    exact &= c.is_exact();
    if (c.is_exact()) den = lcm(den, c.rational().den());
  }
  if (exact && den.deg() <= N)
    throw NRational("alpha is " + std::to_string(N) + "-rational with respect to the lattice", den);

  for (int j = 0; j <= N; ++j) {
    KVec g;
    for (const auto& c : s.alpha_) g.push_back(c.times_poly(Poly::monomial(F, 1, j)).frac());
    s.gens_.push_back(std::move(g));
  }
  if (!exact) {
    CellModel m = cell_model(s, ConvexBody::identity(F, l.dim()));
    if (auto idx = check_independent(m, cap))
      throw NRational("alpha is " + std::to_string(N) + "-rational with respect to the lattice",
                      poly_from_index(F, *idx, N));
  }
  return s;
}

std::uint64_t CellModel::cell_size(std::uint64_t cap) const {
  const std::uint64_t q = basis.vectors(0, 0).field().q();
  std::uint64_t n = 1;
  for (std::size_t j = 0; j < rank(); ++j) {
    if (n > cap / q) throw CapExceeded("cell enumeration q^" + std::to_string(rank()) + " exceeds the cap " +
                                       std::to_string(cap));
    n *= q;
  }
  return n;
}

std::vector<Field::Elt> CellModel::coeffs(std::uint64_t index) const {
  const std::uint64_t q = basis.vectors(0, 0).field().q();
  std::vector<Field::Elt> c(rank());
  for (auto& v : c) {
    v = static_cast<Field::Elt>(index % q);
    index /= q;
  }
  return c;
}

KVec CellModel::combine(const std::vector<KVec>& gens, const std::vector<Field::Elt>& c) const {
  const Field& F = basis.vectors(0, 0).field();
  KVec acc = zeros(F, basis.dim());
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = acc[i] + gens[j][i].scaled(c[j]);
  }
  return acc;
}

CellModel cell_model(const PeriodicLattice& s, const ConvexBody& c) {
  const Field& F = s.field();
  const std::size_t d = s.dim();
  if (c.is_identity()) {
    CellModel m{s.frame(), identity_poly(F, d), s.generators(), s.generators(), s.alpha()};
    return m;
  }
  ReducedBasis b = reduce_lattice(s.lattice(), c);
  MatPoly T = to_poly(b.to_coords * s.frame().vectors);
  CellModel m{std::move(b), T, {}, {}, T * s.alpha()};
  for (const auto& g : s.generators()) {
    m.full.push_back(T * g);
    m.frac.push_back(frac_vec(m.full.back()));
  }
  return m;
}

std::vector<OrbitPoint> frac_orbit(const PeriodicLattice& s, std::uint64_t cap) {
  CellModel m = cell_model(s, ConvexBody::identity(s.field(), s.dim()));
  const std::uint64_t n = m.cell_size(cap);
  std::vector<OrbitPoint> out;
  out.reserve(n);
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    auto c = m.coeffs(idx);
    KVec v = m.combine(m.frac, c);
    QExp norm = m.basis.norm_of_coords(v);
    out.push_back({coeffs_to_poly(s.field(), c), std::move(v), norm});
  }
  return out;
}

namespace {

// Whether cand is K_inf-independent of the (independent) vectors in `chosen`.
bool independent_of(const std::vector<KVec>& chosen, const KVec& cand) {
  const std::size_t d = cand.size(), k = chosen.size() + 1;
  bool exact = std::all_of(cand.begin(), cand.end(), [](const KElem& a) { return a.is_exact(); });
  for (const auto& v : chosen)
    for (const auto& a : v) exact &= a.is_exact();
  const Field& F = cand[0].field();
  if (exact) {
    MatRat m(d, k, RationalFunc(F));
    for (std::size_t j = 0; j + 1 < k; ++j)
      for (std::size_t i = 0; i < d; ++i) m(i, j) = chosen[j][i].rational();
    for (std::size_t i = 0; i < d; ++i) m(i, k - 1) = cand[i].rational();
    return rank_rational(m) == k;
  }
  // Some k x k minor must be nonzero; a truncated minor that vanishes to its
  // precision floor leaves the question open.
  bool undecided = false;
  std::vector<bool> pick(d, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    MatK m(k, k, KElem::zero(F));
    for (std::size_t i = 0, r = 0; i < d; ++i) {
      if (!pick[i]) continue;
      for (std::size_t j = 0; j + 1 < k; ++j) m(r, j) = chosen[j][i];
      m(r, k - 1) = cand[i];
      ++r;
    }
    KElem det = det_k(m);
    if (known_nonzero(det)) return true;
    if (!det.is_exact()) undecided = true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  if (undecided) throw InsufficientPrecision("linear independence of truncated vectors cannot be decided");
  return false;
}

// Polynomial part (exponents >= 0) of a; nullopt if a series does not know x^0.
std::optional<Poly> poly_part(const KElem& a) {
  const Field& F = a.field();
  if (a.is_exact()) return a.rational().num() / a.rational().den();
  const LaurentSeries& s = a.series();
  if (!s.known(0)) return std::nullopt;
  std::vector<Field::Elt> c;
  for (int e = 0; e <= s.top(); ++e) c.push_back(s.coeff(e));
  return Poly(F, c);
}

// Every candidate is M w for a fixed matrix M = [directions | I] and an exact
// w = (direction coefficients, polynomial part). Dependent w give dependent
// vectors, which truncated determinants alone cannot certify.
std::optional<std::vector<RationalFunc>> exact_form(const CellModel& m, PeriodicLattice::Kind kind,
                                                    const std::vector<Field::Elt>& c, const KVec& v) {
  const Field& F = v[0].field();
  std::vector<RationalFunc> w;
  KVec rest = v;
  if (kind == PeriodicLattice::Kind::Alpha) {
    Poly Q = coeffs_to_poly(F, c);
    w.push_back(RationalFunc(Q));
    for (std::size_t i = 0; i < v.size(); ++i) rest[i] = v[i] - m.alpha[i].times_poly(Q);
  } else {
    for (std::size_t j = 0; j < c.size(); ++j) {
      w.push_back(RationalFunc::constant(F, c[j]));
      if (c[j] == 0) continue;
      for (std::size_t i = 0; i < v.size(); ++i) rest[i] = rest[i] - m.full[j][i].scaled(c[j]);
    }
  }
  for (const auto& a : rest) {
    auto p = poly_part(a);
    if (!p) return std::nullopt;
    w.push_back(RationalFunc(*p));
  }
  return w;
}

bool exactly_dependent(const std::vector<std::vector<RationalFunc>>& chosen, const std::vector<RationalFunc>& cand) {
  MatRat m(cand.size(), chosen.size() + 1, RationalFunc(cand[0]));
  for (std::size_t j = 0; j <= chosen.size(); ++j) {
    const auto& col = j < chosen.size() ? chosen[j] : cand;
    for (std::size_t i = 0; i < cand.size(); ++i) m(i, j) = col[i];
  }
  return rank_rational(m) <= chosen.size();
}

}  // namespace

SuccessiveMinima succ_minima_periodic(const PeriodicLattice& s, const ConvexBody& c, std::uint64_t cap) {
  CellModel m = cell_model(s, c);
  const Field& F = s.field();
  const std::size_t d = s.dim();
  const std::uint64_t n = m.cell_size(cap);

  // (norm, kind, index): kind 0 = cell point, 1 = reduced basis vector.
  struct Cand {
    QExp norm;
    int kind;
    std::uint64_t idx;
  };
  std::vector<Cand> cands;
  std::vector<KVec> points(n);
  for (std::uint64_t idx = 1; idx < n; ++idx) {
    points[idx] = m.combine(m.frac, m.coeffs(idx));
    cands.push_back({m.basis.norm_of_coords(points[idx]), 0, idx});
  }
  for (std::size_t i = 0; i < d; ++i) cands.push_back({QExp(m.basis.exps[i]), 1, i});
  std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    return std::tie(a.norm, a.kind, a.idx) < std::tie(b.norm, b.kind, b.idx);
  });

  SuccessiveMinima out;
  std::vector<KVec> chosen;
  // Exact forms of the chosen vectors, kept while every candidate has one.
  std::optional<std::vector<std::vector<RationalFunc>>> forms{std::in_place};
  const std::vector<Field::Elt> no_coeffs(s.kind() == PeriodicLattice::Kind::Alpha ? 0 : m.rank(), 0);
  MatFq cell_span(F, 0, m.rank());
  for (const auto& cand : cands) {
    if (chosen.size() == d) break;
    KVec v;
    std::optional<std::vector<RationalFunc>> form;
    if (cand.kind == 0) {
      // F_q-dependent cell points are K-dependent; skip them without arithmetic.
      MatFq row(F, 1, m.rank());
      auto cc = m.coeffs(cand.idx);
      for (std::size_t j = 0; j < cc.size(); ++j) row(0, j) = cc[j];
      MatFq grown = cell_span.stacked(row);
      if (rank_fq(grown) == cell_span.rows()) continue;
      v = points[cand.idx];
      if (forms) form = exact_form(m, s.kind(), cc, v);
      if (form && exactly_dependent(*forms, *form)) continue;
      if (!independent_of(chosen, v)) continue;
      cell_span = grown;
    } else {
      v = zeros(F, d);
      v[cand.idx] = KElem::one(F);
      if (forms) form = exact_form(m, s.kind(), no_coeffs, v);
      if (form && exactly_dependent(*forms, *form)) continue;
      if (!independent_of(chosen, v)) continue;
    }
    if (form)
      forms->push_back(std::move(*form));
    else
      forms.reset();
    out.exps.push_back(cand.norm.exp());
    out.witnesses.push_back(m.basis.ambient(v));
    chosen.push_back(std::move(v));
  }
  return out;
}

QExp packing_radius(const PeriodicLattice& s, const ConvexBody& c, std::uint64_t cap) {
  return QExp(succ_minima_periodic(s, c, cap).exps.front() - 1);
}

BigRational q_power(std::uint32_t q, int e) {
  BigInt p = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(e < 0 ? -e : e));
  return e < 0 ? BigRational(BigInt(1), p) : BigRational(p);
}

BigRational packing_density(const PeriodicLattice& s, const ConvexBody& c, std::uint64_t cap) {
  const int e1 = succ_minima_periodic(s, c, cap).exps.front();
  const int d = static_cast<int>(s.dim());
  const int e = s.period_size() + d * e1 + c.volume().exp() - det_lattice(s.lattice()).exp();
  return q_power(s.field().q(), e);
}

BigInt count_points(const PeriodicLattice& s, const ConvexBody& c, int R, std::uint64_t cap) {
  CellModel m = cell_model(s, c);
  const std::uint64_t n = m.cell_size(cap);
  BigInt inside = 0;
  for (std::uint64_t idx = 0; idx < n; ++idx)
    if (m.basis.norm_of_coords(m.combine(m.frac, m.coeffs(idx))) <= QExp(R)) ++inside;
  int e = 0;
  for (int ei : m.basis.exps) e += std::max(R + 1 - ei, 0);
  return inside * boost::multiprecision::pow(BigInt(s.field().q()), static_cast<unsigned>(e));
}

MinkowskiReport minkowski_search(const PeriodicLattice& s, const ConvexBody& c, std::uint64_t cap) {
  CellModel m = cell_model(s, c);
  const std::uint64_t n = m.cell_size(cap);
  const int d = static_cast<int>(s.dim());
  const int log_det = det_lattice(s.lattice()).exp();

  // Cell points f with ||f||_C <= 1 form the subgroup whose cosets are the classes.
  std::uint64_t in_c = 0;
  std::optional<KVec> point;
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    auto cc = m.coeffs(idx);
    if (m.basis.norm_of_coords(m.combine(m.full, cc)) <= QExp(0)) ++in_c;
    if (idx > 0 && !point) {
      KVec f = m.combine(m.frac, cc);
      if (m.basis.norm_of_coords(f) <= QExp(0)) point = m.basis.ambient(f);
    }
  }
  int log_in_c = 0;
  for (std::uint64_t k = in_c; k > 1; k /= s.field().q()) ++log_in_c;
  if (!point && m.basis.exps.front() <= 0) point = m.basis.ambient([&] {
    KVec e = zeros(s.field(), s.dim());
    e[0] = KElem::one(s.field());
    return e;
  }());

  MinkowskiReport r;
  r.measure = QExp(c.volume().exp() + s.period_size() - log_in_c);
  r.threshold = QExp(log_det - d);
  r.weak_threshold = QExp(log_det - s.period_size() - d);
  r.hypothesis = r.measure > r.threshold;
  r.point = std::move(point);
  return r;
}

QExp d_invariant(const PeriodicLattice& s, const ConvexBody& c) {
  if (s.kind() != PeriodicLattice::Kind::Alpha) throw std::invalid_argument("d_invariant needs an alpha lattice");
  if (s.dim() > 3 || s.N() > 2) throw CapExceeded("d_invariant is limited to d <= 3 and N <= 2");
  CellModel m = cell_model(s, c);
  const Field& F = s.field();
  const std::size_t d = s.dim();
  const std::uint64_t n = m.cell_size(kDefaultCellCap);

  std::vector<KVec> u(n);
  for (std::uint64_t idx = 1; idx < n; ++idx) u[idx] = m.combine(m.frac, m.coeffs(idx));

  QExp best;
  bool found = false;
  for (std::size_t k = 1; k <= d; ++k) {
    if (k > n - 1) break;
    std::vector<bool> rows(d, false);
    std::fill(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::vector<std::size_t> L;
      for (std::size_t i = 0; i < d; ++i)
        if (rows[i]) L.push_back(i);
      // k-subsets {i_1 < ... < i_k} of the nonzero Q indices
      std::vector<std::uint64_t> Q(k);
      std::iota(Q.begin(), Q.end(), 1);
      for (;;) {
        MatFq cm(F, k, m.rank());
        for (std::size_t j = 0; j < k; ++j) {
          auto cc = m.coeffs(Q[j]);
          for (std::size_t t = 0; t < cc.size(); ++t) cm(j, t) = cc[t];
        }
        if (rank_fq(cm) == k) {
          MatK mk(k, k, KElem::zero(F));
          for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) mk(i, j) = u[Q[j]][L[i]];
          KElem det = det_k(mk);
          if (!det.is_exact_zero()) {
            QExp a = det.abs();  // throws if a truncated determinant vanishes to its floor
            if (!found || a < best) best = a;
            found = true;
          }
        }
        // next combination
        std::size_t t = k;
        while (t > 0 && Q[t - 1] == n - 1 - (k - t)) --t;
        if (t == 0) break;
        ++Q[t - 1];
        for (std::size_t j = t; j < k; ++j) Q[j] = Q[j - 1] + 1;
      }
    } while (std::prev_permutation(rows.begin(), rows.end()));
  }
  if (!found) throw Undefined("no nonzero determinant: d invariant is undefined");
  return best;
}

bool sandwich_hypothesis(const PeriodicLattice& s, const ConvexBody& c) {
  if (s.kind() != PeriodicLattice::Kind::Alpha) return false;
  CellModel m = cell_model(s, c);
  for (const auto& a : m.alpha) {
    if (!a.is_exact()) return false;
    const RationalFunc f = a.rational().frac_part();
    if (!f.is_zero() && f.den().deg() <= s.N()) return false;
  }
  return true;
}

BoundsReport check_bounds(const PeriodicLattice& s, const ConvexBody& c, std::uint64_t cap) {
  BoundsReport r;
  r.exps = succ_minima_periodic(s, c, cap).exps;
  r.log_det = det_lattice(s.lattice()).exp();
  r.log_volume = c.volume().exp();
  r.period = s.period_size();
  const int d = static_cast<int>(s.dim());
  const int bound = r.log_det - r.period - r.log_volume;
  const int sum = std::accumulate(r.exps.begin(), r.exps.end(), 0);
  r.lambda1_ok = d * r.exps.front() <= bound;
  r.product_ok = sum <= bound;
  if (s.kind() == PeriodicLattice::Kind::Alpha) {
    BoundsReport::Sandwich w;
    w.hypothesis = sandwich_hypothesis(s, c);
    w.upper = r.log_det - (s.N() + 1) - r.log_volume;
    if (s.dim() <= 3 && s.N() <= 2) {
      try {
        w.d_exp = d_invariant(s, c).exp();
      } catch (const Undefined&) {
      }
    }
    if (w.d_exp) {
      w.evaluated = true;
      w.lower = *w.d_exp + r.log_det - r.log_volume;
      w.holds = w.lower <= sum && sum <= w.upper;
      w.ok = w.holds || !w.hypothesis;
    }
    r.sandwich = w;
  }
  return r;
}

}  // namespace ffgeom
