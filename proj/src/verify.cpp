#include "ffgeom/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "ffgeom/errors.hpp"
#include "ffgeom/hankel.hpp"
#include "ffgeom/oracle.hpp"

namespace ffgeom {

Poly Sampler::poly(const Field& F, int max_deg) {
  std::vector<Field::Elt> c(static_cast<std::size_t>(max_deg + 1));
  for (auto& v : c) v = static_cast<Field::Elt>(below(F.q()));
  return Poly(F, c);
}

Poly Sampler::monic(const Field& F, int deg) {
  std::vector<Field::Elt> c(static_cast<std::size_t>(deg + 1));
  for (auto& v : c) v = static_cast<Field::Elt>(below(F.q()));
  c.back() = 1;
  return Poly(F, c);
}

RationalFunc Sampler::laurent(const Field& F, int lo, int hi) {
  RationalFunc r(F);
  for (int k = lo; k <= hi; ++k)
    if (below(2) == 0) r += RationalFunc::x_pow(F, k).scaled(nonzero(F));
  return r;
}

MatRat Sampler::matrix(const Field& F, std::size_t d, int lo, int hi) {
  for (;;) {
    MatRat m(d, d, RationalFunc(F));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m(i, j) = laurent(F, lo, hi);
    if (!det_rat(m).is_zero()) return m;
  }
}

RationalFunc Sampler::proper(const Field& F, int max_den) {
  Poly b = monic(F, between(1, max_den));
  return RationalFunc(poly(F, b.deg() - 1), b);
}

PeriodicLattice Sampler::alpha_lattice(const Lattice& l, int N) {
  const Field& F = l.field();
  for (;;) {
    KVec a;
    for (std::size_t i = 0; i < l.dim(); ++i) a.push_back(KElem(proper(F, N + 2)));
    try {
      return make_alpha_lattice(l, a, N, Frame::Reduced);
    } catch (const NRational&) {
    }
  }
}

bool contains(const PeriodicLattice& s, const KVec& p) {
  KVec c = s.frame().coords(p);
  for (auto& x : c) x = x.frac();
  for (const auto& o : frac_orbit(s)) {
    bool same = true;
    for (std::size_t i = 0; i < c.size() && same; ++i) same = c[i].rational() == o.coords[i].rational();
    if (same) return true;
  }
  return false;
}

Grid parse_grid(const std::string& text) {
  Grid g;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    if (part.empty()) continue;
    auto eq = part.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=values in '" + part + "'", "grid");
    std::string key = part.substr(0, eq);
    std::vector<int> vals;
    std::stringstream vs(part.substr(eq + 1));
    std::string v;
    while (std::getline(vs, v, ',')) {
      try {
        std::size_t used = 0;
        vals.push_back(std::stoi(v, &used));
        if (used != v.size()) throw std::invalid_argument(v);
      } catch (const std::exception&) {
        throw ParseError("bad integer '" + v + "'", "grid." + key);
      }
    }
    if (vals.empty()) throw ParseError("no values", "grid." + key);
    if (key == "q") {
      g.q.clear();
      for (int x : vals) {
        if (x < 2) throw ParseError("bad field order", "grid.q");
        g.q.push_back(static_cast<std::uint32_t>(x));
      }
    } else if (key == "d") {
      g.d.clear();
      for (int x : vals) {
        if (x < 2) throw ParseError("dimension must be at least 2", "grid.d");
        g.d.push_back(static_cast<std::size_t>(x));
      }
    } else if (key == "N") {
      for (int x : vals)
        if (x < 0) throw ParseError("must be nonnegative", "grid.N");
      g.N = vals;
    } else {
      throw ParseError("unknown key '" + key + "'", "grid");
    }
  }
  return g;
}

bool VerifyReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.ok(); });
}

namespace {

std::string show(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

std::string show(const QExp& e) { return e.is_bottom() ? "0" : "q^" + std::to_string(e.exp()); }

/// Thrown by a check body when the instance is out of scope for it.
struct Skip {};

class Table {
 public:
  explicit Table(std::vector<std::string> names) {
    for (auto& n : names) {
      index_[n] = rows_.size();
      rows_.emplace_back();
      rows_.back().name = n;
    }
  }

  /// body returns an empty string on success, otherwise a description.
  void run(const std::string& name, const std::string& tag, const std::function<std::string()>& body) {
    CheckRow& r = rows_[index_.at(name)];
    ++r.instances;
    try {
      std::string msg = body();
      if (msg.empty())
        ++r.passed;
      else
        fail(r, tag + ": " + msg);
    } catch (const Skip&) {
      ++r.skipped;
    } catch (const BudgetExceeded&) {
      ++r.skipped;
    } catch (const CapExceeded&) {
      ++r.skipped;
    } catch (const std::exception& e) {
      fail(r, tag + ": threw " + e.what());
    }
  }

  std::vector<CheckRow> rows() && { return std::move(rows_); }

 private:
  static void fail(CheckRow& r, std::string msg) {
    if (r.failures.size() < 5) r.failures.push_back(std::move(msg));
  }

  std::vector<CheckRow> rows_;
  std::map<std::string, std::size_t> index_;
};

}  // namespace

VerifyReport verify(const Grid& grid, std::uint64_t seed, int per_cell) {
  Table t({"minkowski-equality", "succ-minima", "count-points", "covrad", "covrad-bounds", "packing-radius",
           "density", "minima-bounds", "sandwich", "mink-search"});
  Sampler rs(seed);
  for (std::uint32_t q : grid.q)
    for (std::size_t d : grid.d)
      for (int N : grid.N)
        for (int k = 0; k < per_cell; ++k) {
          const Field& F = Field::of_order(q);
          std::ostringstream tag;
          tag << "q=" << q << " d=" << d << " N=" << N << " #" << k;
          const std::string id = tag.str();
          Lattice l(rs.matrix(F, d, -1, 1));
          ConvexBody C = k % 2 == 0 ? ConvexBody::identity(F, d) : ConvexBody(rs.matrix(F, d, -1, 0));
          PeriodicLattice s = rs.alpha_lattice(l, N);
          const auto rb = reduce_lattice(l, C);

          t.run("minkowski-equality", id, [&]() -> std::string {
            int sum = std::accumulate(rb.exps.begin(), rb.exps.end(), 0);
            int want = det_lattice(l).exp() - C.volume().exp();
            return sum == want ? "" : "sum e_i = " + std::to_string(sum) + ", expected " + std::to_string(want);
          });
          t.run("succ-minima", id, [&]() -> std::string {
            auto minima = succ_minima_periodic(s, C).exps;
            auto o = succmin_oracle(s, C);
            return o == minima ? "" : "closed " + show(minima) + ", oracle " + show(o);
          });
          t.run("count-points", id, [&]() -> std::string {
            for (int R = 0; R <= 1; ++R) {
              BigInt n = count_points(s, C, R);
              auto pts = enumerate_points(s, C, R);
              if (n != pts.size())
                return "R=" + std::to_string(R) + ": count " + n.str() + ", enumerated " + std::to_string(pts.size());
            }
            return "";
          });
          t.run("covrad", id, [&]() -> std::string {
            QExp cr = covrad_periodic(s, C);
            QExp o = covrad_oracle(s, C, default_grid_depth(s, C));
            return o == cr ? "" : "closed " + show(cr) + ", oracle " + show(o);
          });
          t.run("covrad-bounds", id, [&]() -> std::string {
            QExp r = covrad_periodic(s, C);
            auto b = covrad_bounds(l, N, C);
            bool ok = BigRational(r.exp()) >= b.lower && r <= b.upper;
            return ok ? "" : show(r) + " outside [" + b.lower.str() + ", " + show(b.upper) + "]";
          });
          t.run("packing-radius", id, [&]() -> std::string {
            auto m = succ_minima_periodic(s, C).exps;
            QExp p = packing_radius(s, C);
            return p == QExp(m.front() - 1) ? "" : show(p) + " but e_1 = " + std::to_string(m.front());
          });
          t.run("density", id, [&]() -> std::string {
            BigRational want = packing_density(s, C);
            int r0 = density_threshold(s, C);
            for (int R = r0; R <= r0 + 1; ++R) {
              BigRational got = density_oracle(s, C, R);
              if (got != want) return "R=" + std::to_string(R) + ": oracle " + got.str() + ", closed " + want.str();
            }
            return "";
          });
          t.run("minima-bounds", id, [&]() -> std::string {
            auto b = check_bounds(s, C);
            if (!b.lambda1_ok) return "lambda_1 bound fails: e = " + show(b.exps);
            if (!b.product_ok) return "product bound fails: e = " + show(b.exps);
            return "";
          });
          t.run("sandwich", id, [&]() -> std::string {
            if (d > 3 || N > 2) throw Skip{};
            auto b = check_bounds(s, C);
            if (!b.sandwich || !b.sandwich->evaluated || !b.sandwich->hypothesis) throw Skip{};
            const auto& w = *b.sandwich;
            int sum = std::accumulate(b.exps.begin(), b.exps.end(), 0);
            return w.holds ? ""
                           : std::to_string(w.lower) + " <= " + std::to_string(sum) + " <= " + std::to_string(w.upper) +
                                 " fails";
          });
          t.run("mink-search", id, [&]() -> std::string {
            ConvexBody big(rs.matrix(F, d, -2, 1));
            auto r = minkowski_search(s, big);
            if (r.point) {
              bool zero = std::all_of(r.point->begin(), r.point->end(), [](const KElem& e) { return e.is_exact_zero(); });
              if (zero) return "returned the zero vector";
              if (norm_in_body(*r.point, big) > QExp(0)) return "point outside C";
              if (!contains(s, *r.point)) return "point not in S";
            } else if (r.hypothesis) {
              return "hypothesis holds but no point";
            }
            return "";
          });
        }
  return VerifyReport{std::move(t).rows()};
}

}  // namespace ffgeom
