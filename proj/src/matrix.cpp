#include "ffgeom/matrix.hpp"

#include <algorithm>
#include <numeric>

#include "ffgeom/errors.hpp"

namespace ffgeom {

MatFq MatFq::transposed() const {
  MatFq t(*F_, cols(), rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) t(j, i) = (*this)(i, j);
  return t;
}

MatFq MatFq::stacked(const MatFq& below) const {
  if (below.cols() != cols()) throw std::invalid_argument("stacked: column counts differ");
  MatFq s(*F_, rows() + below.rows(), cols());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) s(i, j) = (*this)(i, j);
  for (std::size_t i = 0; i < below.rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) s(rows() + i, j) = below(i, j);
  return s;
}

namespace {

// In-place reduced row echelon form; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(MatFq& m) {
  const Field& F = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const auto inv = F.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = F.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const auto f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = F.sub(m(i, j), F.mul(f, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank_fq(const MatFq& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  MatFq w = m;
  return rref(w).size();
}

std::optional<std::vector<Field::Elt>> kernel_vector(const MatFq& m) {
  const Field& F = m.field();
  MatFq w = m;
  const auto pivots = rref(w);
  if (pivots.size() == m.cols()) return std::nullopt;
  std::size_t free = 0;
  for (std::size_t k = 0; k < pivots.size() && pivots[k] == free; ++k) ++free;
  std::vector<Field::Elt> c(m.cols(), 0);
  c[free] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r)
    if (pivots[r] < free) c[pivots[r]] = F.neg(w(r, free));
  return c;
}

MatPoly identity_poly(const Field& f, std::size_t n) {
  MatPoly m(n, n, Poly(f));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::one(f);
  return m;
}

MatRat identity_rat(const Field& f, std::size_t n) {
  MatRat m(n, n, RationalFunc(f));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RationalFunc::constant(f, 1);
  return m;
}

namespace {

template <class T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b, const T& zero) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix<T> c(a.rows(), b.cols(), zero);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

}  // namespace

MatPoly operator*(const MatPoly& a, const MatPoly& b) {
  return matmul(a, b, Poly(a.rows() ? a(0, 0).field() : b(0, 0).field()));
}

MatRat operator*(const MatRat& a, const MatRat& b) {
  return matmul(a, b, RationalFunc(a.rows() ? a(0, 0).field() : b(0, 0).field()));
}

MatRat to_rat(const MatPoly& m) {
  MatRat r(m.rows(), m.cols(), RationalFunc(m(0, 0).field()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = RationalFunc(m(i, j));
  return r;
}

MatPoly to_poly(const MatRat& m) {
  MatPoly r(m.rows(), m.cols(), Poly(m(0, 0).field()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_poly()) throw std::invalid_argument("to_poly: entry is not a polynomial");
      r(i, j) = m(i, j).num();
    }
  return r;
}

std::vector<RationalFunc> operator*(const MatRat& a, const std::vector<RationalFunc>& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  std::vector<RationalFunc> r(a.rows(), RationalFunc(a(0, 0).field()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero() && !v[j].is_zero()) r[i] += a(i, j) * v[j];
  return r;
}

KVec operator*(const MatRat& a, const KVec& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  KVec r(a.rows(), KElem::zero(a(0, 0).field()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) r[i] = r[i] + KElem(a(i, j)) * v[j];
  return r;
}

KVec operator*(const MatPoly& a, const KVec& v) { return to_rat(a) * v; }

Poly det_poly(const MatPoly& m) {
  if (!m.square()) throw std::invalid_argument("det_poly: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) throw std::invalid_argument("det_poly: empty matrix");
  const Field& F = m(0, 0).field();
  MatPoly a = m;
  Poly prev = Poly::one(F);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return Poly(F);
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = Poly(F);
    }
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

namespace {

// Scales each column by the lcm of its denominators; returns the polynomial
// matrix and the product of the scale factors.
std::pair<MatPoly, Poly> clear_columns(const MatRat& m) {
  const Field& F = m(0, 0).field();
  MatPoly p(m.rows(), m.cols(), Poly(F));
  Poly scale = Poly::one(F);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Poly c = Poly::one(F);
    for (std::size_t i = 0; i < m.rows(); ++i) c = lcm(c, m(i, j).den());
    for (std::size_t i = 0; i < m.rows(); ++i) p(i, j) = m(i, j).num() * (c / m(i, j).den());
    scale *= c;
  }
  return {std::move(p), std::move(scale)};
}

MatRat minor_of(const MatRat& m, std::size_t r, std::size_t c) {
  MatRat s(m.rows() - 1, m.cols() - 1, RationalFunc(m(0, 0).field()));
  for (std::size_t i = 0, si = 0; i < m.rows(); ++i) {
    if (i == r) continue;
    for (std::size_t j = 0, sj = 0; j < m.cols(); ++j) {
      if (j == c) continue;
      s(si, sj++) = m(i, j);
    }
    ++si;
  }
  return s;
}

}  // namespace

RationalFunc det_rat(const MatRat& m) {
  if (!m.square()) throw std::invalid_argument("det_rat: matrix not square");
  if (m.rows() == 0) throw std::invalid_argument("det_rat: empty matrix");
  auto [p, scale] = clear_columns(m);
  return RationalFunc(det_poly(p), scale);
}

KElem det_k(const MatK& m) {
  if (!m.square() || m.rows() == 0) throw std::invalid_argument("det_k: matrix not square");
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  KElem acc = KElem::zero(m(0, 0).field());
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_exact_zero()) continue;
    MatK s(n - 1, n - 1, m(0, 0));
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, sk = 0; k < n; ++k)
        if (k != j) s(i - 1, sk++) = m(i, k);
    KElem term = m(0, j) * det_k(s);
    acc = j % 2 ? acc - term : acc + term;
  }
  return acc;
}

MatRat adjugate(const MatRat& m) {
  if (!m.square() || m.rows() == 0) throw std::invalid_argument("adjugate: matrix not square");
  const std::size_t n = m.rows();
  const Field& F = m(0, 0).field();
  MatRat adj(n, n, RationalFunc(F));
  if (n == 1) {
    adj(0, 0) = RationalFunc::constant(F, 1);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RationalFunc c = det_rat(minor_of(m, i, j));
      adj(j, i) = (i + j) % 2 ? -c : c;
    }
  return adj;
}

MatRat inverse(const MatRat& m) {
  const RationalFunc d = det_rat(m);
  if (d.is_zero()) throw SingularInput("matrix is singular");
  MatRat adj = adjugate(m);
  const RationalFunc di = d.inverse();
  for (std::size_t i = 0; i < adj.rows(); ++i)
    for (std::size_t j = 0; j < adj.cols(); ++j) adj(i, j) *= di;
  return adj;
}

PopovResult popov_reduce(const MatPoly& m) {
  if (!m.square() || m.rows() == 0) throw std::invalid_argument("popov_reduce: matrix not square");
  const std::size_t n = m.rows();
  const Field& F = m(0, 0).field();
  if (det_poly(m).is_zero()) throw SingularInput("popov_reduce: determinant is zero");

  MatPoly r = m;
  MatPoly u = identity_poly(F, n);
  auto col_deg = [&](std::size_t j) {
    int d = Poly::kDegZero;
    for (std::size_t i = 0; i < n; ++i) d = std::max(d, r(i, j).deg());
    return d;
  };

  for (;;) {
    std::vector<int> degs(n);
    for (std::size_t j = 0; j < n; ++j) degs[j] = col_deg(j);
    MatFq lead(F, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) lead(i, j) = r(i, j).coeff(degs[j]);
    auto c = kernel_vector(lead);
    if (!c) break;
    // Highest-degree involved column, lowest index on ties.
    std::size_t k = n;
    for (std::size_t j = 0; j < n; ++j)
      if ((*c)[j] != 0 && (k == n || degs[j] > degs[k])) k = j;
    const int delta = degs[k];
    std::vector<Poly> rk(n, Poly(F)), uk(n, Poly(F));
    for (std::size_t j = 0; j < n; ++j) {
      if ((*c)[j] == 0) continue;
      for (std::size_t i = 0; i < n; ++i) {
        rk[i].add_scaled_shift(r(i, j), (*c)[j], delta - degs[j]);
        uk[i].add_scaled_shift(u(i, j), (*c)[j], delta - degs[j]);
      }
    }
    r.set_col(k, rk);
    u.set_col(k, uk);
  }

  std::vector<int> degs(n);
  for (std::size_t j = 0; j < n; ++j) degs[j] = col_deg(j);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return degs[a] < degs[b]; });
  PopovResult out{MatPoly(n, n, Poly(F)), MatPoly(n, n, Poly(F)), {}};
  for (std::size_t j = 0; j < n; ++j) {
    out.reduced.set_col(j, r.col(order[j]));
    out.transform.set_col(j, u.col(order[j]));
    out.degrees.push_back(degs[order[j]]);
  }
  return out;
}

std::size_t rank_rational(const MatRat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  auto [a, scale] = clear_columns(m);
  const Field& F = m(0, 0).field();
  // Fraction-free elimination on rows; each new row is divided by its content
  // to keep degrees small.
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t p = rank;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != rank)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(rank, j));
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      if (a(i, c).is_zero()) continue;
      const Poly g = gcd(a(i, c), a(rank, c));
      const Poly fi = a(rank, c) / g, fr = a(i, c) / g;
      Poly content(F);
      for (std::size_t j = c; j < a.cols(); ++j) {
        a(i, j) = a(i, j) * fi - a(rank, j) * fr;
        content = gcd(content, a(i, j));
      }
      if (!content.is_zero() && content.deg() > 0)
        for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = a(i, j) / content;
    }
    ++rank;
  }
  return rank;
}

bool RationalSpan::add(const std::vector<RationalFunc>& v) {
  if (v.size() != dim_) throw std::invalid_argument("RationalSpan: dimension mismatch");
  std::vector<RationalFunc> w = v;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const RationalFunc f = w[pivots_[r]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (!rows_[r][j].is_zero()) w[j] -= f * rows_[r][j];
  }
  std::size_t p = 0;
  while (p < dim_ && w[p].is_zero()) ++p;
  if (p == dim_) return false;
  const RationalFunc inv = w[p].inverse();
  for (auto& e : w) e *= inv;
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  return true;
}

}  // namespace ffgeom
