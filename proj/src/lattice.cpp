#include "ffgeom/lattice.hpp"

#include "ffgeom/errors.hpp"

namespace ffgeom {

ConvexBody::ConvexBody(MatRat h) : h_(std::move(h)), adj_(adjugate(h_)), det_(det_rat(h_)) {
  if (det_.is_zero()) throw SingularInput("convex body matrix is singular");
  identity_ = h_ == identity_rat(field(), dim());
}

ConvexBody ConvexBody::identity(const Field& f, std::size_t d) { return ConvexBody(identity_rat(f, d)); }

ConvexBody ConvexBody::ball(const Field& f, std::size_t d, int k) {
  MatRat h(d, d, RationalFunc(f));
  for (std::size_t i = 0; i < d; ++i) h(i, i) = RationalFunc::x_pow(f, k);
  return ConvexBody(std::move(h));
}

Lattice::Lattice(MatRat basis) : g_(std::move(basis)), det_(RationalFunc(g_(0, 0).field())) {
  if (!g_.square() || g_.rows() < 2) throw std::invalid_argument("lattice basis must be d x d with d >= 2");
  det_ = det_rat(g_);
  if (det_.is_zero()) throw SingularInput("lattice basis is singular");
}

Lattice Lattice::standard(const Field& f, std::size_t d) { return Lattice(identity_rat(f, d)); }

Lattice Lattice::scaled(int k) const {
  MatRat g = g_;
  const RationalFunc s = RationalFunc::x_pow(field(), k);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= s;
  return Lattice(std::move(g));
}

QExp ReducedBasis::norm_of_coords(const KVec& c) const {
  return sup_norm(c, exps);
}

QExp norm_in_body(const KVec& v, const ConvexBody& c) {
  if (v.size() != c.dim()) throw std::invalid_argument("norm_in_body: dimension mismatch");
  if (c.is_identity()) return sup_norm(v);
  return sup_norm(c.adj() * v) / c.volume();
}

ReducedBasis reduce_lattice(const Lattice& l, const ConvexBody& c) {
  const std::size_t d = l.dim();
  if (c.dim() != d) throw std::invalid_argument("reduce_lattice: body dimension mismatch");
  const Field& F = l.field();
  MatRat m = c.is_identity() ? l.basis() : inverse(c.h()) * l.basis();
  Poly den = Poly::one(F);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) den = lcm(den, m(i, j).den());
  MatPoly p(d, d, Poly(F));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) p(i, j) = m(i, j).num() * (den / m(i, j).den());
  PopovResult red = popov_reduce(p);
  std::vector<int> exps;
  for (int e : red.degrees) exps.push_back(e - den.deg());
  MatRat vectors = l.basis() * to_rat(red.transform);
  MatRat inv = inverse(vectors);
  return ReducedBasis{std::move(vectors), std::move(exps), c, std::move(red.transform), std::move(inv)};
}

ReducedBasis reduce_lattice(const Lattice& l) { return reduce_lattice(l, ConvexBody::identity(l.field(), l.dim())); }

QExp det_lattice(const Lattice& l) { return l.det_g().abs(); }

QExp covrad_lattice(const Lattice& l, const ConvexBody& c) {
  return QExp(reduce_lattice(l, c).exps.back() - 1);
}

}  // namespace ffgeom
