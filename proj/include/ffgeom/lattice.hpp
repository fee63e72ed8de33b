#pragma once

#include <vector>

#include "ffgeom/kelem.hpp"
#include "ffgeom/matrix.hpp"
#include "ffgeom/qexp.hpp"

namespace ffgeom {

/// C = h O^d for an invertible matrix h over F_q(x).
class ConvexBody {
 public:
  /// Throws SingularInput if det h = 0.
  explicit ConvexBody(MatRat h);
  /// The unit ball O^d.
  static ConvexBody identity(const Field& f, std::size_t d);
  /// x^k O^d, the sup-norm ball of radius q^k.
  static ConvexBody ball(const Field& f, std::size_t d, int k);

  std::size_t dim() const noexcept { return h_.rows(); }
  const Field& field() const noexcept { return det_.field(); }
  const MatRat& h() const noexcept { return h_; }
  const MatRat& adj() const noexcept { return adj_; }
  const RationalFunc& det() const noexcept { return det_; }
  /// m(C) = |det h|, normalized so that m(O^d) = 1.
  QExp volume() const { return det_.abs(); }
  bool is_identity() const noexcept { return identity_; }

 private:
  MatRat h_;
  MatRat adj_;
  RationalFunc det_;
  bool identity_ = false;
};

/// Lambda = g R^d; the columns of g are the basis vectors.
class Lattice {
 public:
  /// Requires d >= 2 and det g != 0 (throws std::invalid_argument / SingularInput).
  explicit Lattice(MatRat basis);
  /// R^d.
  static Lattice standard(const Field& f, std::size_t d);

  std::size_t dim() const noexcept { return g_.rows(); }
  const Field& field() const noexcept { return det_.field(); }
  const MatRat& basis() const noexcept { return g_; }
  const RationalFunc& det_g() const noexcept { return det_; }
  /// The lattice x^k Lambda.
  Lattice scaled(int k) const;

 private:
  MatRat g_;
  RationalFunc det_;
};

/// A basis of successive minima of a lattice with respect to a body.
/// vectors(): columns v^(1..d) in ambient coordinates, ordered by exps();
/// transform(): unimodular U with vectors = g U.
struct ReducedBasis {
  MatRat vectors;
  std::vector<int> exps;
  ConvexBody body;
  MatPoly transform;
  /// vectors^{-1}: maps ambient vectors to coordinates in this basis.
  MatRat to_coords;

  std::size_t dim() const noexcept { return exps.size(); }
  /// ||sum c_i v^(i)||_C = max_i |c_i| q^{e_i} (valid for any c in K_inf^d).
  QExp norm_of_coords(const KVec& c) const;
  KVec coords(const KVec& ambient) const { return to_coords * ambient; }
  KVec ambient(const KVec& coords) const { return vectors * coords; }
};

/// ||v||_C = ||h^{-1} v||_inf, computed as max_i |(adj h v)_i| / |det h|.
/// Bottom iff v = 0; InsufficientPrecision if a leading term is unknown.
QExp norm_in_body(const KVec& v, const ConvexBody& c);

ReducedBasis reduce_lattice(const Lattice& l, const ConvexBody& c);
ReducedBasis reduce_lattice(const Lattice& l);

/// det(Lambda) = |det g|.
QExp det_lattice(const Lattice& l);

/// Covering radius of a lattice: q^{-1} lambda_d.
QExp covrad_lattice(const Lattice& l, const ConvexBody& c);

}  // namespace ffgeom
