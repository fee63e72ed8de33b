#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ffgeom/errors.hpp"
#include "ffgeom/lattice.hpp"

namespace ffgeom {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Default limit on q^n, the number of points of S in a fundamental cell.
inline constexpr std::uint64_t kDefaultCellCap = std::uint64_t{1} << 20;

/// alpha is N-rational: Q alpha lies in the lattice for the nonzero witness Q, deg Q <= N.
class NRational : public Error {
 public:
  NRational(const std::string& what, Poly witness) : Error(what), witness_(std::move(witness)) {}
  const Poly& witness() const noexcept { return witness_; }

 private:
  Poly witness_;
};

/// Coordinates given in the ambient space or in the reduced basis of the lattice.
enum class Frame { Ambient, Reduced };

/// A (Lambda, q^n)-periodic lattice S = span_Fq(f_1..f_n) + Lambda.
///
/// The cell frame is the reduced basis v^(1..d) of Lambda for the unit ball;
/// the fundamental domain is D = m v^(1) + ... + m v^(d) and the generators
/// f_j are stored as coordinate vectors in that basis with entries in m.
/// For Lambda(alpha, q^N) the generators are <x^j alpha>, j = 0..N, so the
/// cell point of Q = sum c_j x^j is <Q alpha> = sum c_j <x^j alpha>.
class PeriodicLattice {
 public:
  enum class Kind { Plain, Alpha, Coset };

  /// S = Lambda.
  static PeriodicLattice plain(const Lattice& l);
  /// CosetForm; reps must be F_q-independent and lie in D (reduced coordinates in m).
  static PeriodicLattice coset(const Lattice& l, const std::vector<KVec>& reps, Frame frame,
                               std::uint64_t cap = kDefaultCellCap);

  Kind kind() const noexcept { return kind_; }
  const Lattice& lattice() const noexcept { return lattice_; }
  const ReducedBasis& frame() const noexcept { return frame_; }
  std::size_t dim() const noexcept { return lattice_.dim(); }
  const Field& field() const noexcept { return lattice_.field(); }
  /// alpha in reduced coordinates, reduced into m (zero for non-alpha kinds).
  const KVec& alpha() const noexcept { return alpha_; }
  /// N for AlphaForm; 0 otherwise.
  int N() const noexcept { return N_; }
  const std::vector<KVec>& generators() const noexcept { return gens_; }
  /// log_q #(D ∩ S).
  int period_size() const noexcept { return static_cast<int>(gens_.size()); }
  bool is_exact() const;

 private:
  friend PeriodicLattice make_alpha_lattice(const Lattice&, const KVec&, int, Frame, std::uint64_t);
  PeriodicLattice(Lattice l, Kind k);

  Lattice lattice_;
  ReducedBasis frame_;
  Kind kind_;
  KVec alpha_;
  int N_ = 0;
  std::vector<KVec> gens_;
};

/// Lambda(alpha, q^N) = union over deg Q <= N of (Q alpha + Lambda).
/// Throws NRational (with witness) if some nonzero Q of degree <= N maps alpha
/// into Lambda, and InsufficientPrecision if a truncated alpha cannot decide it.
PeriodicLattice make_alpha_lattice(const Lattice& l, const KVec& alpha, int N, Frame frame,
                                   std::uint64_t cap = kDefaultCellCap);

/// The cell of S seen from the reduced basis of Lambda for a body C.
/// T maps cell-frame coordinates to C-frame coordinates (unimodular).
struct CellModel {
  ReducedBasis basis;
  MatPoly T;
  /// T f_j (full vectors) and <T f_j> (fractional parts), C-frame coordinates.
  std::vector<KVec> full;
  std::vector<KVec> frac;
  /// alpha in C-frame coordinates (AlphaForm only; zero otherwise).
  KVec alpha;

  std::size_t rank() const noexcept { return frac.size(); }
  /// q^n; throws CapExceeded above `cap`.
  std::uint64_t cell_size(std::uint64_t cap) const;
  /// Coefficient vector of cell point `index` (constant coefficient fastest).
  std::vector<Field::Elt> coeffs(std::uint64_t index) const;
  /// sum c_j v_j over the given generator list, exact zero for c = 0.
  KVec combine(const std::vector<KVec>& gens, const std::vector<Field::Elt>& c) const;
};

CellModel cell_model(const PeriodicLattice& s, const ConvexBody& c);

/// One cell point: Q (AlphaForm; the coefficient polynomial otherwise),
/// its fractional coordinates in the reduced basis and its distance to Lambda.
struct OrbitPoint {
  Poly Q;
  KVec coords;
  QExp norm;
};

/// All q^n cell points for the unit ball, Q = 0 first.
std::vector<OrbitPoint> frac_orbit(const PeriodicLattice& s, std::uint64_t cap = kDefaultCellCap);

struct SuccessiveMinima {
  std::vector<int> exps;
  /// Ambient vectors of S realizing the minima.
  std::vector<KVec> witnesses;
};

SuccessiveMinima succ_minima_periodic(const PeriodicLattice& s, const ConvexBody& c,
                                      std::uint64_t cap = kDefaultCellCap);

/// q^{-1} lambda_1.
QExp packing_radius(const PeriodicLattice& s, const ConvexBody& c, std::uint64_t cap = kDefaultCellCap);

/// Density of the densest packing S + x^{e_1 - 1} C: q^n lambda_1^d m(C) / det(Lambda).
BigRational packing_density(const PeriodicLattice& s, const ConvexBody& c, std::uint64_t cap = kDefaultCellCap);

/// |x^R C ∩ S|.
BigInt count_points(const PeriodicLattice& s, const ConvexBody& c, int R = 0, std::uint64_t cap = kDefaultCellCap);

struct MinkowskiReport {
  /// m(C + D ∩ S) = m(C) * #classes of cell points modulo C.
  QExp measure;
  /// det(Lambda) / q^d: above this a nonzero point is guaranteed.
  QExp threshold;
  /// det(Lambda) / q^{n+d}, the weaker threshold (not sufficient in general).
  QExp weak_threshold;
  bool hypothesis;
  /// A nonzero point of S in C (ambient coordinates), if one exists.
  std::optional<KVec> point;
};

MinkowskiReport minkowski_search(const PeriodicLattice& s, const ConvexBody& c, std::uint64_t cap = kDefaultCellCap);

/// min over k, coordinate subsets and k-tuples of distinct Q (deg <= N) of the
/// nonzero |det(<Q_j alpha_l>)|, with alpha in the reduced basis for C.
/// AlphaForm with d <= 3 and N <= 2 only (CapExceeded otherwise).
QExp d_invariant(const PeriodicLattice& s, const ConvexBody& c);

struct BoundsReport {
  std::vector<int> exps;
  int log_det = 0;
  int log_volume = 0;
  int period = 0;
  /// d e_1 <= log det - n - log m(C)
  bool lambda1_ok = false;
  /// sum e_i <= log det - n - log m(C)
  bool product_ok = false;

  struct Sandwich {
    bool hypothesis = false;
    /// false when d_invariant is out of scope or undefined
    bool evaluated = false;
    std::optional<int> d_exp;
    int lower = 0;  // log d + log det - log m(C)
    int upper = 0;  // log det - (N+1) - log m(C)
    /// lower <= sum e_i <= upper
    bool holds = false;
    /// only a violation under the hypothesis counts as a failure
    bool ok = true;
  };
  /// Evaluated for AlphaForm only.
  std::optional<Sandwich> sandwich;

  bool ok() const { return lambda1_ok && product_ok && (!sandwich || !sandwich->evaluated || sandwich->ok); }
};

BoundsReport check_bounds(const PeriodicLattice& s, const ConvexBody& c, std::uint64_t cap = kDefaultCellCap);

/// Each alpha_l (C frame) is 0 or has denominator degree > N: R_{<=N} alpha_l ∩ R = {0}.
bool sandwich_hypothesis(const PeriodicLattice& s, const ConvexBody& c);

/// q^e as an exact rational.
BigRational q_power(std::uint32_t q, int e);

}  // namespace ffgeom
