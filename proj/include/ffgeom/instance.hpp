#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ffgeom/periodic.hpp"

namespace ffgeom {

/// Instance files (JSON).
///
///   {
///     "q": 4, "modulus": "t^2+t+1",      modulus optional, prime powers only
///     "d": 2,
///     "basis": [["x", "x+1"], ["1", "1"]],  row-major; columns are basis vectors
///     "body":  [["1", "0"], ["0", "1"]],    optional, default O^d
///     "alpha": ["x^-1", "{floor: -8, top: -1, coeffs: [...]}"],
///     "frame": "reduced" | "ambient",       coordinates of alpha and reps
///     "N": 1,
///     "reps": [["x^-1", "0"], ...],         coset form, instead of alpha
///     "precision": -12                      optional: truncate rational alpha
///   }
///
/// Missing alpha and reps give the plain lattice S = Lambda. Errors are
/// ParseError and name the offending field.
struct Instance {
  const Field* field = nullptr;
  MatRat basis;
  std::optional<MatRat> body;
  std::optional<KVec> alpha;
  std::optional<std::vector<KVec>> reps;
  Frame frame = Frame::Ambient;
  int N = 0;
  std::optional<int> precision;

  std::size_t dim() const noexcept { return basis.rows(); }
  Lattice lattice() const;
  ConvexBody convex_body() const;
  PeriodicLattice periodic(std::uint64_t cap = kDefaultCellCap) const;
};

Instance instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const Instance& in);
Instance load_instance(const std::string& path);

nlohmann::json matrix_to_json(const MatRat& m);

}  // namespace ffgeom
