#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ffgeom/periodic.hpp"

namespace ffgeom {

/// Random instances. Draws go through rng() % n rather than std
/// distributions so that a seed gives the same instances on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  Field::Elt nonzero(const Field& F) { return static_cast<Field::Elt>(1 + below(F.q() - 1)); }

  Poly poly(const Field& F, int max_deg);
  Poly monic(const Field& F, int deg);
  /// Laurent polynomial with terms x^lo .. x^hi, each present with probability 1/2.
  RationalFunc laurent(const Field& F, int lo, int hi);
  /// Nonsingular d x d matrix of Laurent polynomials.
  MatRat matrix(const Field& F, std::size_t d, int lo, int hi);
  /// a/b in m with deg b in [1, max_den].
  RationalFunc proper(const Field& F, int max_den);
  /// N-irrational alpha over l (Reduced frame); retries until one is found.
  PeriodicLattice alpha_lattice(const Lattice& l, int N);

 private:
  std::mt19937_64 rng_;
};

/// ambient point p lies in S.
bool contains(const PeriodicLattice& s, const KVec& p);

struct Grid {
  std::vector<std::uint32_t> q{2, 3};
  std::vector<std::size_t> d{2, 3};
  std::vector<int> N{0, 1, 2};
};

/// "q=2,3;d=2,3;N=0,1,2"; keys may be omitted. Throws ParseError.
Grid parse_grid(const std::string& text);

struct CheckRow {
  std::string name;
  int instances = 0;
  int passed = 0;
  /// out of budget or scope; neither passed nor failed
  int skipped = 0;
  std::vector<std::string> failures;

  bool ok() const { return passed + skipped == instances; }
};

struct VerifyReport {
  std::vector<CheckRow> rows;
  bool ok() const;
};

/// Closed forms against the oracles, and the theorem inequalities, on
/// `per_cell` random instances for every grid cell. Deterministic in seed.
VerifyReport verify(const Grid& grid, std::uint64_t seed, int per_cell = 3);

}  // namespace ffgeom
