#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ffgeom/field.hpp"
#include "ffgeom/kelem.hpp"
#include "ffgeom/poly.hpp"
#include "ffgeom/rational.hpp"

namespace ffgeom {

/// Dense row-major matrix of value-semantic entries.
template <class T>
class Matrix {
 public:
  /// 0 x 0
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> col(std::size_t j) const {
    std::vector<T> v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }
  void set_col(std::size_t j, const std::vector<T>& v) {
    if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  Matrix transposed() const {
    Matrix t = *this;
    std::swap(t.rows_, t.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

/// Matrix over F_q.
class MatFq {
 public:
  using Elt = Field::Elt;
  MatFq(const Field& f, std::size_t rows, std::size_t cols) : F_(&f), m_(rows, cols, 0) {}

  const Field& field() const noexcept { return *F_; }
  std::size_t rows() const noexcept { return m_.rows(); }
  std::size_t cols() const noexcept { return m_.cols(); }
  Elt& operator()(std::size_t i, std::size_t j) { return m_(i, j); }
  Elt operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  MatFq transposed() const;
  /// Rows of `below` appended under this matrix (column counts must agree).
  MatFq stacked(const MatFq& below) const;
  bool operator==(const MatFq& o) const { return F_ == o.F_ && m_ == o.m_; }

 private:
  const Field* F_;
  Matrix<Elt> m_;
};

/// Rank over F_q by Gaussian elimination; 0 for empty matrices.
std::size_t rank_fq(const MatFq& m);

/// A nonzero vector c with M c = 0, if one exists. Deterministic: the first
/// free column of the reduced row echelon form gets coefficient 1.
std::optional<std::vector<Field::Elt>> kernel_vector(const MatFq& m);

using MatPoly = Matrix<Poly>;
using MatRat = Matrix<RationalFunc>;
using MatK = Matrix<KElem>;

MatPoly identity_poly(const Field& f, std::size_t n);
MatRat identity_rat(const Field& f, std::size_t n);
MatPoly operator*(const MatPoly& a, const MatPoly& b);
MatRat operator*(const MatRat& a, const MatRat& b);
MatRat to_rat(const MatPoly& m);
/// Entries must be polynomials.
MatPoly to_poly(const MatRat& m);
std::vector<RationalFunc> operator*(const MatRat& a, const std::vector<RationalFunc>& v);
KVec operator*(const MatRat& a, const KVec& v);
KVec operator*(const MatPoly& a, const KVec& v);

/// Determinant over F_q[x] by fraction-free (Bareiss) elimination.
Poly det_poly(const MatPoly& m);
/// Determinant over F_q(x): denominators are cleared per column first.
RationalFunc det_rat(const MatRat& m);
/// Determinant of a small matrix of K_inf elements by cofactor expansion,
/// with precision tracked through the series arithmetic.
KElem det_k(const MatK& m);

/// Adjugate (transpose of the cofactor matrix).
MatRat adjugate(const MatRat& m);
/// Inverse; throws SingularInput.
MatRat inverse(const MatRat& m);

/// Result of column reduction: R = M U, U unimodular, the leading-coefficient
/// matrix of R is nonsingular, and columns are sorted by degree.
struct PopovResult {
  MatPoly reduced;
  MatPoly transform;
  std::vector<int> degrees;  // ascending
};

/// Column reduction of a nonsingular square polynomial matrix.
/// Throws SingularInput if det M = 0.
PopovResult popov_reduce(const MatPoly& m);

/// Rank over F_q(x) by clearing denominators and fraction-free elimination.
std::size_t rank_rational(const MatRat& m);

/// Incrementally maintained F_q(x)-span of vectors (row echelon form).
class RationalSpan {
 public:
  explicit RationalSpan(std::size_t dim) : dim_(dim) {}
  /// Adds v if it is independent of the current span; returns whether it was.
  bool add(const std::vector<RationalFunc>& v);
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t dim() const noexcept { return dim_; }

 private:
  std::size_t dim_;
  std::vector<std::vector<RationalFunc>> rows_;  // pivot entry normalized to 1
  std::vector<std::size_t> pivots_;
};

}  // namespace ffgeom
