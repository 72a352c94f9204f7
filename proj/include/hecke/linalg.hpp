#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

/// Row-major dense matrix over Q.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Fraction-free (Bareiss) determinant of a square matrix. The 0x0 determinant is 1.
Rational determinant(DenseMatrix m);

/// Gauss-Jordan inverse; throws Error when singular.
DenseMatrix inverse(const DenseMatrix& m);

/// Sorted (index, value) pairs with no zero values.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// x + c*y
SparseVector axpy(const SparseVector& x, const Rational& c, const SparseVector& y);
Rational dot(const SparseVector& x, const SparseVector& y);
SparseVector sparse_from_dense(const std::vector<Rational>& v);

/// Incremental row echelon form of a subspace of Q^dim. Each stored row has a
/// distinct leading index with leading coefficient 1.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  /// Reduces v against the basis; stores the remainder if nonzero. Returns
  /// whether the rank grew.
  bool insert(SparseVector v);
  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }

  /// Basis of {x : <row, x> = 0 for every stored row}.
  std::vector<SparseVector> orthogonal_complement() const;
  std::vector<SparseVector> rows() const;

 private:
  void fully_reduce(std::map<std::size_t, SparseVector>& rows) const;

  std::size_t dim_;
  std::map<std::size_t, SparseVector> rows_;
};

}  // namespace hecke
