#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hecke/linalg.hpp"
#include "hecke/partitions.hpp"
#include "hecke/rational.hpp"

namespace hecke {

/// A validated Hecke symmetry R on V (x) V, dim V = d.
///
/// Entry (row (k-1)d + l, column (i-1)d + j) of the d^2 x d^2 matrix is the
/// coefficient of e_k (x) e_l in R(e_i (x) e_j). Immutable once built.
class HeckeSymmetry {
 public:
  int dim() const { return d_; }
  const Rational& q() const { return q_; }
  const DenseMatrix& matrix() const { return matrix_; }
  /// Sparse columns and rows of the matrix, indexed 0-based.
  const std::vector<SparseVector>& columns() const { return columns_; }
  const std::vector<SparseVector>& rows() const { return rows_; }
  /// Set for symmetries loaded from user data rather than built in.
  bool user_supplied() const { return user_supplied_; }
  const std::string& label() const { return label_; }

  /// The v1 text format; load_and_validate(parse(serialize())) reproduces the symmetry.
  std::string serialize() const;

  friend HeckeSymmetry load_and_validate(int d, const Rational& q, const DenseMatrix& matrix, bool user_supplied,
                                         std::string label);

 private:
  HeckeSymmetry() = default;
  int d_ = 0;
  Rational q_;
  DenseMatrix matrix_;
  std::vector<SparseVector> columns_;
  std::vector<SparseVector> rows_;
  bool user_supplied_ = true;
  std::string label_;
};

/// Checks shape, then (R - q)(R + 1) = 0, then the braid equation on V^(x)3.
/// Throws ValidationError with a 1-based witness (pair or triple of basis indices).
HeckeSymmetry load_and_validate(int d, const Rational& q, const DenseMatrix& matrix, bool user_supplied = true,
                                std::string label = "user");

/// R(e_i e_i) = q e_i e_i; R(e_i e_j) = e_j e_i for i < j; q e_j e_i + (q - 1) e_i e_j for i > j.
HeckeSymmetry build_standard(int r, const Rational& q);

/// Super variant: the first r0 basis vectors are even, the last r1 odd.
HeckeSymmetry build_super(int r0, int r1, const Rational& q);

/// Reads the "hecke-symmetry v1" format and validates. Throws ParseError or ValidationError.
HeckeSymmetry parse_symmetry(const std::string& text, std::string label = "user");
HeckeSymmetry load_symmetry_file(const std::string& path);

/// R_i^(n) = Id^(i-1) (x) R (x) Id^(n-i-1), applied without forming the d^n x d^n matrix.
/// Tensor index: the first factor is the most significant base-d digit.
struct TensorOperator {
  const HeckeSymmetry* symmetry;
  int n;
  int position;  ///< i, 1-based, 1 <= i < n
};

SparseVector apply_tensor_op(const TensorOperator& op, const SparseVector& v);
/// Dense variant; throws std::invalid_argument on size mismatch.
std::vector<Rational> apply_tensor_op(const TensorOperator& op, const std::vector<Rational>& v);

/// Largest tensor dimension d^n (or (d d')^n for hom-spaces) the engine will handle.
inline constexpr std::size_t kDefaultTensorCap = 4096;

/// d^n - rank of sum_{i in I0} Im(R_i - q) + sum_{i in I1} Ker(R_i - q), n = |lambda| + |mu|.
/// (lambda, 0) gives dim S^lambda, (0, (n)) gives dim of the exterior power.
std::size_t dim_quotient(const HeckeSymmetry& r, const Partition& lambda, const Partition& mu,
                         std::size_t cap = kDefaultTensorCap);

/// dim {h : V^n -> V'^n | h R_i = R'_i h for all i}.
std::size_t dim_intertwiner(const HeckeSymmetry& r2, const HeckeSymmetry& r, int n,
                            std::size_t cap = kDefaultTensorCap);

/// dim of the intersection over i of the images of h -> R'_i^{-1} h R_i - h.
std::size_t dim_e_component(const HeckeSymmetry& r2, const HeckeSymmetry& r, int n,
                            std::size_t cap = kDefaultTensorCap);

/// The index set I_lambda: positions 1..|lambda|-1 that are not partial sums of lambda.
std::vector<int> parabolic_positions(const Partition& lambda);

}  // namespace hecke
