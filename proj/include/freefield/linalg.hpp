#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "freefield/rational.hpp"

namespace freefield::linalg {

/// Sparse vector: strictly increasing indices, no stored zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// y += a * x
void axpy(SparseVector& y, const Rational& a, const SparseVector& x);

SparseVector from_map(const std::map<std::size_t, Rational>& m);

/// Scales v so that its entries are coprime integers and the leading entry is positive.
void make_primitive(SparseVector& v);

/// Incrementally built row-echelon basis of a subspace of Q^n.
/// Pivot of a row is its smallest index; pivot entries are normalized to one.
class EchelonBasis {
 public:
  /// Reduces v against the stored rows until its leading index is not a pivot.
  SparseVector reduce(SparseVector v) const;

  /// Adds v if it is independent of the current rows. Returns true if the rank grew.
  bool insert(SparseVector v);

  std::size_t rank() const { return rows_.size(); }

  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

 private:
  std::map<std::size_t, SparseVector> rows_;
};

/// Kernel of the linear map sending the j-th unit vector to images[j].
/// Gaussian elimination over Q with pivots chosen by smallest index; the
/// returned basis vectors are primitive integer vectors over the domain.
std::vector<SparseVector> nullspace(const std::vector<SparseVector>& images);

/// Rank of the span of the given vectors.
std::size_t rank(const std::vector<SparseVector>& vectors);

using DenseMatrix = std::vector<RationalVector>;

/// Inverse of a square nonsingular matrix (Gauss-Jordan). Throws on singular input.
DenseMatrix inverse(const DenseMatrix& m);

/// Solves m * x = b for square nonsingular m.
RationalVector solve(const DenseMatrix& m, const RationalVector& b);

}  // namespace freefield::linalg
