#pragma once

#include "monobasis/rational.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace monobasis {

using DenseVector = std::vector<Rational>;
using DenseMatrix = std::vector<DenseVector>;

// Sparse row: (column, value) pairs sorted by column, no explicit zeros.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

SparseRow to_sparse(const DenseVector& v);

// Incrementally built row-echelon form over the rationals. Rows are reduced
// against existing pivots on insertion, so memory stays at most rank x cols
// however many (redundant) equations are fed in.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t columns);

  std::size_t columns() const { return columns_; }
  std::size_t rank() const { return rows_.size(); }

  // Returns true when the row was independent of the current span.
  bool insert(SparseRow row);
  bool insert(const DenseVector& row) { return insert(to_sparse(row)); }

  bool contains(SparseRow row) const;
  bool contains(const DenseVector& row) const { return contains(to_sparse(row)); }

  // Basis of {x : R x = 0}, one vector per free column, read off the reduced
  // row-echelon form; deterministic for a given column order.
  DenseMatrix nullspace() const;

 private:
  SparseRow reduce(SparseRow row) const;

  std::size_t columns_;
  std::vector<SparseRow> rows_;
  std::vector<long> pivot_row_;  // column -> row index, -1 when free
};

std::size_t rank(const DenseMatrix& rows);

// Unique solution of A x = b, or nullopt when the system is inconsistent or
// underdetermined.
std::optional<DenseVector> solve_unique(DenseMatrix a, DenseVector b);

}  // namespace monobasis
