#pragma once

#include <vector>

#include "detrad/polynomial.hpp"

namespace detrad {

// Exact determinant of a square grid of polynomials, computed by Laplace
// expansion memoized over column subsets. Division-free, which suits sparse
// polynomial entries at desk scale.
Polynomial determinant(const std::vector<std::vector<Polynomial>>& grid);

// m x n grid of polynomials together with the minor size t of interest,
// 1 <= t <= m <= n. Rows and columns are 1-based throughout the public API.
class PolyMatrix {
 public:
  PolyMatrix(int m, int n, int t, std::vector<std::vector<Polynomial>> entries);

  int rows() const { return m_; }
  int cols() const { return n_; }
  int minor_size() const { return t_; }
  const CoeffField& field() const { return field_; }

  const Polynomial& entry(int r, int c) const;           // 1-based
  PolyMatrix with_entry(int r, int c, Polynomial p) const;

  // Determinant of the submatrix picked by 1-based strictly increasing
  // row/column index lists of equal length.
  Polynomial submatrix_det(const std::vector<int>& rows,
                           const std::vector<int>& cols) const;

  // The corner t x t minor [m-t+1..m | n-t+1..n].
  Polynomial corner_minor_det() const;

  bool operator==(const PolyMatrix& other) const;

 private:
  int m_, n_, t_;
  CoeffField field_;
  std::vector<std::vector<Polynomial>> entries_;
};

}  // namespace detrad
