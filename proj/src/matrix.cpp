#include "detrad/matrix.hpp"

#include <bit>
#include <cstdint>
#include <map>

#include "detrad/errors.hpp"

namespace detrad {

namespace {

// det over the rows below `row` and the columns in `mask`, top row first.
Polynomial det_rec(const std::vector<std::vector<Polynomial>>& g, std::size_t row,
                   std::uint64_t mask, std::map<std::uint64_t, Polynomial>& memo,
                   const CoeffField& field) {
  if (mask == 0) return Polynomial::constant(field, 1);
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  Polynomial acc(field);
  int parity = 0;
  for (std::size_t c = 0; c < g.size(); ++c) {
    if (!(mask & (std::uint64_t{1} << c))) continue;
    const Polynomial& e = g[row][c];
    if (!e.is_zero()) {
      Polynomial sub = det_rec(g, row + 1, mask & ~(std::uint64_t{1} << c), memo, field);
      Polynomial contrib = e * sub;
      acc = (parity % 2 == 0) ? acc + contrib : acc - contrib;
    }
    ++parity;
  }
  memo.emplace(mask, acc);
  return acc;
}

}  // namespace

Polynomial determinant(const std::vector<std::vector<Polynomial>>& grid) {
  std::size_t k = grid.size();
  if (k == 0) throw InvalidArgumentError("determinant of an empty grid");
  if (k > 63) throw InvalidArgumentError("determinant grid too large");
  for (const auto& row : grid)
    if (row.size() != k)
      throw InvalidArgumentError("determinant requires a square grid");
  CoeffField field = grid[0][0].field();
  for (const auto& row : grid)
    for (const auto& e : row)
      if (e.field() != field)
        throw FieldMismatchError("determinant entries over mixed fields");
  std::map<std::uint64_t, Polynomial> memo;
  std::uint64_t full = (k == 63) ? ~std::uint64_t{0} >> 1 : (std::uint64_t{1} << k) - 1;
  return det_rec(grid, 0, full, memo, field);
}

PolyMatrix::PolyMatrix(int m, int n, int t, std::vector<std::vector<Polynomial>> entries)
    : m_(m), n_(n), t_(t), field_(CoeffField::rationals()), entries_(std::move(entries)) {
  if (!(1 <= t && t <= m && m <= n))
    throw InvalidArgumentError("matrix context requires 1 <= t <= m <= n, got t=" +
                               std::to_string(t) + ", m=" + std::to_string(m) +
                               ", n=" + std::to_string(n));
  if (entries_.size() != static_cast<std::size_t>(m))
    throw InvalidArgumentError("entry grid has wrong row count");
  for (const auto& row : entries_)
    if (row.size() != static_cast<std::size_t>(n))
      throw InvalidArgumentError("entry grid has wrong column count");
  field_ = entries_[0][0].field();
  for (const auto& row : entries_)
    for (const auto& e : row)
      if (e.field() != field_)
        throw FieldMismatchError("matrix entries over mixed fields");
}

const Polynomial& PolyMatrix::entry(int r, int c) const {
  if (r < 1 || r > m_ || c < 1 || c > n_)
    throw InvalidArgumentError("matrix index out of range: (" + std::to_string(r) +
                               "," + std::to_string(c) + ")");
  return entries_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)];
}

PolyMatrix PolyMatrix::with_entry(int r, int c, Polynomial p) const {
  entry(r, c);  // bounds check
  if (p.field() != field_)
    throw FieldMismatchError("replacement entry over a different field");
  PolyMatrix copy = *this;
  copy.entries_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] =
      std::move(p);
  return copy;
}

Polynomial PolyMatrix::submatrix_det(const std::vector<int>& rows,
                                     const std::vector<int>& cols) const {
  if (rows.size() != cols.size() || rows.empty())
    throw InvalidArgumentError("submatrix row/column lists must have equal nonzero size");
  std::vector<std::vector<Polynomial>> grid;
  grid.reserve(rows.size());
  for (int r : rows) {
    std::vector<Polynomial> line;
    line.reserve(cols.size());
    for (int c : cols) line.push_back(entry(r, c));
    grid.push_back(std::move(line));
  }
  return determinant(grid);
}

Polynomial PolyMatrix::corner_minor_det() const {
  std::vector<int> rows, cols;
  for (int r = m_ - t_ + 1; r <= m_; ++r) rows.push_back(r);
  for (int c = n_ - t_ + 1; c <= n_; ++c) cols.push_back(c);
  return submatrix_det(rows, cols);
}

bool PolyMatrix::operator==(const PolyMatrix& other) const {
  return m_ == other.m_ && n_ == other.n_ && t_ == other.t_ &&
         entries_ == other.entries_;
}

}  // namespace detrad
