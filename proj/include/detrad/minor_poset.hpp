#pragma once

#include <string>
#include <vector>

#include "detrad/matrix.hpp"

namespace detrad {

// Size context for the poset of minors of sizes t..m of an m x n matrix.
struct PosetContext {
  int m, n, t;
  PosetContext(int m_, int n_, int t_);
  int top_rank() const { return m * n - t * t + 1; }
};

// Row/column index pair [a_1..a_u | b_1..b_u], 1-based, strictly increasing,
// t <= u <= m. Identifies a minor of the ambient matrix.
class MinorIndex {
 public:
  MinorIndex(std::vector<int> rows, std::vector<int> cols);

  const std::vector<int>& row_indices() const { return rows_; }
  const std::vector<int>& col_indices() const { return cols_; }
  int size() const { return static_cast<int>(rows_.size()); }
  int index_sum() const;
  void validate_in(const PosetContext& ctx) const;

  std::string to_string() const;  // "[1 2 | 1 3]"

  // Lexicographic on (rows, cols); the enumeration order inside rank slices.
  auto operator<=>(const MinorIndex&) const = default;

 private:
  std::vector<int> rows_, cols_;
};

// Partial order of the poset: a larger minor size compares below, equal sizes
// compare componentwise.
bool leq(const MinorIndex& d1, const MinorIndex& d2);

// Covers below d: every single index lowered by one where the result is still
// strictly increasing and positive, plus, when u < m and a_u < m, b_u < n, the
// (u+1)-minor appending row m and column n. The bottom [1..m|1..m] has none.
std::vector<MinorIndex> lower_neighbors(const MinorIndex& d, const PosetContext& ctx);

// Number of elements of a maximal chain from the bottom up to d. Closed form
// mn + 1 - u(m+n+1) + sum(indices); every lower-neighbor move decreases it by
// exactly one, which the test suite validates against a chain-length oracle.
int rank(const MinorIndex& d, const PosetContext& ctx);

// All minors of any size u in [t, m] with the given rank, lexicographically
// ordered. Throws unless 1 <= h <= mn - t^2 + 1.
std::vector<MinorIndex> minors_of_rank(int h, const PosetContext& ctx);

// All minors of one size, lexicographically ordered.
std::vector<MinorIndex> minors_of_size(int u, const PosetContext& ctx);

// All minors of sizes t..m, lexicographically ordered.
std::vector<MinorIndex> all_minors(const PosetContext& ctx);

// One generator produced by a construction: the sum of the minors of one rank
// slice, together with the slice's index set.
struct RankedGenerator {
  int rank;
  Polynomial poly;
  std::vector<MinorIndex> summands;
};

struct RankedGeneratorSet {
  std::vector<RankedGenerator> items;

  // Recomputes every slice sum against X; true iff all match and ranks are
  // strictly increasing.
  bool consistent_with(const PolyMatrix& X) const;
};

PosetContext context_of(const PolyMatrix& X);

// q_h: the sum of the determinants of all minors of X of poset rank h.
Polynomial rank_slice_sum(int h, const PolyMatrix& X);

// q_1..q_hmax as a RankedGeneratorSet.
RankedGeneratorSet rank_slice_prefix(int hmax, const PolyMatrix& X);

}  // namespace detrad
