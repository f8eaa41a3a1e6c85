#pragma once

#include <string>
#include <utility>
#include <vector>

#include "detrad/reduce.hpp"

namespace detrad {

// Positions (1-based) at which the matrix holds the zero polynomial.
struct ZeroPattern {
  std::vector<std::pair<int, int>> zeros;
};

// Total order of the recursion: (r,s) precedes (u,v) iff r+s < u+v, or
// r+s == u+v and r < u. The first zero of a valid antidiagonal pattern is
// the one at (1,1).
std::vector<std::pair<int, int>> order_zeros(const ZeroPattern& zp);

struct HypothesisReport {
  bool ok = true;
  std::string message;  // names the violated inequality when !ok
};

// k <= min{2t+1, m+n-2t}, and the h-th ordered zero lies on an antidiagonal
// of index at most h (r+s <= h+1). An empty pattern is ok.
HypothesisReport check_antidiagonal_hypothesis(const ZeroPattern& zp,
                                               const PosetContext& ctx);

// Fills the ordered zeros back-to-front with the top rank slices of the
// successively updated matrix (step h fills zero #(k-h+1) with
// q_{mn-t^2-h+2} of the current matrix) and returns q_1..q_{mn-t^2-k+1} of
// the result. Checks the antidiagonal hypothesis and asserts afterwards that
// each placed polynomial reappears as the matching top rank slice of the
// final matrix.
ReduceResult antidiagonal_reduce(const PolyMatrix& X, const ZeroPattern& zp);

// Same recursion for maximal minors (t = m) with k <= n - m zeros anywhere.
// No placement assertion; downstream certification is the guard.
ReduceResult maxminor_reduce(const PolyMatrix& X, const ZeroPattern& zp);

// Removes the identically-zero columns. Throws when every column is zero or
// fewer than t columns remain (the ideal of t-minors is then zero).
PolyMatrix drop_zero_columns(const PolyMatrix& X);

}  // namespace detrad
