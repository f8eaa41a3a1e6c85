#include "detrad/sparse.hpp"

#include <algorithm>
#include <set>

#include "detrad/errors.hpp"

namespace detrad {

std::vector<std::pair<int, int>> order_zeros(const ZeroPattern& zp) {
  std::vector<std::pair<int, int>> out = zp.zeros;
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int sa = a.first + a.second, sb = b.first + b.second;
    if (sa != sb) return sa < sb;
    return a.first < b.first;
  });
  return out;
}

namespace {

void validate_pattern(const ZeroPattern& zp, const PolyMatrix& X) {
  std::set<std::pair<int, int>> seen;
  for (const auto& [r, c] : zp.zeros) {
    if (r < 1 || r > X.rows() || c < 1 || c > X.cols())
      throw HypothesisError("zero position (" + std::to_string(r) + "," +
                            std::to_string(c) + ") outside the matrix");
    if (!seen.insert({r, c}).second)
      throw HypothesisError("duplicate zero position (" + std::to_string(r) +
                            "," + std::to_string(c) + ")");
    if (!X.entry(r, c).is_zero())
      throw HypothesisError("declared zero position (" + std::to_string(r) +
                            "," + std::to_string(c) + ") holds a nonzero entry");
  }
}

// Shared recursion: step h fills ordered zero #(k-h+1) with the rank slice
// q_{top-h+1} of the current matrix. Returns the final matrix and the placed
// polynomials indexed by zero number (placed[j-1] went to zero #j).
std::pair<PolyMatrix, std::vector<Polynomial>> fill_zeros(
    const PolyMatrix& X, const std::vector<std::pair<int, int>>& ordered) {
  int k = static_cast<int>(ordered.size());
  int top = context_of(X).top_rank();
  PolyMatrix cur = X;
  std::vector<Polynomial> placed(static_cast<std::size_t>(k), Polynomial(X.field()));
  for (int h = 1; h <= k; ++h) {
    const auto& [r, c] = ordered[static_cast<std::size_t>(k - h)];
    Polynomial p = rank_slice_sum(top - h + 1, cur);
    placed[static_cast<std::size_t>(k - h)] = p;
    cur = cur.with_entry(r, c, std::move(p));
  }
  return {std::move(cur), std::move(placed)};
}

}  // namespace

HypothesisReport check_antidiagonal_hypothesis(const ZeroPattern& zp,
                                               const PosetContext& ctx) {
  int k = static_cast<int>(zp.zeros.size());
  if (k == 0) return {};
  int bound = std::min(2 * ctx.t + 1, ctx.m + ctx.n - 2 * ctx.t);
  if (k > bound)
    return {false, "k <= min{2t+1, m+n-2t} violated: k=" + std::to_string(k) +
                       ", bound=" + std::to_string(bound)};
  auto ordered = order_zeros(zp);
  for (int h = 1; h <= k; ++h) {
    const auto& [r, s] = ordered[static_cast<std::size_t>(h - 1)];
    if (r + s > h + 1)
      return {false,
              "consecutive-antidiagonal condition violated: zero #" +
                  std::to_string(h) + " at (" + std::to_string(r) + "," +
                  std::to_string(s) + ") has r+s=" + std::to_string(r + s) +
                  " > h+1=" + std::to_string(h + 1)};
  }
  return {};
}

ReduceResult antidiagonal_reduce(const PolyMatrix& X, const ZeroPattern& zp) {
  PosetContext ctx = context_of(X);
  HypothesisReport report = check_antidiagonal_hypothesis(zp, ctx);
  if (!report.ok) throw HypothesisError(report.message);
  validate_pattern(zp, X);

  auto ordered = order_zeros(zp);
  auto [xprime, placed] = fill_zeros(X, ordered);
  int k = static_cast<int>(ordered.size());
  int top = ctx.top_rank();

  // Each placed polynomial must reappear as the matching top slice of the
  // final matrix; the subsequent steps may not have disturbed its summands.
  for (int h = 1; h <= k; ++h)
    if (!(placed[static_cast<std::size_t>(h - 1)] ==
          rank_slice_sum(top - k + h, xprime)))
      throw HypothesisError(
          "placed polynomial #" + std::to_string(h) +
          " is not reproduced as rank slice q_" + std::to_string(top - k + h) +
          " of the filled matrix");

  return ReduceResult{xprime, rank_slice_prefix(top - k, xprime)};
}

ReduceResult maxminor_reduce(const PolyMatrix& X, const ZeroPattern& zp) {
  if (X.minor_size() != X.rows())
    throw HypothesisError("maximal-minor construction requires t = m, got t=" +
                          std::to_string(X.minor_size()) + ", m=" +
                          std::to_string(X.rows()));
  int k = static_cast<int>(zp.zeros.size());
  int bound = X.cols() - X.rows();
  if (k > bound)
    throw HypothesisError("k <= n-m violated: k=" + std::to_string(k) +
                          ", bound=" + std::to_string(bound));
  validate_pattern(zp, X);

  auto [xprime, placed] = fill_zeros(X, order_zeros(zp));
  int top = context_of(X).top_rank();
  return ReduceResult{xprime, rank_slice_prefix(top - k, xprime)};
}

PolyMatrix drop_zero_columns(const PolyMatrix& X) {
  std::vector<int> kept;
  for (int c = 1; c <= X.cols(); ++c) {
    bool zero = true;
    for (int r = 1; r <= X.rows(); ++r)
      if (!X.entry(r, c).is_zero()) {
        zero = false;
        break;
      }
    if (!zero) kept.push_back(c);
  }
  if (kept.empty())
    throw HypothesisError("every column is zero: the ideal of t-minors is zero");
  if (static_cast<int>(kept.size()) < X.rows())
    throw HypothesisError("only " + std::to_string(kept.size()) +
                          " nonzero columns remain, fewer than m=" +
                          std::to_string(X.rows()) +
                          "; for t = m the ideal of t-minors is zero");
  if (static_cast<int>(kept.size()) == X.cols()) return X;
  std::vector<std::vector<Polynomial>> grid;
  grid.reserve(static_cast<std::size_t>(X.rows()));
  for (int r = 1; r <= X.rows(); ++r) {
    std::vector<Polynomial> row;
    row.reserve(kept.size());
    for (int c : kept) row.push_back(X.entry(r, c));
    grid.push_back(std::move(row));
  }
  return PolyMatrix(X.rows(), static_cast<int>(kept.size()), X.minor_size(),
                    std::move(grid));
}

}  // namespace detrad
