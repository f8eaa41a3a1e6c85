#include "detrad/minor_poset.hpp"

#include <algorithm>
#include <numeric>

#include "detrad/errors.hpp"

namespace detrad {

PosetContext::PosetContext(int m_, int n_, int t_) : m(m_), n(n_), t(t_) {
  if (!(1 <= t && t <= m && m <= n))
    throw InvalidArgumentError("poset context requires 1 <= t <= m <= n");
}

MinorIndex::MinorIndex(std::vector<int> rows, std::vector<int> cols)
    : rows_(std::move(rows)), cols_(std::move(cols)) {
  if (rows_.empty() || rows_.size() != cols_.size())
    throw InvalidArgumentError("minor index lists must have equal nonzero length");
  for (const auto* list : {&rows_, &cols_}) {
    int prev = 0;
    for (int i : *list) {
      if (i <= prev)
        throw InvalidArgumentError("minor indices must be strictly increasing and >= 1");
      prev = i;
    }
  }
}

int MinorIndex::index_sum() const {
  return std::accumulate(rows_.begin(), rows_.end(), 0) +
         std::accumulate(cols_.begin(), cols_.end(), 0);
}

void MinorIndex::validate_in(const PosetContext& ctx) const {
  if (size() < ctx.t || size() > ctx.m)
    throw InvalidArgumentError("minor size " + std::to_string(size()) +
                               " outside [t, m]");
  if (rows_.back() > ctx.m || cols_.back() > ctx.n)
    throw InvalidArgumentError("minor index exceeds matrix bounds");
}

std::string MinorIndex::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(rows_[i]);
  }
  out += " | ";
  for (std::size_t i = 0; i < cols_.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(cols_[i]);
  }
  out += "]";
  return out;
}

bool leq(const MinorIndex& d1, const MinorIndex& d2) {
  if (d1.size() > d2.size()) return true;
  if (d1.size() < d2.size()) return false;
  for (int i = 0; i < d1.size(); ++i)
    if (d1.row_indices()[i] > d2.row_indices()[i] ||
        d1.col_indices()[i] > d2.col_indices()[i])
      return false;
  return true;
}

std::vector<MinorIndex> lower_neighbors(const MinorIndex& d, const PosetContext& ctx) {
  d.validate_in(ctx);
  std::vector<MinorIndex> out;
  auto try_lower = [&](bool on_rows, int i) {
    std::vector<int> rows = d.row_indices(), cols = d.col_indices();
    std::vector<int>& list = on_rows ? rows : cols;
    int lowered = list[static_cast<std::size_t>(i)] - 1;
    if (lowered < 1) return;
    if (i > 0 && lowered <= list[static_cast<std::size_t>(i - 1)]) return;
    list[static_cast<std::size_t>(i)] = lowered;
    out.emplace_back(std::move(rows), std::move(cols));
  };
  for (int i = 0; i < d.size(); ++i) try_lower(true, i);
  for (int i = 0; i < d.size(); ++i) try_lower(false, i);
  if (d.size() < ctx.m && d.row_indices().back() < ctx.m &&
      d.col_indices().back() < ctx.n) {
    std::vector<int> rows = d.row_indices(), cols = d.col_indices();
    rows.push_back(ctx.m);
    cols.push_back(ctx.n);
    out.emplace_back(std::move(rows), std::move(cols));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int rank(const MinorIndex& d, const PosetContext& ctx) {
  d.validate_in(ctx);
  int u = d.size();
  return ctx.m * ctx.n + 1 - u * (ctx.m + ctx.n + 1) + d.index_sum();
}

namespace {

// Strictly increasing k-subsets of 1..limit, lexicographic.
std::vector<std::vector<int>> combinations(int limit, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  std::iota(cur.begin(), cur.end(), 1);
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == limit - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace

std::vector<MinorIndex> minors_of_size(int u, const PosetContext& ctx) {
  if (u < ctx.t || u > ctx.m)
    throw InvalidArgumentError("minor size outside [t, m]");
  std::vector<MinorIndex> out;
  for (const auto& rows : combinations(ctx.m, u))
    for (const auto& cols : combinations(ctx.n, u)) out.emplace_back(rows, cols);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MinorIndex> all_minors(const PosetContext& ctx) {
  std::vector<MinorIndex> out;
  for (int u = ctx.t; u <= ctx.m; ++u) {
    auto part = minors_of_size(u, ctx);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MinorIndex> minors_of_rank(int h, const PosetContext& ctx) {
  if (h < 1 || h > ctx.top_rank())
    throw InvalidArgumentError("rank " + std::to_string(h) + " outside [1, " +
                               std::to_string(ctx.top_rank()) + "]");
  std::vector<MinorIndex> out;
  for (const auto& d : all_minors(ctx))
    if (rank(d, ctx) == h) out.push_back(d);
  return out;  // all_minors is already sorted
}

PosetContext context_of(const PolyMatrix& X) {
  return PosetContext(X.rows(), X.cols(), X.minor_size());
}

Polynomial rank_slice_sum(int h, const PolyMatrix& X) {
  PosetContext ctx = context_of(X);
  Polynomial acc(X.field());
  for (const auto& d : minors_of_rank(h, ctx))
    acc = acc + X.submatrix_det(d.row_indices(), d.col_indices());
  return acc;
}

RankedGeneratorSet rank_slice_prefix(int hmax, const PolyMatrix& X) {
  PosetContext ctx = context_of(X);
  if (hmax < 1 || hmax > ctx.top_rank())
    throw InvalidArgumentError("rank prefix bound outside [1, " +
                               std::to_string(ctx.top_rank()) + "]");
  RankedGeneratorSet set;
  for (int h = 1; h <= hmax; ++h) {
    auto summands = minors_of_rank(h, ctx);
    Polynomial acc(X.field());
    for (const auto& d : summands)
      acc = acc + X.submatrix_det(d.row_indices(), d.col_indices());
    set.items.push_back({h, std::move(acc), std::move(summands)});
  }
  return set;
}

bool RankedGeneratorSet::consistent_with(const PolyMatrix& X) const {
  int prev = 0;
  for (const auto& g : items) {
    if (g.rank <= prev) return false;
    prev = g.rank;
    Polynomial acc(X.field());
    for (const auto& d : g.summands)
      acc = acc + X.submatrix_det(d.row_indices(), d.col_indices());
    if (!(acc == g.poly)) return false;
  }
  return true;
}

}  // namespace detrad
