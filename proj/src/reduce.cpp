#include "detrad/reduce.hpp"

#include <algorithm>
#include <set>

#include "detrad/errors.hpp"

namespace detrad {

namespace {

// y divides some but not all monomials of F.
bool splits_support(const Polynomial& F, Variable y) {
  bool some = false, all = true;
  for (const auto& [m, c] : F.terms()) {
    if (m.exponent(y) > 0)
      some = true;
    else
      all = false;
  }
  return some && !all;
}

Polynomial drop_divisible(const Polynomial& F, Variable y) {
  Polynomial out(F.field());
  for (const auto& [m, c] : F.terms())
    if (m.exponent(y) == 0) out = out + Polynomial::term(F.field(), c, m);
  return out;
}

Polynomial divide_out(const Polynomial& F, Variable y, int e) {
  Polynomial out(F.field());
  Monomial power = Monomial::var(y, e);
  for (const auto& [m, c] : F.terms())
    out = out + Polynomial::term(F.field(), c, m.divided_by(power));
  return out;
}

Polynomial set_to_zero(const Polynomial& F, Variable y) {
  return drop_divisible(F, y);
}

bool inside_corner(const std::pair<int, int>& pos, const PolyMatrix& X) {
  return pos.first >= X.rows() - X.minor_size() + 1 &&
         pos.second >= X.cols() - X.minor_size() + 1;
}

void validate_relation(const DependenceRelation& rel, const PolyMatrix& X) {
  if (rel.positions.empty())
    throw RelationError("dependence relation needs at least one position");
  if (rel.vars.size() != rel.positions.size())
    throw RelationError("relation variable count differs from position count");
  std::set<std::pair<int, int>> seen;
  for (const auto& [r, c] : rel.positions) {
    if (r < 1 || r > X.rows() || c < 1 || c > X.cols())
      throw RelationError("relation position (" + std::to_string(r) + "," +
                          std::to_string(c) + ") outside the matrix");
    if (!seen.insert({r, c}).second)
      throw RelationError("duplicate relation position (" + std::to_string(r) +
                          "," + std::to_string(c) + ")");
    if (inside_corner({r, c}, X))
      throw RelationError("relation position (" + std::to_string(r) + "," +
                          std::to_string(c) +
                          ") lies inside the corner minor [m-t+1..m | n-t+1..n]");
  }
  std::set<Variable> declared(rel.vars.begin(), rel.vars.end());
  if (declared.size() != rel.vars.size())
    throw RelationError("duplicate relation variables");
  if (rel.F.is_zero()) throw RelationError("relation polynomial F is zero");
  for (Variable v : rel.F.support())
    if (!declared.count(v))
      throw RelationError("relation polynomial uses an undeclared variable");
  // F must vanish when each variable is replaced by its entry.
  std::map<Variable, Polynomial> bindings;
  for (std::size_t i = 0; i < rel.vars.size(); ++i)
    bindings.emplace(rel.vars[i],
                     X.entry(rel.positions[i].first, rel.positions[i].second));
  if (!rel.F.substitute(bindings).is_zero())
    throw RelationError("relation polynomial does not vanish on the entries");
}

std::vector<Variable> effective_order(const DependenceRelation& rel,
                                      std::vector<Variable> elimination_order) {
  if (elimination_order.empty()) return rel.vars;
  if (elimination_order.size() != rel.vars.size())
    throw RelationError("elimination order must list every relation variable");
  std::set<Variable> declared(rel.vars.begin(), rel.vars.end());
  std::set<Variable> listed(elimination_order.begin(), elimination_order.end());
  if (declared != listed)
    throw RelationError("elimination order must be a permutation of the relation variables");
  return elimination_order;
}

// Core of both reductions: substitute u_j + G_j(entries) * modifier at each
// surviving variable's position.
PolyMatrix substitute_stage(const PolyMatrix& X, const DependenceRelation& rel,
                            const std::vector<Variable>& order,
                            const Polynomial& modifier) {
  Polynomial pruned = prune_to_common_support(rel.F, order);
  CofactorChain chain = extract_cofactor_chain(pruned, order);

  std::map<Variable, std::pair<int, int>> position_of;
  for (std::size_t i = 0; i < rel.vars.size(); ++i)
    position_of.emplace(rel.vars[i], rel.positions[i]);
  std::map<Variable, Polynomial> entry_bindings;
  for (std::size_t i = 0; i < rel.vars.size(); ++i)
    entry_bindings.emplace(rel.vars[i],
                           X.entry(rel.positions[i].first, rel.positions[i].second));

  PolyMatrix result = X;
  for (const auto& e : chain.entries) {
    auto [r, c] = position_of.at(e.y);
    Polynomial ghat = e.cofactor.substitute(entry_bindings);
    result = result.with_entry(r, c, X.entry(r, c) + ghat * modifier);
  }
  return result;
}

}  // namespace

Polynomial prune_to_common_support(const Polynomial& F,
                                   const std::vector<Variable>& elimination_order) {
  if (F.is_zero())
    throw InvalidArgumentError("cannot prune the zero polynomial");
  std::vector<Variable> order = elimination_order;
  if (order.empty()) order = F.support();
  Polynomial cur = F;
  for (;;) {
    bool fired = false;
    for (Variable y : order) {
      if (splits_support(cur, y)) {
        cur = drop_divisible(cur, y);
        fired = true;
        break;
      }
    }
    if (!fired) return cur;
  }
}

CofactorChain extract_cofactor_chain(const Polynomial& F,
                                     const std::vector<Variable>& var_order) {
  if (F.is_zero())
    throw InvalidArgumentError("cannot peel cofactors off the zero polynomial");
  // All monomials must share one support.
  auto it = F.terms().begin();
  Monomial first = it->first;
  for (const auto& [m, c] : F.terms()) {
    for (Variable v : first.support())
      if (m.exponent(v) == 0)
        throw InvalidArgumentError("monomial supports differ; prune first");
    for (Variable v : m.support())
      if (first.exponent(v) == 0)
        throw InvalidArgumentError("monomial supports differ; prune first");
  }

  std::vector<Variable> support = F.support();
  std::vector<Variable> ordered;
  if (var_order.empty()) {
    ordered = support;
  } else {
    std::set<Variable> in_support(support.begin(), support.end());
    for (Variable v : var_order)
      if (in_support.count(v)) ordered.push_back(v);
    if (ordered.size() != support.size())
      throw InvalidArgumentError("variable order does not cover the support");
  }

  CofactorChain chain;
  Polynomial stage = F;
  for (std::size_t j = 0; j < ordered.size(); ++j) {
    Variable y = ordered[j];
    if (j > 0) {
      stage = set_to_zero(chain.entries.back().cofactor, chain.entries.back().y);
    }
    int beta = stage.max_power(y);
    Polynomial cofactor = divide_out(stage, y, beta);
    int alpha = F.max_power(y);
    if (alpha < 1 || beta < alpha)
      throw InvalidArgumentError("cofactor chain invariant violated");
    chain.entries.push_back({y, alpha, beta, stage, cofactor});
  }
  if (!chain.entries.empty()) {
    // The final cofactor must keep a monomial free of its variable.
    const CofactorChainEntry& last = chain.entries.back();
    if (last.cofactor.max_power(last.y) != 0)
      throw InvalidArgumentError("cofactor chain invariant violated (last cofactor)");
  }
  return chain;
}

ReduceResult reduce_single_dependence(const PolyMatrix& X,
                                      const DependenceRelation& rel,
                                      std::vector<Variable> elimination_order) {
  if (X.minor_size() == X.cols())
    throw HypothesisError("t < n violated: t = m = n leaves no entries outside the corner minor");
  validate_relation(rel, X);
  std::vector<Variable> order = effective_order(rel, std::move(elimination_order));

  PolyMatrix xprime = substitute_stage(X, rel, order, X.corner_minor_det());
  int count = X.rows() * X.cols() - X.minor_size() * X.minor_size();
  return ReduceResult{xprime, rank_slice_prefix(count, xprime)};
}

ReduceResult reduce_disjoint_dependences(
    const PolyMatrix& X, const std::vector<DependenceRelation>& rels,
    std::vector<std::vector<Variable>> elimination_orders) {
  if (rels.empty())
    throw RelationError("at least one dependence relation is required");
  if (X.minor_size() == X.cols())
    throw HypothesisError("t < n violated: t = m = n leaves no entries outside the corner minor");
  if (!elimination_orders.empty() && elimination_orders.size() != rels.size())
    throw RelationError("need one elimination order per relation (or none)");

  int k = static_cast<int>(rels.size());
  int top = X.rows() * X.cols() - X.minor_size() * X.minor_size() + 1;
  if (top - k < 1)
    throw HypothesisError("k <= mn - t^2 violated: k=" + std::to_string(k) +
                          " leaves mn-t^2-k+1 = " + std::to_string(top - k) +
                          " < 1 generators");

  std::set<std::pair<int, int>> used;
  for (const auto& rel : rels)
    for (const auto& pos : rel.positions)
      if (!used.insert(pos).second)
        throw RelationError("position (" + std::to_string(pos.first) + "," +
                            std::to_string(pos.second) +
                            ") appears in more than one dependent set");

  PolyMatrix cur = X;
  for (int i = 1; i <= k; ++i) {
    const DependenceRelation& rel = rels[static_cast<std::size_t>(i - 1)];
    validate_relation(rel, cur);  // vanishing is re-checked on the current entries
    std::vector<Variable> order =
        effective_order(rel, elimination_orders.empty()
                                 ? std::vector<Variable>{}
                                 : elimination_orders[static_cast<std::size_t>(i - 1)]);
    Polynomial modifier = rank_slice_sum(top + 1 - i, cur);
    cur = substitute_stage(cur, rel, order, modifier);
  }
  return ReduceResult{cur, rank_slice_prefix(top - k, cur)};
}

}  // namespace detrad
