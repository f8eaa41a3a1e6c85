#pragma once

#include <utility>
#include <vector>

#include "detrad/minor_poset.hpp"

namespace detrad {

// k entry positions together with a nonzero polynomial F in k dedicated
// relation variables that vanishes when each variable is replaced by the
// entry at its position. vars[i] corresponds to positions[i].
struct DependenceRelation {
  std::vector<std::pair<int, int>> positions;  // 1-based (row, col)
  std::vector<Variable> vars;
  Polynomial F;
};

// One stage of the cofactor chain peeled off a common-support polynomial:
// stage_1 = F, stage_j = cofactor_{j-1} with y_{j-1} set to 0 (j >= 2),
// stage_j = cofactor_j * y_j^beta_j with beta_j maximal, and alpha_j the
// largest power of y_j dividing F itself (so beta_j >= alpha_j >= 1). The
// last cofactor has a nonzero constant term as a polynomial in its variable.
struct CofactorChainEntry {
  Variable y;
  int alpha;
  int beta;
  Polynomial stage;     // F_j
  Polynomial cofactor;  // G_j
};

struct CofactorChain {
  std::vector<CofactorChainEntry> entries;
  bool empty() const { return entries.empty(); }
};

// Repeatedly drops the monomials divisible by a variable that divides some
// but not all monomials, choosing the first eligible variable of
// elimination_order each time. The result is nonzero and all its monomials
// share one support. Throws on zero input.
Polynomial prune_to_common_support(const Polynomial& F,
                                   const std::vector<Variable>& elimination_order);

// Peels the cofactor chain off a polynomial whose monomials all share one
// support; the surviving variables are ordered by var_order. A nonzero
// constant yields an empty chain. Throws if the monomial supports differ.
CofactorChain extract_cofactor_chain(const Polynomial& F,
                                     const std::vector<Variable>& var_order);

struct ReduceResult {
  PolyMatrix xprime;
  RankedGeneratorSet gens;
};

// Substitution reduction along one dependence relation: prunes F, peels the
// cofactor chain, then replaces the entry u_j at each surviving variable's
// position by u_j + G_j(entries) * Delta, where Delta is the corner t x t
// minor determinant. Returns the new matrix and q_1..q_{mn-t^2} of it.
// Requires t < n and every position outside the corner minor.
ReduceResult reduce_single_dependence(const PolyMatrix& X,
                                      const DependenceRelation& rel,
                                      std::vector<Variable> elimination_order = {});

// Staged reduction over pairwise disjoint dependent entry sets. Stage i uses
// the rank slice q_{mn-t^2+2-i} of the current matrix as the modifier in
// place of Delta (stage 1 uses Delta itself) and checks that relation i still
// vanishes on the current entries. Returns q_1..q_{mn-t^2-k+1} of the final
// matrix. This generalizes the single-relation reduction, which it equals for
// k = 1; certification downstream is the guard for k > 1.
ReduceResult reduce_disjoint_dependences(
    const PolyMatrix& X, const std::vector<DependenceRelation>& rels,
    std::vector<std::vector<Variable>> elimination_orders = {});

}  // namespace detrad
