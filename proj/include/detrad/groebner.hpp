#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "detrad/polynomial.hpp"

namespace detrad {

// Total monomial order with an explicit variable priority list (first entry
// is the most significant variable). The priority list must cover every
// variable of the polynomials it is used on.
struct MonomialOrder {
  enum class Kind { DegRevLex, Lex };

  Kind kind = Kind::DegRevLex;
  std::vector<Variable> priority;

  static MonomialOrder degrevlex(std::vector<Variable> priority);
  static MonomialOrder lex(std::vector<Variable> priority);

  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) > 0;
  }
  std::string name() const;  // "degrevlex" or "lex"
};

struct Ideal {
  CoeffField field;
  std::vector<Polynomial> generators;

  Ideal(CoeffField f, std::vector<Polynomial> gens);
  Ideal map_field(CoeffField target) const;
};

// Caps on Buchberger's work. Exceeding a cap throws BudgetError; there is no
// silent truncation.
struct Budget {
  std::size_t max_pairs = 200000;
  std::size_t max_basis = 5000;
};

struct GroebnerStats {
  std::size_t pairs_processed = 0;
  std::size_t basis_size = 0;
};

// Reduced Groebner basis: monic elements, no term of any element divisible by
// the leading term of another, sorted ascending by leading term.
class GroebnerBasis {
 public:
  GroebnerBasis(CoeffField field, MonomialOrder order,
                std::vector<Polynomial> basis, GroebnerStats stats);

  const CoeffField& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& elements() const { return basis_; }
  const GroebnerStats& stats() const { return stats_; }
  bool is_unit() const;  // basis == {1}

 private:
  CoeffField field_;
  MonomialOrder order_;
  std::vector<Polynomial> basis_;
  GroebnerStats stats_;
};

// Deterministic Buchberger: pairs processed by (lcm degree, lcm, i, j),
// coprime-leading-term pairs skipped, final inter-reduction and sorting.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         const Budget& budget = {});

// Remainder of multivariate division by the basis; zero iff f lies in the
// ideal the basis generates.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

struct RadicalMembership {
  bool member;
  GroebnerStats stats;
};

// f in sqrt(I), decided by adjoining a fresh variable z and testing whether
// 1 lies in I + (1 - z*f). The pool mints z (reserved-prefix name).
RadicalMembership radical_member(const Polynomial& f, const Ideal& ideal,
                                 VarPool& pool, const Budget& budget = {},
                                 MonomialOrder::Kind kind = MonomialOrder::Kind::DegRevLex);

struct MembershipRecord {
  std::string label;
  bool member;
  std::size_t basis_size;
  std::size_t pairs;
};

struct RadicalEqualReport {
  bool equal = true;
  CoeffField field = CoeffField::rationals();
  std::string order_name;
  std::vector<MembershipRecord> forward;   // generators of I against sqrt(J)
  std::vector<MembershipRecord> backward;  // generators of J against sqrt(I)
};

// sqrt(I) == sqrt(J): every generator of I lies in sqrt(J) and conversely.
// Each direction stops at its first failure; records are deterministic.
// Optional labels name the generators in the report.
RadicalEqualReport radical_equal_report(const Ideal& I, const Ideal& J,
                                        VarPool& pool, const Budget& budget = {},
                                        MonomialOrder::Kind kind = MonomialOrder::Kind::DegRevLex,
                                        const std::vector<std::string>& labels_I = {},
                                        const std::vector<std::string>& labels_J = {});

bool radical_equal(const Ideal& I, const Ideal& J, VarPool& pool,
                   const Budget& budget = {},
                   MonomialOrder::Kind kind = MonomialOrder::Kind::DegRevLex);

}  // namespace detrad
