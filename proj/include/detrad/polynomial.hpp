#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "detrad/field.hpp"
#include "detrad/monomial.hpp"
#include "detrad/variables.hpp"

namespace detrad {

// Exact multivariate polynomial over Q or GF(p), kept in canonical form:
// no zero coefficients are stored and every coefficient is a canonical
// representative of its field. Two polynomials are equal iff their fields
// and term maps are equal. All operations are pure; values are immutable
// after construction, so sharing across threads is safe.
class Polynomial {
 public:
  explicit Polynomial(CoeffField field) : field_(field) {}  // zero

  static Polynomial constant(CoeffField field, const mpq_class& c);
  static Polynomial variable(CoeffField field, Variable v);
  static Polynomial term(CoeffField field, const mpq_class& c, const Monomial& m);

  const CoeffField& field() const { return field_; }
  const std::map<Monomial, mpq_class>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  mpq_class constant_value() const;  // requires is_constant()
  std::size_t term_count() const { return terms_.size(); }
  int degree() const;                // -1 for the zero polynomial
  std::vector<Variable> support() const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial pow(unsigned e) const;

  bool operator==(const Polynomial& other) const = default;

  // Simultaneous substitution; unbound variables stay fixed. Every binding
  // must share this polynomial's field.
  Polynomial substitute(const std::map<Variable, Polynomial>& bindings) const;

  // Largest e such that v^e divides every monomial. Throws on the zero
  // polynomial.
  int max_power(Variable v) const;

  // Canonical text form: terms in graded reverse lexicographic order,
  // leading term first, '*' between factors, '^' for powers. The parser
  // round-trips this exactly.
  std::string to_string(const VarPool& pool) const;

  // Reinterpret the coefficients in another field (e.g. Q -> GF(p)).
  Polynomial map_field(CoeffField target) const;

 private:
  void add_term(const Monomial& m, const mpq_class& c);  // c need not be canonical
  void require_same_field(const Polynomial& other) const;

  CoeffField field_;
  std::map<Monomial, mpq_class> terms_;
};

}  // namespace detrad
