#pragma once

#include <map>
#include <vector>

#include "detrad/variables.hpp"

namespace detrad {

// Power product of variables. Exponents are strictly positive; the empty
// exponent map is the monomial 1.
class Monomial {
 public:
  Monomial() = default;
  static Monomial one() { return Monomial(); }
  static Monomial var(Variable v, int exp = 1);

  bool is_one() const { return exps_.empty(); }
  int degree() const;
  int exponent(Variable v) const;
  const std::map<Variable, int>& exponents() const { return exps_; }
  std::vector<Variable> support() const;

  Monomial times(const Monomial& other) const;
  bool divides(const Monomial& other) const;  // this | other
  Monomial divided_by(const Monomial& d) const;
  bool coprime_with(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  // Structural order, used only for canonical storage inside Polynomial.
  auto operator<=>(const Monomial&) const = default;

 private:
  std::map<Variable, int> exps_;
};

// Graded reverse lexicographic comparison with variable priority given by
// declaration order (smaller id = higher priority). Returns <0, 0, >0 for
// a < b, a == b, a > b. This is the canonical storage/printing order.
int grevlex_compare(const Monomial& a, const Monomial& b);

}  // namespace detrad
