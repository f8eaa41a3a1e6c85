#include "detrad/monomial.hpp"

#include "detrad/errors.hpp"

namespace detrad {

Monomial Monomial::var(Variable v, int exp) {
  if (exp < 0) throw InvalidArgumentError("negative exponent");
  Monomial m;
  if (exp > 0) m.exps_[v] = exp;
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : exps_) d += e;
  return d;
}

int Monomial::exponent(Variable v) const {
  auto it = exps_.find(v);
  return it == exps_.end() ? 0 : it->second;
}

std::vector<Variable> Monomial::support() const {
  std::vector<Variable> out;
  out.reserve(exps_.size());
  for (const auto& [v, e] : exps_) out.push_back(v);
  return out;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial r = *this;
  for (const auto& [v, e] : other.exps_) r.exps_[v] += e;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  for (const auto& [v, e] : exps_)
    if (other.exponent(v) < e) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& d) const {
  Monomial r;
  for (const auto& [v, e] : exps_) {
    int rem = e - d.exponent(v);
    if (rem < 0) throw InvalidArgumentError("monomial division is not exact");
    if (rem > 0) r.exps_[v] = rem;
  }
  // d may not contain variables absent from *this
  for (const auto& [v, e] : d.exps_)
    if (exponent(v) < e) throw InvalidArgumentError("monomial division is not exact");
  return r;
}

bool Monomial::coprime_with(const Monomial& other) const {
  for (const auto& [v, e] : exps_)
    if (other.exponent(v) > 0) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (const auto& [v, e] : b.exps_) {
    int& cur = r.exps_[v];
    if (e > cur) cur = e;
  }
  return r;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  // Tie-break: scan variables from the least-priority end (largest id).
  // The monomial with the smaller exponent at the first difference is larger.
  auto ia = a.exponents().rbegin(), ea = a.exponents().rend();
  auto ib = b.exponents().rbegin(), eb = b.exponents().rend();
  while (ia != ea || ib != eb) {
    Variable va = (ia != ea) ? ia->first : Variable(-1);
    Variable vb = (ib != eb) ? ib->first : Variable(-1);
    if (ia == ea || (ib != eb && vb > va)) {
      // b has an exponent at vb, a has 0 there
      return 1;  // delta = 0 - e_b < 0 means a > b
    }
    if (ib == eb || va > vb) {
      return -1;
    }
    // same variable
    if (ia->second != ib->second) return ia->second < ib->second ? 1 : -1;
    ++ia;
    ++ib;
  }
  return 0;
}

}  // namespace detrad
