#include "detrad/polynomial.hpp"

#include <algorithm>

#include "detrad/errors.hpp"

namespace detrad {

Polynomial Polynomial::constant(CoeffField field, const mpq_class& c) {
  Polynomial p(field);
  p.add_term(Monomial::one(), c);
  return p;
}

Polynomial Polynomial::variable(CoeffField field, Variable v) {
  Polynomial p(field);
  p.add_term(Monomial::var(v), 1);
  return p;
}

Polynomial Polynomial::term(CoeffField field, const mpq_class& c, const Monomial& m) {
  Polynomial p(field);
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

mpq_class Polynomial::constant_value() const {
  if (!is_constant())
    throw InvalidArgumentError("polynomial is not constant");
  return terms_.empty() ? mpq_class(0) : terms_.begin()->second;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::vector<Variable> Polynomial::support() const {
  std::map<Variable, int> seen;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.exponents()) seen[v] = 1;
  std::vector<Variable> out;
  out.reserve(seen.size());
  for (const auto& [v, one] : seen) out.push_back(v);
  return out;
}

void Polynomial::add_term(const Monomial& m, const mpq_class& c) {
  mpq_class cc = field_.normalize(c);
  if (field_.is_zero(cc)) return;
  auto [it, inserted] = terms_.emplace(m, cc);
  if (!inserted) {
    it->second = field_.add(it->second, cc);
    if (field_.is_zero(it->second)) terms_.erase(it);
  }
}

void Polynomial::require_same_field(const Polynomial& other) const {
  if (field_ != other.field_)
    throw FieldMismatchError("cannot combine polynomials over " +
                             field_.to_string() + " and " +
                             other.field_.to_string());
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_field(other);
  Polynomial r = *this;
  for (const auto& [m, c] : other.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  require_same_field(other);
  Polynomial r = *this;
  for (const auto& [m, c] : other.terms_) r.add_term(m, field_.neg(c));
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(field_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, field_.neg(c));
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_field(other);
  Polynomial r(field_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_)
      r.add_term(ma.times(mb), field_.mul(ca, cb));
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = Polynomial::constant(field_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return r;
}

Polynomial Polynomial::substitute(const std::map<Variable, Polynomial>& bindings) const {
  for (const auto& [v, p] : bindings)
    if (p.field() != field_)
      throw FieldMismatchError("substitution binding over " +
                               p.field().to_string() +
                               " into a polynomial over " + field_.to_string());
  // Cache binding powers; exponents repeat across terms.
  std::map<std::pair<Variable, int>, Polynomial> powers;
  auto bound_power = [&](Variable v, int e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it == powers.end())
      it = powers.emplace(key, bindings.at(v).pow(static_cast<unsigned>(e))).first;
    return it->second;
  };

  Polynomial result(field_);
  for (const auto& [m, c] : terms_) {
    Monomial untouched;
    Polynomial acc = Polynomial::constant(field_, c);
    for (const auto& [v, e] : m.exponents()) {
      if (bindings.count(v))
        acc = acc * bound_power(v, e);
      else
        untouched = untouched.times(Monomial::var(v, e));
    }
    if (!untouched.is_one())
      acc = acc * Polynomial::term(field_, 1, untouched);
    result = result + acc;
  }
  return result;
}

int Polynomial::max_power(Variable v) const {
  if (is_zero())
    throw InvalidArgumentError("max_power is undefined for the zero polynomial");
  int e = -1;
  for (const auto& [m, c] : terms_) {
    int cur = m.exponent(v);
    e = (e < 0) ? cur : std::min(e, cur);
    if (e == 0) break;
  }
  return e;
}

std::string Polynomial::to_string(const VarPool& pool) const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Monomial, mpq_class>*> sorted;
  sorted.reserve(terms_.size());
  for (const auto& t : terms_) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(), [](const auto* a, const auto* b) {
    return grevlex_compare(a->first, b->first) > 0;
  });

  std::string out;
  bool first = true;
  for (const auto* t : sorted) {
    const Monomial& m = t->first;
    mpq_class c = t->second;
    bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    mpq_class mag = negative ? mpq_class(-c) : c;
    bool coeff_shown = (mag != 1) || m.is_one();
    if (coeff_shown) out += mag.get_str();
    if (!m.is_one()) {
      bool lead = !coeff_shown;
      for (const auto& [v, e] : m.exponents()) {
        if (!lead) out += "*";
        lead = false;
        out += pool.name(v);
        if (e > 1) out += "^" + std::to_string(e);
      }
    }
  }
  return out;
}

Polynomial Polynomial::map_field(CoeffField target) const {
  Polynomial r(target);
  for (const auto& [m, c] : terms_) r.add_term(m, c);
  return r;
}

}  // namespace detrad
