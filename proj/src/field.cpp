#include "detrad/field.hpp"

#include "detrad/errors.hpp"

namespace detrad {

CoeffField CoeffField::rationals() {
  return CoeffField(FieldKind::Rationals, 0);
}

CoeffField CoeffField::prime(unsigned long p) {
  mpz_class pz(p);
  if (p < 2 || mpz_probab_prime_p(pz.get_mpz_t(), 40) == 0)
    throw InvalidArgumentError("GF(p) requires a prime modulus, got p=" +
                               std::to_string(p));
  return CoeffField(FieldKind::PrimeField, p);
}

mpq_class CoeffField::normalize(const mpq_class& v) const {
  if (kind_ == FieldKind::Rationals) {
    mpq_class r = v;
    r.canonicalize();
    return r;
  }
  mpz_class p(p_);
  mpz_class num = v.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = v.get_den() % p;
  if (den == 0)
    throw FieldMismatchError("denominator is not invertible in " + to_string());
  if (den != 1) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    num = (num * inv) % p;
  }
  return mpq_class(num);
}

mpq_class CoeffField::add(const mpq_class& a, const mpq_class& b) const {
  if (kind_ == FieldKind::Rationals) return a + b;
  return normalize(a + b);
}

mpq_class CoeffField::sub(const mpq_class& a, const mpq_class& b) const {
  if (kind_ == FieldKind::Rationals) return a - b;
  return normalize(a - b);
}

mpq_class CoeffField::mul(const mpq_class& a, const mpq_class& b) const {
  if (kind_ == FieldKind::Rationals) return a * b;
  return normalize(a * b);
}

mpq_class CoeffField::neg(const mpq_class& a) const {
  if (kind_ == FieldKind::Rationals) return -a;
  return normalize(-a);
}

mpq_class CoeffField::invert(const mpq_class& a) const {
  if (sgn(a) == 0) throw InvalidArgumentError("division by zero coefficient");
  if (kind_ == FieldKind::Rationals) return 1 / a;
  mpz_class p(p_), inv;
  mpz_class num = normalize(a).get_num();
  mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  return mpq_class(inv);
}

std::string CoeffField::to_string() const {
  if (kind_ == FieldKind::Rationals) return "Q";
  return "GF(" + std::to_string(p_) + ")";
}

std::string CoeffField::coeff_to_string(const mpq_class& a) const {
  return a.get_str();
}

}  // namespace detrad
