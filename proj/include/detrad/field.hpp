#pragma once

#include <gmpxx.h>

#include <string>

namespace detrad {

enum class FieldKind { Rationals, PrimeField };

// Coefficient field of a polynomial: the rationals or GF(p) for a prime p.
// Elements are carried as mpq_class values in canonical form; for GF(p) the
// canonical form is an integer in [0, p) with denominator 1.
class CoeffField {
 public:
  static CoeffField rationals();
  static CoeffField prime(unsigned long p);  // throws if p is not prime

  FieldKind kind() const { return kind_; }
  unsigned long characteristic() const { return p_; }  // 0 for the rationals

  bool operator==(const CoeffField&) const = default;

  // Canonical representative of v; reduces mod p over GF(p).
  // Throws FieldMismatchError if the denominator is not invertible mod p.
  mpq_class normalize(const mpq_class& v) const;

  mpq_class add(const mpq_class& a, const mpq_class& b) const;
  mpq_class sub(const mpq_class& a, const mpq_class& b) const;
  mpq_class mul(const mpq_class& a, const mpq_class& b) const;
  mpq_class neg(const mpq_class& a) const;
  mpq_class invert(const mpq_class& a) const;  // throws on zero

  bool is_zero(const mpq_class& a) const { return sgn(a) == 0; }

  std::string to_string() const;  // "Q" or "GF(p)"
  std::string coeff_to_string(const mpq_class& a) const;

 private:
  CoeffField(FieldKind kind, unsigned long p) : kind_(kind), p_(p) {}

  FieldKind kind_;
  unsigned long p_;
};

}  // namespace detrad
