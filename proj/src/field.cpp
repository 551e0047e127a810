#include "aq/field.hpp"

namespace aq {

Field Field::rationals() { return Field{}; }

Field Field::prime(unsigned long p) {
  mpz_class z(static_cast<long>(p));
  if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
    throw FieldError("field characteristic must be prime, got " + std::to_string(p));
  Field f;
  f.rational_ = false;
  f.p_ = p;
  return f;
}

Coeff Field::reduce(const Coeff& x) const {
  Coeff r = x;
  r.canonicalize();
  if (rational_) return r;
  mpz_class p(static_cast<long>(p_));
  mpz_class den = r.get_den();
  mpz_class num = r.get_num() % p;
  if (num < 0) num += p;
  if (den != 1) {
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      throw FieldError("denominator not invertible mod " + std::to_string(p_));
    num = (num * dinv) % p;
  }
  return Coeff(num);
}

Coeff Field::inv(const Coeff& a) const {
  if (a == 0) throw FieldError("division by zero");
  if (rational_) return reduce(Coeff(1) / a);
  mpz_class p(static_cast<long>(p_));
  mpz_class num = reduce(a).get_num();
  mpz_class ninv;
  if (mpz_invert(ninv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()) == 0)
    throw FieldError("division by zero mod " + std::to_string(p_));
  return Coeff(ninv);
}

std::string Field::name() const {
  return rational_ ? "Q" : "F" + std::to_string(p_);
}

std::string coeff_str(const Coeff& c) { return c.get_str(); }

}  // namespace aq
