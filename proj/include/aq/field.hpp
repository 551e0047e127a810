#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace aq {

// Exact field coefficient.  For the rationals this is an arbitrary-precision
// rational in lowest terms with positive denominator; for a prime field F_p
// it is an integer residue in [0, p).
using Coeff = mpq_class;

struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coefficient field: the rationals, or F_p for a prime p.
// All arithmetic is exact; every result is returned in canonical form.
class Field {
 public:
  static Field rationals();
  static Field prime(unsigned long p);  // throws FieldError if p is not prime

  bool is_rational() const { return rational_; }
  unsigned long characteristic() const { return rational_ ? 0 : p_; }

  // Canonical form of an arbitrary rational in this field.  Over F_p the
  // denominator must be invertible mod p.
  Coeff reduce(const Coeff& x) const;
  Coeff from_int(long n) const { return reduce(Coeff(n)); }

  Coeff add(const Coeff& a, const Coeff& b) const { return reduce(a + b); }
  Coeff sub(const Coeff& a, const Coeff& b) const { return reduce(a - b); }
  Coeff mul(const Coeff& a, const Coeff& b) const { return reduce(a * b); }
  Coeff neg(const Coeff& a) const { return reduce(-a); }
  Coeff inv(const Coeff& a) const;
  Coeff div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

  bool is_zero(const Coeff& a) const { return a == 0; }

  std::string name() const;  // "Q" or "F<p>"

  bool operator==(const Field& o) const {
    return rational_ == o.rational_ && p_ == o.p_;
  }

 private:
  bool rational_ = true;
  unsigned long p_ = 0;
};

std::string coeff_str(const Coeff& c);

}  // namespace aq
