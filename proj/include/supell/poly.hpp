#pragma once

// Univariate polynomials with exact rational coefficients. Enough for the
// obstruction computations: ring arithmetic, Euclidean gcd, normalization
// to a primitive integer polynomial, and factorization over Q up to degree
// four (rational roots, quadratic discriminants, and the quartic
// quadratic-times-quadratic search).

#include <string>
#include <vector>

#include "supell/numeric.hpp"

namespace supell {

class Poly {
 public:
  Poly() = default;                      // zero
  explicit Poly(const Rational& c);      // constant
  explicit Poly(std::vector<Rational> coeffs);  // ascending powers

  static Poly variable();  // x

  bool is_zero() const { return c_.empty(); }
  long long degree() const;  // -1 for the zero polynomial
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(size_t k) const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& s) const;
  bool operator==(const Poly& o) const = default;

  // Euclidean division; o must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& o) const;
  Poly operator/(const Poly& o) const;  // exact division required
  Poly operator%(const Poly& o) const;

  Rational eval(const Rational& x) const;
  Poly substitute(const Poly& inner) const;  // this(inner(x))
  Poly pow(long long k) const;

  Poly monic() const;
  // Integer coefficients, content 1, positive leading coefficient.
  Poly primitive() const;

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;  // ascending, no trailing zeros
};

Poly poly_gcd(const Poly& a, const Poly& b);  // primitive-normalized
bool poly_divides(const Poly& d, const Poly& p);

// All monic-over-Q irreducible factors (as primitive integer polynomials,
// with multiplicity, leading coefficients positive; the content is
// dropped). Input degree may exceed four only if rational roots bring the
// remaining part down to degree <= 4.
std::vector<Poly> factor_poly(const Poly& p);

}  // namespace supell
