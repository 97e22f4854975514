#pragma once

// Rational functions over Q in one indeterminate, stored as reduced
// fractions with a monic denominator.

#include <string>

#include "supell/poly.hpp"

namespace supell {

class RatFunc {
 public:
  RatFunc() : num_(), den_(Rational(1)) {}                 // zero
  RatFunc(Poly num, Poly den);                             // reduces
  explicit RatFunc(const Rational& c) : RatFunc(Poly(c), Poly(Rational(1))) {}
  explicit RatFunc(const Poly& p) : RatFunc(p, Poly(Rational(1))) {}

  static RatFunc variable() { return RatFunc(Poly::variable()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  bool operator==(const RatFunc& o) const = default;

  RatFunc substitute(const RatFunc& inner) const;  // this(inner)

  std::string str(const std::string& var = "x") const;

 private:
  Poly num_, den_;
};

}  // namespace supell
