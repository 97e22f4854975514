#pragma once

// Elements p + q*sqrt(d) of a real or imaginary quadratic field, with d a
// squarefree integer != 0, 1. Exact throughout.

#include <string>

#include "supell/numeric.hpp"

namespace supell {

class QuadElem {
 public:
  QuadElem(Rational p, Rational q, long long d);
  static QuadElem from_rational(const Rational& p, long long d);

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }
  long long d() const { return d_; }

  bool is_zero() const { return p_ == 0 && q_ == 0; }
  bool is_rational() const { return q_ == 0; }

  QuadElem conj() const { return QuadElem(p_, -q_, d_); }
  Rational norm() const { return p_ * p_ - q_ * q_ * d_; }

  QuadElem operator-() const { return QuadElem(-p_, -q_, d_); }
  QuadElem operator+(const QuadElem& o) const;
  QuadElem operator-(const QuadElem& o) const;
  QuadElem operator*(const QuadElem& o) const;
  QuadElem operator/(const QuadElem& o) const;
  bool operator==(const QuadElem& o) const;

  std::string str() const;  // "1+sqrt(2)", "-1/2-3*sqrt(5)", "2", ...

 private:
  void check_same_field(const QuadElem& o) const;
  Rational p_, q_;
  long long d_;
};

}  // namespace supell
