#pragma once

// The coefficient domains the Moebius machinery runs over, behind one
// tagged union: plain rationals, quadratic field elements, and rational
// functions of the family parameter. Rationals promote into either
// extension; the two extensions never mix.

#include <string>
#include <variant>

#include "supell/qfield.hpp"
#include "supell/ratfunc.hpp"

namespace supell {

class FieldElem {
 public:
  FieldElem() : v_(Rational(0)) {}
  FieldElem(const Rational& r) : v_(r) {}
  FieldElem(long long r) : v_(Rational(r)) {}
  FieldElem(const QuadElem& q) : v_(q) {}
  FieldElem(const RatFunc& f) : v_(f) {}

  bool is_zero() const;
  bool is_rational() const { return std::holds_alternative<Rational>(v_); }

  FieldElem operator-() const;
  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  bool operator==(const FieldElem& o) const;

  std::string str(const std::string& var = "x") const;

  const std::variant<Rational, QuadElem, RatFunc>& raw() const { return v_; }

 private:
  std::variant<Rational, QuadElem, RatFunc> v_;
};

// A point of the projective line over the field: (x : w), not both zero.
struct ProjPoint {
  FieldElem x;
  FieldElem w;

  static ProjPoint infinity() { return {FieldElem(1), FieldElem(0)}; }
  static ProjPoint finite(const FieldElem& v) { return {v, FieldElem(1)}; }

  bool is_infinity() const { return w.is_zero(); }
  bool same_point(const ProjPoint& o) const;  // projective equality
  std::string str(const std::string& var = "x") const;
};

}  // namespace supell
