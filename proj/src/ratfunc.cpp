#include "supell/ratfunc.hpp"

namespace supell {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(Rational(1));
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  Rational lead = den_.leading();
  num_ = num_ * (Rational(1) / lead);
  den_ = den_ * (Rational(1) / lead);
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw std::invalid_argument("division by zero function");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::substitute(const RatFunc& inner) const {
  // Evaluate num and den at inner by Horner over RatFunc.
  auto eval = [&](const Poly& p) {
    RatFunc acc;
    for (size_t k = p.coeffs().size(); k-- > 0;)
      acc = acc * inner + RatFunc(p.coeff(k));
    return acc;
  };
  RatFunc d = eval(den_);
  if (d.is_zero()) throw std::invalid_argument("substitution hits a pole");
  return eval(num_) / d;
}

std::string RatFunc::str(const std::string& var) const {
  if (is_polynomial()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace supell
