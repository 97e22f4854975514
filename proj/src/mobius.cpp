#include "supell/mobius.hpp"

#include <stdexcept>

namespace supell {

namespace {

FieldElem det2(const FieldElem& a, const FieldElem& b, const FieldElem& c,
               const FieldElem& d) {
  return a * d - b * c;
}

}  // namespace

Mobius::Mobius(FieldElem a, FieldElem b, FieldElem c, FieldElem d)
    : a_(a), b_(b), c_(c), d_(d) {
  if (det2(a_, b_, c_, d_).is_zero())
    throw std::invalid_argument("Moebius matrix is singular");
  // Canonical scale: first nonzero entry becomes 1.
  FieldElem s = a_;
  if (s.is_zero()) s = b_;
  if (s.is_zero()) s = c_;
  a_ = a_ / s;
  b_ = b_ / s;
  c_ = c_ / s;
  d_ = d_ / s;
}

ProjPoint Mobius::apply(const ProjPoint& p) const {
  ProjPoint out{a_ * p.x + b_ * p.w, c_ * p.x + d_ * p.w};
  if (out.x.is_zero() && out.w.is_zero())
    throw std::invalid_argument("(0:0) is not a projective point");
  return out;
}

Mobius Mobius::compose(const Mobius& inner) const {
  return Mobius(a_ * inner.a_ + b_ * inner.c_, a_ * inner.b_ + b_ * inner.d_,
                c_ * inner.a_ + d_ * inner.c_, c_ * inner.b_ + d_ * inner.d_);
}

Mobius Mobius::inverse() const { return Mobius(d_, -b_, -c_, a_); }

bool Mobius::operator==(const Mobius& o) const {
  return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
}

bool Mobius::is_involution() const {
  return !is_identity() && compose(*this).is_identity();
}

std::string Mobius::str(const std::string& var) const {
  std::string num, den;
  auto term = [&](const FieldElem& coef, bool with_var) -> std::string {
    if (coef.is_zero()) return "";
    std::string cs = coef.str(var);
    if (!with_var) return cs;
    if (cs == "1") return var;
    if (cs == "-1") return "-" + var;
    if (cs.find_first_of("+-", 1) != std::string::npos ||
        cs.find('/') != std::string::npos)
      cs = "(" + cs + ")";
    return cs + "*" + var;
  };
  auto side = [&](const FieldElem& lin, const FieldElem& con) -> std::string {
    std::string t1 = term(lin, true), t0 = term(con, false);
    if (t1.empty() && t0.empty()) return "0";
    if (t1.empty()) return t0;
    if (t0.empty()) return t1;
    if (t0[0] == '-') return t1 + " - " + t0.substr(1);
    return t1 + " + " + t0;
  };
  num = side(a_, b_);
  den = side(c_, d_);
  if (den == "1") return num;
  return "(" + num + ")/(" + den + ")";
}

Mobius mobius_from_three_points(const ProjPoint& p1, const ProjPoint& p2,
                                const ProjPoint& p3, const ProjPoint& q1,
                                const ProjPoint& q2, const ProjPoint& q3) {
  // Map (0, inf, 1) to the given triple: columns alpha*P1 and beta*P2,
  // where P3 = alpha*P1 + beta*P2. Then the requested map is
  // T(q)-side composed with the inverse of the T(p)-side.
  auto standard = [](const ProjPoint& r1, const ProjPoint& r2,
                     const ProjPoint& r3) -> Mobius {
    if (r1.same_point(r2) || r1.same_point(r3) || r2.same_point(r3))
      throw std::invalid_argument("three-point data must be pairwise distinct");
    // Column convention: second column maps 0, first column maps inf.
    FieldElem den = det2(r2.x, r1.x, r2.w, r1.w);
    FieldElem alpha = det2(r3.x, r1.x, r3.w, r1.w) / den;
    FieldElem beta = det2(r2.x, r3.x, r2.w, r3.w) / den;
    return Mobius(alpha * r2.x, beta * r1.x, alpha * r2.w, beta * r1.w);
  };
  return standard(q1, q2, q3).compose(standard(p1, p2, p3).inverse());
}

}  // namespace supell
