#include "supell/qfield.hpp"

#include <sstream>

namespace supell {

QuadElem::QuadElem(Rational p, Rational q, long long d)
    : p_(std::move(p)), q_(std::move(q)), d_(d) {
  if (d == 0 || d == 1) throw std::invalid_argument("d must not be 0 or 1");
  auto [s, sf] = squarefree_split(d);
  if (s != 1) throw std::invalid_argument("d must be squarefree");
}

QuadElem QuadElem::from_rational(const Rational& p, long long d) {
  return QuadElem(p, 0, d);
}

void QuadElem::check_same_field(const QuadElem& o) const {
  if (d_ != o.d_)
    throw std::invalid_argument("mixing sqrt(" + std::to_string(d_) +
                                ") with sqrt(" + std::to_string(o.d_) + ")");
}

QuadElem QuadElem::operator+(const QuadElem& o) const {
  check_same_field(o);
  return QuadElem(p_ + o.p_, q_ + o.q_, d_);
}

QuadElem QuadElem::operator-(const QuadElem& o) const {
  check_same_field(o);
  return QuadElem(p_ - o.p_, q_ - o.q_, d_);
}

QuadElem QuadElem::operator*(const QuadElem& o) const {
  check_same_field(o);
  return QuadElem(p_ * o.p_ + q_ * o.q_ * d_, p_ * o.q_ + q_ * o.p_, d_);
}

QuadElem QuadElem::operator/(const QuadElem& o) const {
  check_same_field(o);
  if (o.is_zero()) throw std::invalid_argument("division by zero");
  Rational n = o.norm();  // nonzero: d squarefree means p^2 = d q^2 only at 0
  QuadElem num = *this * o.conj();
  return QuadElem(num.p_ / n, num.q_ / n, d_);
}

bool QuadElem::operator==(const QuadElem& o) const {
  return d_ == o.d_ && p_ == o.p_ && q_ == o.q_;
}

std::string QuadElem::str() const {
  if (q_ == 0) return rational_str(p_);
  std::ostringstream os;
  if (p_ != 0) os << rational_str(p_);
  if (q_ > 0 && p_ != 0) os << "+";
  if (q_ == -1)
    os << "-";
  else if (q_ != 1)
    os << rational_str(q_) << "*";
  os << "sqrt(" << d_ << ")";
  return os.str();
}

}  // namespace supell
