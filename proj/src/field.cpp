#include "supell/field.hpp"

#include <stdexcept>
#include <utility>

namespace supell {

namespace {

// Lift a pair of raw values into a common domain. Rationals climb into
// whichever extension the other operand lives in; mixing the two
// extensions has no sensible meaning here and is rejected.
std::pair<FieldElem, FieldElem> promote(const FieldElem& a,
                                        const FieldElem& b) {
  const auto& va = a.raw();
  const auto& vb = b.raw();
  if (va.index() == vb.index()) return {a, b};
  if (std::holds_alternative<Rational>(va)) {
    const Rational& r = std::get<Rational>(va);
    if (std::holds_alternative<QuadElem>(vb)) {
      return {FieldElem(QuadElem::from_rational(r, std::get<QuadElem>(vb).d())),
              b};
    }
    return {FieldElem(RatFunc(r)), b};
  }
  if (std::holds_alternative<Rational>(vb)) {
    auto [pb, pa] = promote(b, a);
    return {pa, pb};
  }
  throw std::invalid_argument(
      "cannot combine a quadratic field element with a rational function");
}

template <typename Op>
FieldElem combine(const FieldElem& a, const FieldElem& b, Op op) {
  auto [pa, pb] = promote(a, b);
  return std::visit(
      [&](const auto& x) -> FieldElem {
        using T = std::decay_t<decltype(x)>;
        return FieldElem(op(x, std::get<T>(pb.raw())));
      },
      pa.raw());
}

}  // namespace

bool FieldElem::is_zero() const {
  return std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Rational>) return x == 0;
        else return x.is_zero();
      },
      v_);
}

FieldElem FieldElem::operator-() const {
  return std::visit([](const auto& x) { return FieldElem(-x); }, v_);
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  return combine(*this, o, [](const auto& x, const auto& y) { return x + y; });
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  return combine(*this, o, [](const auto& x, const auto& y) { return x - y; });
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  return combine(*this, o, [](const auto& x, const auto& y) { return x * y; });
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
  if (o.is_zero()) throw std::invalid_argument("division by zero");
  return combine(*this, o, [](const auto& x, const auto& y) { return x / y; });
}

bool FieldElem::operator==(const FieldElem& o) const {
  return (*this - o).is_zero();
}

std::string FieldElem::str(const std::string& var) const {
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Rational>) return rational_str(x);
        else if constexpr (std::is_same_v<T, QuadElem>) return x.str();
        else return x.str(var);
      },
      v_);
}

bool ProjPoint::same_point(const ProjPoint& o) const {
  if ((x.is_zero() && w.is_zero()) || (o.x.is_zero() && o.w.is_zero()))
    throw std::invalid_argument("(0:0) is not a projective point");
  return (x * o.w - w * o.x).is_zero();
}

std::string ProjPoint::str(const std::string& var) const {
  if (is_infinity()) return "inf";
  return (x / w).str(var);
}

}  // namespace supell
