#include <doctest.h>

#include <stdexcept>

#include "supell/field.hpp"
#include "supell/mobius.hpp"
#include "supell/ratfunc.hpp"

using supell::FieldElem;
using supell::Mobius;
using supell::ProjPoint;
using supell::QuadElem;
using supell::RatFunc;
using supell::Rational;

TEST_CASE("field elements promote rationals into either extension") {
  FieldElem a(Rational(2));
  FieldElem b(QuadElem(Rational(1), Rational(1), 2));
  FieldElem sum = a + b;  // 3 + sqrt(2)
  CHECK(sum == FieldElem(QuadElem(Rational(3), Rational(1), 2)));
  CHECK(sum.str() == "3+sqrt(2)");

  FieldElem x(RatFunc::variable());
  CHECK((x * x - a).str("t") == "t^2 - 2");
  CHECK_THROWS_AS(b + x, std::invalid_argument);  // incompatible extensions
  CHECK_THROWS_AS(a / FieldElem(Rational(0)), std::invalid_argument);
  CHECK(FieldElem(3) - FieldElem(3) == FieldElem(0));
}

TEST_CASE("projective points compare by cross product") {
  ProjPoint p = ProjPoint::finite(FieldElem(Rational(2)));
  ProjPoint q{FieldElem(Rational(4)), FieldElem(Rational(2))};
  CHECK(p.same_point(q));
  CHECK_FALSE(p.same_point(ProjPoint::infinity()));
  CHECK(ProjPoint::infinity().same_point(ProjPoint::infinity()));
  CHECK_THROWS_AS(
      p.same_point(ProjPoint{FieldElem(0), FieldElem(0)}),
      std::invalid_argument);
}

TEST_CASE("canonical scaling makes equality entrywise") {
  Mobius m(FieldElem(2), FieldElem(2), FieldElem(-1), FieldElem(1));
  Mobius same(FieldElem(1), FieldElem(1), FieldElem(Rational(-1, 2)),
              FieldElem(Rational(1, 2)));
  CHECK(m == same);
  CHECK(m.a() == FieldElem(1));  // scaled so the first entry is 1
  CHECK_THROWS_AS(Mobius(FieldElem(1), FieldElem(2), FieldElem(2),
                         FieldElem(4)),
                  std::invalid_argument);  // singular
}

TEST_CASE("apply, compose, invert") {
  // z -> (2z+2)/(-z+1) sends 0, inf, 1 to 2, -2, inf.
  Mobius m(FieldElem(2), FieldElem(2), FieldElem(-1), FieldElem(1));
  CHECK(m.apply(ProjPoint::finite(FieldElem(0))).same_point(
                           ProjPoint::finite(FieldElem(2))));
  CHECK(m.apply(ProjPoint::infinity()).same_point(
                           ProjPoint::finite(FieldElem(-2))));
  CHECK(m.apply(ProjPoint::finite(FieldElem(1))).same_point(
                           ProjPoint::infinity()));

  Mobius round = m.inverse().compose(m);
  CHECK(round.is_identity());
  CHECK(m.compose(Mobius::identity()) == m);

  // Composition order: (this after inner).
  Mobius shift(FieldElem(1), FieldElem(1), FieldElem(0), FieldElem(1));
  Mobius dbl(FieldElem(2), FieldElem(0), FieldElem(0), FieldElem(1));
  ProjPoint three = ProjPoint::finite(FieldElem(3));
  CHECK(dbl.compose(shift).apply(three).same_point(
                           ProjPoint::finite(FieldElem(8))));
  CHECK(shift.compose(dbl).apply(three).same_point(
                           ProjPoint::finite(FieldElem(7))));
}

TEST_CASE("involution detection") {
  // T(x) = (1-x)/(1+x) composes with itself to the identity.
  Mobius t(FieldElem(-1), FieldElem(1), FieldElem(1), FieldElem(1));
  CHECK(t.is_involution());
  CHECK_FALSE(Mobius::identity().is_involution());
  Mobius shift(FieldElem(1), FieldElem(1), FieldElem(0), FieldElem(1));
  CHECK_FALSE(shift.is_involution());
}

TEST_CASE("three point interpolation") {
  auto pt = [](long long v) { return ProjPoint::finite(FieldElem(v)); };
  ProjPoint inf = ProjPoint::infinity();

  Mobius m = supell::mobius_from_three_points(pt(0), inf, pt(1), pt(2),
                                              pt(-2), inf);
  CHECK(m == Mobius(FieldElem(2), FieldElem(2), FieldElem(-1), FieldElem(1)));

  // (0, 1, inf) -> (1, 0, inf) is 1 - z.
  Mobius flip = supell::mobius_from_three_points(pt(0), pt(1), inf, pt(1),
                                                 pt(0), inf);
  CHECK(flip == Mobius(FieldElem(-1), FieldElem(1), FieldElem(0),
                       FieldElem(1)));

  // Fixing three points forces the identity.
  CHECK(supell::mobius_from_three_points(pt(0), pt(1), inf, pt(0), pt(1), inf)
            .is_identity());

  CHECK_THROWS_AS(
      supell::mobius_from_three_points(pt(0), pt(0), pt(1), pt(0), pt(1),
                                       pt(2)),
      std::invalid_argument);

  // Works just as well over a quadratic field: send the silver ratio pair
  // where it belongs.
  FieldElem s(QuadElem(Rational(1), Rational(1), 2));
  ProjPoint ps = ProjPoint::finite(s);
  Mobius q = supell::mobius_from_three_points(
      ProjPoint::finite(FieldElem(QuadElem(Rational(0), Rational(0), 2))),
      ProjPoint::infinity(), ps, ps, ProjPoint::infinity(),
      ProjPoint::finite(FieldElem(QuadElem(Rational(2), Rational(1), 2))));
  CHECK(q.apply(ps).same_point(
                           ProjPoint::finite(FieldElem(
                               QuadElem(Rational(2), Rational(1), 2)))));
}

TEST_CASE("rendering") {
  Mobius m(FieldElem(2), FieldElem(2), FieldElem(-1), FieldElem(1));
  // Canonical form divides through by 2.
  CHECK(m.str() == "(z + 1)/((-1/2)*z + 1/2)");
  CHECK(Mobius::identity().str() == "z");
}
