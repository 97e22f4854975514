#include <doctest.h>

#include <set>
#include <stdexcept>

#include "supell/curve.hpp"

using supell::LambdaSpec;
using supell::QuadElem;
using supell::Rational;

namespace {

const std::array<int, 3> kP0 = {0, 0, 1};
const std::array<int, 3> kQ0X = {1, 0, 0};
const std::array<int, 3> kQ0Y = {0, 1, 0};
const std::array<int, 3> kP1 = {1, 0, 1};
const std::array<int, 3> kPm1 = {-1, 0, 1};

}  // namespace

TEST_CASE("c solves c * 2^{n-1} = 2a + 2 when it exists") {
  CHECK(supell::compute_c(3, 1) == 1);
  CHECK(supell::compute_c(3, 3) == 2);
  CHECK_FALSE(supell::compute_c(4, 1).has_value());
  CHECK(supell::compute_c(4, 3) == 1);
  CHECK(supell::compute_c(1, 5) == 12);
  CHECK_THROWS_AS(supell::compute_c(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(supell::compute_c(0, 1), std::invalid_argument);
}

TEST_CASE("the six singular-point cases") {
  auto c1 = supell::classify_case(3, 1);
  CHECK(c1.tag == 1);
  CHECK(c1.singular_points.empty());

  auto c2 = supell::classify_case(5, 9);  // 2^5 - 3*9 - 5 = 0
  CHECK(c2.tag == 2);
  CHECK(c2.singular_points == std::vector<std::array<int, 3>>{kP0, kP1, kPm1});

  auto c3 = supell::classify_case(4, 1);
  CHECK(c3.tag == 3);
  CHECK(c3.singular_points == std::vector<std::array<int, 3>>{kQ0X});

  auto c4 = supell::classify_case(4, 3);
  CHECK(c4.tag == 4);
  CHECK(c4.singular_points ==
        std::vector<std::array<int, 3>>{kP0, kQ0X, kP1, kPm1});

  auto c5 = supell::classify_case(3, 3);
  CHECK(c5.tag == 5);
  CHECK(c5.singular_points ==
        std::vector<std::array<int, 3>>{kP0, kQ0Y, kP1, kPm1});

  auto c6 = supell::classify_case(2, 1);
  CHECK(c6.tag == 6);
  CHECK(c6.singular_points == std::vector<std::array<int, 3>>{kQ0Y});
  CHECK(supell::classify_case(1, 1).tag == 6);

  CHECK_THROWS_AS(supell::classify_case(3, 4), std::invalid_argument);
}

TEST_CASE("case grid sanity over n <= 10") {
  for (long long n = 1; n <= 10; ++n) {
    long long edge_solutions = 0;
    for (long long a = 1; a <= supell::pow2(static_cast<int>(n)); a += 2) {
      // 2^n - 3a - 4 = 0 never happens for odd a (parity), so classify
      // always lands in one of the six rows.
      long long disc = supell::pow2(static_cast<int>(n)) - 3 * a - 4;
      CHECK(disc != 0);
      int tag = supell::classify_case(n, a).tag;
      CHECK(tag >= 1);
      CHECK(tag <= 6);
      if (disc == 1) ++edge_solutions;
    }
    // The borderline 2^n - 3a - 5 = 0 has an odd solution iff n is odd.
    CHECK(edge_solutions == (n % 2 == 1 && n >= 3 ? 1 : 0));
  }
}

TEST_CASE("genus is 3(2^n - 1) and matches Riemann-Hurwitz") {
  CHECK(supell::family_genus(1) == 3);
  CHECK(supell::family_genus(3) == 21);
  CHECK(supell::family_genus(5) == 93);
  for (long long n = 1; n <= 10; ++n)
    CHECK(supell::family_genus(n) ==
          3 * (supell::pow2(static_cast<int>(n)) - 1));
  CHECK_THROWS_AS(supell::family_genus(0), std::invalid_argument);
}

TEST_CASE("local chart orders at the singular points") {
  auto p0 = supell::chart_exponents(kP0, 4, 3);
  CHECK(p0.ex == 16);
  CHECK(p0.ey == 3);
  CHECK(p0.ez == 0);

  auto q0x = supell::chart_exponents(kQ0X, 4, 3);
  CHECK(q0x.ex == 0);
  CHECK(q0x.ey == 3);  // 2^n - 3a - 4
  CHECK(q0x.ez == 16);

  auto q0y = supell::chart_exponents(kQ0Y, 3, 3);
  CHECK(q0y.ex == 5);  // 3a + 4 - 2^n
  CHECK(q0y.ey == 0);
  CHECK(q0y.ez == 13);  // 3a + 4

  // [0,1,0] is not singular when 2^n - 3a - 4 > 0.
  CHECK_THROWS_AS(supell::chart_exponents(kQ0Y, 4, 3), std::invalid_argument);
  // The smooth closure has no chart rows at all.
  CHECK(supell::all_chart_exponents(3, 1).empty());
  CHECK(supell::all_chart_exponents(4, 3).size() == 4);
}

TEST_CASE("branch set carries eight points of full multiplicity") {
  auto sym = supell::branch_set(3, LambdaSpec{});
  CHECK(sym.points.size() == 8);
  CHECK(sym.multiplicity == 8);
  CHECK(sym.distinct);

  LambdaSpec two{Rational(2)};
  auto conc = supell::branch_set(3, two);
  CHECK(conc.distinct);
  std::set<std::string> values;
  for (const auto& p : conc.points) values.insert(p.value);
  CHECK(values ==
        std::set<std::string>{"0", "inf", "1", "-1", "2", "-2", "1/2", "-1/2"});

  LambdaSpec silver{QuadElem(Rational(1), Rational(1), 2)};
  CHECK(supell::branch_set(3, silver).distinct);

  // l = 1 collapses the set onto {0, inf, 1, -1}.
  CHECK_THROWS_AS(supell::branch_set(3, LambdaSpec{Rational(1)}),
                  std::invalid_argument);
}

TEST_CASE("parameter validation") {
  auto params = supell::make_curve_params(3, 3);
  CHECK(params.c == 2);
  CHECK(params.case_tag == 5);
  CHECK(params.lambda.is_symbolic());

  auto pinned = supell::make_curve_params(3, 1, LambdaSpec{Rational(2)});
  CHECK(pinned.c == 1);
  CHECK(pinned.case_tag == 1);
  CHECK(pinned.lambda.str() == "2");

  CHECK_FALSE(supell::make_curve_params(4, 1).c.has_value());
  CHECK_THROWS_AS(supell::make_curve_params(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(supell::make_curve_params(3, 1, LambdaSpec{Rational(0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(supell::make_curve_params(3, 1, LambdaSpec{Rational(-1)}),
                  std::invalid_argument);
  // l = sqrt(-1) has l^4 = 1 without being rational; the degeneration
  // check must work inside the quadratic field too.
  CHECK_THROWS_AS(
      supell::make_curve_params(
          3, 1, LambdaSpec{QuadElem(Rational(0), Rational(1), -1)}),
      std::invalid_argument);
  CHECK_NOTHROW(supell::make_curve_params(
      3, 1, LambdaSpec{QuadElem(Rational(1), Rational(1), 2)}));
}

TEST_CASE("lambda front-end parsing") {
  CHECK(supell::parse_lambda_spec("", "").is_symbolic());
  CHECK(supell::parse_lambda_spec("3/2", "").str() == "3/2");
  CHECK(supell::parse_lambda_spec("", "1,1,2").str() == "1+sqrt(2)");
  CHECK_THROWS_AS(supell::parse_lambda_spec("1/2", "1,1,2"),
                  std::invalid_argument);
  CHECK_THROWS_AS(supell::parse_lambda_spec("", "1,1"), std::invalid_argument);
}
