#pragma once

// The two-parameter curve family y^{2^n} = x^a (x^2-1)^a (x^2-l^2)(x^2-l^{-2})
// with a odd and l^4 not in {0, 1}: case classification of the singular
// points of the projective closure, genus, local chart exponents at the
// singular points, and the branch data of the 2^n-cyclic projection.

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "supell/qfield.hpp"
#include "supell/signature.hpp"

namespace supell {

// The curve parameter l: left symbolic, or pinned to an exact value.
struct LambdaSymbolic {};

struct LambdaSpec {
  std::variant<LambdaSymbolic, Rational, QuadElem> value = LambdaSymbolic{};
  bool is_symbolic() const {
    return std::holds_alternative<LambdaSymbolic>(value);
  }
  std::string str() const;
};

// c . 2^{n-1} = 2a + 2; empty when that has no integer solution (then the
// family member has no exponent-c automorphisms).
std::optional<long long> compute_c(long long n, long long a);

// The six singular-point cases, keyed on sign(2^n - 3a - 4), a = 1, and
// 2^n - 3a - 5 = 0. The value 2^n - 3a - 4 = 0 cannot occur for odd a.
struct CaseInfo {
  int tag = 0;                                      // 1..6
  std::vector<std::array<int, 3>> singular_points;  // projective [X:Y:Z]
};

CaseInfo classify_case(long long n, long long a);

// 3(2^n - 1); cross-checked internally against Riemann-Hurwitz for the
// 2^n-sheeted projection branched over eight points to full order.
long long family_genus(long long n);

struct ChartExponents {
  std::array<int, 3> point{};
  long long ex = 0, ey = 0, ez = 0;  // monomial orders of the local chart
};

// Local parametrization orders at a singular point of the given case.
// Throws if the point is not singular for (n, a).
ChartExponents chart_exponents(const std::array<int, 3>& point, long long n,
                               long long a);

std::vector<ChartExponents> all_chart_exponents(long long n, long long a);

struct BranchPointValue {
  std::string label;   // symbolic name: "0", "inf", "1", "-lambda", ...
  std::string value;   // exact value when lambda is pinned, else the label
  bool at_infinity = false;
};

struct BranchSet {
  std::vector<BranchPointValue> points;  // always eight
  long long multiplicity = 0;            // 2^n at every branch point
  bool distinct = false;                 // pairwise distinct (l^4 not in {0,1})
};

BranchSet branch_set(long long n, const LambdaSpec& lambda);

struct CurveParams {
  long long n = 0;
  long long a = 0;
  LambdaSpec lambda;
  std::optional<long long> c;
  int case_tag = 0;
};

// Validates n >= 1, a odd, and a concrete lambda with l^4 not in {0, 1}.
CurveParams make_curve_params(long long n, long long a,
                              const LambdaSpec& lambda = {});

// Front-end parameter parsing: rational_text is "p" or "p/q", quad_text is
// "p,q,d" meaning p + q*sqrt(d); both empty gives the symbolic parameter.
LambdaSpec parse_lambda_spec(const std::string& rational_text,
                             const std::string& quad_text);

std::string point_str(const std::array<int, 3>& p);

}  // namespace supell
