#include "supell/curve.hpp"

#include <sstream>

namespace supell {

namespace {

const std::array<int, 3> kP0 = {0, 0, 1};    // affine origin
const std::array<int, 3> kQ0X = {1, 0, 0};   // point at infinity, cases 1-4
const std::array<int, 3> kQ0Y = {0, 1, 0};   // point at infinity, cases 5-6
const std::array<int, 3> kP1 = {1, 0, 1};
const std::array<int, 3> kPm1 = {-1, 0, 1};

}  // namespace

std::string LambdaSpec::str() const {
  if (is_symbolic()) return "lambda";
  if (const Rational* r = std::get_if<Rational>(&value)) return rational_str(*r);
  return std::get<QuadElem>(value).str();
}

std::optional<long long> compute_c(long long n, long long a) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (a < 1 || a % 2 == 0) throw std::invalid_argument("a must be odd and >= 1");
  long long two_nm1 = pow2(static_cast<int>(n) - 1);
  if ((2 * a + 2) % two_nm1 != 0) return std::nullopt;
  return (2 * a + 2) / two_nm1;
}

CaseInfo classify_case(long long n, long long a) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (a < 1 || a % 2 == 0) throw std::invalid_argument("a must be odd and >= 1");
  long long disc = pow2(static_cast<int>(n)) - 3 * a - 4;
  if (disc == 0)
    throw InternalError("2^n - 3a - 4 = 0 is impossible for odd a");
  if (disc > 0) {
    bool on_edge = disc == 1;  // 2^n - 3a - 5 = 0
    if (a == 1) {
      if (on_edge) return {1, {}};  // n = 3, smooth closure
      return {3, {kQ0X}};
    }
    if (on_edge) return {2, {kP0, kP1, kPm1}};
    return {4, {kP0, kQ0X, kP1, kPm1}};
  }
  if (a == 1) return {6, {kQ0Y}};  // only n = 1, 2 reach here with a = 1
  return {5, {kP0, kQ0Y, kP1, kPm1}};
}

long long family_genus(long long n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  long long g = 3 * (pow2(static_cast<int>(n)) - 1);
  // Cross-check: degree 2^n cover of the sphere, eight branch points of
  // full order.
  long long order = pow2(static_cast<int>(n));
  Signature below(0, std::vector<long long>(8, order));
  if (riemann_hurwitz_genus(order, below) != g)
    throw InternalError("family genus fails Riemann-Hurwitz cross-check");
  return g;
}

ChartExponents chart_exponents(const std::array<int, 3>& point, long long n,
                               long long a) {
  CaseInfo info = classify_case(n, a);
  bool singular = false;
  for (const auto& p : info.singular_points) singular |= p == point;
  if (!singular)
    throw std::invalid_argument("point " + point_str(point) +
                                " is not singular in case " +
                                std::to_string(info.tag));
  long long two_n = pow2(static_cast<int>(n));
  if (point == kP0 || point == kP1 || point == kPm1)
    return {point, two_n, a, 0};  // t -> [t^{2^n} (+x0), t^a h(t), 1]
  if (point == kQ0X)
    return {point, 0, two_n - 3 * a - 4, two_n};  // t -> [1, t^{2^n-3a-4} h, t^{2^n}]
  if (point == kQ0Y)
    return {point, 3 * a + 4 - two_n, 0, 3 * a + 4};  // t -> [t^{3a+4-2^n} g, 1, t^{3a+4}]
  throw std::invalid_argument("unknown singular point " + point_str(point));
}

std::vector<ChartExponents> all_chart_exponents(long long n, long long a) {
  std::vector<ChartExponents> out;
  for (const auto& p : classify_case(n, a).singular_points)
    out.push_back(chart_exponents(p, n, a));
  return out;
}

namespace {

// Branch points are pairwise distinct exactly when l != 0 and l^4 != 1.
bool lambda_admissible(const LambdaSpec& lambda) {
  if (lambda.is_symbolic()) return true;
  if (const Rational* r = std::get_if<Rational>(&lambda.value)) {
    Rational l4 = (*r) * (*r) * (*r) * (*r);
    return *r != 0 && l4 != 1;
  }
  const QuadElem& q = std::get<QuadElem>(lambda.value);
  QuadElem l4 = q * q * q * q;
  return !q.is_zero() && !(l4 == QuadElem::from_rational(1, q.d()));
}

std::string lambda_value_str(const LambdaSpec& lambda, int sign, bool inverse) {
  if (lambda.is_symbolic())
    return std::string(sign < 0 ? "-" : "") +
           (inverse ? "1/lambda" : "lambda");
  if (const Rational* r = std::get_if<Rational>(&lambda.value)) {
    Rational v = inverse ? Rational(1) / *r : *r;
    if (sign < 0) v = -v;
    return rational_str(v);
  }
  QuadElem v = std::get<QuadElem>(lambda.value);
  if (inverse) v = QuadElem::from_rational(1, v.d()) / v;
  if (sign < 0) v = -v;
  return v.str();
}

}  // namespace

BranchSet branch_set(long long n, const LambdaSpec& lambda) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (!lambda_admissible(lambda))
    throw std::invalid_argument(
        "branch points collide: lambda^4 must avoid {0, 1}");
  BranchSet out;
  out.multiplicity = pow2(static_cast<int>(n));
  out.distinct = true;
  out.points = {
      {"0", "0", false},
      {"inf", "inf", true},
      {"1", "1", false},
      {"-1", "-1", false},
      {"lambda", lambda_value_str(lambda, +1, false), false},
      {"-lambda", lambda_value_str(lambda, -1, false), false},
      {"1/lambda", lambda_value_str(lambda, +1, true), false},
      {"-1/lambda", lambda_value_str(lambda, -1, true), false},
  };
  return out;
}

CurveParams make_curve_params(long long n, long long a,
                              const LambdaSpec& lambda) {
  CaseInfo info = classify_case(n, a);  // validates n and a
  if (!lambda_admissible(lambda))
    throw std::invalid_argument(
        "branch points collide: lambda^4 must avoid {0, 1}");
  return {n, a, lambda, compute_c(n, a), info.tag};
}

LambdaSpec parse_lambda_spec(const std::string& rational_text,
                             const std::string& quad_text) {
  if (!rational_text.empty() && !quad_text.empty())
    throw std::invalid_argument(
        "give at most one concrete form of the parameter");
  LambdaSpec spec;
  if (!rational_text.empty()) {
    spec.value = parse_rational(rational_text);
  } else if (!quad_text.empty()) {
    auto first = quad_text.find(',');
    auto second = quad_text.find(',', first + 1);
    if (first == std::string::npos || second == std::string::npos ||
        quad_text.find(',', second + 1) != std::string::npos)
      throw std::invalid_argument("quadratic parameter wants p,q,d");
    long long d;
    try {
      d = std::stoll(quad_text.substr(second + 1));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("cannot parse field discriminant '" +
                                  quad_text.substr(second + 1) + "'");
    }
    spec.value =
        QuadElem(parse_rational(quad_text.substr(0, first)),
                 parse_rational(quad_text.substr(first + 1, second - first - 1)),
                 d);
  }
  return spec;
}

std::string point_str(const std::array<int, 3>& p) {
  std::ostringstream os;
  os << "[" << p[0] << ":" << p[1] << ":" << p[2] << "]";
  return os.str();
}

}  // namespace supell
