#include "supell/rotation.hpp"

#include <algorithm>
#include <map>

#include "supell/curve.hpp"

namespace supell {

RotationNumber make_rotation(long long num, long long order) {
  if (order < 2) throw std::invalid_argument("rotation order must be >= 2");
  long long reduced = mod_reduce(num, order);
  if (!is_unit(reduced, order))
    throw std::invalid_argument("rotation exponent must be a unit mod order");
  return {reduced, order};
}

long long harvey_xi(long long eta, long long m) {
  if (m < 2) throw std::invalid_argument("period must be >= 2");
  return mod_inverse(eta, m);  // throws unless gcd(eta, m) = 1
}

std::vector<long long> theta_from_fixed_points(
    const std::vector<FixedPointDatum>& data) {
  std::vector<long long> out;
  out.reserve(data.size());
  for (const auto& d : data) out.push_back(harvey_xi(d.eta, d.period));
  return out;
}

bool generator_change_consistency(long long eta, long long m, long long t) {
  long long xi = harvey_xi(eta, m);
  if (!is_unit(t, m))
    throw std::invalid_argument("generator change t must be a unit");
  long long xi_hat = harvey_xi(mod_mul(t, eta, m), m);
  return mod_reduce(mod_mul(t, xi_hat, m), m) == xi;
}

namespace {

std::pair<long long, int> pair_form(int generator, long long exponent,
                                    long long modulus) {
  long long k = mod_reduce(exponent, modulus);
  if (generator == 1) return {k, 0};
  // t2^k: even powers collapse onto t1 powers via t2^2 = t1^2.
  if (k % 2 == 0) return {k, 0};
  return {mod_reduce(k - 1, modulus), 1};
}

}  // namespace

std::vector<DeltaRow> delta_table(long long n, long long a) {
  CaseInfo info = classify_case(n, a);
  if (info.tag != 1 && info.tag != 4 && info.tag != 5)
    throw std::invalid_argument("no rotation table for case " +
                                std::to_string(info.tag));
  auto c = compute_c(n, a);
  if (!c)
    throw std::invalid_argument(
        "family member has no exponent-c automorphisms (c not an integer)");

  const long long M = pow2(static_cast<int>(n) + 1);
  const long long half = M / 2;
  const long long j0 = mod_inverse(a, M);
  const long long jinf = mod_inverse(-3 * a - 4, M);
  const long long j1 = mod_inverse(a, M);
  const long long jm1 = *c % 2 == 0
                            ? mod_inverse(a, M)
                            : mod_mul(half + 1, mod_inverse(a, M), M);

  std::vector<DeltaRow> rows;
  auto push = [&](int gen, long long exp, const std::string& point,
                  long long num, long long order) {
    DeltaRow row{gen, mod_reduce(exp, M), pair_form(gen, exp, M), point,
                 make_rotation(num, order)};
    for (const auto& r : rows)  // drop duplicates (they appear when a = 1)
      if (r.generator == row.generator && r.exponent == row.exponent &&
          r.point == row.point) {
        if (!(r.rotation.num == row.rotation.num &&
              r.rotation.order == row.rotation.order))
          throw InternalError("conflicting rotation exponents at " + point);
        return;
      }
    rows.push_back(std::move(row));
  };

  push(1, 1, "P0", j0, M);
  push(1, a, "P0", 1, M);
  push(1, 1, "Q0", jinf, M);
  push(1, mod_reduce(-3 * a - 4, M), "Q0", 1, M);
  push(2, 1, "1", j1, M);
  push(2, a, "1", 1, M);
  push(2, 1, "-1", jm1, M);
  if (*c % 2 == 0) {
    push(2, a, "-1", 1, M);
  } else {
    push(2, a, "-1", half + 1, M);
    push(2, mod_reduce(a * (half + 1), M), "-1", 1, M);
  }
  for (const char* p : {"lambda", "-lambda", "1/lambda", "-1/lambda"})
    push(1, 2, p, 1, half);

  // Multiplicativity cross-check: whenever the table holds both delta(t)
  // and delta(t^k) at one point, the latter must be the k-th power.
  for (const auto& base : rows) {
    if (base.exponent != 1) continue;
    for (const auto& r : rows)
      if (r.generator == base.generator && r.point == base.point &&
          r.rotation.order == base.rotation.order &&
          r.rotation.num !=
              mod_reduce(mod_mul(r.exponent, base.rotation.num,
                                 base.rotation.order),
                         base.rotation.order))
        throw InternalError("rotation table is not multiplicative at " +
                            r.point);
  }
  return rows;
}

std::vector<long long> subgroup_tuple_from_table(long long n, long long a,
                                                 int which) {
  if (which != 1 && which != 2)
    throw std::invalid_argument("which must be 1 (for <t1>) or 2 (for <t2>)");
  const long long M = pow2(static_cast<int>(n) + 1);
  const long long half = M / 2;
  auto rows = delta_table(n, a);

  // Rotation exponent of the row of this generator power at a point.
  auto eta_at = [&](int gen, long long exp, const std::string& point) {
    for (const auto& r : rows)
      if (r.generator == gen && r.exponent == exp && r.point == point)
        return r.rotation.num;
    throw InternalError("missing rotation row at " + point);
  };

  // Slots 1 and 2 are the two points fixed by the subgroup itself; slots
  // 3-5 have stabilizer <t1^2> = <t2^2>, so eta reduces mod 2^n and the
  // entry doubles back to an exponent of the subgroup generator.
  std::vector<long long> out(5);
  if (which == 1) {
    out[0] = harvey_xi(eta_at(1, 1, "P0"), M);
    out[1] = harvey_xi(eta_at(1, 1, "Q0"), M);
    out[2] = mod_reduce(
        2 * harvey_xi(mod_reduce(eta_at(2, 1, "1"), half), half), M);
  } else {
    out[0] = harvey_xi(eta_at(2, 1, "1"), M);
    out[1] = harvey_xi(eta_at(2, 1, "-1"), M);
    out[2] = mod_reduce(
        2 * harvey_xi(mod_reduce(eta_at(1, 1, "P0"), half), half), M);
  }
  out[3] = mod_reduce(2 * harvey_xi(eta_at(1, 2, "lambda"), half), M);
  out[4] = mod_reduce(2 * harvey_xi(eta_at(1, 2, "1/lambda"), half), M);
  return out;
}

}  // namespace supell
