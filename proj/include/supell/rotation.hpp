#pragma once

// Rotation numbers at fixed points of a cyclic action and the arithmetic
// that recovers the epimorphism from them: the rotation exponent eta of the
// stabilizer generator at a fixed point determines the cone-point image as
// xi = eta^{-1} mod m. The delta tables list the rotation exponents of the
// curve-family automorphisms at every fixed base point, for the three
// singular-point cases that carry the full automorphism group.

#include <string>
#include <utility>
#include <vector>

#include "supell/numeric.hpp"

namespace supell {

// omega_order ^ num with gcd(num, order) = 1, num in [1, order).
struct RotationNumber {
  long long num = 1;
  long long order = 1;
};

RotationNumber make_rotation(long long num, long long order);

struct FixedPointDatum {
  std::string point;  // symbolic label of the fixed point
  long long period;   // order m of the stabilizer
  long long eta;      // delta(generator) = omega_m^eta
};

// Inverse of eta mod m; the slot entry of the generating vector at a fixed
// point with rotation exponent eta. Requires m >= 2 and gcd(eta, m) = 1.
long long harvey_xi(long long eta, long long m);

// Slotwise xi = eta^{-1} for a list of fixed-point data.
std::vector<long long> theta_from_fixed_points(
    const std::vector<FixedPointDatum>& data);

// Changing the stabilizer generator by t scales eta by t and must scale xi
// back: with eta_hat = t * eta and xi_hat = eta_hat^{-1}, checks
// xi = t * xi_hat mod m.
bool generator_change_consistency(long long eta, long long m, long long t);

struct DeltaRow {
  int generator = 1;       // 1: a power of t1, 2: a power of t2
  long long exponent = 1;  // the power shown in the table
  std::pair<long long, int> element;  // same element in (i, j) pair form
  std::string point;
  RotationNumber rotation;
};

// Rotation-exponent table for the family member (n, a). Only the cases
// whose curves carry the full automorphism group have tables (Table-1
// cases 1, 4 and 5); other cases and parameters without an integer c are
// rejected.
std::vector<DeltaRow> delta_table(long long n, long long a);

// Reconstructs the induced generating-vector entries of the cyclic
// subgroups <t1> (which = 1) and <t2> (which = 2) from the delta table:
// slot orders (2^{n+1}, 2^{n+1}, 2^n, 2^n, 2^n), entries given as exponents
// of the subgroup generator.
std::vector<long long> subgroup_tuple_from_table(long long n, long long a,
                                                 int which);

}  // namespace supell
