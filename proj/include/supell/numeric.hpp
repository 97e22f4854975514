#pragma once

// Exact arithmetic helpers shared by every module. Rationals are backed by
// boost multiprecision and are always stored in reduced form; the small
// modular helpers work on long long because all moduli in this project are
// tiny powers of two.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace supell {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Cross-check failure inside the library itself (as opposed to bad user
// input, which is reported with std::invalid_argument). The CLI maps this
// to exit code 2.
struct InternalError : std::runtime_error {
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

std::string rational_str(const Rational& r);

// Accepts "p" or "p/q" with arbitrary-precision integers.
Rational parse_rational(const std::string& text);

// Representative of x in [0, m). m >= 1.
long long mod_reduce(long long x, long long m);

// Inverse of x mod m; throws std::invalid_argument unless gcd(x, m) = 1.
long long mod_inverse(long long x, long long m);

long long mod_mul(long long a, long long b, long long m);
long long mod_pow(long long base, long long exp, long long m);

// Order of x in the additive group Z/nZ, i.e. n / gcd(x, n).
long long additive_order(long long x, long long n);

bool is_unit(long long x, long long n);
std::vector<long long> units_mod(long long n);

// 2^k with an overflow guard; k must stay below 62.
long long pow2(int k);

// Writes |k| = s^2 * d with d squarefree and returns (s, d * sign(k)).
// k must be nonzero.
std::pair<long long, long long> squarefree_split(long long k);

}  // namespace supell
