#include "supell/numeric.hpp"

#include <numeric>

namespace supell {

std::string rational_str(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("cannot parse rational '" + text + "'");
  }
}

long long mod_reduce(long long x, long long m) {
  if (m < 1) throw std::invalid_argument("modulus must be positive");
  long long r = x % m;
  return r < 0 ? r + m : r;
}

long long mod_inverse(long long x, long long m) {
  // Extended Euclid on (x mod m, m).
  long long a = mod_reduce(x, m), b = m;
  long long u = 1, v = 0;
  while (b != 0) {
    long long q = a / b;
    a -= q * b;
    std::swap(a, b);
    u -= q * v;
    std::swap(u, v);
  }
  if (a != 1)
    throw std::invalid_argument("not a unit mod " + std::to_string(m) + ": " +
                                std::to_string(x));
  return mod_reduce(u, m);
}

long long mod_mul(long long a, long long b, long long m) {
  return static_cast<long long>(
      static_cast<__int128>(mod_reduce(a, m)) * mod_reduce(b, m) % m);
}

long long mod_pow(long long base, long long exp, long long m) {
  if (exp < 0) throw std::invalid_argument("negative exponent");
  long long result = mod_reduce(1, m);
  long long b = mod_reduce(base, m);
  while (exp > 0) {
    if (exp & 1) result = mod_mul(result, b, m);
    b = mod_mul(b, b, m);
    exp >>= 1;
  }
  return result;
}

long long additive_order(long long x, long long n) {
  if (n < 1) throw std::invalid_argument("modulus must be positive");
  return n / std::gcd(mod_reduce(x, n), n);
}

bool is_unit(long long x, long long n) {
  return std::gcd(mod_reduce(x, n), n) == 1;
}

std::vector<long long> units_mod(long long n) {
  std::vector<long long> out;
  for (long long s = 1; s < n; ++s)
    if (std::gcd(s, n) == 1) out.push_back(s);
  if (n == 1) out.push_back(0);  // trivial group
  return out;
}

long long pow2(int k) {
  if (k < 0 || k >= 62) throw std::invalid_argument("2^k out of range");
  return 1LL << k;
}

std::pair<long long, long long> squarefree_split(long long k) {
  if (k == 0) throw std::invalid_argument("squarefree_split(0)");
  long long sign = k < 0 ? -1 : 1;
  long long m = k < 0 ? -k : k;
  long long s = 1, d = 1;
  for (long long p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    for (int i = 0; i + 1 < e; i += 2) s *= p;
    if (e % 2) d *= p;
  }
  d *= m;  // leftover prime
  return {s, sign * d};
}

}  // namespace supell
