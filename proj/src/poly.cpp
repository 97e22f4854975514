#include "supell/poly.hpp"

#include <algorithm>
#include <sstream>

namespace supell {

Poly::Poly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::variable() {
  return Poly(std::vector<Rational>{Rational(0), Rational(1)});
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

long long Poly::degree() const {
  return static_cast<long long>(c_.size()) - 1;
}

const Rational& Poly::leading() const {
  if (is_zero()) throw std::invalid_argument("zero polynomial has no leading");
  return c_.back();
}

Rational Poly::coeff(size_t k) const {
  return k < c_.size() ? c_[k] : Rational(0);
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

Poly Poly::operator+(const Poly& o) const {
  Poly out;
  out.c_.resize(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t k = 0; k < out.c_.size(); ++k) out.c_[k] = coeff(k) + o.coeff(k);
  out.trim();
  return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  Poly out;
  out.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) out.c_[i + j] += c_[i] * o.c_[j];
  out.trim();
  return out;
}

Poly Poly::operator*(const Rational& s) const {
  Poly out = *this;
  for (auto& x : out.c_) x *= s;
  out.trim();
  return out;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& o) const {
  if (o.is_zero()) throw std::invalid_argument("polynomial division by zero");
  Poly rem = *this, quot;
  if (degree() >= o.degree())
    quot.c_.assign(degree() - o.degree() + 1, Rational(0));
  while (!rem.is_zero() && rem.degree() >= o.degree()) {
    Rational f = rem.leading() / o.leading();
    long long shift = rem.degree() - o.degree();
    quot.c_[shift] = f;
    Poly t;
    t.c_.assign(shift + 1, Rational(0));
    t.c_[shift] = f;
    rem = rem - t * o;
  }
  quot.trim();
  return {quot, rem};
}

Poly Poly::operator/(const Poly& o) const {
  auto [q, r] = divmod(o);
  if (!r.is_zero()) throw std::invalid_argument("polynomial division not exact");
  return q;
}

Poly Poly::operator%(const Poly& o) const { return divmod(o).second; }

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

Poly Poly::substitute(const Poly& inner) const {
  Poly acc;
  for (size_t k = c_.size(); k-- > 0;) acc = acc * inner + Poly(c_[k]);
  return acc;
}

Poly Poly::pow(long long k) const {
  if (k < 0) throw std::invalid_argument("negative polynomial power");
  Poly acc(Rational(1)), base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / leading());
}

Poly Poly::primitive() const {
  if (is_zero()) return *this;
  // Clear denominators, then divide by the content.
  Int den = 1;
  for (const auto& x : c_) den = lcm(den, denominator(x));
  Int content = 0;
  std::vector<Int> ints;
  ints.reserve(c_.size());
  for (const auto& x : c_) {
    Int v = numerator(x) * (den / denominator(x));
    ints.push_back(v);
    content = gcd(content, v);
  }
  if (ints.back() < 0) content = -content;
  Poly out;
  out.c_.reserve(ints.size());
  for (const auto& v : ints) out.c_.push_back(Rational(v / content));
  return out;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = c_.size(); k-- > 0;) {
    const Rational& x = c_[k];
    if (x == 0) continue;
    Rational ax = x < 0 ? -x : x;
    if (first) {
      if (x < 0) os << "-";
      first = false;
    } else {
      os << (x < 0 ? " - " : " + ");
    }
    bool unit = ax == 1;
    if (!unit || k == 0) os << rational_str(ax);
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = y;
    y = r;
  }
  if (x.is_zero()) return x;
  return x.primitive();
}

bool poly_divides(const Poly& d, const Poly& p) {
  if (d.is_zero()) return p.is_zero();
  return (p % d).is_zero();
}

namespace {

std::vector<Int> divisors_with_sign(const Int& v) {
  Int a = abs(v);
  std::vector<Int> out;
  for (Int d = 1; d * d <= a; ++d)
    if (a % d == 0) {
      out.push_back(d);
      if (d * d != a) out.push_back(a / d);
    }
  size_t m = out.size();
  for (size_t k = 0; k < m; ++k) out.push_back(-out[k]);
  return out;
}

// Strips every rational root as a primitive linear factor (q*x - p).
void strip_rational_roots(Poly& p, std::vector<Poly>& factors) {
  bool found = true;
  while (found && p.degree() >= 1) {
    found = false;
    Poly ip = p.primitive();
    Int a0 = numerator(ip.coeff(0));
    Int an = numerator(ip.leading());
    if (a0 == 0) {
      factors.push_back(Poly::variable());
      p = p / Poly::variable();
      found = true;
      continue;
    }
    for (const Int& num : divisors_with_sign(a0)) {
      for (const Int& den : divisors_with_sign(an)) {
        if (den < 0) continue;  // sign already covered by num
        Rational root(num, den);
        if (ip.eval(root) != 0) continue;
        Poly lin({-root, Rational(1)});
        factors.push_back(lin.primitive());
        p = p / lin;
        found = true;
        break;
      }
      if (found) break;
    }
  }
}

bool is_perfect_square(const Int& v, Int& root) {
  if (v < 0) return false;
  root = sqrt(v);
  return root * root == v;
}

// Splits a primitive integer quartic with no rational roots into two
// integer quadratics if possible.
bool split_quartic(const Poly& p, Poly& f, Poly& g) {
  Int p4 = numerator(p.coeff(4)), p3 = numerator(p.coeff(3));
  Int p2 = numerator(p.coeff(2)), p1 = numerator(p.coeff(1));
  Int p0 = numerator(p.coeff(0));
  for (const Int& a1 : divisors_with_sign(p4)) {
    if (a1 < 0) continue;  // normalize the first leading coefficient
    if (p4 % a1 != 0) continue;
    Int a2 = p4 / a1;
    for (const Int& c1 : divisors_with_sign(p0)) {
      if (p0 % c1 != 0) continue;
      Int c2 = p0 / c1;
      // b1 a2 + b2 a1 = p3, b1 c2 + b2 c1 = p1; then verify the x^2 term.
      Int det = a2 * c1 - a1 * c2;
      Int b1, b2;
      if (det != 0) {
        Int b1n = p3 * c1 - p1 * a1;
        Int b2n = p1 * a2 - p3 * c2;
        if (b1n % det != 0 || b2n % det != 0) continue;
        b1 = b1n / det;
        b2 = b2n / det;
      } else {
        // Degenerate system: scan a small window for b1.
        bool ok = false;
        for (Int t = -64; t <= 64 && !ok; ++t) {
          if (a1 != 0 && (p3 - t * a2) % a1 == 0) {
            b1 = t;
            b2 = (p3 - t * a2) / a1;
            ok = b1 * c2 + b2 * c1 == p1;
          }
        }
        if (!ok) continue;
      }
      if (a1 * c2 + a2 * c1 + b1 * b2 != p2) continue;
      f = Poly({Rational(c1), Rational(b1), Rational(a1)});
      g = Poly({Rational(c2), Rational(b2), Rational(a2)});
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Poly> factor_poly(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("cannot factor zero");
  std::vector<Poly> factors;
  Poly rest = p.primitive();
  strip_rational_roots(rest, factors);
  rest = rest.primitive();

  switch (rest.degree()) {
    case 0:
      break;
    case 2: {
      // No rational roots survive stripping, so irreducible iff the
      // discriminant is not a rational square (here: not an integer square).
      Int b = numerator(rest.coeff(1)), a = numerator(rest.coeff(2));
      Int c = numerator(rest.coeff(0));
      Int disc = b * b - 4 * a * c, root;
      if (is_perfect_square(disc, root))
        throw InternalError("square discriminant after root stripping");
      factors.push_back(rest);
      break;
    }
    case 3:
      factors.push_back(rest);  // cubic without rational roots
      break;
    case 4: {
      Poly f, g;
      if (split_quartic(rest, f, g)) {
        for (const Poly& q : {f, g}) {
          auto sub = factor_poly(q);
          factors.insert(factors.end(), sub.begin(), sub.end());
        }
      } else {
        factors.push_back(rest);
      }
      break;
    }
    default:
      if (rest.degree() > 4)
        throw std::invalid_argument("factorization beyond degree 4");
      if (rest.degree() == 1) factors.push_back(rest.primitive());
      break;
  }
  std::sort(factors.begin(), factors.end(),
            [](const Poly& x, const Poly& y) { return x.coeffs() < y.coeffs(); });
  return factors;
}

}  // namespace supell
