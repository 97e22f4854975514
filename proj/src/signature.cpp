#include "supell/signature.hpp"

#include <algorithm>
#include <sstream>

namespace supell {

Signature::Signature(long long genus, std::vector<long long> periods)
    : genus_(genus), periods_(std::move(periods)) {
  if (genus_ < 0) throw std::invalid_argument("signature genus must be >= 0");
  for (long long m : periods_)
    if (m < 2) throw std::invalid_argument("signature period < 2");
  std::sort(periods_.begin(), periods_.end(), std::greater<>());
}

std::string Signature::str() const {
  std::ostringstream os;
  os << genus_;
  for (long long m : periods_) os << ',' << m;
  return os.str();
}

Signature Signature::parse(const std::string& text) {
  std::vector<long long> parts;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    size_t pos = 0;
    long long v;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad signature token: '" + tok + "'");
    }
    if (pos != tok.size())
      throw std::invalid_argument("bad signature token: '" + tok + "'");
    parts.push_back(v);
  }
  if (parts.empty()) throw std::invalid_argument("empty signature");
  return Signature(parts[0], {parts.begin() + 1, parts.end()});
}

Rational area_term(const Signature& sig) {
  Rational total = 2 * Rational(sig.genus()) - 2;
  for (long long m : sig.periods()) total += 1 - Rational(1, m);
  return total;
}

long long riemann_hurwitz_genus(long long group_order, const Signature& sig) {
  if (group_order < 1) throw std::invalid_argument("group order must be >= 1");
  for (long long m : sig.periods())
    if (group_order % m != 0)
      throw std::invalid_argument("period " + std::to_string(m) +
                                  " does not divide group order " +
                                  std::to_string(group_order));
  // 2g - 2 = |G|(2*genus - 2) + sum (|G|/m)(m - 1)
  Int chi = Int(group_order) * (2 * sig.genus() - 2);
  for (long long m : sig.periods()) chi += Int(group_order / m) * (m - 1);
  if (chi % 2 != 0)
    throw std::invalid_argument("Riemann-Hurwitz gives odd 2g-2 = " + chi.str());
  Int g = chi / 2 + 1;
  if (g < 0)
    throw std::invalid_argument("Riemann-Hurwitz gives negative genus " +
                                g.str());
  return static_cast<long long>(g);
}

}  // namespace supell
