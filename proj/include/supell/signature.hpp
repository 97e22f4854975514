#pragma once

// Signatures (genus; m_1, ..., m_r) of orbit spaces and the Riemann-Hurwitz
// bookkeeping built on them.

#include <compare>
#include <string>
#include <vector>

#include "supell/numeric.hpp"

namespace supell {

// Periods are kept sorted non-increasing and must all be >= 2.
class Signature {
 public:
  Signature(long long genus, std::vector<long long> periods);

  long long genus() const { return genus_; }
  const std::vector<long long>& periods() const { return periods_; }

  bool operator==(const Signature&) const = default;

  // "g,m1,...,mr", e.g. "0,5,5,5"; a bare "g" means no periods.
  std::string str() const;
  static Signature parse(const std::string& text);

 private:
  long long genus_;
  std::vector<long long> periods_;
};

// The quantity 2g - 2 + sum_j (1 - 1/m_j), exact. A cocompact group with
// this signature exists precisely when the value is positive.
Rational area_term(const Signature& sig);

// Genus g of the total space of a |G|-sheeted cover branched as described
// by sig: 2g - 2 = |G|(2*genus - 2) + sum_j (|G|/m_j)(m_j - 1).
// Every period must divide group_order; throws if the resulting g is not a
// non-negative integer.
long long riemann_hurwitz_genus(long long group_order, const Signature& sig);

}  // namespace supell
