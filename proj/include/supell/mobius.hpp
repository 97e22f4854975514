#pragma once

// Moebius transformations z -> (a*z + b)/(c*z + d) over any of the exact
// coefficient domains, stored canonically: the matrix is scaled so its
// first nonzero entry (scanning a, b, c, d) equals 1. Two transformations
// are then equal iff their stored entries are.

#include <array>
#include <string>

#include "supell/field.hpp"

namespace supell {

class Mobius {
 public:
  Mobius(FieldElem a, FieldElem b, FieldElem c, FieldElem d);

  static Mobius identity() {
    return Mobius(FieldElem(1), FieldElem(0), FieldElem(0), FieldElem(1));
  }

  const FieldElem& a() const { return a_; }
  const FieldElem& b() const { return b_; }
  const FieldElem& c() const { return c_; }
  const FieldElem& d() const { return d_; }

  ProjPoint apply(const ProjPoint& p) const;
  Mobius compose(const Mobius& inner) const;  // this after inner
  Mobius inverse() const;
  bool operator==(const Mobius& o) const;

  bool is_identity() const { return *this == identity(); }
  bool is_involution() const;

  std::string str(const std::string& var = "z") const;

 private:
  FieldElem a_, b_, c_, d_;
};

// The unique Moebius transformation sending p1, p2, p3 (pairwise distinct)
// to q1, q2, q3 (pairwise distinct).
Mobius mobius_from_three_points(const ProjPoint& p1, const ProjPoint& p2,
                                const ProjPoint& p3, const ProjPoint& q1,
                                const ProjPoint& q2, const ProjPoint& q3);

}  // namespace supell
