#pragma once

// Exact Moebius obstruction analysis for the two sphere quotients of a
// family member. The direct action and its recoordinatized partner press
// the eight branch points down to the five-point configurations
// {0, inf, 1, l^2, l^-2} and {inf, 2, -2, l+1/l, -(l+1/l)}; a conformal
// equivalence between the quotient orbifolds is a Moebius map matching the
// configurations with the order data, which pins the images of 0 and inf
// to {2, -2}. Treating l as an indeterminate, each admissible assignment
// leaves two polynomial conditions on l; their common factors, cleansed of
// the degenerate l^4 = 1 and l = 0 roots, are the parameter values at
// which the equivalence exists after all.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "supell/mobius.hpp"
#include "supell/poly.hpp"
#include "supell/qfield.hpp"

namespace supell {

struct ObstructionAssignment {
  // target_labels[k] is the assigned image of source point k, sources in
  // the fixed order 0, inf, 1, l^2, l^-2.
  std::array<std::string, 5> target_labels;
  std::vector<Poly> constraint_polys;  // numerators of the two residual
                                       // conditions, primitive form
  Poly common_factor;                  // their gcd, primitive form
  std::vector<Poly> surviving_factors;  // irreducible, nondegenerate
};

struct ObstructionWitness {
  Poly factor;
  QuadElem root;
  int assignment_index;  // into ObstructionResult::assignments
  Mobius map;            // the assignment's map specialized at the root
  bool verified;         // map carries all five sources to their targets
};

struct ObstructionResult {
  long long n = 0;
  long long a = 0;
  int assignments_tested = 0;
  std::vector<ObstructionAssignment> assignments;
  std::vector<Poly> exceptional_factors;    // sorted union
  std::vector<QuadElem> exceptional_roots;  // all roots of those factors
  std::vector<ObstructionWitness> witnesses;
};

// Runs the full 12-assignment search. The configuration is the same for
// every family member; (n, a) only selects a valid curve, so the inputs
// are validated and echoed. Throws std::invalid_argument when a is even
// or c is undefined, InternalError when a witness fails its own check.
ObstructionResult obstruction_search(long long n, long long a);

// The base involution x -> (1-x)/(1+x) at l0 = 1+sqrt(2): it swaps the
// fixed loci {0, inf} and {1, -1} of the two sphere actions and permutes
// the eight branch points inside Q(sqrt(2)).
struct ExceptionalAutReport {
  QuadElem lambda0;
  bool involution = false;
  bool swaps_fixed_loci = false;  // T(0) = 1 and T(inf) = -1
  bool permutes_branch_set = false;
  // branch label -> image label, in branch_point_labels() order
  std::vector<std::pair<std::string, std::string>> branch_images;
  bool ok = false;
};

ExceptionalAutReport exceptional_automorphism_report(long long n, long long a);
bool verify_exceptional_automorphism(long long n, long long a);

// The commuting-square skeleton behind the obstruction: p1(x) = x^2 and
// p2(x) = x + 1/x are invariant under their own deck maps, the candidate
// base involution T fits the square p2(T(-x)) = p2(T(x)), and the identity
// map does not.
struct QuotientSquareReport {
  bool p1_invariant = false;          // p1(-x) = p1(x)
  bool p2_invariant = false;          // p2(1/x) = p2(x)
  bool square_commutes = false;       // p2(T(-x)) = p2(T(x))
  bool identity_square_fails = false;  // p2(-x) != p2(x)
  bool ok = false;
};

QuotientSquareReport quotient_maps_consistency();

}  // namespace supell
