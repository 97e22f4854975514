#pragma once

// Concrete model of the order-2^{n+2} automorphism groups of the curve
// family. Elements are pairs (i, j) standing for t1^i t2^j with i mod
// 2^{n+1} and j in {0, 1}; the multiplication law
//
//   (i, j) * (i', j') = (i + e^j i' + 2 (j & j') mod 2^{n+1}, j xor j')
//
// carries both the commutation twist e (1 in the abelian case, 2^n + 1 in
// the semidirect case) and the identification t2^2 = t1^2 in its cocycle
// term. Subgroup signatures are computed from the orbits of the subgroup
// on each branch fiber G / <g_j>, which is the double coset count
// H \ G / <g_j>.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "supell/signature.hpp"

namespace supell {

struct GroupElement {
  long long i = 0;
  int j = 0;
  auto operator<=>(const GroupElement&) const = default;
};

class GroupSpec {
 public:
  // c even gives the abelian group, c odd the semidirect one.
  static GroupSpec abelian(long long n);
  static GroupSpec twisted(long long n);
  static GroupSpec for_c(long long n, long long c);

  long long n() const { return n_; }
  long long modulus() const { return modulus_; }    // 2^{n+1}
  long long twist() const { return twist_; }        // e
  long long order() const { return 2 * modulus_; }  // 2^{n+2}
  bool is_abelian() const { return twist_ == 1; }

  GroupElement identity() const { return {0, 0}; }
  GroupElement tau1() const { return {1, 0}; }
  GroupElement tau2() const { return {0, 1}; }
  GroupElement canonical(long long i, int j) const;

  GroupElement multiply(GroupElement a, GroupElement b) const;
  GroupElement inverse(GroupElement a) const;
  GroupElement power(GroupElement a, long long k) const;
  long long element_order(GroupElement a) const;

  std::vector<GroupElement> elements() const;
  std::vector<GroupElement> generated_subgroup(
      const std::vector<GroupElement>& gens) const;

  // Exhaustive (a*b)*c == a*(b*c) over all triples; for tests.
  bool is_associative_exhaustive() const;

  std::string element_str(GroupElement a) const;

 private:
  GroupSpec(long long n, long long twist);
  long long n_, twist_, modulus_;
};

// The full-group action data: generating vector
//   (t1^a, t2^a, t1^2, t1^{2^{n-1} c - 1} t2)
// of signature (0; 2^{n+1}, 2^{n+1}, 2^n, 2) on a surface of genus
// 3(2^n - 1). Requires c = (2a + 2) / 2^{n-1} to be a positive integer.
struct ActionModel {
  GroupSpec spec;
  long long a = 0;
  long long c = 0;
  long long surface_genus = 0;
  std::vector<GroupElement> vec;
  Signature signature;
};

ActionModel make_action_model(long long n, long long a);

struct PresentationReport {
  std::string which;  // "abelian" or "twisted"
  long long horizontal_exponent = 0;
  bool relations_hold = false;
  bool generates = false;
  std::vector<std::string> failed_relations;
  bool ok() const { return relations_hold && generates; }
};

// Checks the polygon presentation against the concrete model: D1 -> t1,
// D2 -> t2, D3 = D1^j with the parity-dependent horizontal exponent j,
// D4 = (D1 D2 D3)^{-1}; every relation is evaluated in the model and
// {t1, t2} must generate all 2^{n+2} elements.
PresentationReport verify_presentation(const GroupSpec& spec, long long a);

struct SubgroupAction {
  Signature signature;       // induced signature of the subgroup action
  long long quotient_genus;  // same as signature.genus(), for convenience
  long long fixed_points;    // surface points whose stabilizer is all of H
};

SubgroupAction subgroup_signature(const ActionModel& model,
                                  const std::vector<GroupElement>& subgroup);

// Exhaustive search for g with g H1 g^{-1} = H2 (as sets). Subgroups must
// have equal order.
std::optional<GroupElement> conjugating_element(
    const GroupSpec& spec, const std::vector<GroupElement>& h1,
    const std::vector<GroupElement>& h2);

// Induced action on the sphere below the curve: t1 acts by x -> -x and t2
// by x -> 1/x, so every element acts by x -> (-1)^i x^(+-1). The kernel is
// <t1^2>.
struct SphereMap {
  bool negate = false;  // x -> -x factor present
  bool invert = false;  // x -> 1/x factor present
};

SphereMap sphere_image(GroupElement g);

// The eight symbolic branch points in their fixed order.
const std::vector<std::string>& branch_point_labels();

std::vector<int> sphere_permutation(GroupElement g);  // on branch_point_labels
std::vector<std::string> sphere_fixed_branch_points(GroupElement g);
bool sphere_kernel_is_square_subgroup(const GroupSpec& spec);

// All k with (t1^k t2)^2 = 1; reported so callers can see which of the
// candidate exponents 2^{n-1} c - 1, 3 * 2^{n-1} c - 1 and 2^{n-1} - 1
// really land on an involution for their parameters.
std::vector<long long> order_two_mixed_exponents(const GroupSpec& spec);

// The distinguished cyclic subgroups of the action: <t1>, <t2>, <t1^2> and
// the involution subgroup(s). Abelian case: H4 = <t1^{2^{n-1}c-1} t2>.
// Twisted case: H4 = <t1^{3*2^{n-1}c-1} t2> and H5 = <t1^{2^{n-1}c-1} t2>.
struct NamedSubgroup {
  std::string name;
  GroupElement generator;
  std::vector<GroupElement> elements;
};

std::vector<NamedSubgroup> distinguished_subgroups(const ActionModel& model);

}  // namespace supell
