#pragma once

// Generating vectors for Z/nZ actions: tuples of residues recording the
// images of the cone-point generators (and, for positive genus, of the
// handle generators). Equivalence of two actions shows up here as a
// unit-scalar congruence, optionally combined with period-preserving slot
// permutations and global negation.

#include <optional>
#include <string>
#include <vector>

#include "supell/signature.hpp"

namespace supell {

struct CyclicGenVec {
  long long modulus = 0;
  std::vector<long long> entries;         // cone images, each in [0, modulus)
  std::vector<long long> handle_images;   // 2*genus residues; empty if genus 0
};

enum class MoveSet { Scalar, ScalarPerm, Full };

MoveSet parse_move_set(const std::string& name);
std::string move_set_name(MoveSet moves);

// The three axioms: every entry has the order prescribed by its slot's
// period, the entries sum to 0 mod n, and entries plus handle images
// generate Z/nZ. A length mismatch between sig and v is an error, not a
// "false".
bool is_generating_vector(const Signature& sig, const CyclicGenVec& v);

// Normal form with all handle images equal to 1. For a cyclic target the
// conjugation part of the normalization is trivial, so cone entries are
// returned unchanged. The input must already describe a surjection with
// the prescribed slot orders.
CyclicGenVec kuribayashi_normalize(const Signature& sig,
                                   const CyclicGenVec& raw);

// Least s in [1, n) with gcd(s, n) = 1 and v2 = s * v1 slotwise, if any.
// Both vectors must have the same modulus and the same slotwise orders.
std::optional<long long> scalar_equivalent(const CyclicGenVec& v1,
                                           const CyclicGenVec& v2);

struct EquivalenceWitness {
  long long scalar = 1;
  std::vector<int> perm;  // slot j of the transformed v1 comes from perm[j]
  bool negated = false;
};

// Searches the chosen move set for a witness taking v1 to v2.
std::optional<EquivalenceWitness> equivalent_under(MoveSet moves,
                                                   const CyclicGenVec& v1,
                                                   const CyclicGenVec& v2);

// Necessary condition for a homeomorphism inducing the equivalence: the
// permuted v2 agrees slotwise with s * v1. perm must preserve slot orders.
bool gilman_necessity_check(const CyclicGenVec& v1, const CyclicGenVec& v2,
                            long long scalar, const std::vector<int>& perm);

struct OrbitClass {
  std::vector<long long> representative;  // lexicographically least member
  long long size = 0;
};

struct Classification {
  long long modulus = 0;
  Signature signature;
  MoveSet moves = MoveSet::Scalar;
  long long vector_count = 0;
  std::vector<OrbitClass> classes;  // sorted by representative
};

// Enumerates every genus-0 generating vector of the given type and groups
// them into orbits of the move set. Throws if the candidate count exceeds
// the enumeration bound.
Classification classify_orbits(long long n, const Signature& sig,
                               MoveSet moves,
                               long long enumeration_bound = 10000000);

}  // namespace supell
