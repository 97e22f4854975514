#include "supell/genvec.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace supell {

namespace {

void check_vector_shape(const Signature& sig, const CyclicGenVec& v) {
  if (v.modulus < 2) throw std::invalid_argument("modulus must be >= 2");
  if (v.entries.size() != sig.periods().size())
    throw std::invalid_argument(
        "entry count " + std::to_string(v.entries.size()) +
        " does not match signature period count " +
        std::to_string(sig.periods().size()));
  if (!v.handle_images.empty() &&
      static_cast<long long>(v.handle_images.size()) != 2 * sig.genus())
    throw std::invalid_argument("handle image count must be 2*genus");
  for (long long x : v.entries)
    if (x < 0 || x >= v.modulus)
      throw std::invalid_argument("entry out of range [0, n)");
  for (long long x : v.handle_images)
    if (x < 0 || x >= v.modulus)
      throw std::invalid_argument("handle image out of range [0, n)");
}

// Slotwise orders must agree before any scalar comparison makes sense.
void check_compatible(const CyclicGenVec& v1, const CyclicGenVec& v2) {
  if (v1.modulus != v2.modulus)
    throw std::invalid_argument("vectors have different moduli");
  if (v1.entries.size() != v2.entries.size())
    throw std::invalid_argument("vectors have different lengths");
  for (size_t j = 0; j < v1.entries.size(); ++j)
    if (additive_order(v1.entries[j], v1.modulus) !=
        additive_order(v2.entries[j], v2.modulus))
      throw std::invalid_argument("slot orders differ at slot " +
                                  std::to_string(j));
}

std::vector<long long> transform(const std::vector<long long>& v, long long n,
                                 long long s, const std::vector<int>& perm,
                                 bool negated) {
  std::vector<long long> out(v.size());
  for (size_t j = 0; j < v.size(); ++j) {
    long long x = mod_mul(s, v[perm[j]], n);
    out[j] = negated ? mod_reduce(-x, n) : x;
  }
  return out;
}

std::vector<int> identity_perm(size_t r) {
  std::vector<int> p(r);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// All permutations of 0..r-1 that keep each slot's period fixed. periods is
// sorted, so blocks of equal periods are contiguous.
std::vector<std::vector<int>> period_preserving_perms(
    const std::vector<long long>& periods) {
  std::vector<std::vector<int>> out;
  std::vector<int> p = identity_perm(periods.size());
  do {
    bool ok = true;
    for (size_t j = 0; j < periods.size() && ok; ++j)
      ok = periods[p[j]] == periods[j];
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

MoveSet parse_move_set(const std::string& name) {
  if (name == "scalar") return MoveSet::Scalar;
  if (name == "scalar-perm") return MoveSet::ScalarPerm;
  if (name == "full") return MoveSet::Full;
  throw std::invalid_argument("unknown move set '" + name + "'");
}

std::string move_set_name(MoveSet moves) {
  switch (moves) {
    case MoveSet::Scalar: return "scalar";
    case MoveSet::ScalarPerm: return "scalar-perm";
    case MoveSet::Full: return "full";
  }
  throw std::invalid_argument("bad move set");
}

bool is_generating_vector(const Signature& sig, const CyclicGenVec& v) {
  check_vector_shape(sig, v);
  const long long n = v.modulus;
  for (size_t j = 0; j < v.entries.size(); ++j)
    if (additive_order(v.entries[j], n) != sig.periods()[j]) return false;
  long long sum = 0;
  for (long long x : v.entries) sum = mod_reduce(sum + x, n);
  if (sum != 0) return false;
  // Handle generators with image 1 make generation automatic; otherwise the
  // gcd of everything in sight must be 1.
  long long g = n;
  for (long long x : v.entries) g = std::gcd(g, x);
  if (sig.genus() > 0) {
    if (v.handle_images.empty()) return true;  // normal form assumed
    for (long long x : v.handle_images) g = std::gcd(g, x);
  }
  return g == 1;
}

CyclicGenVec kuribayashi_normalize(const Signature& sig,
                                   const CyclicGenVec& raw) {
  check_vector_shape(sig, raw);
  const long long n = raw.modulus;
  for (size_t j = 0; j < raw.entries.size(); ++j)
    if (additive_order(raw.entries[j], n) != sig.periods()[j])
      throw std::invalid_argument("slot " + std::to_string(j) +
                                  " has wrong order");
  long long sum = 0;
  for (long long x : raw.entries) sum = mod_reduce(sum + x, n);
  if (sum != 0)
    throw std::invalid_argument("cone images do not satisfy the long relation");
  long long g = n;
  for (long long x : raw.entries) g = std::gcd(g, x);
  for (long long x : raw.handle_images) g = std::gcd(g, x);
  if (g != 1) throw std::invalid_argument("input does not generate Z/nZ");

  CyclicGenVec out;
  out.modulus = n;
  out.entries = raw.entries;  // conjugation is trivial in a cyclic target
  out.handle_images.assign(2 * sig.genus(), 1 % n);
  return out;
}

std::optional<long long> scalar_equivalent(const CyclicGenVec& v1,
                                           const CyclicGenVec& v2) {
  check_compatible(v1, v2);
  const long long n = v1.modulus;
  for (long long s : units_mod(n)) {
    bool ok = true;
    for (size_t j = 0; j < v1.entries.size() && ok; ++j)
      ok = mod_mul(s, v1.entries[j], n) == v2.entries[j];
    if (ok) return s;
  }
  return std::nullopt;
}

std::optional<EquivalenceWitness> equivalent_under(MoveSet moves,
                                                   const CyclicGenVec& v1,
                                                   const CyclicGenVec& v2) {
  check_compatible(v1, v2);
  const long long n = v1.modulus;
  std::vector<long long> periods;
  periods.reserve(v1.entries.size());
  for (long long x : v1.entries) periods.push_back(additive_order(x, n));

  std::vector<std::vector<int>> perms;
  if (moves == MoveSet::Scalar)
    perms = {identity_perm(v1.entries.size())};
  else
    perms = period_preserving_perms(periods);

  const int neg_options = moves == MoveSet::Full ? 2 : 1;
  for (int neg = 0; neg < neg_options; ++neg)
    for (long long s : units_mod(n))
      for (const auto& p : perms)
        if (transform(v1.entries, n, s, p, neg != 0) == v2.entries)
          return EquivalenceWitness{s, p, neg != 0};
  return std::nullopt;
}

bool gilman_necessity_check(const CyclicGenVec& v1, const CyclicGenVec& v2,
                            long long scalar, const std::vector<int>& perm) {
  check_compatible(v1, v2);
  const long long n = v1.modulus;
  if (perm.size() != v1.entries.size())
    throw std::invalid_argument("permutation size mismatch");
  std::vector<bool> seen(perm.size(), false);
  for (int i : perm) {
    if (i < 0 || static_cast<size_t>(i) >= perm.size() || seen[i])
      throw std::invalid_argument("not a permutation");
    seen[i] = true;
  }
  for (size_t j = 0; j < perm.size(); ++j) {
    if (additive_order(v1.entries[perm[j]], n) !=
        additive_order(v1.entries[j], n))
      return false;  // permutation must preserve periods
    if (mod_mul(scalar, v1.entries[perm[j]], n) != v2.entries[j]) return false;
  }
  return true;
}

Classification classify_orbits(long long n, const Signature& sig,
                               MoveSet moves, long long enumeration_bound) {
  if (n < 2) throw std::invalid_argument("modulus must be >= 2");
  if (sig.genus() != 0)
    throw std::invalid_argument("orbit classification expects genus 0");

  // Candidates per slot: all residues of exactly the prescribed order.
  std::vector<std::vector<long long>> slots;
  Int candidate_count = 1;
  for (long long m : sig.periods()) {
    std::vector<long long> c;
    for (long long x = 0; x < n; ++x)
      if (additive_order(x, n) == m) c.push_back(x);
    candidate_count *= static_cast<long long>(c.size());
    slots.push_back(std::move(c));
  }
  if (candidate_count > enumeration_bound)
    throw std::invalid_argument("candidate count " + candidate_count.str() +
                                " exceeds enumeration bound " +
                                std::to_string(enumeration_bound));

  std::vector<std::vector<long long>> vectors;
  const size_t r = slots.size();
  std::vector<size_t> idx(r, 0);
  if (r == 0) throw std::invalid_argument("signature has no periods");
  while (true) {
    std::vector<long long> v(r);
    long long sum = 0, g = n;
    for (size_t j = 0; j < r; ++j) {
      v[j] = slots[j][idx[j]];
      sum = mod_reduce(sum + v[j], n);
      g = std::gcd(g, v[j]);
    }
    if (sum == 0 && g == 1) vectors.push_back(std::move(v));
    size_t k = 0;
    while (k < r && ++idx[k] == slots[k].size()) idx[k++] = 0;
    if (k == r) break;
  }

  // Orbits via canonical forms: the move set is a group, so the orbit of v
  // is exactly the set of its transforms and the lexicographic minimum is a
  // well-defined representative.
  std::vector<std::vector<int>> perms;
  if (moves == MoveSet::Scalar)
    perms = {identity_perm(r)};
  else
    perms = period_preserving_perms(sig.periods());
  const int neg_options = moves == MoveSet::Full ? 2 : 1;
  const auto units = units_mod(n);

  std::map<std::vector<long long>, long long> orbit_sizes;
  for (const auto& v : vectors) {
    std::vector<long long> best = v;
    for (int neg = 0; neg < neg_options; ++neg)
      for (long long s : units)
        for (const auto& p : perms)
          best = std::min(best, transform(v, n, s, p, neg != 0));
    ++orbit_sizes[best];
  }

  Classification out{n, sig, moves,
                     static_cast<long long>(vectors.size()), {}};
  for (const auto& [rep, size] : orbit_sizes)
    out.classes.push_back({rep, size});
  return out;
}

}  // namespace supell
