#include <doctest.h>

#include <random>
#include <stdexcept>

#include "supell/genvec.hpp"

using supell::Classification;
using supell::CyclicGenVec;
using supell::MoveSet;
using supell::Signature;

TEST_CASE("move set names round-trip") {
  for (auto m : {MoveSet::Scalar, MoveSet::ScalarPerm, MoveSet::Full})
    CHECK(supell::parse_move_set(supell::move_set_name(m)) == m);
  CHECK_THROWS_AS(supell::parse_move_set("frobnicate"), std::invalid_argument);
}

TEST_CASE("generating vector axioms") {
  Signature sig16(0, {16, 16, 8, 8, 8});
  CHECK(supell::is_generating_vector(sig16, {16, {3, 3, 6, 2, 2}, {}}));
  CHECK(supell::is_generating_vector(Signature(0, {5, 5, 5}),
                                     {5, {1, 1, 3}, {}}));
  CHECK(supell::is_generating_vector(Signature(0, {8, 8, 4}),
                                     {8, {1, 1, 6}, {}}));
  // ord(2) = 4, not the 8 the first slot asks for.
  CHECK_FALSE(supell::is_generating_vector(Signature(0, {8, 8, 4}),
                                           {8, {2, 2, 4}, {}}));
  // Entry sum 1 + 1 + 2 = 4 != 0 mod 5.
  CHECK_FALSE(supell::is_generating_vector(Signature(0, {5, 5, 5}),
                                           {5, {1, 1, 2}, {}}));
  // Cone entries alone need not generate once handles are present.
  CHECK(supell::is_generating_vector(Signature(1, {2, 2}),
                                     {4, {2, 2}, {1, 0}}));
  CHECK_FALSE(supell::is_generating_vector(Signature(1, {2, 2}),
                                           {4, {2, 2}, {2, 0}}));
  CHECK_THROWS_AS(
      supell::is_generating_vector(Signature(0, {5, 5}), {5, {1, 1, 3}, {}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      supell::is_generating_vector(Signature(1, {2}), {4, {2}, {1}}),
      std::invalid_argument);
}

TEST_CASE("normal form fixes the handle images and keeps cone entries") {
  CyclicGenVec raw{4, {2, 2}, {2, 3}};
  CyclicGenVec norm = supell::kuribayashi_normalize(Signature(1, {2, 2}), raw);
  CHECK(norm.entries == std::vector<long long>{2, 2});
  CHECK(norm.handle_images == std::vector<long long>{1, 1});

  // Genus 0 vectors pass through untouched.
  CyclicGenVec flat{5, {1, 1, 3}, {}};
  CyclicGenVec same = supell::kuribayashi_normalize(Signature(0, {5, 5, 5}),
                                                    flat);
  CHECK(same.entries == flat.entries);
  CHECK(same.handle_images.empty());

  CyclicGenVec wide{2, {}, {0, 1, 1, 0}};
  CyclicGenVec four = supell::kuribayashi_normalize(Signature(2, {}), wide);
  CHECK(four.handle_images == std::vector<long long>{1, 1, 1, 1});
}

TEST_CASE("scalar equivalence finds the least unit") {
  CyclicGenVec v{5, {1, 1, 3}, {}};
  CHECK(supell::scalar_equivalent(v, v) == 1);
  CHECK(supell::scalar_equivalent(v, {5, {2, 2, 1}, {}}) == 2);
  CHECK_FALSE(supell::scalar_equivalent(v, {5, {1, 2, 2}, {}}).has_value());
  CHECK_THROWS_AS(supell::scalar_equivalent(v, CyclicGenVec{7, {1, 1, 5}, {}}),
                  std::invalid_argument);
  // Slot orders must match before scaling is even considered.
  CHECK_THROWS_AS(supell::scalar_equivalent(CyclicGenVec{8, {1, 1, 6}, {}},
                                            CyclicGenVec{8, {1, 2, 5}, {}}),
                  std::invalid_argument);
}

TEST_CASE("witness search over the three move sets") {
  CyclicGenVec v1{5, {1, 1, 3}, {}};
  CyclicGenVec v2{5, {1, 3, 1}, {}};

  // A pure permutation separates Scalar from ScalarPerm.
  CHECK_FALSE(supell::equivalent_under(MoveSet::Scalar, v1, v2).has_value());
  auto w = supell::equivalent_under(MoveSet::ScalarPerm, v1, v2);
  REQUIRE(w.has_value());
  CHECK(supell::gilman_necessity_check(v1, v2, w->scalar, w->perm));

  // Negating every entry is the same move as scaling by the unit n-1, so
  // Full classifies exactly like ScalarPerm and only widens the witness
  // vocabulary; the search prefers the un-negated description.
  CyclicGenVec neg{5, {4, 4, 2}, {}};
  auto wp = supell::equivalent_under(MoveSet::ScalarPerm, v1, neg);
  REQUIRE(wp.has_value());
  CHECK(wp->scalar == 4);
  auto wf = supell::equivalent_under(MoveSet::Full, v1, neg);
  REQUIRE(wf.has_value());
  CHECK_FALSE(wf->negated);
  CHECK(supell::gilman_necessity_check(v1, neg, wf->scalar, wf->perm));
}

TEST_CASE("necessity check matches explicit scalars and permutations") {
  CyclicGenVec v1{5, {1, 1, 3}, {}};
  CHECK(supell::gilman_necessity_check(v1, {5, {3, 3, 4}, {}}, 3, {0, 1, 2}));
  CHECK_FALSE(
      supell::gilman_necessity_check(v1, {5, {1, 2, 2}, {}}, 1, {0, 1, 2}));
  CHECK_FALSE(
      supell::gilman_necessity_check(v1, {5, {1, 2, 2}, {}}, 2, {0, 1, 2}));
  CHECK_THROWS_AS(
      supell::gilman_necessity_check(v1, v1, 1, std::vector<int>{0, 0, 2}),
      std::invalid_argument);
}

TEST_CASE("orbit classification matches known counts") {
  Classification c5 = supell::classify_orbits(5, Signature(0, {5, 5, 5}),
                                              MoveSet::Scalar);
  CHECK(c5.vector_count == 12);
  CHECK(c5.classes.size() == 3);

  Classification c8 = supell::classify_orbits(8, Signature(0, {8, 8, 4}),
                                              MoveSet::Scalar);
  CHECK(c8.vector_count == 8);
  CHECK(c8.classes.size() == 2);

  Classification c2 = supell::classify_orbits(
      2, Signature(0, std::vector<long long>(6, 2)), MoveSet::Scalar);
  CHECK(c2.vector_count == 1);
  CHECK(c2.classes.size() == 1);

  // Class sizes partition the vectors and representatives are members.
  long long total = 0;
  for (const auto& cls : c5.classes) {
    total += cls.size;
    CHECK(supell::is_generating_vector(c5.signature,
                                       {5, cls.representative, {}}));
  }
  CHECK(total == c5.vector_count);
}

TEST_CASE("wider move sets merge orbits, never split them") {
  Signature sig(0, {8, 8, 4});
  auto scalar = supell::classify_orbits(8, sig, MoveSet::Scalar);
  auto perm = supell::classify_orbits(8, sig, MoveSet::ScalarPerm);
  auto full = supell::classify_orbits(8, sig, MoveSet::Full);
  CHECK(scalar.classes.size() >= perm.classes.size());
  CHECK(perm.classes.size() >= full.classes.size());
  CHECK(scalar.vector_count == full.vector_count);
}

TEST_CASE("equivalence under a move set is an equivalence relation") {
  // Random same-type pairs: symmetric and, through a common pivot,
  // transitive; reflexivity on every sampled vector.
  Signature sig(0, {8, 8, 4});
  auto all = supell::classify_orbits(8, sig, MoveSet::Scalar);
  std::vector<std::vector<long long>> pool;
  for (const auto& cls : all.classes) pool.push_back(cls.representative);
  // Expand pool to every vector of the type via scalar action.
  std::vector<CyclicGenVec> vecs;
  for (long long s = 1; s < 8; s += 2)
    for (const auto& rep : pool) {
      CyclicGenVec v{8, {}, {}};
      for (long long e : rep) v.entries.push_back((s * e) % 8);
      if (supell::is_generating_vector(sig, v)) vecs.push_back(v);
    }
  std::mt19937 rng(271828);
  std::uniform_int_distribution<size_t> pick(0, vecs.size() - 1);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& x = vecs[pick(rng)];
    const auto& y = vecs[pick(rng)];
    const auto& z = vecs[pick(rng)];
    CHECK(supell::equivalent_under(MoveSet::Full, x, x).has_value());
    bool xy = supell::equivalent_under(MoveSet::Full, x, y).has_value();
    bool yx = supell::equivalent_under(MoveSet::Full, y, x).has_value();
    CHECK(xy == yx);
    bool yz = supell::equivalent_under(MoveSet::Full, y, z).has_value();
    bool xz = supell::equivalent_under(MoveSet::Full, x, z).has_value();
    if (xy && yz) CHECK(xz);
  }
}

TEST_CASE("classification enforces its enumeration bound") {
  CHECK_THROWS_AS(supell::classify_orbits(97, Signature(0, {97, 97, 97, 97}),
                                          MoveSet::Scalar, 1000),
                  std::invalid_argument);
}
