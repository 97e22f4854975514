#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "supell/group.hpp"

using supell::ActionModel;
using supell::GroupElement;
using supell::GroupSpec;
using supell::Signature;

TEST_CASE("multiplication law in the twisted group") {
  GroupSpec g = GroupSpec::twisted(3);  // e = 9, modulus 16
  CHECK(g.order() == 32);
  CHECK(g.twist() == 9);
  CHECK_FALSE(g.is_abelian());

  // t2 t1 = t1^9 t2, while t1 t2 stays t1 t2.
  CHECK(g.multiply({0, 1}, {1, 0}) == GroupElement{9, 1});
  CHECK(g.multiply({1, 0}, {0, 1}) == GroupElement{1, 1});
  // t2^2 = t1^2 via the cocycle term.
  CHECK(g.multiply({0, 1}, {0, 1}) == GroupElement{2, 0});
  // (t1 t2)(t1) = t1^{10} t2 and (t1^9)(t1 t2) = t1^{10} t2.
  CHECK(g.multiply({1, 1}, {1, 0}) == GroupElement{10, 1});
  CHECK(g.multiply({9, 0}, {1, 1}) == GroupElement{10, 1});

  CHECK(g.multiply({3, 1}, g.inverse({3, 1})) == g.identity());
  CHECK(g.element_order({3, 1}) == 2);  // 2^{n-1}c - 1 = 3 when c = 1
  CHECK(g.element_order({1, 0}) == 16);
  CHECK(g.element_order({0, 1}) == 16);
}

TEST_CASE("multiplication law in the abelian group") {
  GroupSpec g = GroupSpec::abelian(3);
  CHECK(g.twist() == 1);
  CHECK(g.is_abelian());
  CHECK(g.multiply({0, 1}, {1, 0}) == g.multiply({1, 0}, {0, 1}));
  CHECK(g.multiply({0, 1}, {0, 1}) == GroupElement{2, 0});
  // t1^7 t2 squares to t1^{14} t1^2 = 1: the involution of the c-even case.
  CHECK(g.element_order({7, 1}) == 2);
  CHECK(g.element_order({15, 1}) == 2);
}

TEST_CASE("parity of c picks the twist") {
  CHECK(GroupSpec::for_c(3, 2).is_abelian());
  CHECK_FALSE(GroupSpec::for_c(3, 1).is_abelian());
  CHECK(GroupSpec::for_c(4, 4).is_abelian());
  CHECK_THROWS_AS(GroupSpec::for_c(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::abelian(0), std::invalid_argument);
}

TEST_CASE("group axioms hold exhaustively for small n") {
  for (long long n = 2; n <= 5; ++n) {
    for (auto g : {GroupSpec::abelian(n), GroupSpec::twisted(n)}) {
      CHECK(g.is_associative_exhaustive());
      CHECK(g.elements().size() == static_cast<size_t>(g.order()));
      auto all = g.generated_subgroup({g.tau1(), g.tau2()});
      CHECK(all.size() == static_cast<size_t>(g.order()));
      for (auto x : g.elements()) {
        CHECK(g.multiply(x, g.inverse(x)) == g.identity());
        CHECK(g.order() % g.element_order(x) == 0);
      }
    }
  }
}

TEST_CASE("canonical reduction of exponents") {
  GroupSpec g = GroupSpec::twisted(3);
  CHECK(g.canonical(16, 0) == g.identity());
  CHECK(g.canonical(-1, 2) == GroupElement{15, 0});
  CHECK(g.power(g.tau2(), 2) == GroupElement{2, 0});
  CHECK(g.power(g.tau2(), -1) == g.inverse(g.tau2()));
}

TEST_CASE("element rendering") {
  GroupSpec g = GroupSpec::twisted(3);
  CHECK(g.element_str(g.identity()) == "1");
  CHECK(g.element_str({1, 0}) == "t1");
  CHECK(g.element_str({0, 1}) == "t2");
  CHECK(g.element_str({3, 1}) == "t1^3*t2");
}

TEST_CASE("action model assembles the canonical generating vector") {
  ActionModel m = supell::make_action_model(3, 3);  // c = 2, abelian
  CHECK(m.spec.is_abelian());
  CHECK(m.c == 2);
  CHECK(m.surface_genus == 21);
  CHECK(m.signature == Signature(0, {16, 16, 8, 2}));
  REQUIRE(m.vec.size() == 4);
  CHECK(m.vec[0] == GroupElement{3, 0});   // t1^a
  CHECK(m.vec[1] == GroupElement{2, 1});   // t2^a = t1^{a-1} t2
  CHECK(m.vec[2] == GroupElement{2, 0});   // t1^2
  CHECK(m.vec[3] == GroupElement{7, 1});   // t1^{2^{n-1}c - 1} t2

  ActionModel t = supell::make_action_model(4, 3);  // c = 1, twisted
  CHECK_FALSE(t.spec.is_abelian());
  CHECK(t.surface_genus == 45);
  CHECK(t.vec[3] == GroupElement{7, 1});

  CHECK_THROWS_AS(supell::make_action_model(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(supell::make_action_model(3, 4), std::invalid_argument);
}

TEST_CASE("polygon presentations match the concrete model") {
  for (long long n = 3; n <= 6; ++n) {
    long long a_even_c = supell::pow2(static_cast<int>(n) - 1) - 1;
    auto ab = supell::verify_presentation(GroupSpec::abelian(n), a_even_c);
    CHECK(ab.which == "abelian");
    CHECK(ab.ok());
    CHECK(ab.failed_relations.empty());

    long long a_odd_c = supell::pow2(static_cast<int>(n) - 2) - 1;
    auto tw = supell::verify_presentation(GroupSpec::twisted(n), a_odd_c);
    CHECK(tw.which == "twisted");
    CHECK(tw.ok());
  }
  // The twisted commutation relation in model form.
  GroupSpec g = GroupSpec::twisted(4);
  CHECK(g.multiply(g.tau2(), g.tau1()) ==
        g.multiply(g.power(g.tau1(), 17), g.tau2()));
}

TEST_CASE("subgroup signatures via fiber orbits") {
  ActionModel m = supell::make_action_model(3, 3);
  GroupSpec g = m.spec;

  auto h1 = supell::subgroup_signature(m, g.generated_subgroup({g.tau1()}));
  CHECK(h1.signature == Signature(0, {16, 16, 8, 8, 8}));
  CHECK(h1.fixed_points == 2);
  auto h2 = supell::subgroup_signature(m, g.generated_subgroup({g.tau2()}));
  CHECK(h2.signature == Signature(0, {16, 16, 8, 8, 8}));
  CHECK(h2.fixed_points == 2);
  auto h3 = supell::subgroup_signature(
      m, g.generated_subgroup({g.power(g.tau1(), 2)}));
  CHECK(h3.signature == Signature(0, std::vector<long long>(8, 8)));
  CHECK(h3.fixed_points == 8);
  auto h4 = supell::subgroup_signature(m, g.generated_subgroup({{7, 1}}));
  CHECK(h4.signature == Signature(7, std::vector<long long>(16, 2)));
  CHECK(h4.fixed_points == 16);
  CHECK(h4.quotient_genus == 7);

  // The whole group recovers the action signature.
  auto full = supell::subgroup_signature(m, g.elements());
  CHECK(full.signature == m.signature);
}

TEST_CASE("twisted involution subgroups are conjugate with 2^n fixed points") {
  ActionModel m = supell::make_action_model(3, 1);  // c = 1, twisted
  GroupSpec g = m.spec;
  auto h4 = g.generated_subgroup({{11, 1}});  // 3 * 2^{n-1} c - 1 = 11
  auto h5 = g.generated_subgroup({{3, 1}});   // 2^{n-1} c - 1 = 3
  for (const auto& h : {h4, h5}) {
    auto act = supell::subgroup_signature(m, h);
    CHECK(act.signature == Signature(9, std::vector<long long>(8, 2)));
    CHECK(act.fixed_points == 8);
  }
  auto conj = supell::conjugating_element(g, h4, h5);
  REQUIRE(conj.has_value());
  // Conjugating h4 by the witness lands exactly on h5.
  std::set<GroupElement> image;
  for (auto x : h4)
    image.insert(g.multiply(g.multiply(*conj, x), g.inverse(*conj)));
  CHECK(image == std::set<GroupElement>(h5.begin(), h5.end()));

  // In the abelian group distinct subgroups are never conjugate.
  ActionModel ab = supell::make_action_model(3, 3);
  auto t1 = ab.spec.generated_subgroup({ab.spec.tau1()});
  auto t2 = ab.spec.generated_subgroup({ab.spec.tau2()});
  CHECK_FALSE(supell::conjugating_element(ab.spec, t1, t2).has_value());
  auto ab_h4 = ab.spec.generated_subgroup({{7, 1}});
  CHECK_THROWS_AS(supell::conjugating_element(ab.spec, t1, ab_h4),
                  std::invalid_argument);
}

TEST_CASE("only the stated mixed exponents square to the identity") {
  for (long long n = 3; n <= 6; ++n) {
    long long half = supell::pow2(static_cast<int>(n) - 1);
    // Abelian: (t1^k t2)^2 = t1^{2k+2}, so k = -1 mod 2^n.
    auto ab = supell::order_two_mixed_exponents(GroupSpec::abelian(n));
    CHECK(ab == std::vector<long long>{2 * half - 1, 4 * half - 1});
    // Twisted: the twist shifts the solutions to -1 mod 2^{n-1} with an
    // extra congruence picking out exactly two of the four candidates.
    auto tw = supell::order_two_mixed_exponents(GroupSpec::twisted(n));
    CHECK(tw == std::vector<long long>{half - 1, 3 * half - 1});
  }
}

TEST_CASE("distinguished subgroups carry their textbook generators") {
  ActionModel ab = supell::make_action_model(3, 3);
  auto subs = supell::distinguished_subgroups(ab);
  REQUIRE(subs.size() == 4);
  CHECK(subs[0].name == "H1");
  CHECK(subs[0].generator == GroupElement{1, 0});
  CHECK(subs[1].generator == GroupElement{0, 1});
  CHECK(subs[2].generator == GroupElement{2, 0});
  CHECK(subs[3].generator == GroupElement{7, 1});
  CHECK(subs[3].elements.size() == 2);

  ActionModel tw = supell::make_action_model(3, 1);
  auto tsubs = supell::distinguished_subgroups(tw);
  REQUIRE(tsubs.size() == 5);
  CHECK(tsubs[3].generator == GroupElement{11, 1});
  CHECK(tsubs[4].generator == GroupElement{3, 1});
}

TEST_CASE("sphere shadow of the group action") {
  GroupSpec g = GroupSpec::twisted(3);
  CHECK(supell::sphere_kernel_is_square_subgroup(g));

  // t1 negates: fixes 0 and inf, swaps each lambda pair.
  auto fix1 = supell::sphere_fixed_branch_points({1, 0});
  CHECK(fix1 == std::vector<std::string>{"0", "inf"});
  // t1^2 is in the kernel: it fixes everything.
  CHECK(supell::sphere_fixed_branch_points({2, 0}).size() == 8);
  // t2 inverts: fixes 1 and -1.
  auto fix2 = supell::sphere_fixed_branch_points({0, 1});
  CHECK(fix2 == std::vector<std::string>{"1", "-1"});
  // The involution t1^3 t2 acts by x -> -1/x: nothing in the branch set
  // survives.
  CHECK(supell::sphere_fixed_branch_points({3, 1}).empty());

  auto perm = supell::sphere_permutation({1, 0});
  const auto& labels = supell::branch_point_labels();
  REQUIRE(perm.size() == labels.size());
  // "lambda" should map to "-lambda" under negation.
  for (size_t k = 0; k < labels.size(); ++k)
    if (labels[k] == "lambda")
      CHECK(labels[perm[k]] == "-lambda");
}
