#include <gtest/gtest.h>

#include <random>

#include "common/helpers.hpp"
#include "normsim/homomorphism.hpp"
#include "normsim/random_circuit.hpp"

namespace normsim {
namespace {

using test::all_elements;
using test::elem;
using test::group_of;

EndoMatrix endo(const AbelianGroup& g, std::initializer_list<std::initializer_list<long>> cols) {
  std::vector<GroupElement> out;
  for (auto c : cols) out.push_back(elem(g, c));
  return EndoMatrix(g, std::move(out));
}

std::set<GroupElement> orthogonal_by_enumeration(const Subgroup& h) {
  std::set<GroupElement> out;
  for (const auto& g : all_elements(h.group)) {
    bool trivial = true;
    for (const auto& x : h.generators) trivial = trivial && character(g, x).is_zero();
    if (trivial) out.insert(g);
  }
  return out;
}

TEST(EndoApply, Examples) {
  const auto z2z4 = group_of({2, 4});
  for (const auto& g : all_elements(z2z4)) EXPECT_EQ(EndoMatrix::identity(z2z4).apply(g), g);
  const auto z4 = group_of({4});
  EXPECT_EQ(endo(z4, {{3}}).apply(elem(z4, {2})), elem(z4, {2}));
  const auto a = endo(z2z4, {{1, 2}, {0, 1}});
  EXPECT_EQ(a.apply(elem(z2z4, {1, 1})), elem(z2z4, {1, 3}));
  const auto all = all_elements(z2z4);
  for (const auto& g : all) {
    for (const auto& h : all) EXPECT_EQ(a.apply(g + h), a.apply(g) + a.apply(h));
  }
}

TEST(EndoValidate, Examples) {
  const auto z2z4 = group_of({2, 4});
  EXPECT_TRUE(std::holds_alternative<EndoMatrix>(
      endo_validate(z2z4, {elem(z2z4, {1, 2}), elem(z2z4, {0, 1})})));
  const auto bad = endo_validate(z2z4, {elem(z2z4, {1, 1}), elem(z2z4, {0, 1})});
  ASSERT_TRUE(std::holds_alternative<InvalidColumn>(bad));
  EXPECT_EQ(std::get<InvalidColumn>(bad).column, 0u);  // the first column
  EXPECT_TRUE(std::holds_alternative<EndoMatrix>(endo_validate(z2z4, {z2z4.zero(), z2z4.zero()})));
  EXPECT_THROW(endo(z2z4, {{1, 1}, {0, 1}}), InvalidEndomorphism);
}

TEST(EndoValidate, AgreesWithHomomorphismCheck) {
  // A column choice is valid iff the induced map on representatives is additive.
  const auto g = group_of({2, 4});
  const auto all = all_elements(g);
  for (const auto& c0 : all) {
    for (const auto& c1 : all) {
      auto apply = [&](const GroupElement& x) { return x[0] * c0 + x[1] * c1; };
      bool additive = true;
      for (const auto& x : all) {
        for (const auto& y : all) additive = additive && apply(x + y) == apply(x) + apply(y);
      }
      EXPECT_EQ(std::holds_alternative<EndoMatrix>(endo_validate(g, {c0, c1})), additive);
    }
  }
}

TEST(EndoDual, Examples) {
  const auto z3 = group_of({3, 3});
  const auto a = endo(z3, {{1, 2}, {0, 1}});
  EXPECT_EQ(endo_dual(a), endo(z3, {{1, 0}, {2, 1}}));  // transpose

  const auto z2z4 = group_of({2, 4});
  const auto b = endo(z2z4, {{1, 2}, {0, 1}});
  EXPECT_EQ(endo_dual(b), endo(z2z4, {{1, 0}, {1, 1}}));
  const auto all = all_elements(z2z4);
  for (const auto& g : all) {
    for (const auto& x : all) EXPECT_EQ(character(g, b.apply(x)), character(endo_dual(b).apply(g), x));
  }
}

TEST(EndoDual, RandomEndomorphismsSatisfyDualIdentity) {
  std::mt19937_64 rng(2);
  for (auto g : {group_of({2, 4}), group_of({4, 6}), group_of({2, 3, 4}), group_of({8, 8}),
                 group_of({3, 9}), group_of({64})}) {
    const auto all = all_elements(g);
    for (int trial = 0; trial < 5; ++trial) {
      const auto a = random_endomorphism(g, rng);
      const auto dual = endo_dual(a);
      EXPECT_EQ(endo_dual(dual), a);
      for (const auto& x : all) {
        for (const auto& y : all) ASSERT_EQ(character(x, a.apply(y)), character(dual.apply(x), y));
      }
    }
  }
}

TEST(AutoInverse, Examples) {
  const auto z4 = group_of({4});
  EXPECT_EQ(auto_inverse(endo(z4, {{3}})), endo(z4, {{3}}));
  EXPECT_FALSE(auto_inverse(endo(z4, {{2}})).has_value());

  const auto z2z4 = group_of({2, 4});
  const auto shear = shear_map(z2z4, 0, 1, 2);
  EXPECT_EQ(shear, endo(z2z4, {{1, 2}, {0, 1}}));
  const auto inv = auto_inverse(shear);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(*inv, endo(z2z4, {{1, 2}, {0, 1}}));
  for (const auto& g : all_elements(z2z4)) EXPECT_EQ(inv->apply(shear.apply(g)), g);
}

TEST(AutoInverse, RandomAutomorphismsAndSingularMaps) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = random_group(rng, 200, 3);
    const auto a = random_automorphism(g, rng);
    const auto inv = auto_inverse(a);
    ASSERT_TRUE(inv.has_value());
    for (const auto& x : all_elements(g)) {
      ASSERT_EQ(inv->apply(a.apply(x)), x);
      ASSERT_EQ(a.apply(inv->apply(x)), x);
    }
    // Bijectivity by enumeration decides invertibility of a random endomorphism.
    const auto e = random_endomorphism(g, rng);
    std::set<GroupElement> image;
    for (const auto& x : all_elements(g)) image.insert(e.apply(x));
    EXPECT_EQ(auto_inverse(e).has_value(), image.size() == g.checked_order());
  }
}

TEST(Builders, ParameterChecks) {
  const auto g = group_of({4, 6});
  EXPECT_THROW(multiplication_map(g, 0, 2), std::invalid_argument);
  EXPECT_NO_THROW(multiplication_map(g, 1, 5));
  EXPECT_THROW(shear_map(g, 0, 1, 1), std::invalid_argument);  // 4 * 1 != 0 mod 6
  EXPECT_NO_THROW(shear_map(g, 0, 1, 3));
  EXPECT_THROW(shear_map(g, 0, 0, 1), std::invalid_argument);
  EXPECT_THROW(multiplication_map(g, 2, 1), std::out_of_range);
}

TEST(OrthogonalSubgroup, Examples) {
  const auto z2z3 = group_of({2, 3});
  const auto whole = subgroup_members(orthogonal_subgroup(Subgroup::trivial(z2z3)));
  EXPECT_EQ(whole.size(), 6u);
  const auto none = subgroup_members(orthogonal_subgroup(Subgroup::whole(z2z3)));
  EXPECT_EQ(none, std::set<GroupElement>{z2z3.zero()});

  const auto z4 = group_of({4});
  const Subgroup k{z4, {elem(z4, {2})}};
  EXPECT_EQ(subgroup_members(orthogonal_subgroup(k)), orthogonal_by_enumeration(k));
  EXPECT_EQ(subgroup_members(orthogonal_subgroup(k)),
            (std::set<GroupElement>{elem(z4, {0}), elem(z4, {2})}));
}

TEST(OrthogonalSubgroup, OrderAndDoubleOrthogonal) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = random_group(rng, 300, 3);
    Subgroup h{g, {}};
    const auto count = rng() % 3;
    for (std::size_t k = 0; k < count; ++k) h.generators.push_back(random_element(g, rng));
    const auto members = subgroup_members(h);
    const auto perp = orthogonal_subgroup(h);
    const auto perp_members = subgroup_members(perp);
    EXPECT_EQ(perp_members, orthogonal_by_enumeration(h));
    EXPECT_EQ(members.size() * perp_members.size(), g.checked_order());
    EXPECT_EQ(subgroup_members(orthogonal_subgroup(perp)), members);
  }
}

TEST(SolveCharacterSystem, Examples) {
  const auto z4 = group_of({4});
  EXPECT_EQ(solve_character_system(z4, {}, {}), z4.zero());
  EXPECT_EQ(solve_character_system(z4, {elem(z4, {1})}, {Integer(1)}), elem(z4, {1}));
  const auto z2 = group_of({2});
  EXPECT_FALSE(solve_character_system(z2, {elem(z2, {0})}, {Integer(1)}).has_value());
  EXPECT_THROW(solve_character_system(z2, {elem(z2, {0})}, {}), std::invalid_argument);
}

TEST(SolveCharacterSystem, SolutionsSatisfyConstraints) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = random_group(rng, 500, 3);
    const auto hidden = random_element(g, rng);
    std::vector<GroupElement> chars;
    std::vector<Integer> targets;
    for (int k = 0; k < 3; ++k) {
      chars.push_back(random_element(g, rng));
      // chi_h(x) = gamma^(2s), so s = exponent / 2
      targets.push_back(character(chars.back(), hidden).value() / 2);
    }
    const auto x = solve_character_system(g, chars, targets);
    ASSERT_TRUE(x.has_value());
    for (std::size_t k = 0; k < chars.size(); ++k) {
      EXPECT_EQ(character(chars[k], *x), PhaseExponent(g, 2 * targets[k]));
    }
    // Unsatisfiable: the same character with two different targets.
    chars.push_back(chars.front());
    targets.push_back(targets.front() + 1);
    EXPECT_FALSE(solve_character_system(g, chars, targets).has_value());
  }
}

TEST(Subgroups, MembersAndContainment) {
  const auto z4 = group_of({4});
  EXPECT_EQ(subgroup_members(Subgroup{z4, {elem(z4, {2})}}),
            (std::set<GroupElement>{elem(z4, {0}), elem(z4, {2})}));
  const auto z2z2 = group_of({2, 2});
  EXPECT_EQ(subgroup_members(Subgroup{z2z2, {elem(z2z2, {1, 1})}}),
            (std::set<GroupElement>{elem(z2z2, {0, 0}), elem(z2z2, {1, 1})}));
  const auto z5 = group_of({5});
  EXPECT_EQ(subgroup_members(Subgroup{z5, {elem(z5, {1})}}).size(), 5u);

  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = random_group(rng, 200, 3);
    Subgroup h{g, {random_element(g, rng), random_element(g, rng)}};
    const auto members = subgroup_members(h);
    for (const auto& x : all_elements(g)) EXPECT_EQ(subgroup_contains(h, x), members.count(x) == 1);
  }
}

}  // namespace
}  // namespace normsim
