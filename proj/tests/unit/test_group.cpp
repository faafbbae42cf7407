#include <gtest/gtest.h>

#include <random>

#include "common/helpers.hpp"

namespace normsim {
namespace {

using test::elem;
using test::group_of;

TEST(AbelianGroup, OrderAndPhaseModulus) {
  const auto g = group_of({4, 15});
  EXPECT_EQ(g.order(), 60);
  EXPECT_EQ(g.phase_modulus(), 120);
  EXPECT_EQ(g.rank(), 2u);
  EXPECT_EQ(g.to_string(), "4 15");
}

TEST(AbelianGroup, RejectsModuliBelowTwo) {
  EXPECT_THROW(group_of({2, 1}), std::invalid_argument);
  EXPECT_THROW(group_of({0}), std::invalid_argument);
  EXPECT_THROW(group_of({}), std::invalid_argument);
  EXPECT_NO_THROW(AbelianGroup::with_trivial_factors({Integer(1), Integer(3)}));
}

TEST(AbelianGroup, OrderBeyondMachineWords) {
  const Integer big = Integer(1) << 100;
  const AbelianGroup g({big, Integer(3)});
  EXPECT_EQ(g.order(), big * 3);
  EXPECT_THROW(g.checked_order(), EnumerationBoundExceeded);
  const GroupElement x(g, {big - 1, Integer(2)});
  EXPECT_EQ((x + x).to_string(), "(" + to_string(big - 2) + ",1)");
  EXPECT_TRUE((g.order() * x).is_zero());
}

TEST(GroupElement, Addition) {
  const auto z4 = group_of({4});
  EXPECT_EQ(elem(z4, {3}) + elem(z4, {2}), elem(z4, {1}));
  const auto z2z3 = group_of({2, 3});
  EXPECT_EQ(elem(z2z3, {1, 2}) + elem(z2z3, {1, 2}), elem(z2z3, {0, 1}));
  EXPECT_EQ(elem(z2z3, {1, 2}) + z2z3.zero(), elem(z2z3, {1, 2}));
  EXPECT_EQ(-elem(z2z3, {1, 2}), elem(z2z3, {1, 1}));
}

TEST(GroupElement, Scaling) {
  const auto z6 = group_of({6});
  EXPECT_TRUE((Integer(0) * elem(z6, {5})).is_zero());
  EXPECT_EQ(Integer(4) * elem(z6, {5}), elem(z6, {2}));
  EXPECT_EQ(Integer(-1) * elem(z6, {5}), elem(z6, {1}));
  const auto g = group_of({4, 6, 5});
  EXPECT_TRUE((g.order() * elem(g, {3, 5, 4})).is_zero());
}

TEST(GroupElement, RangeAndGroupChecks) {
  const auto z4 = group_of({4});
  EXPECT_THROW(elem(z4, {4}), std::invalid_argument);
  EXPECT_THROW(elem(z4, {-1}), std::invalid_argument);
  EXPECT_THROW(elem(z4, {1, 0}), std::invalid_argument);
  EXPECT_THROW(elem(z4, {1}) + elem(group_of({5}), {1}), GroupMismatch);
}

TEST(GroupElement, TextRoundTrip) {
  const auto g = group_of({4, 15});
  EXPECT_EQ(parse_element(g, " ( 3 , 14 ) "), elem(g, {3, 14}));
  EXPECT_EQ(elem(g, {3, 14}).to_string(), "(3,14)");
  EXPECT_THROW(parse_element(g, "(3,15)"), std::invalid_argument);
  EXPECT_THROW(parse_element(g, "3,1"), std::invalid_argument);
  EXPECT_THROW(parse_element(g, "(3)"), std::invalid_argument);
}

TEST(Character, Examples) {
  const auto z2 = group_of({2});
  EXPECT_EQ(character(elem(z2, {1}), elem(z2, {1})).value(), 2);
  const auto z4 = group_of({4});
  for (long h = 0; h < 4; ++h) EXPECT_TRUE(character(z4.zero(), elem(z4, {h})).is_zero());
  // -1 = gamma^g with g = 4
  EXPECT_EQ(character(elem(z4, {1}), elem(z4, {2})).value(), 4);
}

TEST(Character, MatchesDefinitionAndLaws) {
  for (auto g : {group_of({2, 4}), group_of({3, 5}), group_of({6}), group_of({2, 2, 3})}) {
    const auto all = test::all_elements(g);
    for (const auto& a : all) {
      for (const auto& b : all) {
        const auto chi = character(a, b);
        EXPECT_TRUE(chi.is_even());
        EXPECT_LT(std::abs(chi.to_complex() - test::character_value(a, b)), 1e-12);
        EXPECT_EQ(chi, character(b, a));
        for (const auto& x : all) EXPECT_EQ(character(a + b, x), character(a, x) + character(b, x));
      }
    }
  }
}

TEST(Character, OrthogonalityIsExact) {
  for (auto g : {group_of({2, 4}), group_of({3, 3}), group_of({8, 8}), group_of({64})}) {
    const auto all = test::all_elements(g);
    const auto n = g.phase_modulus().get_ui();
    for (const auto& a : all) {
      for (const auto& b : all) {
        std::vector<std::int64_t> counts(n, 0);
        for (const auto& h : all) ++counts[(character(a, h) - character(b, h)).value().get_ui()];
        EXPECT_EQ(root_of_unity_sum_is_zero(counts), !(a == b));
      }
    }
  }
}

TEST(CharacterSum, Examples) {
  const auto z4 = group_of({4});
  EXPECT_FALSE(character_sum_is_zero(z4.zero()));
  EXPECT_TRUE(character_sum_is_zero(elem(z4, {1})));
  const auto z2z2 = group_of({2, 2});
  std::complex<double> sum = 0;
  for (const auto& h : test::all_elements(z2z2)) sum += test::character_value(elem(z2z2, {1, 0}), h);
  EXPECT_LT(std::abs(sum), 1e-12);
  EXPECT_TRUE(character_sum_is_zero(elem(z2z2, {1, 0})));
  EXPECT_THROW(character_sum_is_zero(elem(z4, {1}), 2), EnumerationBoundExceeded);
}

TEST(RootOfUnitySum, AgreesWithFloatingPoint) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + rng() % 36;
    std::vector<std::int64_t> counts(n, 0);
    // Sums of full cyclic orbits vanish; mix some of them with noise.
    for (std::size_t d = 2; d <= n; ++d) {
      if (n % d == 0 && rng() % 3 == 0) {
        const auto start = rng() % n;
        for (std::size_t k = 0; k < d; ++k) counts[(start + k * (n / d)) % n] += 1;
      }
    }
    if (rng() % 2) counts[rng() % n] += static_cast<std::int64_t>(rng() % 3) - 1;
    std::complex<double> sum = 0;
    for (std::size_t k = 0; k < n; ++k) {
      sum += static_cast<double>(counts[k]) * std::polar(1.0, 2 * std::numbers::pi * k / n);
    }
    EXPECT_EQ(root_of_unity_sum_is_zero(counts), std::abs(sum) < 1e-9) << "trial " << trial;
  }
}

TEST(PhaseExponent, CyclicGroupLaws) {
  const auto g = group_of({3, 4});  // Z_24
  for (long a = 0; a < 24; ++a) {
    const PhaseExponent pa(g, a);
    EXPECT_EQ(pa + PhaseExponent::zero(g), pa);
    EXPECT_TRUE((pa + (-pa)).is_zero());
    EXPECT_EQ((-pa).value(), (24 - a) % 24);
    for (long b = 0; b < 24; b += 5) {
      const PhaseExponent pb(g, b);
      EXPECT_EQ(pa + pb, pb + pa);
      EXPECT_EQ((pa + pb) + PhaseExponent(g, 7), pa + (pb + PhaseExponent(g, 7)));
    }
  }
  EXPECT_EQ(PhaseExponent(g, -1).value(), 23);
  EXPECT_LT(std::abs(PhaseExponent(g, 12).to_complex() + 1.0), 1e-12);
}

TEST(ForEachElement, LexicographicOrder) {
  const auto g = group_of({2, 3});
  std::vector<std::string> seen;
  for_each_element(g, [&](const GroupElement& x) { seen.push_back(x.to_string()); });
  EXPECT_EQ(seen, (std::vector<std::string>{"(0,0)", "(0,1)", "(0,2)", "(1,0)", "(1,1)", "(1,2)"}));
}

}  // namespace
}  // namespace normsim
