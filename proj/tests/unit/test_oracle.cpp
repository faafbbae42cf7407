#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "common/helpers.hpp"
#include "normsim/oracle.hpp"
#include "normsim/random_circuit.hpp"

namespace normsim {
namespace {

using namespace oracle;
using test::all_elements;
using test::elem;
using test::group_of;

constexpr double kEps = 1e-9;

DenseState random_state(const AbelianGroup& g, std::mt19937_64& rng) {
  ElementTable table(g);
  std::normal_distribution<double> normal;
  std::vector<Amplitude> amps(table.size());
  double norm = 0;
  for (auto& a : amps) {
    a = {normal(rng), normal(rng)};
    norm += std::norm(a);
  }
  for (auto& a : amps) a /= std::sqrt(norm);
  return DenseState(std::move(table), std::move(amps));
}

TEST(DenseApply, Examples) {
  const auto z2 = group_of({2});
  const auto plus = dense_apply(DenseState::basis(elem(z2, {0})), Qft{{0}});
  EXPECT_LT(std::abs(plus.amplitude(elem(z2, {0})) - std::sqrt(0.5)), kEps);
  EXPECT_LT(std::abs(plus.amplitude(elem(z2, {1})) - std::sqrt(0.5)), kEps);

  const auto z4 = group_of({4});
  const auto three = dense_apply(DenseState::basis(elem(z4, {1})),
                                 AutomorphismGate(EndoMatrix(z4, {elem(z4, {3})})));
  EXPECT_LT(std::abs(three.amplitude(elem(z4, {3})) - 1.0), kEps);

  const auto d = dense_apply(DenseState::basis(elem(z2, {1})),
                             QuadraticGate(QuadraticEncoding(z2, {Integer(1)}, {})));
  EXPECT_LT(std::abs(d.amplitude(elem(z2, {1})) - Amplitude(0, 1)), kEps);
}

TEST(DenseApply, FourierMatchesDefinitionPerFactor) {
  const auto g = group_of({3, 4});
  const ElementTable table(g);
  for (const auto& x : all_elements(g)) {
    const auto out = dense_apply(DenseState::basis(x), Qft{{1}});
    for (const auto& y : all_elements(g)) {
      Amplitude expected = 0;
      if (y[0] == x[0]) {
        const double angle = 2 * std::numbers::pi * Integer(x[1] * y[1]).get_d() / 4;
        expected = std::polar(0.5, angle);
      }
      EXPECT_LT(std::abs(out.amplitude(y) - expected), kEps);
    }
  }
}

TEST(DenseApply, FourierSquaredIsNegationAndFourthPowerIsIdentity) {
  std::mt19937_64 rng(41);
  for (auto g : {group_of({5}), group_of({2, 6}), group_of({3, 4, 2})}) {
    std::vector<std::size_t> all;
    for (std::size_t i = 0; i < g.rank(); ++i) all.push_back(i);
    const auto psi = random_state(g, rng);
    const auto twice = dense_apply(dense_apply(psi, Qft{all}), Qft{all});
    for (const auto& x : all_elements(g)) {
      EXPECT_LT(std::abs(twice.amplitude(-x) - psi.amplitude(x)), kEps);
    }
    const auto back = dense_apply(dense_apply(psi, Qft{all}), InverseQft{all});
    for (const auto& x : all_elements(g)) EXPECT_LT(std::abs(back.amplitude(x) - psi.amplitude(x)), kEps);
  }
}

TEST(DenseApply, GatesAreUnitary) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = random_group(rng, 512, 3);
    const auto psi = random_state(g, rng);
    const auto out = dense_apply(psi, random_gate(g, rng));
    EXPECT_LT(std::abs(out.norm() - 1.0), 1e-12);
  }
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_group(rng, 32, 3);
    const ElementTable table(g);
    const auto u = gate_matrix(table, random_gate(g, rng));
    Matrix id(table.size());
    for (std::size_t i = 0; i < table.size(); ++i) id(i, i) = 1;
    EXPECT_LT((u * u.adjoint()).distance(id), kEps);
  }
}

TEST(DenseDistribution, Examples) {
  const auto z2 = group_of({2});
  EXPECT_EQ(dense_distribution(DenseState::basis(elem(z2, {0})), kSupportThreshold).size(), 1u);
  const auto plus = dense_distribution(dense_apply(DenseState::basis(elem(z2, {0})), Qft{{0}}));
  EXPECT_NEAR(plus.at(elem(z2, {0})), 0.5, kEps);
  EXPECT_NEAR(plus.at(elem(z2, {1})), 0.5, kEps);

  const auto z4 = group_of({4});
  const auto k = dense_distribution(DenseState::coset(CosetInput{{elem(z4, {2})}, z4.zero()}),
                                    kSupportThreshold);
  EXPECT_EQ(k.size(), 2u);
  EXPECT_NEAR(k.at(elem(z4, {0})), 0.5, kEps);
  EXPECT_NEAR(k.at(elem(z4, {2})), 0.5, kEps);
}

TEST(GateMatrix, ConjugatesLabelsAsTheEnginePredicts) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 150; ++trial) {
    const auto g = random_group(rng, 64, 3);
    const ElementTable table(g);
    const auto gate = random_gate(g, rng);
    const auto u = gate_matrix(table, gate);
    const auto sigma = random_pauli(g, rng);
    const auto lhs = u * label_matrix(table, sigma) * u.adjoint();
    EXPECT_LT(lhs.distance(label_matrix(table, conjugate(sigma, gate))), kEps)
        << g.to_string() << " " << sigma.to_string();
  }
}

TEST(GateMatrix, AgreesWithDenseApply) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = random_group(rng, 48, 3);
    const ElementTable table(g);
    const auto gate = random_gate(g, rng);
    const auto u = gate_matrix(table, gate);
    const auto psi = random_state(g, rng);
    const auto out = dense_apply(psi, gate);
    for (std::size_t r = 0; r < table.size(); ++r) {
      Amplitude v = 0;
      for (std::size_t c = 0; c < table.size(); ++c) v += u(r, c) * psi.amplitudes()[c];
      EXPECT_LT(std::abs(v - out.amplitudes()[r]), kEps);
    }
  }
}

TEST(CompareWithEngine, SimulateExamplesPass) {
  const auto z2z2 = group_of({2, 2});
  const std::vector<Gate> bell{
      Qft{{0}}, AutomorphismGate(EndoMatrix(z2z2, {elem(z2z2, {1, 1}), elem(z2z2, {0, 1})}))};
  EXPECT_TRUE(compare_with_engine(CosetInput::basis(z2z2.zero()), bell).pass());
  const auto g = group_of({4, 15});
  EXPECT_TRUE(compare_with_engine(CosetInput::basis(g.zero()), std::vector<Gate>{Qft{{0}}}).pass());
  const auto z8 = group_of({8});
  EXPECT_TRUE(
      compare_with_engine(CosetInput{{elem(z8, {2})}, z8.zero()}, std::vector<Gate>{Qft{{0}}}).pass());
}

TEST(CompareWithEngine, ShiftedOffsetFails) {
  std::mt19937_64 rng(45);
  int controls = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto inst = random_instance(rng(), {.max_order = 256, .gates = 6});
    const auto state = dense_run(inst.input, inst.gates);
    auto dist = simulate(inst.input, inst.gates);
    ASSERT_TRUE(compare_distribution(state, dist).pass());
    // Any element outside H moves the coset off the true support.
    for (const auto& x : all_elements(inst.group)) {
      if (!subgroup_contains(dist.support, x)) {
        dist.offset = dist.offset + x;
        const auto report = compare_distribution(state, dist);
        EXPECT_FALSE(report.pass());
        EXPECT_FALSE(report.mismatch.empty());
        ++controls;
        break;
      }
    }
  }
  EXPECT_GT(controls, 20);
}

TEST(CompareWithEngine, WrongSupportSizeFails) {
  const auto z4 = group_of({4});
  const auto state = dense_apply(DenseState::basis(z4.zero()), Qft{{0}});
  EXPECT_FALSE(compare_distribution(state, {Subgroup{z4, {elem(z4, {2})}}, z4.zero()}).pass());
  EXPECT_TRUE(compare_distribution(state, {Subgroup::whole(z4), elem(z4, {3})}).pass());
}

TEST(EigenvectorCheck, Examples) {
  const auto z2 = group_of({2});
  const auto zero = DenseState::basis(elem(z2, {0}));
  const std::vector<PauliLabel> z{PauliLabel::z(elem(z2, {1}))};
  const std::vector<PauliLabel> x{PauliLabel::x(elem(z2, {1}))};
  EXPECT_TRUE(eigenvector_check(zero, z));
  const auto plus = dense_apply(zero, Qft{{0}});
  EXPECT_TRUE(eigenvector_check(plus, x));
  EXPECT_FALSE(eigenvector_check(plus, z));
  EXPECT_TRUE(eigenvector_check(std::vector<Gate>{Qft{{0}}}, CosetInput::basis(elem(z2, {0}))));
}

TEST(EigenvectorCheck, RandomCircuitsAndUnconjugatedControl) {
  std::mt19937_64 rng(46);
  int controls = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto inst = random_instance(rng(), {.max_order = 256, .gates = 8});
    EXPECT_TRUE(eigenvector_check(inst.gates, inst.input));
    const auto state = dense_run(inst.input, inst.gates);
    const auto before = init_stabilizer(inst.input).labels;
    const auto after = evolve(inst.input, inst.gates).labels;
    if (!eigenvector_check(state, before)) ++controls;
    EXPECT_TRUE(eigenvector_check(state, after));
  }
  EXPECT_GT(controls, 10);
}

TEST(DenseRun, NonzeroAmplitudesHaveEqualModulus) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const auto inst = random_instance(rng(), {.max_order = 512, .gates = 10});
    const auto state = dense_run(inst.input, inst.gates);
    double lo = 2;
    double hi = 0;
    for (const auto& a : state.amplitudes()) {
      if (std::norm(a) <= kSupportThreshold) continue;
      lo = std::min(lo, std::abs(a));
      hi = std::max(hi, std::abs(a));
    }
    EXPECT_LT(hi - lo, kEps);
  }
}

TEST(ElementTable, BoundAndOrder) {
  EXPECT_THROW(ElementTable(group_of({64, 65})), EnumerationBoundExceeded);
  EXPECT_NO_THROW(ElementTable(group_of({64, 65}), 5000));
  const ElementTable t(group_of({2, 3}));
  EXPECT_EQ(t.index(elem(t.group(), {1, 0})), 3u);
  EXPECT_EQ(t[5], elem(t.group(), {1, 2}));
}

TEST(PermutationSpec, RejectsNonBijections) {
  const auto z4 = group_of({4});
  EXPECT_THROW(PermutationSpec(ElementTable(z4), {0, 1, 1, 3}), std::invalid_argument);
  EXPECT_THROW(PermutationSpec(ElementTable(z4), {0, 1, 2}), std::invalid_argument);
  EXPECT_NO_THROW(PermutationSpec(ElementTable(z4), {3, 2, 1, 0}));
}

TEST(AffineTest, Examples) {
  const auto z4 = group_of({4});
  const auto shift = affine_test(PermutationSpec(ElementTable(z4), {1, 2, 3, 0}));
  ASSERT_TRUE(std::holds_alternative<Affine>(shift));
  EXPECT_EQ(std::get<Affine>(shift).map, EndoMatrix::identity(z4));
  EXPECT_EQ(std::get<Affine>(shift).shift, elem(z4, {1}));

  const auto triple = affine_test(PermutationSpec(ElementTable(z4), {0, 3, 2, 1}));
  ASSERT_TRUE(std::holds_alternative<Affine>(triple));
  EXPECT_EQ(std::get<Affine>(triple).map, EndoMatrix(z4, {elem(z4, {3})}));
  EXPECT_TRUE(std::get<Affine>(triple).shift.is_zero());

  const auto me = PermutationSpec::modexp(Integer(2), 2, Integer(15));
  EXPECT_EQ(me.group().to_string(), "4 15");
  EXPECT_EQ(me(elem(me.group(), {2, 0})), elem(me.group(), {2, 4}));
  const auto r = affine_test(me);
  ASSERT_TRUE(std::holds_alternative<NotAffine>(r));
  EXPECT_EQ(std::get<NotAffine>(r).witness, elem(me.group(), {2, 0}));
}

TEST(AffineTest, ModexpIsAffineOnlyWhenTheSeriesTruncates) {
  // Affine iff a^x = 1 + (a-1) x mod N on 0..7 and x -> (a-1) x is well
  // defined on Z_8, i.e. 8 (a-1) = 0 mod N.
  for (long n : {4L, 9L, 15L, 16L, 25L}) {
    for (long a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      const auto perm = PermutationSpec::modexp(Integer(a), 3, Integer(n));
      bool affine = (8 * (a - 1)) % n == 0;
      for (long x = 0; x < 8; ++x) {
        long pow = 1;
        for (long k = 0; k < x; ++k) pow = pow * a % n;
        affine = affine && pow == (1 + (a - 1) * x) % n;
      }
      EXPECT_EQ(std::holds_alternative<Affine>(affine_test(perm)), affine) << a << " mod " << n;
    }
  }
}

TEST(AffineTest, ReconstructsAutomorphismsWithShifts) {
  std::mt19937_64 rng(48);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = random_group(rng, 256, 3);
    const ElementTable table(g);
    const auto alpha = random_automorphism(g, rng);
    const auto t = random_element(g, rng);
    std::vector<std::size_t> images(table.size());
    for (std::size_t i = 0; i < table.size(); ++i) images[i] = table.index(alpha.apply(table[i]) + t);
    const PermutationSpec perm(table, images);
    const auto r = affine_test(perm);
    ASSERT_TRUE(std::holds_alternative<Affine>(r));
    const auto& fit = std::get<Affine>(r);
    EXPECT_EQ(fit.map, alpha);
    EXPECT_EQ(fit.shift, t);
  }
}

TEST(AffineTest, RandomPermutationsYieldValidWitnesses) {
  std::mt19937_64 rng(49);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = random_group(rng, 128, 3);
    if (g.order() < 6) continue;
    const ElementTable table(g);
    std::vector<std::size_t> images(table.size());
    std::iota(images.begin(), images.end(), 0);
    std::shuffle(images.begin(), images.end(), rng);
    const PermutationSpec perm(table, images);
    const auto r = affine_test(perm);
    if (std::holds_alternative<Affine>(r)) {
      const auto& fit = std::get<Affine>(r);
      for (const auto& x : all_elements(g)) EXPECT_EQ(perm(x), fit.map.apply(x) + fit.shift);
      continue;
    }
    // The witness breaks the candidate built from F(0) and F(e^i).
    const auto& w = std::get<NotAffine>(r).witness;
    const auto t = perm(g.zero());
    GroupElement predicted = t;
    bool basis_witness = false;
    for (std::size_t i = 0; i < g.rank(); ++i) {
      std::vector<Integer> e(g.rank(), Integer(0));
      e[i] = 1;
      const GroupElement ei(g, e);
      predicted = predicted + w[i] * (perm(ei) - t);
      basis_witness = basis_witness || w == ei;
    }
    EXPECT_TRUE(!(perm(w) == predicted) || basis_witness) << std::get<NotAffine>(r).reason;
  }
}

}  // namespace
}  // namespace normsim
