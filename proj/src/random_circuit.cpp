#include "normsim/random_circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace normsim {

namespace {

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer below(const Integer& bound, std::mt19937_64& rng) { return uniform_below(bound, rng); }

std::size_t pick(std::size_t n, std::mt19937_64& rng) { return uniform_int(rng, 0, n - 1); }

// Random c with d_i c = 0 mod d_j, i.e. a multiple of d_j / gcd(d_i, d_j).
Integer compatible_coefficient(const AbelianGroup& group, std::size_t i, std::size_t j,
                               std::mt19937_64& rng) {
  const Integer step = group.modulus(j) / gcd(group.modulus(i), group.modulus(j));
  return mod_floor(step * below(group.modulus(j), rng), group.modulus(j));
}

std::pair<std::size_t, std::size_t> distinct_pair(std::size_t m, std::mt19937_64& rng) {
  const std::size_t i = pick(m, rng);
  std::size_t j = pick(m - 1, rng);
  if (j >= i) ++j;
  return {i, j};
}

std::vector<std::size_t> random_targets(std::size_t m, std::mt19937_64& rng) {
  std::vector<std::size_t> out;
  while (out.empty()) {
    for (std::size_t i = 0; i < m; ++i) {
      if (rng() & 1) out.push_back(i);
    }
  }
  return out;
}

}  // namespace

std::uint64_t uniform_int(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  return lo + below(Integer(static_cast<unsigned long>(hi - lo + 1)), rng).get_ui();
}

AbelianGroup random_group(std::mt19937_64& rng, std::uint64_t max_order, std::size_t max_rank) {
  if (max_order < 2 || max_rank < 1) throw std::invalid_argument("no group fits the bounds");
  const std::size_t rank = uniform_int(rng, 1, max_rank);
  std::vector<Integer> moduli;
  std::uint64_t room = max_order;
  while (moduli.size() < rank && room >= 2) {
    const std::uint64_t d = uniform_int(rng, 2, std::min<std::uint64_t>(room, 32));
    moduli.emplace_back(static_cast<unsigned long>(d));
    room /= d;
  }
  return AbelianGroup(std::move(moduli));
}

GroupElement random_element(const AbelianGroup& group, std::mt19937_64& rng) {
  std::vector<Integer> residues;
  for (std::size_t i = 0; i < group.rank(); ++i) residues.push_back(below(group.modulus(i), rng));
  return GroupElement(group, std::move(residues));
}

EndoMatrix random_endomorphism(const AbelianGroup& group, std::mt19937_64& rng) {
  const std::size_t m = group.rank();
  std::vector<GroupElement> cols;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Integer> col(m);
    for (std::size_t k = 0; k < m; ++k) col[k] = compatible_coefficient(group, i, k, rng);
    cols.push_back(GroupElement(group, std::move(col)));
  }
  return EndoMatrix(group, std::move(cols));
}

EndoMatrix random_automorphism(const AbelianGroup& group, std::mt19937_64& rng) {
  const std::size_t m = group.rank();
  EndoMatrix out = EndoMatrix::identity(group);
  const std::size_t steps = uniform_int(rng, 1, 3);
  for (std::size_t s = 0; s < steps; ++s) {
    if (m >= 2 && (rng() & 1)) {
      const auto [i, j] = distinct_pair(m, rng);
      out = shear_map(group, i, j, compatible_coefficient(group, i, j, rng)) * out;
    } else {
      const std::size_t i = pick(m, rng);
      Integer a;
      do {
        a = below(group.modulus(i), rng);
      } while (gcd(a, group.modulus(i)) != 1);
      out = multiplication_map(group, i, a) * out;
    }
  }
  return out;
}

QuadraticEncoding random_quadratic(const AbelianGroup& group, std::mt19937_64& rng) {
  const std::size_t m = group.rank();
  QuadraticEncoding out = QuadraticEncoding::trivial(group);
  const std::size_t factors = uniform_int(rng, 1, 3);
  for (std::size_t f = 0; f < factors; ++f) {
    const std::size_t i = pick(m, rng);
    const Integer a = below(group.modulus(i), rng);
    switch (uniform_int(rng, 0, m >= 2 ? 4 : 3)) {
      case 0:
        out = out * character_function(group, i, a);
        break;
      case 1:
        out = out * square_function(group, i, a);
        break;
      case 2:
        out = out * half_function(group, i, a);
        break;
      case 3:
        out = out * endo_function(random_endomorphism(group, rng));
        break;
      default: {
        const auto [p, q] = distinct_pair(m, rng);
        out = out * cross_function(group, p, q, compatible_coefficient(group, p, q, rng));
      }
    }
  }
  return out;
}

PauliLabel random_pauli(const AbelianGroup& group, std::mt19937_64& rng) {
  PhaseExponent phase(group, below(group.phase_modulus(), rng));
  GroupElement z = random_element(group, rng);
  GroupElement x = random_element(group, rng);
  return {std::move(phase), std::move(z), std::move(x)};
}

Gate random_gate(const AbelianGroup& group, std::mt19937_64& rng) {
  switch (uniform_int(rng, 0, 4)) {
    case 0:
      return Qft{random_targets(group.rank(), rng)};
    case 1:
      return InverseQft{random_targets(group.rank(), rng)};
    case 2:
      return AutomorphismGate(random_automorphism(group, rng));
    case 3:
      return QuadraticGate(random_quadratic(group, rng));
    default:
      return PauliGate{random_pauli(group, rng)};
  }
}

CosetInput random_coset(const AbelianGroup& group, std::mt19937_64& rng,
                        std::size_t max_generators) {
  CosetInput input{{}, group.zero()};
  const std::size_t count = uniform_int(rng, 0, max_generators);
  for (std::size_t k = 0; k < count; ++k) input.generators.push_back(random_element(group, rng));
  input.shift = random_element(group, rng);
  return input;
}

Circuit random_instance(std::uint64_t seed, const RandomCircuitOptions& options) {
  std::mt19937_64 rng(seed);
  AbelianGroup group = random_group(rng, options.max_order, options.max_rank);
  CosetInput input = random_coset(group, rng, options.max_coset_generators);
  std::vector<Gate> gates;
  for (std::size_t k = 0; k < options.gates; ++k) gates.push_back(random_gate(group, rng));
  return {std::move(group), std::move(input), std::move(gates)};
}

}  // namespace normsim
