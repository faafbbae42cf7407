// Seeded generators for groups, elements, gates and whole circuits, used by
// the test harness and the `random-circuit` command.

#pragma once

#include <cstdint>
#include <random>

#include "normsim/circuit_io.hpp"

namespace normsim {

struct RandomCircuitOptions {
  std::uint64_t max_order = 64;
  std::size_t max_rank = 4;
  std::size_t gates = 5;
  /// Number of coset generators is drawn from [0, max_coset_generators].
  std::size_t max_coset_generators = 2;
};

/// Uniform in [lo, hi].
std::uint64_t uniform_int(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi);

/// Moduli >= 2 with product <= max_order (at least one factor; max_order >= 2).
AbelianGroup random_group(std::mt19937_64& rng, std::uint64_t max_order, std::size_t max_rank);

GroupElement random_element(const AbelianGroup& group, std::mt19937_64& rng);

/// Any endomorphism, columns drawn uniformly among valid ones.
EndoMatrix random_endomorphism(const AbelianGroup& group, std::mt19937_64& rng);

/// A composition of multiplication and shear maps.
EndoMatrix random_automorphism(const AbelianGroup& group, std::mt19937_64& rng);

/// A product of character, square, cross, half and endomorphism-induced
/// functions.
QuadraticEncoding random_quadratic(const AbelianGroup& group, std::mt19937_64& rng);

PauliLabel random_pauli(const AbelianGroup& group, std::mt19937_64& rng);

/// Draws one of the five gate kinds uniformly.
Gate random_gate(const AbelianGroup& group, std::mt19937_64& rng);

CosetInput random_coset(const AbelianGroup& group, std::mt19937_64& rng,
                        std::size_t max_generators = 2);

/// Deterministic per seed.
Circuit random_instance(std::uint64_t seed, const RandomCircuitOptions& options = {});

}  // namespace normsim
