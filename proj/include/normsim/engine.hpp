// Stabilizer-label simulation of normalizer circuits on coset states.
//
// The input |K + x> is described by commuting Pauli labels; each gate maps
// labels to labels, and the final labels determine the output distribution,
// which is uniform on a coset H + x0.

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "normsim/group.hpp"
#include "normsim/homomorphism.hpp"
#include "normsim/pauli.hpp"
#include "normsim/quadratic.hpp"

namespace normsim {

/// Fourier transform on the listed factors (0-based, distinct).  An empty
/// list is the identity.
struct Qft {
  std::vector<std::size_t> targets;
  bool operator==(const Qft&) const = default;
};

struct InverseQft {
  std::vector<std::size_t> targets;
  bool operator==(const InverseQft&) const = default;
};

class NotInvertible : public std::invalid_argument {
 public:
  NotInvertible() : std::invalid_argument("endomorphism is not an automorphism") {}
};

/// |g> -> |alpha(g)>.
class AutomorphismGate {
 public:
  /// Throws NotInvertible.
  explicit AutomorphismGate(EndoMatrix map);

  const EndoMatrix& map() const { return map_; }
  const EndoMatrix& inverse() const { return inverse_; }
  /// Dual of the inverse; Z(g) -> Z(z_map(g)) under conjugation.
  const EndoMatrix& z_map() const { return z_map_; }

  bool operator==(const AutomorphismGate& other) const { return map_ == other.map_; }

 private:
  EndoMatrix map_;
  EndoMatrix inverse_;
  EndoMatrix z_map_;
};

/// |g> -> xi(g)|g>.
class QuadraticGate {
 public:
  /// Throws InconsistentEncoding.
  explicit QuadraticGate(QuadraticEncoding function);

  const QuadraticEncoding& function() const { return function_; }
  /// varpi with B(g, h) = chi_{varpi(g)}(h).
  const EndoMatrix& bilinear_map() const { return bilinear_; }

  bool operator==(const QuadraticGate& other) const { return function_ == other.function_; }

 private:
  QuadraticEncoding function_;
  EndoMatrix bilinear_;
};

struct PauliGate {
  PauliLabel label;
  bool operator==(const PauliGate&) const = default;
};

using Gate = std::variant<Qft, InverseQft, AutomorphismGate, QuadraticGate, PauliGate>;

/// Throws std::invalid_argument if the gate does not act on `group`.
void check_gate(const AbelianGroup& group, const Gate& gate);

/// |K + x> for K generated by `generators`.
struct CosetInput {
  std::vector<GroupElement> generators;
  GroupElement shift;

  const AbelianGroup& group() const { return shift.group(); }
  static CosetInput basis(const GroupElement& x) { return {{}, x}; }
  bool operator==(const CosetInput&) const = default;
};

struct StabilizerSet {
  AbelianGroup group;
  std::vector<PauliLabel> labels;
};

/// Uniform distribution on support + offset.
struct OutputDistribution {
  Subgroup support;
  GroupElement offset;

  bool contains(const GroupElement& g) const { return subgroup_contains(support, g - offset); }
};

/// Raised when the label data is not a valid stabilizer group; cannot
/// occur for labels produced by init_stabilizer and conjugate_gate.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

StabilizerSet init_stabilizer(const CosetInput& input);

/// U sigma U^dagger.
PauliLabel conjugate(const PauliLabel& sigma, const Gate& gate);
StabilizerSet conjugate_gate(StabilizerSet set, const Gate& gate);

/// Generators of the stabilizer elements with zero X-part, each of the form
/// gamma^c Z(z).
std::vector<PauliLabel> diagonal_subgroup(const StabilizerSet& set);

OutputDistribution output_distribution(const StabilizerSet& set);

/// Final stabilizer labels after running `gates` on `input`.
StabilizerSet evolve(const CosetInput& input, std::span<const Gate> gates);

OutputDistribution simulate(const CosetInput& input, std::span<const Gate> gates);

/// Uniform integer in [0, bound), by rejection on 64-bit blocks.
Integer uniform_below(const Integer& bound, std::mt19937_64& rng);

/// Deterministic per seed stream of samples from an output distribution.
class CosetSampler {
 public:
  CosetSampler(OutputDistribution dist, std::uint64_t seed);

  GroupElement next();

 private:
  OutputDistribution dist_;
  std::mt19937_64 rng_;
};

GroupElement sample(const OutputDistribution& dist, std::uint64_t seed);

}  // namespace normsim
