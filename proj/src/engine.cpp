#include "normsim/engine.hpp"

#include <algorithm>
#include <string>

#include "normsim/intlinalg.hpp"

namespace normsim {

AutomorphismGate::AutomorphismGate(EndoMatrix map)
    : map_(std::move(map)), inverse_(map_), z_map_(map_) {
  auto inverse = auto_inverse(map_);
  if (!inverse) throw NotInvertible();
  inverse_ = std::move(*inverse);
  z_map_ = endo_dual(inverse_);
}

QuadraticGate::QuadraticGate(QuadraticEncoding function)
    : function_(std::move(function)), bilinear_(extract_endo(function_)) {}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_targets(const AbelianGroup& group, std::vector<std::size_t> targets) {
  std::sort(targets.begin(), targets.end());
  if (std::adjacent_find(targets.begin(), targets.end()) != targets.end()) {
    throw std::invalid_argument("repeated Fourier target");
  }
  if (!targets.empty() && targets.back() >= group.rank()) {
    throw std::invalid_argument("Fourier target " + std::to_string(targets.back() + 1) +
                                " exceeds the number of factors");
  }
}

// Swaps the targeted components: forward (g_i, h_i) -> (h_i, -g_i), inverse
// (g_i, h_i) -> (-h_i, g_i); either way the phase gains (2g/d_i) g_i h_i.
PauliLabel fourier_conjugate(const PauliLabel& sigma, const std::vector<std::size_t>& targets,
                             bool inverse) {
  const AbelianGroup& group = sigma.group();
  std::vector<Integer> z(sigma.z_part().residues().begin(), sigma.z_part().residues().end());
  std::vector<Integer> x(sigma.x_part().residues().begin(), sigma.x_part().residues().end());
  Integer phase = sigma.phase().value();
  for (std::size_t i : targets) {
    const Integer g = z[i];
    const Integer h = x[i];
    phase += group.phase_modulus() / group.modulus(i) * g * h;
    if (inverse) {
      z[i] = -h;
      x[i] = g;
    } else {
      z[i] = h;
      x[i] = -g;
    }
  }
  return {PhaseExponent(group, phase), group.reduce(z), group.reduce(x)};
}

}  // namespace

void check_gate(const AbelianGroup& group, const Gate& gate) {
  std::visit(Overloaded{
                 [&](const Qft& g) { check_targets(group, g.targets); },
                 [&](const InverseQft& g) { check_targets(group, g.targets); },
                 [&](const AutomorphismGate& g) {
                   if (!(g.map().group() == group)) throw GroupMismatch();
                 },
                 [&](const QuadraticGate& g) {
                   if (!(g.function().group() == group)) throw GroupMismatch();
                 },
                 [&](const PauliGate& g) {
                   if (!(g.label.group() == group)) throw GroupMismatch();
                 },
             },
             gate);
}

StabilizerSet init_stabilizer(const CosetInput& input) {
  const AbelianGroup& group = input.group();
  StabilizerSet set{group, {}};
  for (const auto& u : input.generators) {
    if (!(u.group() == group)) throw GroupMismatch();
    set.labels.push_back(PauliLabel::x(u));
  }
  // Z(v) stabilizes |K>; conjugating by X(shift) moves it to |K + shift>.
  for (const auto& v : orthogonal_subgroup(Subgroup{group, input.generators}).generators) {
    set.labels.emplace_back(character(v, -input.shift), v, group.zero());
  }
  return set;
}

PauliLabel conjugate(const PauliLabel& sigma, const Gate& gate) {
  return std::visit(
      Overloaded{
          [&](const Qft& g) { return fourier_conjugate(sigma, g.targets, false); },
          [&](const InverseQft& g) { return fourier_conjugate(sigma, g.targets, true); },
          [&](const AutomorphismGate& g) {
            return PauliLabel(sigma.phase(), g.z_map().apply(sigma.z_part()),
                              g.map().apply(sigma.x_part()));
          },
          [&](const QuadraticGate& g) {
            // xi X(h) xi^dagger = xi(h) X(h) Z(varpi h), then reorder Z before X.
            const GroupElement& h = sigma.x_part();
            const GroupElement shear = g.bilinear_map().apply(h);
            return PauliLabel(sigma.phase() + g.function().evaluate(h) - character(shear, h),
                              sigma.z_part() + shear, h);
          },
          [&](const PauliGate& g) { return g.label * sigma * g.label.dagger(); },
      },
      gate);
}

StabilizerSet conjugate_gate(StabilizerSet set, const Gate& gate) {
  check_gate(set.group, gate);
  for (auto& label : set.labels) label = conjugate(label, gate);
  return set;
}

std::vector<PauliLabel> diagonal_subgroup(const StabilizerSet& set) {
  const AbelianGroup& group = set.group;
  const std::size_t m = group.rank();
  const std::size_t n = set.labels.size();
  // sum_i k_i h^i_j + d_j l_j = 0 for every factor j
  IntMatrix sys(m, n + m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) sys(j, i) = set.labels[i].x_part()[j];
    sys(j, n + j) = group.modulus(j);
  }
  std::vector<PauliLabel> out;
  for (const auto& k : kernel_basis(sys)) {
    PauliLabel v = PauliLabel::identity(group);
    for (std::size_t i = 0; i < n; ++i) {
      if (k[i] != 0) v = v * set.labels[i].pow(mod_floor(k[i], group.phase_modulus()));
    }
    if (!v.x_part().is_zero()) {
      throw InternalInconsistency("diagonal stabilizer element has nonzero X-part");
    }
    if (!v.is_identity()) out.push_back(std::move(v));
  }
  return out;
}

OutputDistribution output_distribution(const StabilizerSet& set) {
  const AbelianGroup& group = set.group;
  Subgroup support{group, {}};
  for (const auto& label : set.labels) {
    if (!label.x_part().is_zero()) support.generators.push_back(label.x_part());
  }

  // gamma^c chi_z(x0) = 1, i.e. chi_z(x0) = exp(2 pi i s / g) with s = -c/2.
  std::vector<GroupElement> chars;
  std::vector<Integer> targets;
  for (const auto& v : diagonal_subgroup(set)) {
    if (!v.phase().is_even()) {
      throw InternalInconsistency("diagonal stabilizer " + v.to_string() +
                                  " has a phase that is not a g-th root of unity");
    }
    chars.push_back(v.z_part());
    targets.push_back(mod_floor(-v.phase().value() / 2, group.order()));
  }
  auto offset = solve_character_system(group, chars, targets);
  if (!offset) throw InternalInconsistency("diagonal stabilizers have no common +1 basis state");
  return {std::move(support), std::move(*offset)};
}

StabilizerSet evolve(const CosetInput& input, std::span<const Gate> gates) {
  StabilizerSet set = init_stabilizer(input);
  for (const auto& gate : gates) set = conjugate_gate(std::move(set), gate);
  return set;
}

OutputDistribution simulate(const CosetInput& input, std::span<const Gate> gates) {
  return output_distribution(evolve(input, gates));
}

Integer uniform_below(const Integer& bound, std::mt19937_64& rng) {
  if (bound <= 1) return 0;
  const Integer top = bound - 1;
  const std::size_t bits = mpz_sizeinbase(top.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  const std::size_t spare = words * 64 - bits;
  std::vector<std::uint64_t> block(words);
  Integer candidate;
  for (;;) {
    for (auto& w : block) w = rng();
    block.back() >>= spare;  // least significant word first in the import
    mpz_import(candidate.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, block.data());
    if (candidate < bound) return candidate;
  }
}

CosetSampler::CosetSampler(OutputDistribution dist, std::uint64_t seed)
    : dist_(std::move(dist)), rng_(seed) {}

GroupElement CosetSampler::next() {
  const AbelianGroup& group = dist_.offset.group();
  GroupElement out = dist_.offset;
  for (const auto& h : dist_.support.generators) out += uniform_below(group.order(), rng_) * h;
  return out;
}

GroupElement sample(const OutputDistribution& dist, std::uint64_t seed) {
  return CosetSampler(dist, seed).next();
}

}  // namespace normsim
