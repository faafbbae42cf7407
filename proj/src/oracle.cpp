#include "normsim/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

namespace normsim::oracle {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Amplitude root_of_unity(std::uint64_t k, std::uint64_t n) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k % n) /
                             static_cast<double>(n));
}

std::vector<Amplitude> fourier_axis(const ElementTable& table, std::vector<Amplitude> amps,
                                    std::size_t factor, bool inverse) {
  const std::size_t d = table.modulus(factor);
  const std::size_t stride = table.stride(factor);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<Amplitude> omega(d);
  for (std::size_t k = 0; k < d; ++k) omega[k] = root_of_unity(inverse ? (d - k) % d : k, d);
  std::vector<Amplitude> out(amps.size());
  for (std::size_t base = 0; base < amps.size(); ++base) {
    if ((base / stride) % d != 0) continue;
    for (std::size_t y = 0; y < d; ++y) {
      Amplitude acc = 0;
      for (std::size_t x = 0; x < d; ++x) acc += omega[(x * y) % d] * amps[base + x * stride];
      out[base + y * stride] = acc * scale;
    }
  }
  return out;
}

// gamma^e for integer e, gamma = exp(i pi / g).
Amplitude gamma_power(std::int64_t e, std::int64_t two_g) {
  const std::int64_t r = ((e % two_g) + two_g) % two_g;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) /
                             static_cast<double>(two_g));
}

std::int64_t small(const Integer& v) { return v.get_si(); }

// chi_g(h) as a gamma exponent, from the defining sum.
std::int64_t character_exponent(const ElementTable& table, const GroupElement& g,
                                const GroupElement& h) {
  const std::int64_t two_g = small(table.group().phase_modulus());
  std::int64_t e = 0;
  for (std::size_t i = 0; i < table.group().rank(); ++i) {
    const auto d = static_cast<std::int64_t>(table.modulus(i));
    e = (e + (two_g / d) * ((small(g[i]) * small(h[i])) % d)) % two_g;
  }
  return e;
}

// sigma |psi> from the definitions of Z and X.
std::vector<Amplitude> apply_label(const DenseState& state, const PauliLabel& label) {
  const ElementTable& table = state.table();
  const std::int64_t two_g = small(state.group().phase_modulus());
  std::vector<Amplitude> out(table.size());
  for (std::size_t k = 0; k < table.size(); ++k) {
    const GroupElement moved = table[k] + label.x_part();
    const std::int64_t e =
        small(label.phase().value()) + character_exponent(table, label.z_part(), moved);
    out[table.index(moved)] += gamma_power(e, two_g) * state.amplitudes()[k];
  }
  return out;
}

}  // namespace

ElementTable::ElementTable(const AbelianGroup& group, std::uint64_t bound) : group_(group) {
  elements_.reserve(group.checked_order(bound));
  for_each_element(group, [&](const GroupElement& g) { elements_.push_back(g); }, bound);
  const std::size_t m = group.rank();
  moduli_.resize(m);
  strides_.resize(m);
  std::size_t stride = 1;
  for (std::size_t i = m; i-- > 0;) {
    moduli_[i] = group.modulus(i).get_ui();
    strides_[i] = stride;
    stride *= moduli_[i];
  }
}

std::size_t ElementTable::index(const GroupElement& g) const {
  if (!(g.group() == group_)) throw GroupMismatch();
  std::size_t idx = 0;
  for (std::size_t i = 0; i < strides_.size(); ++i) idx += g[i].get_ui() * strides_[i];
  return idx;
}

DenseState::DenseState(ElementTable table, std::vector<Amplitude> amplitudes)
    : table_(std::move(table)), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != table_.size()) {
    throw std::invalid_argument("amplitude vector has the wrong length");
  }
}

DenseState DenseState::basis(const GroupElement& g, std::uint64_t bound) {
  ElementTable table(g.group(), bound);
  std::vector<Amplitude> amps(table.size());
  amps[table.index(g)] = 1.0;
  return {std::move(table), std::move(amps)};
}

DenseState DenseState::coset(const CosetInput& input, std::uint64_t bound) {
  ElementTable table(input.group(), bound);
  const auto members = subgroup_members(Subgroup{input.group(), input.generators}, bound);
  const double amp = 1.0 / std::sqrt(static_cast<double>(members.size()));
  std::vector<Amplitude> amps(table.size());
  for (const auto& k : members) amps[table.index(k + input.shift)] = amp;
  return {std::move(table), std::move(amps)};
}

double DenseState::norm() const {
  double sum = 0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  return std::sqrt(sum);
}

DenseState dense_apply(const DenseState& state, const Gate& gate) {
  const ElementTable& table = state.table();
  check_gate(state.group(), gate);
  std::vector<Amplitude> amps(state.amplitudes().begin(), state.amplitudes().end());
  std::visit(Overloaded{
                 [&](const Qft& g) {
                   for (std::size_t i : g.targets) amps = fourier_axis(table, std::move(amps), i, false);
                 },
                 [&](const InverseQft& g) {
                   for (std::size_t i : g.targets) amps = fourier_axis(table, std::move(amps), i, true);
                 },
                 [&](const AutomorphismGate& g) {
                   std::vector<Amplitude> out(amps.size());
                   for (std::size_t k = 0; k < table.size(); ++k) {
                     out[table.index(g.map().apply(table[k]))] += amps[k];
                   }
                   amps = std::move(out);
                 },
                 [&](const QuadraticGate& g) {
                   for (std::size_t k = 0; k < table.size(); ++k) {
                     if (amps[k] != Amplitude(0)) amps[k] *= g.function().evaluate(table[k]).to_complex();
                   }
                 },
                 [&](const PauliGate& g) { amps = apply_label(state, g.label); },
             },
             gate);
  return {table, std::move(amps)};
}

DenseState dense_run(const CosetInput& input, std::span<const Gate> gates, std::uint64_t bound) {
  DenseState state = DenseState::coset(input, bound);
  for (const auto& gate : gates) state = dense_apply(state, gate);
  return state;
}

std::map<GroupElement, double> dense_distribution(const DenseState& state, double threshold) {
  std::map<GroupElement, double> out;
  for (std::size_t k = 0; k < state.table().size(); ++k) {
    const double p = std::norm(state.amplitudes()[k]);
    if (p > threshold) out.emplace(state.table()[k], p);
  }
  return out;
}

std::string ComparisonReport::summary() const {
  std::ostringstream os;
  os << (pass() ? "pass" : "FAIL") << ": dense support " << dense_support << ", engine support "
     << engine_support << (supports_equal ? " (equal)" : " (different)")
     << ", max deviation from uniform " << max_deviation;
  if (!mismatch.empty()) os << ", first mismatch " << mismatch;
  return os.str();
}

ComparisonReport compare_distribution(const DenseState& state, const OutputDistribution& dist) {
  const auto dense = dense_distribution(state, kSupportThreshold);
  std::set<GroupElement> engine;
  for (const auto& h : subgroup_members(dist.support, state.table().size())) {
    engine.insert(h + dist.offset);
  }

  ComparisonReport report;
  report.dense_support = dense.size();
  report.engine_support = engine.size();
  report.supports_equal = dense.size() == engine.size();
  for (const auto& [g, p] : dense) {
    if (!engine.count(g)) {
      report.supports_equal = false;
      if (report.mismatch.empty()) report.mismatch = g.to_string();
    }
  }
  if (report.mismatch.empty()) {
    for (const auto& g : engine) {
      if (!dense.count(g)) {
        report.supports_equal = false;
        report.mismatch = g.to_string();
        break;
      }
    }
  }
  const double uniform = 1.0 / static_cast<double>(engine.size());
  for (const auto& [g, p] : dense) report.max_deviation = std::max(report.max_deviation, std::abs(p - uniform));
  return report;
}

ComparisonReport compare_with_engine(const CosetInput& input, std::span<const Gate> gates,
                                     std::uint64_t bound) {
  const DenseState state = dense_run(input, gates, bound);
  return compare_distribution(state, simulate(input, gates));
}

bool eigenvector_check(const DenseState& state, std::span<const PauliLabel> labels) {
  for (const auto& label : labels) {
    const auto image = apply_label(state, label);
    for (std::size_t k = 0; k < image.size(); ++k) {
      if (std::abs(image[k] - state.amplitudes()[k]) > kTolerance) return false;
    }
  }
  return true;
}

bool eigenvector_check(std::span<const Gate> gates, const CosetInput& input, std::uint64_t bound) {
  const DenseState state = dense_run(input, gates, bound);
  return eigenvector_check(state, evolve(input, gates).labels);
}

Matrix Matrix::operator*(const Matrix& other) const {
  Matrix out(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t k = 0; k < n_; ++k) {
      const Amplitude a = (*this)(r, k);
      if (a == Amplitude(0)) continue;
      for (std::size_t c = 0; c < n_; ++c) out(r, c) += a * other(k, c);
    }
  }
  return out;
}

Matrix Matrix::adjoint() const {
  Matrix out(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

double Matrix::distance(const Matrix& other) const {
  double worst = 0;
  for (std::size_t i = 0; i < data_.size(); ++i) worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
  return worst;
}

Matrix gate_matrix(const ElementTable& table, const Gate& gate) {
  Matrix out(table.size());
  for (std::size_t c = 0; c < table.size(); ++c) {
    std::vector<Amplitude> column(table.size());
    column[c] = 1.0;
    const DenseState image = dense_apply(DenseState(table, std::move(column)), gate);
    for (std::size_t r = 0; r < table.size(); ++r) out(r, c) = image.amplitudes()[r];
  }
  return out;
}

Matrix label_matrix(const ElementTable& table, const PauliLabel& label) {
  const std::size_t n = table.size();
  const std::int64_t two_g = small(table.group().phase_modulus());
  Matrix z(n), x(n);
  for (std::size_t k = 0; k < n; ++k) {
    z(k, k) = gamma_power(character_exponent(table, label.z_part(), table[k]), two_g);
    x(table.index(table[k] + label.x_part()), k) = 1.0;
  }
  Matrix out = z * x;
  const Amplitude phase = gamma_power(small(label.phase().value()), two_g);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) *= phase;
  }
  return out;
}

MonomialOp MonomialOp::from_label(const ElementTable& table, const PauliLabel& label) {
  const std::size_t n = table.size();
  const std::int64_t two_g = small(table.group().phase_modulus());
  MonomialOp z, x;
  z.phase_modulus_ = x.phase_modulus_ = two_g;
  z.target_.resize(n);
  x.target_.resize(n);
  z.phase_.assign(n, 0);
  x.phase_.assign(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    z.target_[k] = k;
    z.phase_[k] = character_exponent(table, label.z_part(), table[k]);
    x.target_[k] = table.index(table[k] + label.x_part());
  }
  MonomialOp out = z * x;
  for (auto& p : out.phase_) p = (p + small(label.phase().value())) % two_g;
  return out;
}

MonomialOp MonomialOp::operator*(const MonomialOp& other) const {
  MonomialOp out;
  out.phase_modulus_ = phase_modulus_;
  out.target_.resize(other.target_.size());
  out.phase_.resize(other.target_.size());
  for (std::size_t k = 0; k < other.target_.size(); ++k) {
    const std::size_t mid = other.target_[k];
    out.target_[k] = target_[mid];
    out.phase_[k] = (other.phase_[k] + phase_[mid]) % phase_modulus_;
  }
  return out;
}

MonomialOp MonomialOp::adjoint() const {
  MonomialOp out = *this;
  for (std::size_t k = 0; k < target_.size(); ++k) {
    out.target_[target_[k]] = k;
    out.phase_[target_[k]] = (phase_modulus_ - phase_[k]) % phase_modulus_;
  }
  return out;
}

MonomialOp MonomialOp::pow(std::uint64_t n) const {
  MonomialOp out = *this;
  for (std::size_t k = 0; k < target_.size(); ++k) {
    out.target_[k] = k;
    out.phase_[k] = 0;
  }
  for (std::uint64_t i = 0; i < n; ++i) out = out * *this;
  return out;
}

bool MonomialOp::equals_label(const ElementTable& table, const PauliLabel& label) const {
  return *this == from_label(table, label);
}

PermutationSpec::PermutationSpec(ElementTable table, std::vector<std::size_t> images)
    : table_(std::move(table)), images_(std::move(images)) {
  if (images_.size() != table_.size()) throw std::invalid_argument("permutation table has the wrong size");
  std::vector<bool> hit(images_.size(), false);
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k] >= hit.size() || hit[images_[k]]) {
      throw std::invalid_argument("map is not a bijection: " + table_[k].to_string() +
                                  " has a repeated or invalid image");
    }
    hit[images_[k]] = true;
  }
}

PermutationSpec PermutationSpec::from_pairs(
    const AbelianGroup& group, std::span<const std::pair<GroupElement, GroupElement>> pairs,
    std::uint64_t bound) {
  ElementTable table(group, bound);
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> images(table.size(), unset);
  for (const auto& [from, to] : pairs) {
    std::size_t& slot = images[table.index(from)];
    if (slot != unset) throw std::invalid_argument("image of " + from.to_string() + " given twice");
    slot = table.index(to);
  }
  for (std::size_t k = 0; k < images.size(); ++k) {
    if (images[k] == unset) throw std::invalid_argument("no image given for " + table[k].to_string());
  }
  return {std::move(table), std::move(images)};
}

PermutationSpec PermutationSpec::modexp(const Integer& a, unsigned m, const Integer& n,
                                        std::uint64_t bound) {
  if (m == 0 || n < 2) throw std::invalid_argument("modexp needs m >= 1 and N >= 2");
  AbelianGroup group({Integer(1) << m, n});
  ElementTable table(group, bound);
  std::vector<std::size_t> images(table.size());
  for (std::size_t k = 0; k < table.size(); ++k) {
    const GroupElement& g = table[k];
    Integer power;
    mpz_powm(power.get_mpz_t(), a.get_mpz_t(), g[0].get_mpz_t(), n.get_mpz_t());
    images[k] = table.index(group.reduce(std::vector<Integer>{g[0], g[1] + power}));
  }
  return {std::move(table), std::move(images)};
}

GroupElement PermutationSpec::operator()(const GroupElement& g) const {
  return table_[images_[table_.index(g)]];
}

std::variant<Affine, NotAffine> affine_test(const PermutationSpec& perm) {
  const ElementTable& table = perm.table();
  const AbelianGroup& group = table.group();
  const GroupElement shift = perm(group.zero());
  std::vector<GroupElement> columns;
  for (std::size_t i = 0; i < group.rank(); ++i) columns.push_back(perm(group.unit(i)) - shift);

  for (std::size_t k = 0; k < table.size(); ++k) {
    const GroupElement& g = table[k];
    GroupElement predicted = shift;
    for (std::size_t i = 0; i < group.rank(); ++i) predicted += g[i] * columns[i];
    if (!(predicted == perm(g))) {
      return NotAffine{g, "F" + g.to_string() + " = " + perm(g).to_string() + " but alpha" +
                              g.to_string() + " + t = " + predicted.to_string()};
    }
  }
  auto validated = endo_validate(group, columns);
  if (auto* bad = std::get_if<InvalidColumn>(&validated)) {
    return NotAffine{group.unit(bad->column),
                     "d_" + std::to_string(bad->column + 1) + " alpha(e^" +
                         std::to_string(bad->column + 1) + ") != 0"};
  }
  auto map = std::get<EndoMatrix>(std::move(validated));
  if (!auto_inverse(map)) return NotAffine{group.zero(), "linear part is not invertible"};
  return Affine{std::move(map), shift};
}

}  // namespace normsim::oracle
