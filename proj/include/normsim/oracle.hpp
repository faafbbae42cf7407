// Brute-force reference implementations for small groups: a dense state
// vector simulator, exact monomial matrices for Pauli operators, and the
// affine-permutation test.

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "normsim/engine.hpp"

namespace normsim::oracle {

inline constexpr std::uint64_t kDefaultDenseBound = 4096;
inline constexpr double kSupportThreshold = 1e-9;
inline constexpr double kTolerance = 1e-9;

using Amplitude = std::complex<double>;

/// Elements of a small group in lexicographic order (first factor most
/// significant) with index lookup.
class ElementTable {
 public:
  explicit ElementTable(const AbelianGroup& group, std::uint64_t bound = kDefaultDenseBound);

  const AbelianGroup& group() const { return group_; }
  std::size_t size() const { return elements_.size(); }
  const GroupElement& operator[](std::size_t i) const { return elements_[i]; }
  std::size_t index(const GroupElement& g) const;
  std::size_t stride(std::size_t factor) const { return strides_[factor]; }
  std::size_t modulus(std::size_t factor) const { return moduli_[factor]; }

 private:
  AbelianGroup group_;
  std::vector<GroupElement> elements_;
  std::vector<std::size_t> moduli_;
  std::vector<std::size_t> strides_;
};

class DenseState {
 public:
  static DenseState basis(const GroupElement& g, std::uint64_t bound = kDefaultDenseBound);
  /// Uniform superposition over K + shift.
  static DenseState coset(const CosetInput& input, std::uint64_t bound = kDefaultDenseBound);

  DenseState(ElementTable table, std::vector<Amplitude> amplitudes);

  const ElementTable& table() const { return table_; }
  const AbelianGroup& group() const { return table_.group(); }
  std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  const Amplitude& amplitude(const GroupElement& g) const { return amplitudes_[table_.index(g)]; }
  double norm() const;

 private:
  ElementTable table_;
  std::vector<Amplitude> amplitudes_;
};

/// Direct matrix action of a gate (Fourier transforms by explicit summation).
DenseState dense_apply(const DenseState& state, const Gate& gate);

/// Runs the whole circuit on the dense coset state.
DenseState dense_run(const CosetInput& input, std::span<const Gate> gates,
                     std::uint64_t bound = kDefaultDenseBound);

/// |amplitude|^2 for every element with probability above `threshold`.
std::map<GroupElement, double> dense_distribution(const DenseState& state,
                                                  double threshold = 0.0);

struct ComparisonReport {
  bool supports_equal = false;
  double max_deviation = 0.0;
  std::size_t dense_support = 0;
  std::size_t engine_support = 0;
  /// An element in exactly one of the two supports, if any.
  std::string mismatch;

  bool pass() const { return supports_equal && max_deviation < kTolerance; }
  std::string summary() const;
};

/// Checks a dense output state against a claimed coset distribution.
ComparisonReport compare_distribution(const DenseState& state, const OutputDistribution& dist);

ComparisonReport compare_with_engine(const CosetInput& input, std::span<const Gate> gates,
                                     std::uint64_t bound = kDefaultDenseBound);

/// Whether state is a +1 eigenvector of every label, within kTolerance.
bool eigenvector_check(const DenseState& state, std::span<const PauliLabel> labels);

/// Runs engine and oracle on the same circuit and checks the final dense
/// state against the engine's conjugated stabilizer labels.
bool eigenvector_check(std::span<const Gate> gates, const CosetInput& input,
                       std::uint64_t bound = kDefaultDenseBound);

/// Dense complex matrix, row-major.
class Matrix {
 public:
  explicit Matrix(std::size_t n) : n_(n), data_(n * n) {}

  std::size_t size() const { return n_; }
  Amplitude& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const Amplitude& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  Matrix operator*(const Matrix& other) const;
  Matrix adjoint() const;
  /// Largest entrywise absolute difference.
  double distance(const Matrix& other) const;

 private:
  std::size_t n_;
  std::vector<Amplitude> data_;
};

/// Columns are dense_apply on the basis states.
Matrix gate_matrix(const ElementTable& table, const Gate& gate);

/// Built from the definitions of Z and X, independently of PauliLabel::apply.
Matrix label_matrix(const ElementTable& table, const PauliLabel& label);

/// Exact monomial operator |k> -> gamma^{phase[k]} |target[k]>.
class MonomialOp {
 public:
  /// gamma^a times the product of the defining matrices of Z(g) and X(h).
  static MonomialOp from_label(const ElementTable& table, const PauliLabel& label);

  MonomialOp operator*(const MonomialOp& other) const;
  MonomialOp adjoint() const;
  MonomialOp pow(std::uint64_t n) const;

  /// The label whose operator this is, if it is a Pauli operator at all.
  bool equals_label(const ElementTable& table, const PauliLabel& label) const;

  bool operator==(const MonomialOp&) const = default;

 private:
  std::int64_t phase_modulus_ = 1;
  std::vector<std::size_t> target_;
  std::vector<std::int64_t> phase_;
};

/// A bijection of a small group, stored as an index table.
class PermutationSpec {
 public:
  /// Throws std::invalid_argument unless `images` is a bijection.
  PermutationSpec(ElementTable table, std::vector<std::size_t> images);

  static PermutationSpec from_pairs(const AbelianGroup& group,
                                    std::span<const std::pair<GroupElement, GroupElement>> pairs,
                                    std::uint64_t bound = kDefaultDenseBound);

  /// (x, y) -> (x, y + a^x mod N) on Z_{2^m} x Z_N.
  static PermutationSpec modexp(const Integer& a, unsigned m, const Integer& n,
                                std::uint64_t bound = kDefaultDenseBound);

  const ElementTable& table() const { return table_; }
  const AbelianGroup& group() const { return table_.group(); }
  GroupElement operator()(const GroupElement& g) const;

 private:
  ElementTable table_;
  std::vector<std::size_t> images_;
};

struct Affine {
  EndoMatrix map;
  GroupElement shift;
};

struct NotAffine {
  GroupElement witness;
  std::string reason;
};

/// F(g) = alpha(g) + t with alpha an automorphism, or a witness where the
/// candidate alpha(e^i) = F(e^i) - F(0), t = F(0) breaks down.
std::variant<Affine, NotAffine> affine_test(const PermutationSpec& perm);

}  // namespace normsim::oracle
