// Finite Abelian groups Z_{d_1} x ... x Z_{d_m}, their elements, characters
// and the exact 2g-th-root-of-unity phase system used throughout the
// simulator.

#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace normsim {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Default cap on the group order for exhaustive (enumerating) utilities.
inline constexpr std::uint64_t kDefaultEnumerationBound = std::uint64_t{1} << 20;

class GroupMismatch : public std::invalid_argument {
 public:
  GroupMismatch() : std::invalid_argument("group elements belong to different groups") {}
};

class EnumerationBoundExceeded : public std::runtime_error {
 public:
  EnumerationBoundExceeded(const Integer& order, std::uint64_t bound);
};

/// Non-negative remainder, 0 <= r < |m|.
Integer mod_floor(const Integer& a, const Integer& m);

/// Parses a signed decimal integer; throws std::invalid_argument on bad input.
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& value);

class GroupElement;

/// G = Z_{d_1} x ... x Z_{d_m}.  Cheap to copy: the moduli are shared.
class AbelianGroup {
 public:
  /// Requires every modulus >= 2.
  explicit AbelianGroup(std::vector<Integer> moduli);

  /// Accepts moduli >= 1; used for internal constructions.
  static AbelianGroup with_trivial_factors(std::vector<Integer> moduli);

  std::size_t rank() const { return data_->moduli.size(); }
  const Integer& modulus(std::size_t i) const { return data_->moduli.at(i); }
  std::span<const Integer> moduli() const { return data_->moduli; }

  /// g = prod d_i
  const Integer& order() const { return data_->order; }
  /// 2g; phase exponents live in Z_{2g}.
  const Integer& phase_modulus() const { return data_->phase_modulus; }

  GroupElement zero() const;
  /// e^i (0-based index).
  GroupElement unit(std::size_t i) const;
  /// Reduces arbitrary integers into range.
  GroupElement reduce(std::span<const Integer> values) const;

  /// Order as a machine word; throws EnumerationBoundExceeded above `bound`.
  std::uint64_t checked_order(std::uint64_t bound = kDefaultEnumerationBound) const;

  bool operator==(const AbelianGroup& other) const;

  std::string to_string() const;

 private:
  struct Data {
    std::vector<Integer> moduli;
    Integer order;
    Integer phase_modulus;
  };

  struct Unchecked {};
  AbelianGroup(std::vector<Integer> moduli, Unchecked);

  std::shared_ptr<const Data> data_;
};

class GroupElement {
 public:
  /// Residues must satisfy 0 <= g_i < d_i.
  GroupElement(AbelianGroup group, std::vector<Integer> residues);

  const AbelianGroup& group() const { return group_; }
  std::span<const Integer> residues() const { return residues_; }
  const Integer& operator[](std::size_t i) const { return residues_[i]; }
  std::size_t size() const { return residues_.size(); }
  bool is_zero() const;

  GroupElement& operator+=(const GroupElement& other);
  GroupElement& operator-=(const GroupElement& other);

  friend GroupElement operator+(GroupElement lhs, const GroupElement& rhs) { return lhs += rhs; }
  friend GroupElement operator-(GroupElement lhs, const GroupElement& rhs) { return lhs -= rhs; }
  GroupElement operator-() const;
  /// n * g, n any integer.
  friend GroupElement operator*(const Integer& n, const GroupElement& g);

  bool operator==(const GroupElement& other) const;
  /// Lexicographic on residues; only meaningful within one group.
  bool operator<(const GroupElement& other) const;

  /// "(g_1,...,g_m)"
  std::string to_string() const;

 private:
  struct Trusted {};
  GroupElement(AbelianGroup group, std::vector<Integer> residues, Trusted);
  friend class AbelianGroup;

  AbelianGroup group_;
  std::vector<Integer> residues_;
};

std::ostream& operator<<(std::ostream& os, const GroupElement& g);

/// gamma^a with gamma = exp(i*pi/g), a in Z_{2g}.
class PhaseExponent {
 public:
  PhaseExponent(AbelianGroup group, const Integer& exponent);

  static PhaseExponent zero(const AbelianGroup& group) { return {group, Integer(0)}; }

  const AbelianGroup& group() const { return group_; }
  const Integer& value() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  /// Even exponents are exactly the g-th roots of unity.
  bool is_even() const { return mpz_even_p(value_.get_mpz_t()) != 0; }

  PhaseExponent& operator+=(const PhaseExponent& other);
  PhaseExponent& operator-=(const PhaseExponent& other);
  friend PhaseExponent operator+(PhaseExponent lhs, const PhaseExponent& rhs) { return lhs += rhs; }
  friend PhaseExponent operator-(PhaseExponent lhs, const PhaseExponent& rhs) { return lhs -= rhs; }
  PhaseExponent operator-() const;
  friend PhaseExponent operator*(const Integer& n, const PhaseExponent& p);

  bool operator==(const PhaseExponent& other) const;

  std::complex<double> to_complex() const;

 private:
  AbelianGroup group_;
  Integer value_;
};

/// chi_g(h) = exp 2 pi i (sum_i g_i h_i / d_i), returned as its gamma exponent
/// sum_i (2g/d_i) g_i h_i mod 2g (always even).
PhaseExponent character(const GroupElement& g, const GroupElement& h);

/// Exactly decides whether sum_k counts[k] * exp(2 pi i k / N) vanishes,
/// N = counts.size().
bool root_of_unity_sum_is_zero(std::span<const std::int64_t> counts);

/// Test utility: whether sum_{h in G} chi_g(h) = 0, by enumeration.
bool character_sum_is_zero(const GroupElement& g,
                           std::uint64_t bound = kDefaultEnumerationBound);

/// Calls fn(element) for every element of the group in lexicographic residue
/// order (last factor fastest).  Throws EnumerationBoundExceeded above bound.
template <typename Fn>
void for_each_element(const AbelianGroup& group, Fn&& fn,
                      std::uint64_t bound = kDefaultEnumerationBound);

/// Parses "(g_1,...,g_m)"; whitespace is ignored.  Throws std::invalid_argument.
GroupElement parse_element(const AbelianGroup& group, std::string_view text);

}  // namespace normsim

#include "normsim/group_inl.hpp"
