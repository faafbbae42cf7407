// Quadratic functions xi : G -> U(1) in standard encoding.
//
// A quadratic function satisfies xi(g + h) = xi(g) xi(h) B(g, h) for a
// symmetric bilinear B, and every value is a 2g-th root of unity, so the
// function is stored as gamma-exponents of its values at
//   e^i          ("singles", n(e^i)),
//   e^i + e^j    ("pairs",   n(e^i + e^j), i < j, row-major),
//   2 e^i        ("doubles", n(2 e^i)).
// The doubles fix B(e^i, e^i); they are forced to 0 on factors with d_i <= 2.

#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "normsim/group.hpp"
#include "normsim/homomorphism.hpp"

namespace normsim {

class InconsistentEncoding : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class QuadraticEncoding {
 public:
  /// Validates the encoding; throws InconsistentEncoding.
  QuadraticEncoding(AbelianGroup group, std::vector<Integer> singles, std::vector<Integer> pairs,
                    std::vector<Integer> doubles);

  /// Doubles defaulted; only possible when every d_i <= 2.
  QuadraticEncoding(AbelianGroup group, std::vector<Integer> singles, std::vector<Integer> pairs);

  /// Skips validation (exponents are still reduced mod 2g).
  static QuadraticEncoding unchecked(AbelianGroup group, std::vector<Integer> singles,
                                     std::vector<Integer> pairs, std::vector<Integer> doubles);

  static QuadraticEncoding trivial(const AbelianGroup& group);

  /// Samples `fn` (a gamma-exponent valued function) at e^i, e^i + e^j and
  /// 2e^i.  fn must describe a quadratic function for the result to validate.
  static QuadraticEncoding sample(const AbelianGroup& group,
                                  const std::function<Integer(const GroupElement&)>& fn);

  const AbelianGroup& group() const { return group_; }
  const std::vector<Integer>& singles() const { return singles_; }
  const std::vector<Integer>& pairs() const { return pairs_; }
  const std::vector<Integer>& doubles() const { return doubles_; }
  const Integer& pair(std::size_t i, std::size_t j) const;

  /// gamma-exponent of B(e^i, e^j).
  Integer bilinear_exponent(std::size_t i, std::size_t j) const;

  /// Empty string when consistent, otherwise the first failed condition.
  std::string consistency_error() const;

  /// xi(g) as a gamma-exponent.
  PhaseExponent evaluate(const GroupElement& g) const;

  /// Pointwise product.
  QuadraticEncoding operator*(const QuadraticEncoding& other) const;
  /// Complex conjugate (pointwise inverse).
  QuadraticEncoding conjugate() const;

  bool operator==(const QuadraticEncoding& other) const;

 private:
  QuadraticEncoding(AbelianGroup group, std::vector<Integer> singles, std::vector<Integer> pairs,
                    std::vector<Integer> doubles, bool check);

  std::size_t pair_index(std::size_t i, std::size_t j) const;

  AbelianGroup group_;
  std::vector<Integer> singles_;
  std::vector<Integer> pairs_;
  std::vector<Integer> doubles_;
};

/// The unique endomorphism with B(g, h) = chi_{varpi(g)}(h).
/// Throws InconsistentEncoding when some B(e^k, e^l) is not a d_l-th root.
EndoMatrix extract_endo(const QuadraticEncoding& xi);

/// Checks xi(g + h) = xi(g) xi(h) chi_{varpi(g)}(h) for every pair (g, h).
bool quad_validate_exhaustive(const QuadraticEncoding& xi,
                              std::uint64_t bound = kDefaultEnumerationBound);

// Example families, each acting on the named factors only.

/// x -> exp(2 pi i a x_i / d_i)
QuadraticEncoding character_function(const AbelianGroup& group, std::size_t factor,
                                     const Integer& a);
/// x -> exp(2 pi i a x_i^2 / d_i)
QuadraticEncoding square_function(const AbelianGroup& group, std::size_t factor,
                                  const Integer& a);
/// x -> exp(2 pi i c x_i x_j / d_j), needs d_i c = 0 mod d_j.
QuadraticEncoding cross_function(const AbelianGroup& group, std::size_t i, std::size_t j,
                                 const Integer& c);
/// x -> exp(pi i a x_i (x_i + d_i) / d_i), the product taken over the integers.
QuadraticEncoding half_function(const AbelianGroup& group, std::size_t factor, const Integer& a);
/// g -> chi_g(varpi(g))
QuadraticEncoding endo_function(const EndoMatrix& varpi);

}  // namespace normsim
