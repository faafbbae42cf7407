// Endomorphisms of G in matrix form, subgroups given by generators, and the
// group computations that reduce to Diophantine systems: orthogonal
// subgroups, character equations and automorphism inversion.

#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <variant>
#include <vector>

#include "normsim/group.hpp"

namespace normsim {

class InvalidEndomorphism : public std::invalid_argument {
 public:
  explicit InvalidEndomorphism(std::size_t column);
  /// 0-based index of the first column with d_i * a^i != 0.
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Matrix representation of an endomorphism: column i is the image of e^i,
/// so entry (k, l) lives in Z_{d_k}.
class EndoMatrix {
 public:
  /// Throws InvalidEndomorphism unless d_i * columns[i] = 0 for every i.
  EndoMatrix(AbelianGroup group, std::vector<GroupElement> columns);

  static EndoMatrix identity(const AbelianGroup& group);
  static EndoMatrix zero(const AbelianGroup& group);

  const AbelianGroup& group() const { return group_; }
  const GroupElement& column(std::size_t i) const { return columns_.at(i); }
  const std::vector<GroupElement>& columns() const { return columns_; }
  /// A_{row, col}
  const Integer& entry(std::size_t row, std::size_t col) const { return columns_.at(col)[row]; }

  /// sum_i g_i * column_i
  GroupElement apply(const GroupElement& g) const;

  /// (this * other)(g) = this(other(g))
  EndoMatrix operator*(const EndoMatrix& other) const;

  bool operator==(const EndoMatrix& other) const;

 private:
  AbelianGroup group_;
  std::vector<GroupElement> columns_;
};

struct InvalidColumn {
  std::size_t column;
};

/// Non-throwing validation of a candidate matrix.
std::variant<EndoMatrix, InvalidColumn> endo_validate(const AbelianGroup& group,
                                                      std::vector<GroupElement> columns);

/// The dual endomorphism: chi_g(A x) = chi_{dual(A) g}(x).
/// B_{kl} = (d_k / d_l) A_{lk} mod d_k.
EndoMatrix endo_dual(const EndoMatrix& a);

/// Inverse automorphism, or std::nullopt when `a` is not invertible.
std::optional<EndoMatrix> auto_inverse(const EndoMatrix& a);

/// x_i -> a x_i on factor i (gcd(a, d_i) must be 1).
EndoMatrix multiplication_map(const AbelianGroup& group, std::size_t factor, const Integer& a);

/// (.., x_i, .., x_j, ..) -> (.., x_i, .., x_j + c x_i, ..); needs d_i c = 0 mod d_j.
EndoMatrix shear_map(const AbelianGroup& group, std::size_t source, std::size_t target,
                     const Integer& c);

/// A subgroup presented by a (possibly redundant) generating set.  An empty
/// list denotes {0}.
struct Subgroup {
  AbelianGroup group;
  std::vector<GroupElement> generators;

  static Subgroup whole(const AbelianGroup& group);
  static Subgroup trivial(const AbelianGroup& group) { return {group, {}}; }
};

/// H^perp = {g : chi_g(h) = 1 for all h in H}.
Subgroup orthogonal_subgroup(const Subgroup& h);

/// Any g with chi_{h^k}(g) = exp(2 pi i s_k / g) for all k, or std::nullopt.
std::optional<GroupElement> solve_character_system(const AbelianGroup& group,
                                                   const std::vector<GroupElement>& characters,
                                                   const std::vector<Integer>& targets);

/// Membership through a Diophantine system, no enumeration.
bool subgroup_contains(const Subgroup& h, const GroupElement& g);

/// Exhaustive closure of the generating set (test utility).
std::set<GroupElement> subgroup_members(const Subgroup& h,
                                        std::uint64_t bound = kDefaultEnumerationBound);

}  // namespace normsim
