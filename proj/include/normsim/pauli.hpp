// Pauli operators gamma^a Z(g) X(h) over G, identified with labels (a, g, h).
// Z sits to the left of X throughout.

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "normsim/group.hpp"

namespace normsim {

class PauliLabel {
 public:
  PauliLabel(PhaseExponent phase, GroupElement z_part, GroupElement x_part);

  static PauliLabel identity(const AbelianGroup& group);
  static PauliLabel z(const GroupElement& g);
  static PauliLabel x(const GroupElement& h);

  const AbelianGroup& group() const { return phase_.group(); }
  const PhaseExponent& phase() const { return phase_; }
  const GroupElement& z_part() const { return z_; }
  const GroupElement& x_part() const { return x_; }

  bool is_identity() const { return phase_.is_zero() && z_.is_zero() && x_.is_zero(); }

  /// Operator product (this applied after `other` on kets).
  PauliLabel operator*(const PauliLabel& other) const;

  /// sigma^n in closed form; any integer n, negative powers invert.
  PauliLabel pow(const Integer& n) const;

  PauliLabel dagger() const;

  /// sigma |k> = gamma^phase |k'>
  std::pair<PhaseExponent, GroupElement> apply(const GroupElement& k) const;

  /// True when the two operators commute.
  bool commutes_with(const PauliLabel& other) const;

  bool operator==(const PauliLabel& other) const;

  /// "a=<int> z=(..) x=(..)"
  std::string to_string() const;

 private:
  PhaseExponent phase_;
  GroupElement z_;
  GroupElement x_;
};

std::ostream& operator<<(std::ostream& os, const PauliLabel& label);

/// Inverse of PauliLabel::to_string; throws std::invalid_argument.
PauliLabel parse_pauli(const AbelianGroup& group, std::string_view text);

}  // namespace normsim
