#include "normsim/pauli.hpp"

#include <ostream>
#include <regex>
#include <stdexcept>

namespace normsim {

PauliLabel::PauliLabel(PhaseExponent phase, GroupElement z_part, GroupElement x_part)
    : phase_(std::move(phase)), z_(std::move(z_part)), x_(std::move(x_part)) {
  if (!(z_.group() == phase_.group()) || !(x_.group() == phase_.group())) throw GroupMismatch();
}

PauliLabel PauliLabel::identity(const AbelianGroup& group) {
  return {PhaseExponent::zero(group), group.zero(), group.zero()};
}

PauliLabel PauliLabel::z(const GroupElement& g) {
  return {PhaseExponent::zero(g.group()), g, g.group().zero()};
}

PauliLabel PauliLabel::x(const GroupElement& h) {
  return {PhaseExponent::zero(h.group()), h.group().zero(), h};
}

// Z(g)X(h) Z(x)X(y) = chi_x(h)^{-1} Z(g+x) X(h+y), since X(h)Z(x) = chi_x(h)^{-1} Z(x)X(h).
PauliLabel PauliLabel::operator*(const PauliLabel& other) const {
  return {phase_ + other.phase_ - character(other.z_, x_), z_ + other.z_, x_ + other.x_};
}

PauliLabel PauliLabel::pow(const Integer& n) const {
  const Integer pairs = n * (n - 1) / 2;
  return {n * phase_ - pairs * character(z_, x_), n * z_, n * x_};
}

PauliLabel PauliLabel::dagger() const {
  return {-phase_ - character(z_, x_), -z_, -x_};
}

std::pair<PhaseExponent, GroupElement> PauliLabel::apply(const GroupElement& k) const {
  GroupElement shifted = k + x_;
  PhaseExponent phase = phase_ + character(z_, shifted);
  return {std::move(phase), std::move(shifted)};
}

bool PauliLabel::commutes_with(const PauliLabel& other) const {
  return character(z_, other.x_) == character(other.z_, x_);
}

bool PauliLabel::operator==(const PauliLabel& other) const {
  return phase_ == other.phase_ && z_ == other.z_ && x_ == other.x_;
}

std::string PauliLabel::to_string() const {
  return "a=" + normsim::to_string(phase_.value()) + " z=" + z_.to_string() +
         " x=" + x_.to_string();
}

std::ostream& operator<<(std::ostream& os, const PauliLabel& label) {
  return os << label.to_string();
}

PauliLabel parse_pauli(const AbelianGroup& group, std::string_view text) {
  static const std::regex form(R"(\s*a\s*=\s*(-?\d+)\s+z\s*=\s*(\([^)]*\))\s+x\s*=\s*(\([^)]*\))\s*)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(text.begin(), text.end(), m, form)) {
    throw std::invalid_argument("expected 'a=<int> z=(..) x=(..)'");
  }
  return {PhaseExponent(group, parse_integer(m[1].str())), parse_element(group, m[2].str()),
          parse_element(group, m[3].str())};
}

}  // namespace normsim
