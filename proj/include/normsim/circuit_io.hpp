// Text format for circuits.  One directive per line, '#' starts a comment:
//
//   group: 4 15
//   state: coset gens=[(2,0)] shift=(1,3)
//   gate: qft targets=[1]
//   gate: iqft targets=[1,2]
//   gate: auto cols=[(1,0),(0,2)]
//   gate: quad ne=[...] nee=[...] nsq=[...]
//   gate: pauli a=3 z=(0,1) x=(1,0)
//
// Factor indices are 1-based.  `nee` lists n(e^i + e^j) for i < j in
// row-major order, `nsq` lists n(2e^i) and may be omitted when every
// modulus is at most 2.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "normsim/engine.hpp"

namespace normsim {

struct Circuit {
  AbelianGroup group;
  CosetInput input;
  std::vector<Gate> gates;

  bool operator==(const Circuit&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, Semantic };

  ParseError(std::size_t line, Kind kind, const std::string& message);

  /// 1-based line of the offending directive.
  std::size_t line() const { return line_; }
  Kind kind() const { return kind_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  Kind kind_;
  std::string message_;
};

/// Well-formed text whose content is invalid for the declared group
/// (residues out of range, non-invertible automorphisms, ...).
class ValidationError : public ParseError {
 public:
  ValidationError(std::size_t line, const std::string& message)
      : ParseError(line, Kind::Semantic, message) {}
};

Circuit parse_circuit(std::string_view text);

std::string serialize_circuit(const Circuit& circuit);
std::string serialize_gate(const Gate& gate);
/// "ne=[..] nee=[..] nsq=[..]"
std::string serialize_quadratic(const QuadraticEncoding& xi);
/// "[(..),(..)]"
std::string serialize_elements(const std::vector<GroupElement>& elements);

/// Parses "[(..),(..)]" into elements of `group`; throws std::invalid_argument.
std::vector<GroupElement> parse_element_list(const AbelianGroup& group, std::string_view text);

}  // namespace normsim
