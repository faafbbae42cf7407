#include "normsim/circuit_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

namespace normsim {

ParseError::ParseError(std::size_t line, Kind kind, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " +
                         (kind == Kind::Syntax ? "syntax error: " : "invalid: ") + message),
      line_(line),
      kind_(kind),
      message_(message) {}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!is_space(c)) out += c;
  }
  return out;
}

struct SyntaxFailure {
  std::string message;
};
struct SemanticFailure {
  std::string message;
};

[[noreturn]] void syntax(const std::string& message) { throw SyntaxFailure{message}; }
[[noreturn]] void semantic(const std::string& message) { throw SemanticFailure{message}; }

Integer integer(std::string_view text) {
  try {
    return parse_integer(text);
  } catch (const std::invalid_argument&) {
    syntax("expected an integer, got '" + std::string(text) + "'");
  }
}

// Splits "[a,b,(c,d)]" at top-level commas; spaces already removed.
std::vector<std::string> split_list(std::string_view text, char open, char close) {
  if (text.size() < 2 || text.front() != open || text.back() != close) {
    syntax("expected " + std::string(1, open) + "..." + std::string(1, close) + ", got '" +
           std::string(text) + "'");
  }
  text = text.substr(1, text.size() - 2);
  std::vector<std::string> items;
  if (text.empty()) return items;
  int depth = 0;
  std::string current;
  for (char c : text) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') {
      if (--depth < 0) syntax("unbalanced brackets");
    }
    if (c == ',' && depth == 0) {
      items.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (depth != 0) syntax("unbalanced brackets");
  items.push_back(std::move(current));
  for (const auto& item : items) {
    if (item.empty()) syntax("empty list entry");
  }
  return items;
}

std::vector<Integer> integer_list(std::string_view text) {
  std::vector<Integer> out;
  for (const auto& item : split_list(text, '[', ']')) out.push_back(integer(item));
  return out;
}

GroupElement element(const AbelianGroup& group, std::string_view text) {
  std::vector<Integer> residues;
  for (const auto& item : split_list(text, '(', ')')) residues.push_back(integer(item));
  if (residues.size() != group.rank()) {
    semantic("element " + std::string(text) + " has " + std::to_string(residues.size()) +
             " residues, the group has " + std::to_string(group.rank()) + " factors");
  }
  for (std::size_t i = 0; i < residues.size(); ++i) {
    if (residues[i] < 0 || residues[i] >= group.modulus(i)) {
      semantic("residue " + to_string(residues[i]) + " of " + std::string(text) +
               " is outside Z_" + to_string(group.modulus(i)));
    }
  }
  return GroupElement(group, std::move(residues));
}

std::vector<GroupElement> element_list(const AbelianGroup& group, std::string_view text) {
  std::vector<GroupElement> out;
  for (const auto& item : split_list(text, '[', ']')) out.push_back(element(group, item));
  return out;
}

// "kind key=value key=value"; values may contain spaces inside brackets.
struct Directive {
  std::string kind;
  std::map<std::string, std::string> fields;

  std::optional<std::string> take(const std::string& key) {
    auto it = fields.find(key);
    if (it == fields.end()) return std::nullopt;
    std::string value = std::move(it->second);
    fields.erase(it);
    return value;
  }

  std::string require(const std::string& key) {
    auto value = take(key);
    if (!value) syntax("'" + kind + "' needs " + key + "=...");
    return *value;
  }

  void finish() const {
    if (!fields.empty()) syntax("unexpected field '" + fields.begin()->first + "' for '" + kind + "'");
  }
};

Directive split_directive(std::string_view text) {
  Directive out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && is_space(text[i])) ++i;
  };
  skip();
  while (i < text.size() && !is_space(text[i])) out.kind += text[i++];
  if (out.kind.empty()) syntax("missing directive argument");
  if (out.kind.find('=') != std::string::npos) syntax("expected a kind before '" + out.kind + "'");
  for (skip(); i < text.size(); skip()) {
    std::string key;
    while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) key += text[i++];
    skip();
    if (key.empty() || i >= text.size() || text[i] != '=') {
      syntax("expected key=value near '" + std::string(text.substr(i)) + "'");
    }
    ++i;
    skip();
    std::string value;
    if (i < text.size() && (text[i] == '[' || text[i] == '(')) {
      int depth = 0;
      do {
        const char c = text[i++];
        if (c == '[' || c == '(') ++depth;
        if (c == ']' || c == ')') --depth;
        value += c;
      } while (i < text.size() && depth > 0);
      if (depth != 0) syntax("unbalanced brackets in " + key);
    } else {
      while (i < text.size() && !is_space(text[i])) value += text[i++];
    }
    if (value.empty()) syntax("empty value for " + key);
    if (!out.fields.emplace(key, strip_spaces(value)).second) syntax("repeated field " + key);
  }
  return out;
}

std::vector<std::size_t> targets(const AbelianGroup& group, std::string_view text) {
  std::vector<std::size_t> out;
  for (const auto& t : integer_list(text)) {
    if (t < 1 || t > group.rank()) {
      semantic("target " + to_string(t) + " is not a factor index in 1.." +
               std::to_string(group.rank()));
    }
    const std::size_t idx = t.get_ui() - 1;
    if (std::find(out.begin(), out.end(), idx) != out.end()) {
      semantic("target " + to_string(t) + " repeated");
    }
    out.push_back(idx);
  }
  return out;
}

Gate parse_gate(const AbelianGroup& group, std::string_view text) {
  Directive d = split_directive(text);
  std::optional<Gate> gate;
  if (d.kind == "qft" || d.kind == "iqft") {
    auto t = targets(group, d.require("targets"));
    if (d.kind == "qft") {
      gate = Qft{std::move(t)};
    } else {
      gate = InverseQft{std::move(t)};
    }
  } else if (d.kind == "auto") {
    auto cols = element_list(group, d.require("cols"));
    if (cols.size() != group.rank()) {
      semantic("automorphism needs " + std::to_string(group.rank()) + " columns, got " +
               std::to_string(cols.size()));
    }
    auto validated = endo_validate(group, std::move(cols));
    if (auto* bad = std::get_if<InvalidColumn>(&validated)) {
      semantic("column " + std::to_string(bad->column + 1) + " violates d_i a^i = 0");
    }
    try {
      gate = AutomorphismGate(std::get<EndoMatrix>(std::move(validated)));
    } catch (const NotInvertible& e) {
      semantic(e.what());
    }
  } else if (d.kind == "quad") {
    auto singles = integer_list(d.require("ne"));
    auto pairs = integer_list(d.require("nee"));
    auto doubles = d.take("nsq");
    const std::size_t m = group.rank();
    if (singles.size() != m) semantic("ne needs " + std::to_string(m) + " entries");
    if (pairs.size() != m * (m - 1) / 2) {
      semantic("nee needs " + std::to_string(m * (m - 1) / 2) + " entries");
    }
    try {
      if (doubles) {
        auto sq = integer_list(*doubles);
        if (sq.size() != m) semantic("nsq needs " + std::to_string(m) + " entries");
        gate = QuadraticGate(QuadraticEncoding(group, std::move(singles), std::move(pairs), std::move(sq)));
      } else {
        gate = QuadraticGate(QuadraticEncoding(group, std::move(singles), std::move(pairs)));
      }
    } catch (const InconsistentEncoding& e) {
      semantic(e.what());
    }
  } else if (d.kind == "pauli") {
    const Integer a = integer(d.require("a"));
    GroupElement z = element(group, d.require("z"));
    GroupElement x = element(group, d.require("x"));
    gate = PauliGate{PauliLabel(PhaseExponent(group, a), std::move(z), std::move(x))};
  } else {
    syntax("unknown gate '" + d.kind + "'");
  }
  d.finish();
  return std::move(*gate);
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  std::optional<AbelianGroup> group;
  std::optional<CosetInput> input;
  std::vector<Gate> gates;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    try {
      const std::size_t colon = line.find(':');
      if (colon == std::string_view::npos) syntax("expected 'keyword: ...'");
      const std::string_view keyword = trim(line.substr(0, colon));
      const std::string_view rest = trim(line.substr(colon + 1));
      if (keyword == "group") {
        if (group) semantic("group declared twice");
        std::vector<Integer> moduli;
        std::istringstream words{std::string(rest)};
        for (std::string w; words >> w;) moduli.push_back(integer(w));
        if (moduli.empty()) syntax("group needs at least one modulus");
        for (const auto& d : moduli) {
          if (d < 2) semantic("modulus " + to_string(d) + " is below 2");
        }
        group.emplace(std::move(moduli));
      } else if (keyword == "state") {
        if (!group) semantic("state declared before group");
        if (input) semantic("state declared twice");
        Directive d = split_directive(rest);
        if (d.kind != "coset") syntax("unknown state kind '" + d.kind + "'");
        auto gens = element_list(*group, d.require("gens"));
        GroupElement shift = element(*group, d.require("shift"));
        d.finish();
        input = CosetInput{std::move(gens), std::move(shift)};
      } else if (keyword == "gate") {
        if (!group) semantic("gate declared before group");
        if (!input) semantic("gate declared before state");
        gates.push_back(parse_gate(*group, rest));
      } else {
        syntax("unknown directive '" + std::string(keyword) + "'");
      }
    } catch (const SyntaxFailure& f) {
      throw ParseError(line_no, ParseError::Kind::Syntax, f.message);
    } catch (const SemanticFailure& f) {
      throw ValidationError(line_no, f.message);
    }
  }
  if (!group) throw ParseError(line_no, ParseError::Kind::Syntax, "missing 'group:' directive");
  if (!input) throw ParseError(line_no, ParseError::Kind::Syntax, "missing 'state:' directive");
  return {std::move(*group), std::move(*input), std::move(gates)};
}

std::vector<GroupElement> parse_element_list(const AbelianGroup& group, std::string_view text) {
  try {
    return element_list(group, strip_spaces(text));
  } catch (const SyntaxFailure& f) {
    throw std::invalid_argument(f.message);
  } catch (const SemanticFailure& f) {
    throw std::invalid_argument(f.message);
  }
}

namespace {

std::string integers(const std::vector<Integer>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + to_string(values[i]);
  return out + "]";
}

std::string one_based(const std::vector<std::size_t>& targets) {
  std::string out = "[";
  for (std::size_t i = 0; i < targets.size(); ++i) out += (i ? "," : "") + std::to_string(targets[i] + 1);
  return out + "]";
}

}  // namespace

std::string serialize_elements(const std::vector<GroupElement>& elements) {
  std::string out = "[";
  for (std::size_t i = 0; i < elements.size(); ++i) out += (i ? "," : "") + elements[i].to_string();
  return out + "]";
}

std::string serialize_quadratic(const QuadraticEncoding& xi) {
  return "ne=" + integers(xi.singles()) + " nee=" + integers(xi.pairs()) +
         " nsq=" + integers(xi.doubles());
}

std::string serialize_gate(const Gate& gate) {
  return std::visit(Overloaded{
                        [](const Qft& g) { return "qft targets=" + one_based(g.targets); },
                        [](const InverseQft& g) { return "iqft targets=" + one_based(g.targets); },
                        [](const AutomorphismGate& g) {
                          return "auto cols=" + serialize_elements(g.map().columns());
                        },
                        [](const QuadraticGate& g) { return "quad " + serialize_quadratic(g.function()); },
                        [](const PauliGate& g) { return "pauli " + g.label.to_string(); },
                    },
                    gate);
}

std::string serialize_circuit(const Circuit& circuit) {
  std::string out = "group: " + circuit.group.to_string() + "\n";
  out += "state: coset gens=" + serialize_elements(circuit.input.generators) +
         " shift=" + circuit.input.shift.to_string() + "\n";
  for (const auto& gate : circuit.gates) out += "gate: " + serialize_gate(gate) + "\n";
  return out;
}

}  // namespace normsim
