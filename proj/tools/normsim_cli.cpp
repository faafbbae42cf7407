// Command-line front end: simulate circuit files, print supports, check the
// engine against the dense oracle, test permutations for affinity and
// generate random circuits or quadratic gate encodings.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "normsim/circuit_io.hpp"
#include "normsim/oracle.hpp"
#include "normsim/random_circuit.hpp"

namespace {

using namespace normsim;

// sysexits(3)
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitNoInput = 66;
constexpr int kExitSoftware = 70;

constexpr int kVerifyFail = 1;
constexpr int kBoundExceeded = 2;

struct Failure {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{kExitNoInput, "cannot read " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Circuit load_circuit(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_circuit(text);
  } catch (const ParseError& e) {
    throw Failure{kExitData, path + ": " + e.what()};
  }
}

AbelianGroup group_from_args(const std::vector<std::string>& moduli) {
  std::vector<Integer> values;
  try {
    for (const auto& d : moduli) values.push_back(parse_integer(d));
    return AbelianGroup(std::move(values));
  } catch (const std::invalid_argument& e) {
    throw Failure{kExitUsage, std::string("--group: ") + e.what()};
  }
}

std::size_t factor_index(const AbelianGroup& group, std::size_t one_based, const char* flag) {
  if (one_based < 1 || one_based > group.rank()) {
    throw Failure{kExitUsage, std::string(flag) + " must be a factor index in 1.." +
                                  std::to_string(group.rank())};
  }
  return one_based - 1;
}

int run_simulate(const std::string& path, std::uint64_t shots, std::uint64_t seed) {
  const Circuit circuit = load_circuit(path);
  CosetSampler sampler(simulate(circuit.input, circuit.gates), seed);
  std::string out;
  for (std::uint64_t k = 0; k < shots; ++k) {
    out += sampler.next().to_string();
    out += '\n';
  }
  std::cout << out;
  return 0;
}

int run_support(const std::string& path) {
  const Circuit circuit = load_circuit(path);
  const OutputDistribution dist = simulate(circuit.input, circuit.gates);
  std::cout << "x0=" << dist.offset << '\n';
  for (const auto& h : dist.support.generators) std::cout << "h=" << h << '\n';
  return 0;
}

int run_verify(const std::string& path, std::uint64_t bound) {
  const Circuit circuit = load_circuit(path);
  try {
    const auto report = oracle::compare_with_engine(circuit.input, circuit.gates, bound);
    std::cout << report.summary() << '\n';
    return report.pass() ? 0 : kVerifyFail;
  } catch (const EnumerationBoundExceeded& e) {
    std::cerr << "normsim: " << e.what() << '\n';
    return kBoundExceeded;
  }
}

// "modexp:a,m,N" or a file of "(g) -> (F(g))" lines.
oracle::PermutationSpec load_permutation(const AbelianGroup& group, const std::string& source) {
  const std::string prefix = "modexp:";
  if (source.rfind(prefix, 0) == 0) {
    std::vector<Integer> params;
    std::istringstream fields(source.substr(prefix.size()));
    try {
      for (std::string item; std::getline(fields, item, ',');) params.push_back(parse_integer(item));
    } catch (const std::invalid_argument&) {
      params.clear();
    }
    if (params.size() != 3 || params[1] < 1 || params[1] > 62 || params[2] < 2) {
      throw Failure{kExitUsage, "--perm modexp expects a,m,N with 1 <= m <= 62 and N >= 2"};
    }
    auto perm = oracle::PermutationSpec::modexp(params[0], params[1].get_ui(), params[2]);
    if (!(perm.group() == group)) {
      throw Failure{kExitUsage, "modexp:" + to_string(params[0]) + "," + to_string(params[1]) +
                                    "," + to_string(params[2]) + " acts on Z_{2^m} x Z_N = " +
                                    perm.group().to_string() + ", not " + group.to_string()};
    }
    return perm;
  }

  std::istringstream lines(read_file(source));
  std::vector<std::pair<GroupElement, GroupElement>> pairs;
  std::size_t line_no = 0;
  for (std::string line; std::getline(lines, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto arrow = line.find("->");
    try {
      if (arrow == std::string::npos) throw std::invalid_argument("expected '(g) -> (F(g))'");
      pairs.emplace_back(parse_element(group, line.substr(0, arrow)),
                         parse_element(group, line.substr(arrow + 2)));
    } catch (const std::invalid_argument& e) {
      throw Failure{kExitData, source + ":" + std::to_string(line_no) + ": " + e.what()};
    }
  }
  try {
    return oracle::PermutationSpec::from_pairs(group, pairs);
  } catch (const std::invalid_argument& e) {
    throw Failure{kExitData, source + ": " + e.what()};
  }
}

int run_affine_test(const std::vector<std::string>& moduli, const std::string& perm_spec) {
  const AbelianGroup group = group_from_args(moduli);
  try {
    const auto result = oracle::affine_test(load_permutation(group, perm_spec));
    if (const auto* affine = std::get_if<oracle::Affine>(&result)) {
      std::cout << "affine\nt=" << affine->shift << '\n';
      for (const auto& col : affine->map.columns()) std::cout << "col=" << col << '\n';
    } else {
      const auto& no = std::get<oracle::NotAffine>(result);
      std::cout << "not_affine witness=" << no.witness << '\n' << "reason: " << no.reason << '\n';
    }
    return 0;
  } catch (const EnumerationBoundExceeded& e) {
    std::cerr << "normsim: " << e.what() << '\n';
    return kBoundExceeded;
  }
}

int run_random_circuit(std::uint64_t seed, const RandomCircuitOptions& options) {
  if (options.max_order < 2) throw Failure{kExitUsage, "--max-order must be at least 2"};
  if (options.max_rank < 1) throw Failure{kExitUsage, "--max-rank must be at least 1"};
  std::cout << "# random circuit, seed " << seed << '\n'
            << serialize_circuit(random_instance(seed, options));
  return 0;
}

struct QuadgenArgs {
  std::vector<std::string> moduli;
  std::string kind;
  std::size_t factor = 1;
  std::size_t i = 1;
  std::size_t j = 2;
  std::string a = "1";
  std::string c = "1";
  std::string cols;
};

int run_quadgen(const QuadgenArgs& args) {
  const AbelianGroup group = group_from_args(args.moduli);
  auto integer_flag = [](const std::string& text, const char* flag) {
    try {
      return parse_integer(text);
    } catch (const std::invalid_argument&) {
      throw Failure{kExitUsage, std::string(flag) + " expects an integer"};
    }
  };
  try {
    std::optional<QuadraticEncoding> xi;
    if (args.kind == "character" || args.kind == "square" || args.kind == "half") {
      const std::size_t f = factor_index(group, args.factor, "--factor");
      const Integer a = integer_flag(args.a, "--a");
      if (args.kind == "character") xi = character_function(group, f, a);
      if (args.kind == "square") xi = square_function(group, f, a);
      if (args.kind == "half") xi = half_function(group, f, a);
    } else if (args.kind == "cross") {
      xi = cross_function(group, factor_index(group, args.i, "--i"),
                          factor_index(group, args.j, "--j"), integer_flag(args.c, "--c"));
    } else {
      std::vector<GroupElement> cols;
      try {
        cols = parse_element_list(group, args.cols);
      } catch (const std::invalid_argument& e) {
        throw Failure{kExitUsage, std::string("--cols: ") + e.what()};
      }
      if (cols.size() != group.rank()) {
        throw Failure{kExitUsage, "--cols needs " + std::to_string(group.rank()) + " columns"};
      }
      xi = endo_function(EndoMatrix(group, std::move(cols)));
    }
    std::cout << "gate: quad " << serialize_quadratic(*xi) << '\n';
    return 0;
  } catch (const std::invalid_argument& e) {
    throw Failure{kExitUsage, e.what()};
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact simulation of normalizer circuits over finite Abelian groups"};
  app.require_subcommand(1);

  std::string file;
  std::uint64_t shots = 1;
  std::uint64_t seed = 0;
  auto* simulate_cmd = app.add_subcommand("simulate", "Sample measurement outcomes");
  simulate_cmd->add_option("file", file, "Circuit file")->required();
  simulate_cmd->add_option("--shots", shots, "Number of samples")->capture_default_str();
  simulate_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();

  auto* support_cmd = app.add_subcommand("support", "Print the output coset x0 + <h...>");
  support_cmd->add_option("file", file, "Circuit file")->required();

  std::uint64_t bound = oracle::kDefaultDenseBound;
  auto* verify_cmd = app.add_subcommand("verify", "Compare the engine with the dense oracle");
  verify_cmd->add_option("file", file, "Circuit file")->required();
  verify_cmd->add_option("--bound", bound, "Largest group order to simulate densely")
      ->capture_default_str();

  std::vector<std::string> moduli;
  std::string perm;
  auto* affine_cmd = app.add_subcommand("affine-test", "Decide whether a permutation is affine");
  affine_cmd->add_option("--group", moduli, "Moduli d1 ... dm")->required();
  affine_cmd->add_option("--perm", perm, "Permutation file or modexp:a,m,N")->required();

  RandomCircuitOptions options;
  auto* random_cmd = app.add_subcommand("random-circuit", "Emit a random circuit file");
  random_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
  random_cmd->add_option("--max-order", options.max_order, "Bound on the group order")
      ->capture_default_str();
  random_cmd->add_option("--gates", options.gates, "Number of gates")->capture_default_str();
  random_cmd->add_option("--max-rank", options.max_rank, "Bound on the number of factors")
      ->capture_default_str();

  QuadgenArgs quad;
  auto* quadgen_cmd = app.add_subcommand("quadgen", "Emit the encoding of a quadratic function");
  quadgen_cmd->add_option("--group", quad.moduli, "Moduli d1 ... dm")->required();
  quadgen_cmd->add_option("--kind", quad.kind, "Function family")
      ->required()
      ->check(CLI::IsMember({"character", "square", "cross", "half", "from_endo"}));
  quadgen_cmd->add_option("--factor", quad.factor, "Factor (1-based) for single-factor kinds");
  quadgen_cmd->add_option("--a", quad.a, "Coefficient for character, square and half");
  quadgen_cmd->add_option("--i", quad.i, "First factor of a cross term");
  quadgen_cmd->add_option("--j", quad.j, "Second factor of a cross term");
  quadgen_cmd->add_option("--c", quad.c, "Cross-term coefficient");
  quadgen_cmd->add_option("--cols", quad.cols, "Endomorphism columns for from_endo, [(..),...]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*simulate_cmd) return run_simulate(file, shots, seed);
    if (*support_cmd) return run_support(file);
    if (*verify_cmd) return run_verify(file, bound);
    if (*affine_cmd) return run_affine_test(moduli, perm);
    if (*random_cmd) return run_random_circuit(seed, options);
    if (*quadgen_cmd) {
      if (quad.kind == "from_endo" && quad.cols.empty()) {
        throw Failure{kExitUsage, "from_endo needs --cols"};
      }
      return run_quadgen(quad);
    }
  } catch (const Failure& f) {
    std::cerr << "normsim: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "normsim: internal error: " << e.what() << '\n';
    return kExitSoftware;
  }
  return kExitUsage;
}
