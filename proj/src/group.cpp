#include "normsim/group.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

namespace normsim {

EnumerationBoundExceeded::EnumerationBoundExceeded(const Integer& order, std::uint64_t bound)
    : std::runtime_error("group order " + order.get_str() + " exceeds enumeration bound " +
                         std::to_string(bound)) {}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (r < 0) r += abs(m);
  return r;
}

Integer parse_integer(std::string_view text) {
  std::string s(text);
  const auto first = s.find_first_not_of(" \t");
  const auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw std::invalid_argument("empty integer");
  s = s.substr(first, last - first + 1);
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("malformed integer '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw std::invalid_argument("malformed integer '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

std::string to_string(const Integer& value) { return value.get_str(); }

// ---------------------------------------------------------------------------
// AbelianGroup

AbelianGroup::AbelianGroup(std::vector<Integer> moduli, Unchecked) {
  auto data = std::make_shared<Data>();
  data->order = 1;
  for (const auto& d : moduli) data->order *= d;
  data->phase_modulus = 2 * data->order;
  data->moduli = std::move(moduli);
  data_ = std::move(data);
}

AbelianGroup::AbelianGroup(std::vector<Integer> moduli)
    : AbelianGroup(std::move(moduli), Unchecked{}) {
  if (rank() == 0) throw std::invalid_argument("a group needs at least one factor");
  for (std::size_t i = 0; i < rank(); ++i) {
    if (modulus(i) < 2) {
      throw std::invalid_argument("modulus d_" + std::to_string(i + 1) + " = " +
                                  modulus(i).get_str() + " must be at least 2");
    }
  }
}

AbelianGroup AbelianGroup::with_trivial_factors(std::vector<Integer> moduli) {
  for (const auto& d : moduli) {
    if (d < 1) throw std::invalid_argument("moduli must be positive");
  }
  return AbelianGroup(std::move(moduli), Unchecked{});
}

GroupElement AbelianGroup::zero() const {
  return GroupElement(*this, std::vector<Integer>(rank(), Integer(0)), GroupElement::Trusted{});
}

GroupElement AbelianGroup::unit(std::size_t i) const {
  if (i >= rank()) throw std::out_of_range("factor index out of range");
  std::vector<Integer> residues(rank(), Integer(0));
  residues[i] = mod_floor(Integer(1), modulus(i));
  return GroupElement(*this, std::move(residues), GroupElement::Trusted{});
}

GroupElement AbelianGroup::reduce(std::span<const Integer> values) const {
  if (values.size() != rank()) throw std::invalid_argument("wrong number of residues");
  std::vector<Integer> residues(rank());
  for (std::size_t i = 0; i < rank(); ++i) residues[i] = mod_floor(values[i], modulus(i));
  return GroupElement(*this, std::move(residues), GroupElement::Trusted{});
}

std::uint64_t AbelianGroup::checked_order(std::uint64_t bound) const {
  if (order() > Integer(std::to_string(bound))) throw EnumerationBoundExceeded(order(), bound);
  return std::stoull(order().get_str());
}

bool AbelianGroup::operator==(const AbelianGroup& other) const {
  if (data_ == other.data_) return true;
  return std::equal(data_->moduli.begin(), data_->moduli.end(), other.data_->moduli.begin(),
                    other.data_->moduli.end());
}

std::string AbelianGroup::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (i) out += ' ';
    out += modulus(i).get_str();
  }
  return out;
}

// ---------------------------------------------------------------------------
// GroupElement

GroupElement::GroupElement(AbelianGroup group, std::vector<Integer> residues, Trusted)
    : group_(std::move(group)), residues_(std::move(residues)) {}

GroupElement::GroupElement(AbelianGroup group, std::vector<Integer> residues)
    : group_(std::move(group)), residues_(std::move(residues)) {
  if (residues_.size() != group_.rank()) {
    throw std::invalid_argument("element has " + std::to_string(residues_.size()) +
                                " residues, group has rank " + std::to_string(group_.rank()));
  }
  for (std::size_t i = 0; i < residues_.size(); ++i) {
    if (residues_[i] < 0 || residues_[i] >= group_.modulus(i)) {
      throw std::invalid_argument("residue " + residues_[i].get_str() + " out of range for Z_" +
                                  group_.modulus(i).get_str());
    }
  }
}

bool GroupElement::is_zero() const {
  return std::all_of(residues_.begin(), residues_.end(), [](const Integer& r) { return r == 0; });
}

GroupElement& GroupElement::operator+=(const GroupElement& other) {
  if (!(group_ == other.group_)) throw GroupMismatch();
  for (std::size_t i = 0; i < residues_.size(); ++i) {
    residues_[i] += other.residues_[i];
    if (residues_[i] >= group_.modulus(i)) residues_[i] -= group_.modulus(i);
  }
  return *this;
}

GroupElement& GroupElement::operator-=(const GroupElement& other) {
  if (!(group_ == other.group_)) throw GroupMismatch();
  for (std::size_t i = 0; i < residues_.size(); ++i) {
    residues_[i] -= other.residues_[i];
    if (residues_[i] < 0) residues_[i] += group_.modulus(i);
  }
  return *this;
}

GroupElement GroupElement::operator-() const { return group_.zero() - *this; }

GroupElement operator*(const Integer& n, const GroupElement& g) {
  std::vector<Integer> residues(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    residues[i] = mod_floor(n * g.residues_[i], g.group_.modulus(i));
  }
  return GroupElement(g.group_, std::move(residues), GroupElement::Trusted{});
}

bool GroupElement::operator==(const GroupElement& other) const {
  return group_ == other.group_ && residues_ == other.residues_;
}

bool GroupElement::operator<(const GroupElement& other) const {
  return std::lexicographical_compare(residues_.begin(), residues_.end(),
                                      other.residues_.begin(), other.residues_.end());
}

std::string GroupElement::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < residues_.size(); ++i) {
    if (i) out += ',';
    out += residues_[i].get_str();
  }
  return out + ")";
}

std::ostream& operator<<(std::ostream& os, const GroupElement& g) { return os << g.to_string(); }

GroupElement parse_element(const AbelianGroup& group, std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw std::invalid_argument("group element must be written as (g_1,...,g_m), got '" +
                                std::string(text) + "'");
  }
  std::vector<Integer> residues;
  const std::string body = s.substr(1, s.size() - 2);
  if (!body.empty()) {
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) residues.push_back(parse_integer(item));
    if (body.back() == ',') throw std::invalid_argument("trailing comma in group element");
  }
  return GroupElement(group, std::move(residues));
}

// ---------------------------------------------------------------------------
// PhaseExponent

PhaseExponent::PhaseExponent(AbelianGroup group, const Integer& exponent)
    : group_(std::move(group)), value_(mod_floor(exponent, group_.phase_modulus())) {}

PhaseExponent& PhaseExponent::operator+=(const PhaseExponent& other) {
  if (!(group_ == other.group_)) throw GroupMismatch();
  value_ += other.value_;
  if (value_ >= group_.phase_modulus()) value_ -= group_.phase_modulus();
  return *this;
}

PhaseExponent& PhaseExponent::operator-=(const PhaseExponent& other) {
  if (!(group_ == other.group_)) throw GroupMismatch();
  value_ -= other.value_;
  if (value_ < 0) value_ += group_.phase_modulus();
  return *this;
}

PhaseExponent PhaseExponent::operator-() const { return {group_, -value_}; }

PhaseExponent operator*(const Integer& n, const PhaseExponent& p) {
  return {p.group_, n * p.value_};
}

bool PhaseExponent::operator==(const PhaseExponent& other) const {
  return group_ == other.group_ && value_ == other.value_;
}

std::complex<double> PhaseExponent::to_complex() const {
  // value / g lies in [0, 2); compute the ratio exactly before converting.
  mpq_class ratio(value_, group_.order());
  ratio.canonicalize();
  return std::polar(1.0, std::numbers::pi * ratio.get_d());
}

PhaseExponent character(const GroupElement& g, const GroupElement& h) {
  if (!(g.group() == h.group())) throw GroupMismatch();
  const AbelianGroup& group = g.group();
  Integer total = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Integer weight = group.phase_modulus() / group.modulus(i);
    total += weight * g[i] * h[i];
  }
  return {group, total};
}

// ---------------------------------------------------------------------------
// Exact vanishing of sums of roots of unity.
//
// Z[x]/(x^N - 1) -> Z[zeta_N] factors through the CRT decomposition
// N = prod q_j (q_j = p_j^e_j) as a tensor product of the maps
// Z[x]/(x^q - 1) -> Z[zeta_q], each of which reduces monomials x^c with
// c >= phi(q) via Phi_q(x) = sum_{t<p} x^{t q/p}.  After reducing along
// every axis the coordinates are in an integral basis, so the sum vanishes
// iff every coordinate is zero.

namespace {

struct PrimePower {
  std::uint64_t p;
  std::uint64_t q;
};

std::vector<PrimePower> factor_prime_powers(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    std::uint64_t q = 1;
    while (n % p == 0) {
      n /= p;
      q *= p;
    }
    out.push_back({p, q});
  }
  if (n > 1) out.push_back({n, n});
  return out;
}

}  // namespace

bool root_of_unity_sum_is_zero(std::span<const std::int64_t> counts) {
  const std::uint64_t n = counts.size();
  if (n == 0) return true;
  const auto factors = factor_prime_powers(n);
  const std::size_t axes = factors.size();

  // Row-major layout with radices q_0, ..., q_{r-1}; stride[j] for axis j.
  std::vector<std::uint64_t> stride(axes, 1);
  for (std::size_t j = axes; j-- > 1;) stride[j - 1] = stride[j] * factors[j].q;

  std::vector<std::int64_t> coeff(n, 0);
  for (std::uint64_t k = 0; k < n; ++k) {
    std::uint64_t flat = 0;
    for (std::size_t j = 0; j < axes; ++j) flat += (k % factors[j].q) * stride[j];
    coeff[flat] += counts[k];
  }

  for (std::size_t j = 0; j < axes; ++j) {
    const std::uint64_t q = factors[j].q;
    const std::uint64_t p = factors[j].p;
    const std::uint64_t block = q / p;
    const std::uint64_t phi = q - block;
    for (std::uint64_t flat = 0; flat < n; ++flat) {
      const std::uint64_t c = (flat / stride[j]) % q;
      if (c < phi || coeff[flat] == 0) continue;
      const std::int64_t v = coeff[flat];
      coeff[flat] = 0;
      const std::uint64_t base = flat - c * stride[j];
      const std::uint64_t r = c % block;
      for (std::uint64_t t = 0; t + 1 < p; ++t) coeff[base + (r + t * block) * stride[j]] -= v;
    }
  }
  return std::all_of(coeff.begin(), coeff.end(), [](std::int64_t v) { return v == 0; });
}

bool character_sum_is_zero(const GroupElement& g, std::uint64_t bound) {
  const AbelianGroup& group = g.group();
  const std::uint64_t order = group.checked_order(bound);
  // chi values are g-th roots: exponent k/(2g) with k even -> index k/2 in Z_g.
  std::vector<std::int64_t> counts(order, 0);
  for_each_element(
      group,
      [&](const GroupElement& h) {
        const Integer half = character(g, h).value() / 2;
        ++counts[half.get_ui()];
      },
      bound);
  return root_of_unity_sum_is_zero(counts);
}

}  // namespace normsim
