#include "normsim/homomorphism.hpp"

#include <deque>
#include <string>

#include "normsim/intlinalg.hpp"

namespace normsim {

InvalidEndomorphism::InvalidEndomorphism(std::size_t column)
    : std::invalid_argument("column " + std::to_string(column + 1) +
                            " violates d_i * a^i = 0"),
      column_(column) {}

namespace {

std::optional<std::size_t> first_invalid_column(const AbelianGroup& group,
                                                const std::vector<GroupElement>& columns) {
  if (columns.size() != group.rank()) {
    throw std::invalid_argument("endomorphism needs " + std::to_string(group.rank()) +
                                " columns, got " + std::to_string(columns.size()));
  }
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (!(columns[i].group() == group)) throw GroupMismatch();
    if (!(group.modulus(i) * columns[i]).is_zero()) return i;
  }
  return std::nullopt;
}

}  // namespace

EndoMatrix::EndoMatrix(AbelianGroup group, std::vector<GroupElement> columns)
    : group_(std::move(group)), columns_(std::move(columns)) {
  if (auto bad = first_invalid_column(group_, columns_)) throw InvalidEndomorphism(*bad);
}

EndoMatrix EndoMatrix::identity(const AbelianGroup& group) {
  std::vector<GroupElement> cols;
  for (std::size_t i = 0; i < group.rank(); ++i) cols.push_back(group.unit(i));
  return EndoMatrix(group, std::move(cols));
}

EndoMatrix EndoMatrix::zero(const AbelianGroup& group) {
  return EndoMatrix(group, std::vector<GroupElement>(group.rank(), group.zero()));
}

GroupElement EndoMatrix::apply(const GroupElement& g) const {
  if (!(g.group() == group_)) throw GroupMismatch();
  std::vector<Integer> acc(group_.rank(), Integer(0));
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (g[i] == 0) continue;
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += g[i] * columns_[i][k];
  }
  return group_.reduce(acc);
}

EndoMatrix EndoMatrix::operator*(const EndoMatrix& other) const {
  if (!(group_ == other.group_)) throw GroupMismatch();
  std::vector<GroupElement> cols;
  for (const auto& c : other.columns_) cols.push_back(apply(c));
  return EndoMatrix(group_, std::move(cols));
}

bool EndoMatrix::operator==(const EndoMatrix& other) const {
  return group_ == other.group_ && columns_ == other.columns_;
}

std::variant<EndoMatrix, InvalidColumn> endo_validate(const AbelianGroup& group,
                                                      std::vector<GroupElement> columns) {
  if (auto bad = first_invalid_column(group, columns)) return InvalidColumn{*bad};
  return EndoMatrix(group, std::move(columns));
}

EndoMatrix endo_dual(const EndoMatrix& a) {
  const AbelianGroup& group = a.group();
  const std::size_t m = group.rank();
  std::vector<GroupElement> cols;
  for (std::size_t l = 0; l < m; ++l) {
    std::vector<Integer> col(m);
    for (std::size_t k = 0; k < m; ++k) {
      // d_l | d_k A_{lk} by validity of column k.
      const Integer scaled = group.modulus(k) * a.entry(l, k);
      col[k] = mod_floor(scaled / group.modulus(l), group.modulus(k));
    }
    cols.push_back(GroupElement(group, std::move(col)));
  }
  return EndoMatrix(group, std::move(cols));
}

std::optional<EndoMatrix> auto_inverse(const EndoMatrix& a) {
  const AbelianGroup& group = a.group();
  const std::size_t m = group.rank();
  // Unknowns: B_{ij} (m*m), slack s_{ij} for d_j B_ij = 0 mod d_i (m*m),
  // slack t_{ki} for (B A)_{ki} = delta_{ki} mod d_k (m*m).
  const std::size_t mm = m * m;
  const auto b_var = [m](std::size_t i, std::size_t j) { return i * m + j; };
  IntMatrix sys(2 * mm, 3 * mm);
  IntVector rhs(2 * mm, Integer(0));
  std::size_t row = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j, ++row) {
      sys(row, b_var(i, j)) = group.modulus(j);
      sys(row, mm + row) = group.modulus(i);
    }
  }
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < m; ++i, ++row) {
      for (std::size_t j = 0; j < m; ++j) sys(row, b_var(k, j)) = a.entry(j, i);
      sys(row, mm + row) = group.modulus(k);
      rhs[row] = (k == i) ? 1 : 0;
    }
  }
  const auto solution = solve_diophantine(sys, rhs);
  if (!solution) return std::nullopt;

  // Project row i into Z_{d_i}.
  std::vector<GroupElement> cols;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Integer> col(m);
    for (std::size_t i = 0; i < m; ++i) col[i] = solution->particular[b_var(i, j)];
    cols.push_back(group.reduce(col));
  }
  return EndoMatrix(group, std::move(cols));
}

EndoMatrix multiplication_map(const AbelianGroup& group, std::size_t factor, const Integer& a) {
  if (factor >= group.rank()) throw std::out_of_range("factor index out of range");
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), group.modulus(factor).get_mpz_t());
  if (g != 1) {
    throw std::invalid_argument("multiplier " + a.get_str() + " is not coprime to " +
                                group.modulus(factor).get_str());
  }
  std::vector<GroupElement> cols;
  for (std::size_t i = 0; i < group.rank(); ++i) {
    cols.push_back(i == factor ? a * group.unit(i) : group.unit(i));
  }
  return EndoMatrix(group, std::move(cols));
}

EndoMatrix shear_map(const AbelianGroup& group, std::size_t source, std::size_t target,
                     const Integer& c) {
  if (source >= group.rank() || target >= group.rank()) {
    throw std::out_of_range("factor index out of range");
  }
  if (source == target) throw std::invalid_argument("shear needs two distinct factors");
  if (mod_floor(group.modulus(source) * c, group.modulus(target)) != 0) {
    throw std::invalid_argument("shear coefficient must satisfy d_i c = 0 mod d_j");
  }
  std::vector<GroupElement> cols;
  for (std::size_t i = 0; i < group.rank(); ++i) cols.push_back(group.unit(i));
  cols[source] += c * group.unit(target);
  return EndoMatrix(group, std::move(cols));
}

Subgroup Subgroup::whole(const AbelianGroup& group) {
  Subgroup s{group, {}};
  for (std::size_t i = 0; i < group.rank(); ++i) s.generators.push_back(group.unit(i));
  return s;
}

namespace {

// Rows k: sum_j (g h^k_j / d_j) x_j + g * t_k, i.e. chi_{h^k}(x) = exp(2 pi i row/g).
IntMatrix character_system(const AbelianGroup& group, const std::vector<GroupElement>& chars) {
  const std::size_t m = group.rank();
  const std::size_t r = chars.size();
  IntMatrix sys(r, m + r);
  for (std::size_t k = 0; k < r; ++k) {
    if (!(chars[k].group() == group)) throw GroupMismatch();
    for (std::size_t j = 0; j < m; ++j) {
      sys(k, j) = group.order() / group.modulus(j) * chars[k][j];
    }
    sys(k, m + k) = group.order();
  }
  return sys;
}

}  // namespace

Subgroup orthogonal_subgroup(const Subgroup& h) {
  const AbelianGroup& group = h.group;
  const std::size_t m = group.rank();
  Subgroup out{group, {}};
  for (const auto& k : kernel_basis(character_system(group, h.generators))) {
    out.generators.push_back(group.reduce(std::span<const Integer>(k).first(m)));
  }
  return out;
}

std::optional<GroupElement> solve_character_system(const AbelianGroup& group,
                                                   const std::vector<GroupElement>& characters,
                                                   const std::vector<Integer>& targets) {
  if (characters.size() != targets.size()) {
    throw std::invalid_argument("one target per character required");
  }
  IntVector rhs;
  for (const auto& s : targets) rhs.push_back(mod_floor(s, group.order()));
  const auto solution = solve_diophantine(character_system(group, characters), rhs);
  if (!solution) return std::nullopt;
  return group.reduce(std::span<const Integer>(solution->particular).first(group.rank()));
}

bool subgroup_contains(const Subgroup& h, const GroupElement& g) {
  const AbelianGroup& group = h.group;
  if (!(g.group() == group)) throw GroupMismatch();
  const std::size_t m = group.rank();
  const std::size_t n = h.generators.size();
  // sum_i c_i h^i_j + d_j l_j = g_j
  IntMatrix sys(m, n + m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) sys(j, i) = h.generators[i][j];
    sys(j, n + j) = group.modulus(j);
  }
  return solve_diophantine(sys, g.residues()).has_value();
}

std::set<GroupElement> subgroup_members(const Subgroup& h, std::uint64_t bound) {
  h.group.checked_order(bound);
  std::set<GroupElement> seen{h.group.zero()};
  std::deque<GroupElement> frontier{h.group.zero()};
  while (!frontier.empty()) {
    const GroupElement x = frontier.front();
    frontier.pop_front();
    for (const auto& gen : h.generators) {
      GroupElement y = x + gen;
      if (seen.insert(y).second) frontier.push_back(std::move(y));
    }
  }
  return seen;
}

}  // namespace normsim
