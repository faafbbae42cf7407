#include "normsim/quadratic.hpp"

#include <string>
#include <utility>

namespace normsim {

namespace {

std::vector<Integer> reduced(std::vector<Integer> values, const Integer& modulus) {
  for (auto& v : values) v = mod_floor(v, modulus);
  return values;
}

std::vector<Integer> default_doubles(const AbelianGroup& group) {
  for (std::size_t i = 0; i < group.rank(); ++i) {
    if (group.modulus(i) > 2) {
      throw InconsistentEncoding("n(2e^" + std::to_string(i + 1) +
                                 ") must be given for factors with d_i > 2");
    }
  }
  return std::vector<Integer>(group.rank(), Integer(0));
}

Integer triangular(const Integer& n) { return n * (n - 1) / 2; }

}  // namespace

QuadraticEncoding::QuadraticEncoding(AbelianGroup group, std::vector<Integer> singles,
                                     std::vector<Integer> pairs, std::vector<Integer> doubles,
                                     bool check)
    : group_(std::move(group)) {
  const std::size_t m = group_.rank();
  if (singles.size() != m || doubles.size() != m || pairs.size() != m * (m - (m ? 1 : 0)) / 2) {
    throw InconsistentEncoding("quadratic encoding over a rank-" + std::to_string(m) +
                               " group needs " + std::to_string(m) + " singles, " +
                               std::to_string(m) + " doubles and " +
                               std::to_string(m * (m ? m - 1 : 0) / 2) + " pairs");
  }
  singles_ = reduced(std::move(singles), group_.phase_modulus());
  pairs_ = reduced(std::move(pairs), group_.phase_modulus());
  doubles_ = reduced(std::move(doubles), group_.phase_modulus());
  if (check) {
    if (auto err = consistency_error(); !err.empty()) throw InconsistentEncoding(err);
  }
}

QuadraticEncoding::QuadraticEncoding(AbelianGroup group, std::vector<Integer> singles,
                                     std::vector<Integer> pairs, std::vector<Integer> doubles)
    : QuadraticEncoding(std::move(group), std::move(singles), std::move(pairs),
                        std::move(doubles), true) {}

QuadraticEncoding::QuadraticEncoding(AbelianGroup group, std::vector<Integer> singles,
                                     std::vector<Integer> pairs)
    : QuadraticEncoding(group, std::move(singles), std::move(pairs), default_doubles(group),
                        true) {}

QuadraticEncoding QuadraticEncoding::unchecked(AbelianGroup group, std::vector<Integer> singles,
                                               std::vector<Integer> pairs,
                                               std::vector<Integer> doubles) {
  return QuadraticEncoding(std::move(group), std::move(singles), std::move(pairs),
                           std::move(doubles), false);
}

QuadraticEncoding QuadraticEncoding::trivial(const AbelianGroup& group) {
  const std::size_t m = group.rank();
  return QuadraticEncoding(group, std::vector<Integer>(m, Integer(0)),
                           std::vector<Integer>(m * (m ? m - 1 : 0) / 2, Integer(0)),
                           std::vector<Integer>(m, Integer(0)));
}

QuadraticEncoding QuadraticEncoding::sample(
    const AbelianGroup& group, const std::function<Integer(const GroupElement&)>& fn) {
  const std::size_t m = group.rank();
  std::vector<Integer> singles, pairs, doubles;
  for (std::size_t i = 0; i < m; ++i) {
    singles.push_back(fn(group.unit(i)));
    doubles.push_back(fn(Integer(2) * group.unit(i)));
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) pairs.push_back(fn(group.unit(i) + group.unit(j)));
  }
  return QuadraticEncoding(group, std::move(singles), std::move(pairs), std::move(doubles));
}

std::size_t QuadraticEncoding::pair_index(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  const std::size_t m = group_.rank();
  return i * m - i * (i + 1) / 2 + (j - i - 1);
}

const Integer& QuadraticEncoding::pair(std::size_t i, std::size_t j) const {
  if (i == j || i >= group_.rank() || j >= group_.rank()) {
    throw std::out_of_range("pair index out of range");
  }
  return pairs_[pair_index(i, j)];
}

Integer QuadraticEncoding::bilinear_exponent(std::size_t i, std::size_t j) const {
  const Integer raw = (i == j) ? Integer(doubles_[i] - 2 * singles_[i])
                               : Integer(pair(i, j) - singles_[i] - singles_[j]);
  return mod_floor(raw, group_.phase_modulus());
}

std::string QuadraticEncoding::consistency_error() const {
  const Integer& two_g = group_.phase_modulus();
  const std::size_t m = group_.rank();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const Integer beta = bilinear_exponent(i, j);
      if (mod_floor(group_.modulus(i) * beta, two_g) != 0 ||
          mod_floor(group_.modulus(j) * beta, two_g) != 0) {
        return "B(e^" + std::to_string(i + 1) + ",e^" + std::to_string(j + 1) +
               ") is not a root of unity of order dividing d_" + std::to_string(i + 1) +
               " and d_" + std::to_string(j + 1);
      }
    }
    const Integer& d = group_.modulus(i);
    if (mod_floor(d * singles_[i] + bilinear_exponent(i, i) * triangular(d), two_g) != 0) {
      return "xi(d_" + std::to_string(i + 1) + " e^" + std::to_string(i + 1) + ") != 1";
    }
  }
  return {};
}

PhaseExponent QuadraticEncoding::evaluate(const GroupElement& g) const {
  if (!(g.group() == group_)) throw GroupMismatch();
  const std::size_t m = group_.rank();
  Integer total = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (g[i] == 0) continue;
    total += singles_[i] * g[i] + bilinear_exponent(i, i) * triangular(g[i]);
    for (std::size_t j = i + 1; j < m; ++j) {
      if (g[j] != 0) total += bilinear_exponent(i, j) * g[i] * g[j];
    }
  }
  return {group_, total};
}

QuadraticEncoding QuadraticEncoding::operator*(const QuadraticEncoding& other) const {
  if (!(group_ == other.group_)) throw GroupMismatch();
  auto add = [](std::vector<Integer> a, const std::vector<Integer>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  };
  return QuadraticEncoding(group_, add(singles_, other.singles_), add(pairs_, other.pairs_),
                           add(doubles_, other.doubles_));
}

QuadraticEncoding QuadraticEncoding::conjugate() const {
  auto neg = [](std::vector<Integer> a) {
    for (auto& v : a) v = -v;
    return a;
  };
  return QuadraticEncoding(group_, neg(singles_), neg(pairs_), neg(doubles_));
}

bool QuadraticEncoding::operator==(const QuadraticEncoding& other) const {
  return group_ == other.group_ && singles_ == other.singles_ && pairs_ == other.pairs_ &&
         doubles_ == other.doubles_;
}

EndoMatrix extract_endo(const QuadraticEncoding& xi) {
  const AbelianGroup& group = xi.group();
  const std::size_t m = group.rank();
  std::vector<GroupElement> cols;
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<Integer> col(m);
    for (std::size_t l = 0; l < m; ++l) {
      // B(e^k, e^l) = gamma^beta = exp(2 pi i A_lk / d_l)
      const Integer scaled = xi.bilinear_exponent(k, l) * group.modulus(l);
      if (!mpz_divisible_p(scaled.get_mpz_t(), group.phase_modulus().get_mpz_t())) {
        throw InconsistentEncoding("B(e^" + std::to_string(k + 1) + ",e^" +
                                   std::to_string(l + 1) + ") is not a d_" +
                                   std::to_string(l + 1) + "-th root of unity");
      }
      col[l] = mod_floor(scaled / group.phase_modulus(), group.modulus(l));
    }
    cols.push_back(GroupElement(group, std::move(col)));
  }
  try {
    return EndoMatrix(group, std::move(cols));
  } catch (const InvalidEndomorphism& e) {
    throw InconsistentEncoding(std::string("bilinear form is not a homomorphism: ") + e.what());
  }
}

bool quad_validate_exhaustive(const QuadraticEncoding& xi, std::uint64_t bound) {
  const AbelianGroup& group = xi.group();
  group.checked_order(bound);
  EndoMatrix varpi = EndoMatrix::zero(group);
  try {
    varpi = extract_endo(xi);
  } catch (const InconsistentEncoding&) {
    return false;
  }
  std::vector<GroupElement> elements;
  for_each_element(group, [&](const GroupElement& g) { elements.push_back(g); }, bound);
  std::vector<PhaseExponent> values;
  std::vector<GroupElement> images;
  for (const auto& g : elements) {
    values.push_back(xi.evaluate(g));
    images.push_back(varpi.apply(g));
  }
  if (!values.front().is_zero()) return false;
  for (std::size_t a = 0; a < elements.size(); ++a) {
    for (std::size_t b = 0; b < elements.size(); ++b) {
      const PhaseExponent lhs = xi.evaluate(elements[a] + elements[b]);
      const PhaseExponent rhs = values[a] + values[b] + character(images[a], elements[b]);
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

QuadraticEncoding character_function(const AbelianGroup& group, std::size_t factor,
                                     const Integer& a) {
  if (factor >= group.rank()) throw std::out_of_range("factor index out of range");
  const Integer weight = group.phase_modulus() / group.modulus(factor) * a;
  return QuadraticEncoding::sample(
      group, [&](const GroupElement& g) { return Integer(weight * g[factor]); });
}

QuadraticEncoding square_function(const AbelianGroup& group, std::size_t factor,
                                  const Integer& a) {
  if (factor >= group.rank()) throw std::out_of_range("factor index out of range");
  const Integer weight = group.phase_modulus() / group.modulus(factor) * a;
  return QuadraticEncoding::sample(
      group, [&](const GroupElement& g) { return Integer(weight * g[factor] * g[factor]); });
}

QuadraticEncoding cross_function(const AbelianGroup& group, std::size_t i, std::size_t j,
                                 const Integer& c) {
  if (i >= group.rank() || j >= group.rank()) throw std::out_of_range("factor index out of range");
  if (i == j) throw std::invalid_argument("cross term needs two distinct factors");
  if (mod_floor(group.modulus(i) * c, group.modulus(j)) != 0) {
    throw std::invalid_argument("cross coefficient must satisfy d_i c = 0 mod d_j");
  }
  const Integer weight = group.phase_modulus() / group.modulus(j) * c;
  return QuadraticEncoding::sample(
      group, [&](const GroupElement& g) { return Integer(weight * g[i] * g[j]); });
}

QuadraticEncoding half_function(const AbelianGroup& group, std::size_t factor, const Integer& a) {
  if (factor >= group.rank()) throw std::out_of_range("factor index out of range");
  const Integer& d = group.modulus(factor);
  const Integer scale = group.order() / d;
  return QuadraticEncoding::sample(group, [&](const GroupElement& g) {
    const Integer& x = g[factor];
    return Integer(a * x * (x + d) * scale);
  });
}

QuadraticEncoding endo_function(const EndoMatrix& varpi) {
  return QuadraticEncoding::sample(varpi.group(), [&](const GroupElement& g) {
    return character(g, varpi.apply(g)).value();
  });
}

}  // namespace normsim
