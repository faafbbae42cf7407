#include "normsim/intlinalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace normsim {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntVector IntMatrix::operator*(std::span<const Integer> x) const {
  if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
  IntVector out(rows_, Integer(0));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * x[c];
  }
  return out;
}

namespace {

// A stacked over U; column operations act on both at once.
class ColumnEchelon {
 public:
  ColumnEchelon(const IntMatrix& a, EliminationStats* stats)
      : work_(a), transform_(IntMatrix::identity(a.cols())), stats_(stats) {
    // Lattice reduction is skipped while the transform is still small.
    std::size_t input_bits = 0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      for (std::size_t c = 0; c < a.cols(); ++c) {
        input_bits = std::max(input_bits, mpz_sizeinbase(a(r, c).get_mpz_t(), 2));
      }
    }
    reduce_above_ = input_bits + 32;
    run();
  }

  std::size_t rank() const { return pivot_rows_.size(); }
  const IntMatrix& echelon() const { return work_; }
  const IntMatrix& transform() const { return transform_; }
  const std::vector<std::size_t>& pivot_rows() const { return pivot_rows_; }

 private:
  void run() {
    const std::size_t n = work_.rows();
    const std::size_t m = work_.cols();
    std::size_t pivot = 0;
    for (std::size_t row = 0; row < n && pivot < m; ++row) {
      for (std::size_t j = pivot + 1; j < m; ++j) {
        if (work_(row, j) != 0) combine(row, pivot, j);
      }
      if (work_(row, pivot) == 0) continue;
      if (work_(row, pivot) < 0) negate(pivot);
      // Hermite reduction keeps the left part bounded by the pivots.
      for (std::size_t k = 0; k < pivot; ++k) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), work_(row, k).get_mpz_t(), work_(row, pivot).get_mpz_t());
        if (q != 0) axpy(k, pivot, -q);
      }
      pivot_rows_.push_back(row);
      ++pivot;
      if (transform_bits() > reduce_above_) reduce_transform(pivot);
    }
    if (transform_bits() > reduce_above_) reduce_transform(pivot);
  }

  std::size_t transform_bits() const {
    std::size_t bits = 0;
    for (std::size_t r = 0; r < transform_.rows(); ++r) {
      for (std::size_t c = 0; c < transform_.cols(); ++c) {
        bits = std::max(bits, mpz_sizeinbase(transform_(r, c).get_mpz_t(), 2));
      }
    }
    return bits;
  }

  // Columns [from, m) vanish on every processed row, so any unimodular mix of
  // them, or adding them to earlier columns, keeps the echelon form.  LLL on
  // their transform parts, then size-reduce the pivot columns against them.
  void reduce_transform(std::size_t from) {
    const std::size_t m = work_.cols();
    if (from >= m) return;
    lll(from);
    const auto basis = gram_schmidt(from);
    for (std::size_t c = 0; c < from; ++c) {
      for (std::size_t l = m - from; l-- > 0;) {
        mpq_class coeff = 0;
        for (std::size_t r = 0; r < m; ++r) coeff += basis.star[l][r] * transform_(r, c);
        coeff /= basis.norm[l];
        const Integer q = nearest(coeff);
        if (q != 0) axpy(c, from + l, -q);
      }
    }
  }

  struct GramSchmidt {
    std::vector<std::vector<mpq_class>> star;
    std::vector<mpq_class> norm;
  };

  GramSchmidt gram_schmidt(std::size_t from) const {
    const std::size_t m = work_.cols();
    GramSchmidt gs;
    for (std::size_t c = from; c < m; ++c) {
      std::vector<mpq_class> v(m);
      for (std::size_t r = 0; r < m; ++r) v[r] = transform_(r, c);
      for (std::size_t l = 0; l < gs.star.size(); ++l) {
        mpq_class mu = 0;
        for (std::size_t r = 0; r < m; ++r) mu += v[r] * gs.star[l][r];
        mu /= gs.norm[l];
        for (std::size_t r = 0; r < m; ++r) v[r] -= mu * gs.star[l][r];
      }
      mpq_class n = 0;
      for (const auto& x : v) n += x * x;
      gs.star.push_back(std::move(v));
      gs.norm.push_back(n);
    }
    return gs;
  }

  static Integer nearest(const mpq_class& x) {
    const mpq_class shifted = x + mpq_class(1, 2);
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    return q;
  }

  Integer transform_dot(std::size_t x, std::size_t y) const {
    Integer out = 0;
    for (std::size_t r = 0; r < transform_.rows(); ++r) out += transform_(r, x) * transform_(r, y);
    return out;
  }

  // Textbook LLL (delta = 3/4) on transform columns [from, m), exact rationals.
  void lll(std::size_t from) {
    const std::size_t n = work_.cols() - from;
    if (n < 2) return;
    auto col = [from](std::size_t i) { return from + i; };
    std::vector<std::vector<mpq_class>> mu(n, std::vector<mpq_class>(n));
    std::vector<mpq_class> norm(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        mpq_class v(transform_dot(col(i), col(j)));
        for (std::size_t k = 0; k < j; ++k) v -= mu[j][k] * mu[i][k] * norm[k];
        mu[i][j] = v / norm[j];
      }
      mpq_class v(transform_dot(col(i), col(i)));
      for (std::size_t k = 0; k < i; ++k) v -= mu[i][k] * mu[i][k] * norm[k];
      norm[i] = v;
    }
    auto size_reduce = [&](std::size_t k, std::size_t l) {
      if (abs(mu[k][l]) * 2 <= 1) return;
      const Integer q = nearest(mu[k][l]);
      axpy(col(k), col(l), -q);
      mu[k][l] -= q;
      for (std::size_t i = 0; i < l; ++i) mu[k][i] -= q * mu[l][i];
    };
    const mpq_class delta(3, 4);
    std::size_t k = 1;
    while (k < n) {
      size_reduce(k, k - 1);
      if (norm[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * norm[k - 1]) {
        swap_columns(col(k), col(k - 1));
        for (std::size_t j = 0; j + 1 < k; ++j) std::swap(mu[k][j], mu[k - 1][j]);
        const mpq_class m = mu[k][k - 1];
        const mpq_class b = norm[k] + m * m * norm[k - 1];
        mu[k][k - 1] = m * norm[k - 1] / b;
        norm[k] = norm[k - 1] * norm[k] / b;
        norm[k - 1] = b;
        for (std::size_t i = k + 1; i < n; ++i) {
          const mpq_class t = mu[i][k];
          mu[i][k] = mu[i][k - 1] - m * t;
          mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k];
        }
        k = std::max<std::size_t>(1, k - 1);
      } else {
        for (std::size_t l = k - 1; l-- > 0;) size_reduce(k, l);
        ++k;
      }
    }
  }

  // Zeroes work(row, j) into column p with a unimodular 2x2 column operation.
  void combine(std::size_t row, std::size_t p, std::size_t j) {
    const Integer a = work_(row, p);
    const Integer b = work_(row, j);
    if (a == 0) {
      swap_columns(p, j);
      return;
    }
    if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
      axpy(j, p, -(b / a));
      return;
    }
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    const Integer a_g = a / g;
    const Integer b_g = b / g;
    // [col_p col_j] <- [col_p col_j] * [[s, -b/g], [t, a/g]], determinant 1.
    for (IntMatrix* mat : {&work_, &transform_}) {
      for (std::size_t r = 0; r < mat->rows(); ++r) {
        const Integer x = (*mat)(r, p);
        const Integer y = (*mat)(r, j);
        (*mat)(r, p) = s * x + t * y;
        (*mat)(r, j) = a_g * y - b_g * x;
        track((*mat)(r, p));
        track((*mat)(r, j));
      }
    }
  }

  // col_dst += factor * col_src
  void axpy(std::size_t dst, std::size_t src, const Integer& factor) {
    for (IntMatrix* mat : {&work_, &transform_}) {
      for (std::size_t r = 0; r < mat->rows(); ++r) {
        (*mat)(r, dst) += factor * (*mat)(r, src);
        track((*mat)(r, dst));
      }
    }
  }

  void swap_columns(std::size_t x, std::size_t y) {
    for (IntMatrix* mat : {&work_, &transform_}) {
      for (std::size_t r = 0; r < mat->rows(); ++r) std::swap((*mat)(r, x), (*mat)(r, y));
    }
  }

  void negate(std::size_t c) {
    for (IntMatrix* mat : {&work_, &transform_}) {
      for (std::size_t r = 0; r < mat->rows(); ++r) (*mat)(r, c) = -(*mat)(r, c);
    }
  }

  void track(const Integer& v) {
    if (stats_ && v != 0) {
      stats_->max_bits = std::max(stats_->max_bits, mpz_sizeinbase(v.get_mpz_t(), 2));
    }
  }

  IntMatrix work_;
  IntMatrix transform_;
  EliminationStats* stats_;
  std::size_t reduce_above_ = 0;
  std::vector<std::size_t> pivot_rows_;
};

std::vector<IntVector> trailing_columns(const IntMatrix& u, std::size_t from) {
  std::vector<IntVector> out;
  for (std::size_t c = from; c < u.cols(); ++c) out.push_back(u.column(c));
  return out;
}

}  // namespace

std::optional<DiophantineSolution> solve_diophantine(const IntMatrix& a,
                                                     std::span<const Integer> b,
                                                     EliminationStats* stats) {
  if (b.size() != a.rows()) throw std::invalid_argument("right-hand side has wrong dimension");
  const ColumnEchelon ech(a, stats);
  const IntMatrix& l = ech.echelon();
  const std::size_t rank = ech.rank();

  IntVector residual(b.begin(), b.end());
  IntVector y(a.cols(), Integer(0));
  for (std::size_t k = 0; k < rank; ++k) {
    const std::size_t row = ech.pivot_rows()[k];
    if (!mpz_divisible_p(residual[row].get_mpz_t(), l(row, k).get_mpz_t())) return std::nullopt;
    y[k] = residual[row] / l(row, k);
    for (std::size_t r = row; r < a.rows(); ++r) residual[r] -= y[k] * l(r, k);
  }
  if (std::any_of(residual.begin(), residual.end(), [](const Integer& v) { return v != 0; })) {
    return std::nullopt;
  }

  DiophantineSolution solution;
  solution.particular = ech.transform() * y;
  solution.kernel_basis = trailing_columns(ech.transform(), rank);
  return solution;
}

std::vector<IntVector> kernel_basis(const IntMatrix& a, EliminationStats* stats) {
  const ColumnEchelon ech(a, stats);
  return trailing_columns(ech.transform(), ech.rank());
}

}  // namespace normsim
