// Exact solving of linear Diophantine systems A x = b over the integers.
//
// The solver brings A into column Hermite normal form A U = [L | 0] while
// tracking the unimodular U.  Columns of U facing zero columns span the
// integer kernel; a particular solution comes from forward substitution in
// the echelon part L.

#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "normsim/group.hpp"

namespace normsim {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector column(std::size_t c) const;
  IntVector operator*(std::span<const Integer> x) const;

  bool operator==(const IntMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct DiophantineSolution {
  IntVector particular;
  /// Spans the integer kernel of A; not canonical and possibly empty.
  std::vector<IntVector> kernel_basis;
};

/// Largest entry (in bits) seen in the working matrices during elimination.
struct EliminationStats {
  std::size_t max_bits = 0;
};

/// Returns std::nullopt when A x = b has no integer solution.
std::optional<DiophantineSolution> solve_diophantine(const IntMatrix& a,
                                                     std::span<const Integer> b,
                                                     EliminationStats* stats = nullptr);

std::vector<IntVector> kernel_basis(const IntMatrix& a, EliminationStats* stats = nullptr);

}  // namespace normsim
