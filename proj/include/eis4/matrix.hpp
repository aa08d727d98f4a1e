#pragma once

#include "eis4/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace eis4 {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalVector row(std::size_t i) const;
  RationalMatrix transpose() const;
  RationalVector apply(const RationalVector& x) const;
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::size_t mat_rank(const RationalMatrix& m);
/// Throws std::invalid_argument for a non-square matrix.
Rational mat_det(const RationalMatrix& m);
/// Particular solution of m x = b with free variables set to zero, or nullopt
/// when the system is inconsistent. Throws std::invalid_argument on size mismatch.
std::optional<RationalVector> mat_solve(const RationalMatrix& m, const RationalVector& b);
/// Basis of the right kernel, one vector per free column of the reduced echelon form.
std::vector<RationalVector> mat_kernel(const RationalMatrix& m);
/// Throws std::domain_error when singular.
RationalMatrix mat_inverse(const RationalMatrix& m);

}  // namespace eis4
