#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "mincomb/rational.hpp"

namespace mincomb {

// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  // Matrix whose j-th column is columns[j]; all columns must share a length.
  static RationalMatrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  Vector column(std::size_t c) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
Vector operator*(const RationalMatrix& a, const Vector& x);

// Unique solution of A x = b, or nullopt when A is singular.
// Throws std::invalid_argument when A is not square or b has the wrong length.
std::optional<Vector> rat_solve(const RationalMatrix& a, const Vector& b);

std::size_t rank(const RationalMatrix& a);

}  // namespace mincomb
