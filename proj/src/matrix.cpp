#include "mincomb/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace mincomb {

namespace {

using IntegerGrid = std::vector<std::vector<Integer>>;

// Scales each row by the lcm of its denominators. Row scaling by a nonzero
// factor preserves rank and the solution set of an augmented system.
IntegerGrid clear_denominators(const RationalMatrix& a) {
  IntegerGrid out(a.rows(), std::vector<Integer>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < a.cols(); ++c) l = lcm(l, a(r, c).denominator());
    for (std::size_t c = 0; c < a.cols(); ++c) out[r][c] = a(r, c).numerator() * (l / a(r, c).denominator());
  }
  return out;
}

// In-place Bareiss elimination restricted to the first `pivot_cols` columns.
// Returns the pivot column of each pivot row; the trailing columns are
// carried along. Every division is exact.
std::vector<std::size_t> bareiss(IntegerGrid& m, std::size_t pivot_cols) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  RationalMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("from_columns: column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector RationalMatrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      mpq_class acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k).raw() * b(k, j).raw();
      out(i, j) = Rational(acc);
    }
  }
  return out;
}

Vector operator*(const RationalMatrix& a, const Vector& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    mpq_class acc = 0;
    for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k).raw() * x[k].raw();
    out[i] = Rational(acc);
  }
  return out;
}

std::optional<Vector> rat_solve(const RationalMatrix& a, const Vector& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("rat_solve: matrix is not square");
  if (b.size() != n) throw std::invalid_argument("rat_solve: right-hand side has wrong length");

  RationalMatrix augmented(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented(r, c) = a(r, c);
    augmented(r, n) = b[r];
  }
  IntegerGrid m = clear_denominators(augmented);
  const auto pivots = bareiss(m, n);
  if (pivots.size() < n) return std::nullopt;

  Vector x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc(m[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(m[i][j]) * x[j];
    x[i] = acc / Rational(m[i][i]);
  }
  return x;
}

std::size_t rank(const RationalMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  IntegerGrid m = clear_denominators(a);
  return bareiss(m, a.cols()).size();
}

}  // namespace mincomb
