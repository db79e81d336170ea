#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mincomb/rational.hpp"

namespace mincomb {

// Finite point set in Q^dim. Points are distinct and keep their input order,
// which fixes subset indexing. The origin is allowed as a member.
class PointSet {
 public:
  PointSet(std::size_t dim, std::vector<Vector> points);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<Vector>& points() const { return points_; }
  const Vector& operator[](std::size_t i) const { return points_[i]; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::size_t dim_;
  std::vector<Vector> points_;
};

class NotInHullError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// One subset S of the input whose minimal square lies strictly inside its hull.
struct Certificate {
  std::size_t k = 0;                 // |S|
  std::vector<std::size_t> subset;   // ascending indices into the PointSet
  Vector weights;                    // barycentric coordinates, all > 0, sum 1

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct MinimalCombination {
  Vector beta;
  Rational norm_sq;
  std::vector<Certificate> certificates;  // sorted by (k, subset)

  friend bool operator==(const MinimalCombination&, const MinimalCombination&) = default;
};

// Least-norm point of the convex hull of S when S is affinely independent and
// that point is interior; the weights refer to the order of S.
struct TauCandidate {
  Vector beta;
  Vector weights;
};

// True iff the differences x_j - x_1 are linearly independent.
bool affinely_independent(std::span<const Vector> s);

// Least-norm point of Aff(S), computed as (I - B (B^T B)^{-1} B^T) x_pivot
// where B has columns x_j - x_pivot. Requires S affinely independent.
Vector min_square(std::span<const Vector> s, std::size_t pivot = 0);

// Affine coordinates of x with respect to S (sum to 1). Throws NotInHullError
// when x is not in Aff(S). Requires S affinely independent.
Vector barycentric(std::span<const Vector> s, const Vector& x);

std::optional<TauCandidate> tau_candidate(std::span<const Vector> s);

struct EnumerationOptions {
  std::optional<std::size_t> k_max;  // defaults to the ambient dimension
  unsigned threads = 1;
};

// All minimal combinations of A, enumerating subsets of size 1..k_max in
// lexicographic order. Results are sorted by (norm_sq, beta) and do not
// depend on the thread count.
std::vector<MinimalCombination> minimal_combinations(const PointSet& a, const EnumerationOptions& options = {});

// Exact least-norm point of the convex hull of an arbitrary non-empty S.
Vector tau_full(std::span<const Vector> s);

// Lexicographic k-subsets of {0, ..., n-1}.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

}  // namespace mincomb
