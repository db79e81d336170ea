#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mincomb/engine.hpp"
#include "mincomb/rational.hpp"

namespace mincomb {

// Exponent vector of a monomial x_1^{i_1} ... x_n^{i_n}.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exponents);

  const std::vector<int>& exponents() const { return exponents_; }
  std::size_t vars() const { return exponents_.size(); }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return exponents_[i]; }

  // Plain lexicographic comparison on exponents; reports use the reverse
  // (x > y > z: x^3 first).
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) { return a.exponents_ <=> b.exponents_; }
  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.exponents_ == b.exponents_; }

 private:
  std::vector<int> exponents_;
  int degree_ = 0;
};

// Monomial order used throughout: x^3 before x^2y before ... before z^3.
struct DescendingLex {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const { return b < a; }
};

// All exponent vectors with n entries summing to d, in descending lex order.
std::vector<MultiIndex> multi_indices(int n, int d);

// ||x^alpha||^2 = i_1! ... i_n! / d!
Rational monomial_norm_sq(const MultiIndex& alpha);

// (i_1 - d/n, ..., i_n - d/n)
Vector weight_of(const MultiIndex& alpha, int n);

bool in_weyl_chamber(std::span<const Rational> v);

// "x", "y", "z", "w" for n <= 4, otherwise "x1", ..., "xn".
std::vector<std::string> default_variable_names(int n);

// "x^2y", "xyz", "xw^2"; the constant monomial renders as "1".
std::string monomial_string(const MultiIndex& alpha, std::span<const std::string> names);

Integer binomial(int n, int k);

struct WeightEntry {
  MultiIndex alpha;
  Vector weight;
  Rational norm_sq;

  friend bool operator==(const WeightEntry&, const WeightEntry&) = default;
};

// Weights of all degree-d monomials in n variables, in descending lex order.
class WeightTable {
 public:
  WeightTable(int n, int d);

  int n() const { return n_; }
  int d() const { return d_; }
  const std::vector<WeightEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const WeightEntry& operator[](std::size_t i) const { return entries_[i]; }

  // Throws std::out_of_range for a foreign multi-index.
  const WeightEntry& at(const MultiIndex& alpha) const;
  std::size_t index_of(const MultiIndex& alpha) const;

  PointSet point_set() const;

  // beta is in the relative interior of the weight polytope, i.e. the convex
  // hull of the pure powers: every coordinate exceeds -d/n.
  bool in_polytope_interior(std::span<const Rational> beta) const;

 private:
  int n_;
  int d_;
  std::vector<WeightEntry> entries_;
  std::map<MultiIndex, std::size_t> index_;
};

}  // namespace mincomb
