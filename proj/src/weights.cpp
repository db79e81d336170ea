#include "mincomb/weights.hpp"

#include <numeric>
#include <stdexcept>

namespace mincomb {

namespace {

Integer factorial(int k) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

void fill_indices(int n, int remaining, std::vector<int>& prefix, std::vector<MultiIndex>& out) {
  if (static_cast<int>(prefix.size()) == n - 1) {
    prefix.push_back(remaining);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    prefix.push_back(e);
    fill_indices(n, remaining - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

MultiIndex::MultiIndex(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  for (int e : exponents_) {
    if (e < 0) throw std::invalid_argument("negative exponent in multi-index");
    degree_ += e;
  }
}

std::vector<MultiIndex> multi_indices(int n, int d) {
  if (n < 1 || d < 0) throw std::invalid_argument("multi_indices: need n >= 1 and d >= 0");
  std::vector<MultiIndex> out;
  std::vector<int> prefix;
  fill_indices(n, d, prefix, out);
  return out;
}

Rational monomial_norm_sq(const MultiIndex& alpha) {
  Integer num = 1;
  for (int e : alpha.exponents()) num *= factorial(e);
  return Rational(num, factorial(alpha.degree()));
}

Vector weight_of(const MultiIndex& alpha, int n) {
  if (static_cast<int>(alpha.vars()) != n) throw std::invalid_argument("weight_of: variable count mismatch");
  const Rational shift(alpha.degree(), n);
  Vector w;
  w.reserve(alpha.vars());
  for (int e : alpha.exponents()) w.push_back(Rational(e) - shift);
  return w;
}

bool in_weyl_chamber(std::span<const Rational> v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i - 1] < v[i]) return false;
  }
  return true;
}

std::vector<std::string> default_variable_names(int n) {
  if (n <= 4) {
    static const std::vector<std::string> short_names{"x", "y", "z", "w"};
    return {short_names.begin(), short_names.begin() + n};
  }
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::string monomial_string(const MultiIndex& alpha, std::span<const std::string> names) {
  if (names.size() != alpha.vars()) throw std::invalid_argument("monomial_string: name count mismatch");
  std::string out;
  for (std::size_t i = 0; i < alpha.vars(); ++i) {
    if (alpha[i] == 0) continue;
    out += names[i];
    if (alpha[i] > 1) out += "^" + std::to_string(alpha[i]);
  }
  return out.empty() ? "1" : out;
}

Integer binomial(int n, int k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

WeightTable::WeightTable(int n, int d) : n_(n), d_(d) {
  if (n < 1 || d < 1) throw std::invalid_argument("weight table needs n >= 1 and d >= 1");
  for (auto& alpha : multi_indices(n, d)) {
    index_.emplace(alpha, entries_.size());
    Vector w = weight_of(alpha, n);
    Rational ns = monomial_norm_sq(alpha);
    entries_.push_back(WeightEntry{std::move(alpha), std::move(w), std::move(ns)});
  }
}

const WeightEntry& WeightTable::at(const MultiIndex& alpha) const { return entries_.at(index_of(alpha)); }

std::size_t WeightTable::index_of(const MultiIndex& alpha) const {
  const auto it = index_.find(alpha);
  if (it == index_.end()) throw std::out_of_range("multi-index not in weight table");
  return it->second;
}

PointSet WeightTable::point_set() const {
  std::vector<Vector> points;
  points.reserve(entries_.size());
  for (const auto& e : entries_) points.push_back(e.weight);
  return PointSet(static_cast<std::size_t>(n_), std::move(points));
}

bool WeightTable::in_polytope_interior(std::span<const Rational> beta) const {
  const Rational floor_value = -Rational(d_, n_);
  for (const auto& b : beta) {
    if (b <= floor_value) return false;
  }
  return true;
}

}  // namespace mincomb
