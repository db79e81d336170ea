#include "mincomb/engine.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "mincomb/matrix.hpp"

namespace mincomb {

namespace {

RationalMatrix difference_matrix(std::span<const Vector> s, std::size_t pivot) {
  std::vector<Vector> columns;
  columns.reserve(s.size() - 1);
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (j != pivot) columns.push_back(s[j] - s[pivot]);
  }
  return RationalMatrix::from_columns(columns, s[pivot].size());
}

void check_non_empty(std::span<const Vector> s, const char* what) {
  if (s.empty()) throw std::invalid_argument(std::string(what) + ": empty point list");
}

std::vector<Vector> pick(const PointSet& a, const std::vector<std::size_t>& idx) {
  std::vector<Vector> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(a[i]);
  return out;
}

}  // namespace

PointSet::PointSet(std::size_t dim, std::vector<Vector> points) : dim_(dim), points_(std::move(points)) {
  if (dim_ == 0) throw std::invalid_argument("point set dimension must be positive");
  for (const auto& p : points_) {
    if (p.size() != dim_) throw std::invalid_argument("point " + to_string(p) + " has wrong dimension");
  }
  for (std::size_t i = 0; i < points_.size(); ++i)
    for (std::size_t j = i + 1; j < points_.size(); ++j)
      if (points_[i] == points_[j]) throw std::invalid_argument("duplicate point " + to_string(points_[i]));
}

bool affinely_independent(std::span<const Vector> s) {
  check_non_empty(s, "affinely_independent");
  if (s.size() == 1) return true;
  return rank(difference_matrix(s, 0)) == s.size() - 1;
}

Vector min_square(std::span<const Vector> s, std::size_t pivot) {
  check_non_empty(s, "min_square");
  if (pivot >= s.size()) throw std::out_of_range("min_square: pivot index out of range");
  if (s.size() == 1) return s[0];
  const RationalMatrix b = difference_matrix(s, pivot);
  const RationalMatrix bt = b.transpose();
  const auto y = rat_solve(bt * b, bt * s[pivot]);
  if (!y) throw std::invalid_argument("min_square: point set is affinely dependent");
  return s[pivot] - b * *y;
}

Vector barycentric(std::span<const Vector> s, const Vector& x) {
  check_non_empty(s, "barycentric");
  Vector nu(s.size());
  if (s.size() == 1) {
    if (x != s[0]) throw NotInHullError("point " + to_string(x) + " is not in the affine hull");
    nu[0] = 1;
    return nu;
  }
  const RationalMatrix b = difference_matrix(s, 0);
  const RationalMatrix bt = b.transpose();
  const Vector rhs = x - s[0];
  const auto tail = rat_solve(bt * b, bt * rhs);
  if (!tail) throw std::invalid_argument("barycentric: point set is affinely dependent");
  if (b * *tail != rhs) throw NotInHullError("point " + to_string(x) + " is not in the affine hull");
  Rational head = 1;
  for (std::size_t j = 0; j < tail->size(); ++j) {
    nu[j + 1] = (*tail)[j];
    head -= (*tail)[j];
  }
  nu[0] = head;
  return nu;
}

std::optional<TauCandidate> tau_candidate(std::span<const Vector> s) {
  if (s.empty() || !affinely_independent(s)) return std::nullopt;
  Vector beta = min_square(s);
  Vector weights = barycentric(s, beta);
  for (const auto& w : weights) {
    if (w.sign() <= 0) return std::nullopt;
  }
  return TauCandidate{std::move(beta), std::move(weights)};
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k == 0 || k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<MinimalCombination> minimal_combinations(const PointSet& a, const EnumerationOptions& options) {
  if (a.size() == 0) throw std::invalid_argument("minimal_combinations: empty point set");
  const std::size_t k_max = std::min(options.k_max.value_or(a.dim()), a.size());
  const unsigned workers = std::max(1U, options.threads);

  std::map<Vector, MinimalCombination> by_beta;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const auto subsets = combinations(a.size(), k);
    std::vector<std::optional<TauCandidate>> found(subsets.size());

    auto work = [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) found[i] = tau_candidate(pick(a, subsets[i]));
    };
    if (workers == 1 || subsets.size() < 2 * workers) {
      work(0, subsets.size());
    } else {
      std::vector<std::jthread> pool;
      const std::size_t chunk = (subsets.size() + workers - 1) / workers;
      for (std::size_t begin = 0; begin < subsets.size(); begin += chunk) {
        pool.emplace_back(work, begin, std::min(subsets.size(), begin + chunk));
      }
    }

    // Merge in subset order, so certificate lists come out sorted by (k, subset).
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      if (!found[i]) continue;
      auto& entry = by_beta[found[i]->beta];
      if (entry.certificates.empty()) {
        entry.beta = found[i]->beta;
        entry.norm_sq = norm_sq(entry.beta);
      }
      entry.certificates.push_back(Certificate{k, subsets[i], std::move(found[i]->weights)});
    }
  }

  std::vector<MinimalCombination> out;
  out.reserve(by_beta.size());
  for (auto& [beta, mc] : by_beta) out.push_back(std::move(mc));
  std::stable_sort(out.begin(), out.end(),
                   [](const MinimalCombination& x, const MinimalCombination& y) { return x.norm_sq < y.norm_sq; });
  return out;
}

Vector tau_full(std::span<const Vector> s) {
  check_non_empty(s, "tau_full");
  // Affinely independent subsets have at most dim + 1 points.
  const std::size_t max_k = std::min(s.size(), s[0].size() + 1);
  std::optional<Vector> best;
  Rational best_norm;
  for (std::size_t k = 1; k <= max_k; ++k) {
    for (const auto& idx : combinations(s.size(), k)) {
      std::vector<Vector> subset;
      subset.reserve(k);
      for (auto i : idx) subset.push_back(s[i]);
      const auto cand = tau_candidate(subset);
      if (!cand) continue;
      const Rational n2 = norm_sq(cand->beta);
      if (!best || n2 < best_norm) {
        best = cand->beta;
        best_norm = n2;
      }
    }
  }
  // Singletons always certify, so a candidate exists.
  return *best;
}

}  // namespace mincomb
