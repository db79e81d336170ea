#include "mincomb/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>

namespace mincomb {

namespace {

double inner(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

long double inner_ld(const std::vector<double>& a, const std::vector<double>& b) {
  long double acc = 0.0L;
  for (std::size_t i = 0; i < a.size(); ++i) acc += static_cast<long double>(a[i]) * b[i];
  return acc;
}

std::vector<double> combine(std::span<const std::vector<double>> s, const std::vector<double>& lambda) {
  std::vector<double> p(s[0].size(), 0.0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (lambda[i] == 0.0) continue;
    for (std::size_t c = 0; c < p.size(); ++c) p[c] += lambda[i] * s[i][c];
  }
  return p;
}

// Solves [G 1; 1^T 0] [mu; nu] = [0; 1] for the affine weights of the
// least-norm point of Aff(active); nullopt when the system is singular.
std::optional<std::vector<long double>> affine_weights(std::span<const std::vector<double>> s,
                                                  const std::vector<std::size_t>& active) {
  const std::size_t k = active.size();
  std::vector<std::vector<long double>> a(k + 1, std::vector<long double>(k + 2, 0.0L));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = inner_ld(s[active[i]], s[active[j]]);
    a[i][k] = 1.0;
    a[k][i] = 1.0;
  }
  a[k][k + 1] = 1.0;

  long double scale = 1.0L;
  for (const auto& row : a)
    for (long double v : row) scale = std::max(scale, std::abs(v));
  for (std::size_t col = 0; col <= k; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r <= k; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    if (std::abs(a[pivot][col]) < 1e-12 * scale) return std::nullopt;
    std::swap(a[col], a[pivot]);
    for (std::size_t r = 0; r <= k; ++r) {
      if (r == col) continue;
      const long double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= k + 1; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<long double> mu(k);
  for (std::size_t i = 0; i < k; ++i) mu[i] = a[i][k + 1] / a[i][i];
  return mu;
}

// Refines the Frank-Wolfe iterate by projecting onto the affine hull of its
// support, dropping points until the affine weights are all positive.
std::optional<std::vector<double>> polish(std::span<const std::vector<double>> s, const std::vector<double>& lambda) {
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (lambda[i] > 0.0) active.push_back(i);
  while (!active.empty()) {
    const auto mu = affine_weights(s, active);
    std::size_t drop = 0;
    if (!mu) {
      for (std::size_t i = 1; i < active.size(); ++i)
        if (lambda[active[i]] < lambda[active[drop]]) drop = i;
    } else {
      drop = static_cast<std::size_t>(std::min_element(mu->begin(), mu->end()) - mu->begin());
      if ((*mu)[drop] > 0.0L) {
        std::vector<double> q(s[0].size());
        for (std::size_t c = 0; c < q.size(); ++c) {
          long double acc = 0.0L;
          for (std::size_t i = 0; i < active.size(); ++i) acc += (*mu)[i] * s[active[i]][c];
          q[c] = static_cast<double>(acc);
        }
        return q;
      }
    }
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(drop));
  }
  return std::nullopt;
}

double duality_gap(std::span<const std::vector<double>> s, const std::vector<double>& p) {
  const long double pp = inner_ld(p, p);
  long double gap = pp - inner_ld(s[0], p);
  for (const auto& x : s) gap = std::max(gap, pp - inner_ld(x, p));
  return static_cast<double>(gap);
}

}  // namespace

std::vector<double> nearest_point_oracle(std::span<const std::vector<double>> s, const OracleOptions& options) {
  if (s.empty()) throw std::invalid_argument("nearest_point_oracle: empty point list");
  if (!(options.tol > 0.0)) throw std::invalid_argument("nearest_point_oracle: tol must be positive");
  const std::size_t m = s.size();
  for (const auto& x : s) {
    if (x.size() != s[0].size()) throw std::invalid_argument("nearest_point_oracle: points differ in dimension");
  }

  std::size_t start = 0;
  for (std::size_t i = 1; i < m; ++i) {
    if (inner(s[i], s[i]) < inner(s[start], s[start])) start = i;
  }
  std::vector<double> lambda(m, 0.0);
  lambda[start] = 1.0;
  std::vector<double> p = s[start];

  for (int iter = 0; iter < options.max_iterations; ++iter) {
    std::vector<double> grad(m);
    for (std::size_t i = 0; i < m; ++i) grad[i] = inner(s[i], p);

    const auto fw = static_cast<std::size_t>(std::min_element(grad.begin(), grad.end()) - grad.begin());
    std::size_t away = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (lambda[i] > 0.0 && (away == m || grad[i] > grad[away])) away = i;
    }

    std::vector<double> to_fw(p.size());
    std::vector<double> from_away(p.size());
    for (std::size_t c = 0; c < p.size(); ++c) {
      to_fw[c] = s[fw][c] - p[c];
      from_away[c] = p[c] - s[away][c];
    }
    const double fw_gap = -inner(p, to_fw);
    if (fw_gap <= options.tol) return p;
    if (fw_gap <= 1e-6) {
      const auto q = polish(s, lambda);
      if (q && duality_gap(s, *q) <= options.tol) return *q;
    }
    const double away_gap = -inner(p, from_away);

    const bool forward = fw_gap >= away_gap;
    const std::vector<double>& dir = forward ? to_fw : from_away;
    const double max_step = forward ? 1.0 : lambda[away] / (1.0 - lambda[away]);
    const double dd = inner(dir, dir);
    if (dd == 0.0) break;
    const double step = std::clamp(-inner(p, dir) / dd, 0.0, max_step);

    if (forward) {
      for (auto& l : lambda) l *= (1.0 - step);
      lambda[fw] += step;
    } else {
      for (auto& l : lambda) l *= (1.0 + step);
      lambda[away] -= step;
      if (step == max_step) lambda[away] = 0.0;
    }
    for (auto& l : lambda) l = std::max(l, 0.0);
    p = combine(s, lambda);
  }
  std::ostringstream msg;
  msg << "nearest_point_oracle: duality gap above " << options.tol << " after " << options.max_iterations
      << " iterations";
  throw OracleFailedError(msg.str());
}

std::vector<double> nearest_point_oracle(std::span<const Vector> s, const OracleOptions& options) {
  std::vector<std::vector<double>> points;
  points.reserve(s.size());
  for (const auto& v : s) points.push_back(to_double(v));
  return nearest_point_oracle(std::span<const std::vector<double>>(points), options);
}

}  // namespace mincomb
