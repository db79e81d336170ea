#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "mincomb/rational.hpp"

namespace mincomb {

class OracleFailedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleOptions {
  double tol = 1e-14;          // stop once the Frank-Wolfe duality gap on ||p||^2 is below this
  int max_iterations = 100000;
};

// Floating-point minimum-norm point of the convex hull of S, via Frank-Wolfe
// with away steps over the simplex of convex weights. Independent of the exact
// engine; used only for cross-checking. Throws OracleFailedError when the gap
// does not close within the iteration cap.
std::vector<double> nearest_point_oracle(std::span<const std::vector<double>> s, const OracleOptions& options = {});
std::vector<double> nearest_point_oracle(std::span<const Vector> s, const OracleOptions& options = {});

}  // namespace mincomb
