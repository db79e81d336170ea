#pragma once

#include <string_view>
#include <vector>

#include "json.hpp"
#include "mincomb/engine.hpp"
#include "mincomb/moment.hpp"
#include "mincomb/radical.hpp"
#include "mincomb/weights.hpp"

namespace mincomb {

// Insertion-ordered, so emitted field order is fixed.
using Json = nlohmann::ordered_json;

// All from_json readers throw std::invalid_argument on malformed input.

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(std::span<const Rational> v);
Vector vector_from_json(const Json& j);

// [{"coef": "p/q", "radicand": "s"}, ...] in ascending radicand order.
Json to_json(const RadicalScalar& r);
RadicalScalar radical_from_json(const Json& j);

Json to_json(const MultiIndex& alpha);
MultiIndex multi_index_from_json(const Json& j);

Json to_json(const MomentMatrix& m);
MomentMatrix moment_from_json(const Json& j);

Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

Json to_json(const MinimalCombination& mc);
MinimalCombination minimal_combination_from_json(const Json& j);

Json to_json(const CriticalCandidate& c);
CriticalCandidate candidate_from_json(const Json& j);

Json to_json(const WeightTable& t);

// {"dim": n, "points": [["p/q", ...], ...]}
Json to_json(const PointSet& a);
PointSet point_set_from_json(const Json& j);
PointSet parse_point_set(std::string_view text);

}  // namespace mincomb
