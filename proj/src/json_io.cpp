#include "mincomb/json_io.hpp"

#include <stdexcept>
#include <string>

namespace mincomb {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  return j;
}

std::string exponent_key(const MultiIndex& alpha) {
  std::string key;
  for (std::size_t i = 0; i < alpha.vars(); ++i) {
    if (i) key += ",";
    key += std::to_string(alpha[i]);
  }
  return key;
}

MultiIndex parse_exponent_key(const std::string& key) {
  std::vector<int> e;
  std::size_t pos = 0;
  while (pos <= key.size()) {
    const std::size_t comma = key.find(',', pos);
    const std::string part = key.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("malformed exponent key '" + key + "'");
    }
    e.push_back(std::stoi(part));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return MultiIndex(std::move(e));
}

std::size_t to_index(const Json& j) {
  if (!j.is_number_unsigned()) throw std::invalid_argument("expected a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("rational must be a \"p/q\" string");
}

Json to_json(std::span<const Rational> v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(to_json(r));
  return out;
}

Vector vector_from_json(const Json& j) {
  Vector out;
  for (const auto& e : array(j, "vector")) out.push_back(rational_from_json(e));
  return out;
}

Json to_json(const RadicalScalar& r) {
  Json out = Json::array();
  for (const auto& [radicand, coef] : r.terms()) {
    out.push_back(Json{{"coef", coef.to_string()}, {"radicand", radicand.get_str()}});
  }
  return out;
}

RadicalScalar radical_from_json(const Json& j) {
  RadicalScalar out;
  for (const auto& t : array(j, "radical")) {
    const Json& radicand = field(t, "radicand");
    if (!radicand.is_string()) throw std::invalid_argument("radicand must be a string");
    const std::string text = radicand.get<std::string>();
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("malformed radicand '" + text + "'");
    }
    out += RadicalScalar::term(rational_from_json(field(t, "coef")), Integer(text, 10));
  }
  return out;
}

Json to_json(const MultiIndex& alpha) { return Json(alpha.exponents()); }

MultiIndex multi_index_from_json(const Json& j) {
  std::vector<int> e;
  for (const auto& x : array(j, "multi-index")) {
    if (!x.is_number_integer()) throw std::invalid_argument("exponent must be an integer");
    e.push_back(x.get<int>());
  }
  return MultiIndex(std::move(e));
}

Json to_json(const MomentMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.size(); ++c) row.push_back(to_json(m(i, c)));
    out.push_back(std::move(row));
  }
  return out;
}

MomentMatrix moment_from_json(const Json& j) {
  const std::size_t n = array(j, "moment").size();
  MomentMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Json& row = array(j[i], "moment row");
    if (row.size() != n) throw std::invalid_argument("moment matrix must be square");
    for (std::size_t c = 0; c < n; ++c) m(i, c) = radical_from_json(row[c]);
  }
  return m;
}

Json to_json(const Certificate& c) {
  return Json{{"k", c.k}, {"subset", c.subset}, {"weights", to_json(c.weights)}};
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  c.k = to_index(field(j, "k"));
  for (const auto& i : array(field(j, "subset"), "subset")) c.subset.push_back(to_index(i));
  c.weights = vector_from_json(field(j, "weights"));
  return c;
}

Json to_json(const MinimalCombination& mc) {
  Json certs = Json::array();
  for (const auto& c : mc.certificates) certs.push_back(to_json(c));
  return Json{{"beta", to_json(mc.beta)}, {"norm_sq", to_json(mc.norm_sq)}, {"certificates", std::move(certs)}};
}

MinimalCombination minimal_combination_from_json(const Json& j) {
  MinimalCombination mc;
  mc.beta = vector_from_json(field(j, "beta"));
  mc.norm_sq = rational_from_json(field(j, "norm_sq"));
  for (const auto& c : array(field(j, "certificates"), "certificates")) mc.certificates.push_back(certificate_from_json(c));
  return mc;
}

Json to_json(const CriticalCandidate& c) {
  Json support = Json::array();
  for (const auto& alpha : c.support) support.push_back(to_json(alpha));
  Json coeff_sq = Json::object();
  for (const auto& [alpha, v] : c.coeff_sq) coeff_sq[exponent_key(alpha)] = to_json(v);
  return Json{{"beta", to_json(c.beta)},
              {"support", std::move(support)},
              {"q", to_json(c.q_weights)},
              {"coeff_sq", std::move(coeff_sq)},
              {"verified", c.verified},
              {"M", to_json(c.critical_value)},
              {"moment", to_json(c.moment)}};
}

CriticalCandidate candidate_from_json(const Json& j) {
  CriticalCandidate c;
  c.beta = vector_from_json(field(j, "beta"));
  for (const auto& alpha : array(field(j, "support"), "support")) c.support.push_back(multi_index_from_json(alpha));
  c.q_weights = vector_from_json(field(j, "q"));
  const Json& coeff_sq = field(j, "coeff_sq");
  if (!coeff_sq.is_object()) throw std::invalid_argument("coeff_sq must be an object");
  for (const auto& [key, v] : coeff_sq.items()) c.coeff_sq.emplace(parse_exponent_key(key), rational_from_json(v));
  const Json& verified = field(j, "verified");
  if (!verified.is_boolean()) throw std::invalid_argument("verified must be a boolean");
  c.verified = verified.get<bool>();
  c.critical_value = radical_from_json(field(j, "M"));
  c.moment = moment_from_json(field(j, "moment"));
  return c;
}

Json to_json(const WeightTable& t) {
  Json entries = Json::array();
  for (const auto& e : t.entries()) {
    entries.push_back(Json{{"alpha", to_json(e.alpha)}, {"weight", to_json(e.weight)}, {"norm_sq", to_json(e.norm_sq)}});
  }
  return Json{{"n", t.n()}, {"d", t.d()}, {"entries", std::move(entries)}};
}

Json to_json(const PointSet& a) {
  Json points = Json::array();
  for (const auto& p : a.points()) points.push_back(to_json(p));
  return Json{{"dim", a.dim()}, {"points", std::move(points)}};
}

PointSet point_set_from_json(const Json& j) {
  const std::size_t dim = to_index(field(j, "dim"));
  std::vector<Vector> points;
  for (const auto& p : array(field(j, "points"), "points")) points.push_back(vector_from_json(p));
  return PointSet(dim, std::move(points));
}

PointSet parse_point_set(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  return point_set_from_json(j);
}

}  // namespace mincomb
