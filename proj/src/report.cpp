#include "mincomb/report.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <ctime>
#include <set>
#include <sstream>

#include "mincomb/json_io.hpp"

namespace mincomb {

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::array<char, 32> buf{};
  std::strftime(buf.data(), buf.size(), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf.data();
}

Json analyze_input(const AnalyzeOptions& o) {
  return Json{{"command", "analyze"},
              {"n", o.n},
              {"d", o.d},
              {"weyl_only", o.weyl_only},
              {"interior_only", o.interior_only},
              {"k_max", o.k_max ? Json(*o.k_max) : Json(nullptr)}};
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

bool bool_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_boolean()) throw std::invalid_argument(std::string(key) + " must be a boolean");
  return v.get<bool>();
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw std::invalid_argument(std::string(key) + " must be an integer");
  return v.get<int>();
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw std::invalid_argument(std::string(key) + " must be a string");
  return v.get<std::string>();
}

// ---- text rendering -------------------------------------------------------

std::string point_list(const std::vector<Vector>& pts) {
  if (pts.size() == 1) return to_string(pts[0]);
  std::string out = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ", ";
    out += to_string(pts[i]);
  }
  return out + "}";
}

std::vector<Vector> candidate_points(const CriticalCandidate& c, int n) {
  std::vector<Vector> pts;
  for (const auto& alpha : c.support) pts.push_back(weight_of(alpha, n));
  return pts;
}

struct Row {
  std::string beta, s, f, m;
};

std::vector<Row> table_rows(const AnalysisReport& report) {
  const auto names = default_variable_names(report.n);
  std::vector<Row> rows;
  for (const auto& rec : report.records) {
    for (const auto& cand : rec.candidates) {
      std::string f = display_form(cand.candidate, names);
      if (!cand.candidate.verified) f += "  [rejected: moment matrix not diag(beta)]";
      rows.push_back(Row{to_string(rec.beta), point_list(candidate_points(cand.candidate, report.n)), std::move(f),
                         rec.critical_value.to_string()});
    }
  }
  return rows;
}

std::string render_table(const std::vector<std::array<std::string, 4>>& rows) {
  std::array<std::size_t, 4> width{};
  for (const auto& r : rows)
    for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], r[c].size());
  std::ostringstream os;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t c = 0; c < 4; ++c) {
      os << rows[i][c];
      if (c < 3) os << std::string(width[c] - rows[i][c].size(), ' ') << " | ";
    }
    os << "\n";
    if (i == 0) {
      for (std::size_t c = 0; c < 4; ++c) os << std::string(width[c], '-') << (c < 3 ? "-+-" : "");
      os << "\n";
    }
  }
  return os.str();
}

std::string latex_rational(const Rational& r) {
  if (r.is_integer()) return r.to_string();
  const Integer num = r.numerator();
  const std::string body = "\\frac{" + Integer(abs(num)).get_str() + "}{" + r.denominator().get_str() + "}";
  return num < 0 ? "-" + body : body;
}

std::string latex_vector(const Vector& v) {
  std::string out = "\\left(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += latex_rational(v[i]);
  }
  return out + "\\right)";
}

std::string latex_radical(const RadicalScalar& r) {
  if (r.is_zero()) return "0";
  std::string out;
  for (const auto& [radicand, coef] : r.terms()) {
    if (!out.empty()) out += coef.sign() < 0 ? " - " : " + ";
    const Rational c = out.empty() ? coef : abs(coef);
    if (radicand == 1) {
      out += latex_rational(c);
      continue;
    }
    if (c == Rational(-1)) out += "-";
    else if (c != Rational(1)) out += latex_rational(c);
    out += "\\sqrt{" + radicand.get_str() + "}";
  }
  return out;
}

std::string latex_monomial(const MultiIndex& alpha, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < alpha.vars(); ++i) {
    if (alpha[i] == 0) continue;
    out += names[i];
    if (alpha[i] > 1) out += "^{" + std::to_string(alpha[i]) + "}";
  }
  return out.empty() ? "1" : out;
}

std::string latex_polynomial(const RadicalPolynomial& f, std::span<const std::string> names) {
  std::string out;
  for (const auto& [alpha, coef] : f.terms()) {
    if (!out.empty()) out += " + ";
    if (coef != RadicalScalar(1)) out += latex_radical(coef);
    out += latex_monomial(alpha, names);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

TooLargeError::TooLargeError(std::size_t count, std::size_t limit)
    : std::runtime_error("too-large: " + std::to_string(count) + " monomials exceed the limit of " +
                         std::to_string(limit)),
      count_(count) {}

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xF];
  }
  return out;
}

AnalysisReport analyze(const AnalyzeOptions& options) {
  if (options.n < 2 || options.d < 1) throw std::invalid_argument("analyze needs n >= 2 and d >= 1");
  const Integer count = binomial(options.n + options.d - 1, options.d);
  if (count > Integer(static_cast<unsigned long>(options.max_monomials))) {
    throw TooLargeError(count.fits_ulong_p() ? count.get_ui() : SIZE_MAX, options.max_monomials);
  }

  const WeightTable table(options.n, options.d);
  const PointSet points = table.point_set();

  AnalysisReport report;
  report.n = options.n;
  report.d = options.d;
  report.weyl_only = options.weyl_only;
  report.interior_only = options.interior_only;
  report.k_max = options.k_max;
  report.metadata.input_digest = sha256_hex(analyze_input(options).dump());
  if (!options.reproducible) report.metadata.timestamp = utc_timestamp();

  for (auto& mc : minimal_combinations(points, {.k_max = options.k_max, .threads = options.threads})) {
    if (options.weyl_only && !in_weyl_chamber(mc.beta)) continue;
    const bool interior = table.in_polytope_interior(mc.beta);
    if (options.interior_only && !interior) continue;

    ReportRecord rec;
    rec.beta = mc.beta;
    rec.norm_sq = mc.norm_sq;
    rec.critical_value = sqrt_rational(mc.norm_sq);
    rec.interior = interior;
    std::set<std::size_t> strata;
    for (std::size_t i = 0; i < mc.certificates.size(); ++i) {
      const Certificate& cert = mc.certificates[i];
      strata.insert(cert.k);
      std::vector<MultiIndex> support;
      for (auto idx : cert.subset) support.push_back(table[idx].alpha);
      rec.candidates.push_back(CandidateRecord{i, build_f_beta(mc.beta, support, cert.weights, table)});
    }
    rec.strata.assign(strata.begin(), strata.end());
    rec.certificates = std::move(mc.certificates);
    report.records.push_back(std::move(rec));
  }
  return report;
}

Format parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "table") return Format::table;
  if (name == "latex") return Format::latex;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string render(const AnalysisReport& report, Format format) {
  const auto names = default_variable_names(report.n);
  switch (format) {
    case Format::json: {
      Json records = Json::array();
      for (const auto& rec : report.records) {
        Json certs = Json::array();
        for (const auto& c : rec.certificates) certs.push_back(to_json(c));
        Json cands = Json::array();
        for (const auto& c : rec.candidates) {
          Json entry = Json{{"certificate", c.certificate}, {"display", display_form(c.candidate, names)}};
          entry.update(to_json(c.candidate));
          cands.push_back(std::move(entry));
        }
        records.push_back(Json{{"beta", to_json(rec.beta)},
                               {"norm_sq", to_json(rec.norm_sq)},
                               {"M", to_json(rec.critical_value)},
                               {"strata", rec.strata},
                               {"interior", rec.interior},
                               {"certificates", std::move(certs)},
                               {"candidates", std::move(cands)}});
      }
      const Json meta{{"tool", report.metadata.tool},
                      {"version", report.metadata.version},
                      {"timestamp", report.metadata.timestamp ? Json(*report.metadata.timestamp) : Json(nullptr)},
                      {"input_digest", report.metadata.input_digest}};
      const Json out{{"metadata", meta},
                     {"n", report.n},
                     {"d", report.d},
                     {"weyl_only", report.weyl_only},
                     {"interior_only", report.interior_only},
                     {"k_max", report.k_max ? Json(*report.k_max) : Json(nullptr)},
                     {"records", std::move(records)}};
      return out.dump(2) + "\n";
    }
    case Format::table: {
      std::vector<std::array<std::string, 4>> rows{{"beta", "S", "f", "M(f)"}};
      for (auto& r : table_rows(report)) rows.push_back({r.beta, r.s, r.f, r.m});
      return render_table(rows);
    }
    case Format::latex: {
      std::ostringstream os;
      os << "\\begin{tabular}{llll}\n\\hline\n$\\beta$ & $S$ & $f$ & $M(f)$ \\\\\n\\hline\n";
      for (const auto& rec : report.records) {
        for (const auto& cand : rec.candidates) {
          std::string s;
          for (const auto& p : candidate_points(cand.candidate, report.n)) {
            if (!s.empty()) s += ", ";
            s += latex_vector(p);
          }
          std::string f = latex_polynomial(display_polynomial(cand.candidate), names);
          if (!cand.candidate.verified) f += " \\text{ (rejected)}";
          os << "$" << latex_vector(rec.beta) << "$ & $" << s << "$ & $" << f << "$ & $"
             << latex_radical(rec.critical_value) << "$ \\\\\n";
        }
      }
      os << "\\hline\n\\end{tabular}\n";
      return os.str();
    }
  }
  return {};
}

AnalysisReport parse_report(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  AnalysisReport report;
  const Json& meta = field(j, "metadata");
  report.metadata.tool = string_field(meta, "tool");
  report.metadata.version = string_field(meta, "version");
  const Json& ts = field(meta, "timestamp");
  if (!ts.is_null()) report.metadata.timestamp = string_field(meta, "timestamp");
  report.metadata.input_digest = string_field(meta, "input_digest");
  report.n = int_field(j, "n");
  report.d = int_field(j, "d");
  report.weyl_only = bool_field(j, "weyl_only");
  report.interior_only = bool_field(j, "interior_only");
  const Json& k = field(j, "k_max");
  if (!k.is_null()) {
    if (!k.is_number_unsigned()) throw std::invalid_argument("k_max must be a non-negative integer");
    report.k_max = k.get<std::size_t>();
  }
  const Json& records = field(j, "records");
  if (!records.is_array()) throw std::invalid_argument("records must be an array");
  for (const auto& r : records) {
    ReportRecord rec;
    rec.beta = vector_from_json(field(r, "beta"));
    rec.norm_sq = rational_from_json(field(r, "norm_sq"));
    rec.critical_value = radical_from_json(field(r, "M"));
    for (const auto& s : field(r, "strata")) rec.strata.push_back(s.get<std::size_t>());
    rec.interior = bool_field(r, "interior");
    for (const auto& c : field(r, "certificates")) rec.certificates.push_back(certificate_from_json(c));
    for (const auto& c : field(r, "candidates")) {
      const Json& idx = field(c, "certificate");
      if (!idx.is_number_unsigned()) throw std::invalid_argument("certificate index must be a non-negative integer");
      rec.candidates.push_back(CandidateRecord{idx.get<std::size_t>(), candidate_from_json(c)});
    }
    report.records.push_back(std::move(rec));
  }
  return report;
}

std::string render_mincomb(const PointSet& a, const std::vector<MinimalCombination>& result, Format format,
                           const std::vector<OracleDelta>* oracle) {
  switch (format) {
    case Format::json: {
      Json out = Json::array();
      for (std::size_t i = 0; i < result.size(); ++i) {
        Json rec = to_json(result[i]);
        if (oracle) rec["oracle"] = Json{{"max_abs_delta", (*oracle)[i].max_abs_delta}};
        out.push_back(std::move(rec));
      }
      return out.dump(2) + "\n";
    }
    case Format::table: {
      std::vector<std::array<std::string, 4>> rows{{"beta", "k", "S", "norm^2"}};
      for (const auto& mc : result) {
        for (const auto& c : mc.certificates) {
          std::vector<Vector> pts;
          for (auto idx : c.subset) pts.push_back(a[idx]);
          rows.push_back({to_string(mc.beta), std::to_string(c.k), point_list(pts), mc.norm_sq.to_string()});
        }
      }
      std::string out = render_table(rows);
      if (oracle) {
        double worst = 0.0;
        for (const auto& d : *oracle) worst = std::max(worst, d.max_abs_delta);
        std::ostringstream os;
        os << "oracle max |delta| = " << worst << "\n";
        out += os.str();
      }
      return out;
    }
    case Format::latex: {
      std::ostringstream os;
      os << "\\begin{tabular}{llll}\n\\hline\n$\\beta$ & $k$ & $S$ & $\\|\\beta\\|^2$ \\\\\n\\hline\n";
      for (const auto& mc : result) {
        for (const auto& c : mc.certificates) {
          std::string s;
          for (auto idx : c.subset) {
            if (!s.empty()) s += ", ";
            s += latex_vector(a[idx]);
          }
          os << "$" << latex_vector(mc.beta) << "$ & " << c.k << " & $" << s << "$ & $" << latex_rational(mc.norm_sq)
             << "$ \\\\\n";
        }
      }
      os << "\\hline\n\\end{tabular}\n";
      return os.str();
    }
  }
  return {};
}

}  // namespace mincomb
