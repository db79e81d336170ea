#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mincomb/engine.hpp"
#include "mincomb/moment.hpp"

namespace mincomb {

inline constexpr const char* kToolName = "mincomb";
inline constexpr const char* kToolVersion = "1.0.0";

class TooLargeError : public std::runtime_error {
 public:
  TooLargeError(std::size_t count, std::size_t limit);
  std::size_t count() const { return count_; }

 private:
  std::size_t count_;
};

struct CandidateRecord {
  std::size_t certificate = 0;  // index into ReportRecord::certificates
  CriticalCandidate candidate;

  friend bool operator==(const CandidateRecord&, const CandidateRecord&) = default;
};

struct ReportRecord {
  Vector beta;
  Rational norm_sq;
  RadicalScalar critical_value;
  std::vector<std::size_t> strata;  // distinct certificate sizes, ascending
  bool interior = false;            // relative interior of the weight polytope
  std::vector<Certificate> certificates;
  std::vector<CandidateRecord> candidates;

  friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

struct ReportMetadata {
  std::string tool = kToolName;
  std::string version = kToolVersion;
  std::optional<std::string> timestamp;  // absent in reproducible runs
  std::string input_digest;

  friend bool operator==(const ReportMetadata&, const ReportMetadata&) = default;
};

struct AnalysisReport {
  int n = 0;
  int d = 0;
  bool weyl_only = false;
  bool interior_only = false;
  std::optional<std::size_t> k_max;
  std::vector<ReportRecord> records;  // ascending norm_sq, ties by beta
  ReportMetadata metadata;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct AnalyzeOptions {
  int n = 3;
  int d = 3;
  bool weyl_only = false;
  bool interior_only = false;
  std::optional<std::size_t> k_max;
  std::size_t max_monomials = 35;
  unsigned threads = 1;
  bool reproducible = false;
};

// Weight table -> minimal combinations -> filters -> one candidate per certificate.
// Throws TooLargeError when the monomial count exceeds options.max_monomials.
AnalysisReport analyze(const AnalyzeOptions& options);

enum class Format { json, table, latex };
Format parse_format(std::string_view name);  // throws std::invalid_argument

std::string render(const AnalysisReport& report, Format format);

// Inverse of render(report, Format::json). Throws std::invalid_argument.
AnalysisReport parse_report(std::string_view json);

// Front end for arbitrary point sets.
struct OracleDelta {
  double max_abs_delta = 0.0;
};
std::string render_mincomb(const PointSet& a, const std::vector<MinimalCombination>& result, Format format,
                           const std::vector<OracleDelta>* oracle = nullptr);

// Hex SHA-256.
std::string sha256_hex(std::string_view data);

}  // namespace mincomb
