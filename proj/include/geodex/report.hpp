#ifndef GEODEX_REPORT_HPP
#define GEODEX_REPORT_HPP

#include <string>
#include <vector>

#include "geodex/classify.hpp"

namespace geodex {

inline constexpr const char* kToolVersion = "1.0.0";

struct PhaseTimings {
  double construction_ms = 0;
  double aut_ms = 0;
  double classify_ms = 0;
};

// a classification report plus provenance and timing, the unit of CLI output
struct ReportDocument {
  std::string version = kToolVersion;
  std::string source_id;
  std::string provenance;  // "family" or "external"
  ClassificationReport report;
  PhaseTimings timings;
  std::vector<std::string> warnings;
};

// JSON with a versioned "schema": 1 field; lossless round-trip via from_json
std::string to_json(const ReportDocument& doc);
ReportDocument from_json(const std::string& text);

// fixed column order: id, n, valency, array, d, g, s, autOrder,
// geodesicLevel, GT, DT
std::string tsv_header();
std::string to_tsv_row(const ReportDocument& doc);

}  // namespace geodex

#endif
