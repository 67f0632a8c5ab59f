#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lingagree/fuzzy_set.hpp"
#include "lingagree/intervals.hpp"

namespace lingagree {

enum class DataFormat { Csv, Json };

// Derived groups, never stored in a dataset.
inline constexpr std::string_view kAllGroup = "ALL";
inline constexpr std::string_view kProfessionalsGroup = "PS";
// Stored groups that make up kProfessionalsGroup.
inline constexpr std::string_view kPhysiotherapistGroup = "Physiotherapist";
inline constexpr std::string_view kSurgeonGroup = "Surgeon";

// Questionnaire order of the canonical term codes.
inline constexpr std::string_view kCanonicalTerms[] = {"ITD", "ED", "MD", "ALBD", "NAAD"};

// Maps a code or full name ("a little bit difficult") to its canonical code,
// case-insensitively. Labels outside the questionnaire come back trimmed but
// otherwise unchanged.
std::string canonical_term(std::string_view label);

struct SurveyRecord {
  std::string group;
  std::string participant_id;
  std::string term;  // canonical
  Interval interval;
  std::size_t line;  // CSV line or 1-based JSON array index
};

class SurveyDataset {
 public:
  // Validates every record against the scale and rejects duplicate
  // (group, participant, term) responses.
  SurveyDataset(Interval scale, std::vector<SurveyRecord> records);

  Interval scale() const noexcept { return scale_; }
  std::span<const SurveyRecord> records() const noexcept { return records_; }
  // Stored groups in order of first appearance.
  const std::vector<std::string>& groups() const noexcept { return groups_; }
  // Canonical terms in questionnaire order, then other labels by first appearance.
  const std::vector<std::string>& terms() const noexcept { return terms_; }

 private:
  Interval scale_;
  std::vector<SurveyRecord> records_;
  std::vector<std::string> groups_;
  std::vector<std::string> terms_;
};

inline const Interval kDefaultScale{0.0, 10.0};

// CSV needs the header `group,participant_id,term,l,r`; JSON is an array of
// objects with those keys. Errors carry `source_name:line`.
SurveyDataset load_survey(std::istream& in, DataFormat format, Interval scale = kDefaultScale,
                          std::string_view source_name = "input");

// Intervals of the matching records in file order. `group` may be a stored
// group, "PS" (physiotherapists and surgeons) or "ALL".
IntervalCollection group_collection(const SurveyDataset& ds, std::string_view group, std::string_view term);

enum class GammaMethod { Exact, Alpha };

struct ReportOptions {
  GammaMethod method = GammaMethod::Exact;
  std::size_t cuts = 10;
  std::size_t samples = kDefaultSamples;
};

struct ReportRow {
  std::string group;
  std::string term;
  std::size_t n;
  double height;
  double centroid;
  double gamma;
  double support_length;
  double core_length;
};

struct SkippedCell {
  std::string group;
  std::string term;
  std::string reason;
};

struct AgreementReport {
  std::vector<ReportRow> rows;
  std::vector<SkippedCell> skipped;
};

// One row per (group, term) with at least two responses: stored groups in
// first-appearance order followed by "ALL", terms in dataset order. Cells
// with fewer responses are listed in `skipped`.
AgreementReport report(const SurveyDataset& ds, const ReportOptions& options = {});

struct SeriesPoint {
  double x;
  double mu;
};

// `samples` evenly spaced points across the dataset scale with exact IAA membership.
std::vector<SeriesPoint> emit_series(const SurveyDataset& ds, std::string_view group, std::string_view term,
                                     std::size_t samples);

// Six significant digits, trailing zeros kept ("0.500000"), locale-free.
std::string format_real(double value);
// The value a reader gets back from format_real; used for JSON numbers.
double printed_value(double value);

void write_report(std::ostream& out, const AgreementReport& report, DataFormat format);
void write_series(std::ostream& out, std::span<const SeriesPoint> series, DataFormat format);

}  // namespace lingagree
