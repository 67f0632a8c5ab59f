#include "lingagree/survey.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <tuple>

#include "json.hpp"

#include "lingagree/agreement.hpp"
#include "lingagree/error.hpp"
#include "lingagree/iaa.hpp"

namespace lingagree {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string where(std::string_view source, std::size_t line) {
  return std::string(source) + ": line " + std::to_string(line) + ": ";
}

std::string record_at(std::string_view source, std::size_t index) {
  return std::string(source) + ": record " + std::to_string(index) + ": ";
}

bool is_derived_group(std::string_view group) { return group == kAllGroup || group == kProfessionalsGroup; }

}  // namespace

std::string canonical_term(std::string_view label) {
  static const std::map<std::string, std::string, std::less<>> aliases = {
      {"itd", "ITD"},   {"impossible to do", "ITD"},
      {"ed", "ED"},     {"extremely difficult", "ED"},
      {"md", "MD"},     {"moderately difficult", "MD"},
      {"albd", "ALBD"}, {"a little bit difficult", "ALBD"},
      {"naad", "NAAD"}, {"not at all difficult", "NAAD"},
  };
  const std::string_view trimmed = trim(label);
  auto it = aliases.find(lower(trimmed));
  return it != aliases.end() ? it->second : std::string(trimmed);
}

// --- dataset ----------------------------------------------------------------

SurveyDataset::SurveyDataset(Interval scale, std::vector<SurveyRecord> records)
    : scale_(scale), records_(std::move(records)) {
  std::set<std::tuple<std::string, std::string, std::string>> seen;
  std::vector<std::string> extra_terms;
  std::set<std::string> present_terms;
  for (SurveyRecord& rec : records_) {
    const std::string at = "line " + std::to_string(rec.line) + ": ";
    if (rec.group.empty() || rec.participant_id.empty() || rec.term.empty()) {
      throw Error(ErrorCode::ParseError, at + "empty field");
    }
    if (is_derived_group(rec.group)) {
      throw Error(ErrorCode::ParseError, at + "group name '" + rec.group + "' is reserved");
    }
    rec.term = canonical_term(rec.term);
    if (rec.interval.l() < scale_.l() || rec.interval.r() > scale_.r()) {
      throw Error(ErrorCode::RangeError, at + "interval [" + format_real(rec.interval.l()) + ", " +
                                             format_real(rec.interval.r()) + "] outside scale [" +
                                             format_real(scale_.l()) + ", " + format_real(scale_.r()) + "]");
    }
    if (!seen.emplace(rec.group, rec.participant_id, rec.term).second) {
      throw Error(ErrorCode::DuplicateResponse,
                  at + "participant '" + rec.participant_id + "' answered '" + rec.term + "' twice in group '" +
                      rec.group + "'");
    }
    if (std::find(groups_.begin(), groups_.end(), rec.group) == groups_.end()) groups_.push_back(rec.group);
    if (present_terms.insert(rec.term).second &&
        std::find(std::begin(kCanonicalTerms), std::end(kCanonicalTerms), rec.term) == std::end(kCanonicalTerms)) {
      extra_terms.push_back(rec.term);
    }
  }
  for (std::string_view code : kCanonicalTerms) {
    if (present_terms.count(std::string(code))) terms_.emplace_back(code);
  }
  terms_.insert(terms_.end(), extra_terms.begin(), extra_terms.end());
}

// --- loading ----------------------------------------------------------------

namespace {

constexpr std::string_view kColumns[] = {"group", "participant_id", "term", "l", "r"};

std::vector<std::string> split_csv(std::string_view line, std::string_view source, std::size_t line_no) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) throw Error(ErrorCode::ParseError, where(source, line_no) + "unterminated quote");
  for (std::string& f : fields) f = std::string(trim(f));
  return fields;
}

double parse_real(std::string_view text, std::string_view column, std::string_view source, std::size_t line_no) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::ParseError,
                where(source, line_no) + "column '" + std::string(column) + "' is not a number: '" +
                    std::string(text) + "'");
  }
  return value;
}

Interval checked_interval(double l, double r, const std::string& context) {
  try {
    return Interval(l, r);
  } catch (const Error& e) {
    throw Error(e.code(), context + "[" + format_real(l) + ", " + format_real(r) +
                              "] is not a valid interval");
  }
}

std::vector<SurveyRecord> read_csv(std::istream& in, std::string_view source) {
  std::vector<SurveyRecord> records;
  std::string raw;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (line_no == 1 && line.substr(0, 3) == "\xEF\xBB\xBF") line.remove_prefix(3);
    if (trim(line).empty()) continue;
    std::vector<std::string> fields = split_csv(line, source, line_no);
    if (!header_seen) {
      bool matches = fields.size() == std::size(kColumns);
      for (std::size_t i = 0; matches && i < fields.size(); ++i) matches = lower(fields[i]) == kColumns[i];
      if (!matches) {
        throw Error(ErrorCode::ParseError, where(source, line_no) + "expected header 'group,participant_id,term,l,r'");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != std::size(kColumns)) {
      throw Error(ErrorCode::ParseError, where(source, line_no) + "expected 5 fields, got " +
                                             std::to_string(fields.size()));
    }
    for (std::size_t i = 0; i < 3; ++i) {
      if (fields[i].empty()) {
        throw Error(ErrorCode::ParseError, where(source, line_no) + "empty '" + std::string(kColumns[i]) + "'");
      }
    }
    const double l = parse_real(fields[3], "l", source, line_no);
    const double r = parse_real(fields[4], "r", source, line_no);
    records.push_back({fields[0], fields[1], fields[2], checked_interval(l, r, where(source, line_no)), line_no});
  }
  if (!header_seen) throw Error(ErrorCode::ParseError, std::string(source) + ": missing CSV header");
  return records;
}

std::vector<SurveyRecord> read_json(std::istream& in, std::string_view source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string(source) + ": " + e.what());
  }
  if (!doc.is_array()) throw Error(ErrorCode::ParseError, std::string(source) + ": expected a JSON array");

  std::vector<SurveyRecord> records;
  std::size_t index = 0;
  for (const nlohmann::json& item : doc) {
    ++index;
    if (!item.is_object()) throw Error(ErrorCode::ParseError, record_at(source, index) + "record is not an object");
    auto text = [&](std::string_view key) {
      auto it = item.find(key);
      if (it == item.end()) {
        throw Error(ErrorCode::ParseError, record_at(source, index) + "missing '" + std::string(key) + "'");
      }
      if (it->is_string()) return it->get<std::string>();
      if (it->is_number_integer()) return it->dump();
      throw Error(ErrorCode::ParseError, record_at(source, index) + "'" + std::string(key) + "' must be a string");
    };
    auto number = [&](std::string_view key) {
      auto it = item.find(key);
      if (it == item.end() || !it->is_number()) {
        throw Error(ErrorCode::ParseError, record_at(source, index) + "'" + std::string(key) + "' must be a number");
      }
      return it->get<double>();
    };
    const double l = number("l");
    const double r = number("r");
    records.push_back({text("group"), text("participant_id"), text("term"), checked_interval(l, r, record_at(source, index)),
                       index});
  }
  return records;
}

}  // namespace

SurveyDataset load_survey(std::istream& in, DataFormat format, Interval scale, std::string_view source_name) {
  std::vector<SurveyRecord> records = format == DataFormat::Csv ? read_csv(in, source_name) : read_json(in, source_name);
  try {
    return SurveyDataset(scale, std::move(records));
  } catch (const Error& e) {
    throw Error(e.code(), std::string(source_name) + ": " + e.message());
  }
}

// --- grouping ---------------------------------------------------------------

IntervalCollection group_collection(const SurveyDataset& ds, std::string_view group, std::string_view term) {
  const auto& groups = ds.groups();
  const bool stored = std::find(groups.begin(), groups.end(), group) != groups.end();
  const bool has_professionals = std::find(groups.begin(), groups.end(), kPhysiotherapistGroup) != groups.end() ||
                                 std::find(groups.begin(), groups.end(), kSurgeonGroup) != groups.end();
  if (!stored && group != kAllGroup && !(group == kProfessionalsGroup && has_professionals)) {
    throw Error(ErrorCode::UnknownGroup, "no group named '" + std::string(group) + "'");
  }
  const std::string code = canonical_term(term);
  const auto& terms = ds.terms();
  if (std::find(terms.begin(), terms.end(), code) == terms.end()) {
    throw Error(ErrorCode::UnknownTerm, "no term named '" + std::string(term) + "'");
  }

  auto in_group = [&](const std::string& g) {
    if (group == kAllGroup) return true;
    if (group == kProfessionalsGroup) return g == kPhysiotherapistGroup || g == kSurgeonGroup;
    return g == group;
  };
  std::vector<Interval> intervals;
  for (const SurveyRecord& rec : ds.records()) {
    if (rec.term == code && in_group(rec.group)) intervals.push_back(rec.interval);
  }
  if (intervals.empty()) {
    throw Error(ErrorCode::TooFewSources,
                "no responses for group '" + std::string(group) + "', term '" + code + "'");
  }
  return IntervalCollection(std::move(intervals));
}

// --- report -----------------------------------------------------------------

AgreementReport report(const SurveyDataset& ds, const ReportOptions& options) {
  std::vector<std::string> groups = ds.groups();
  groups.emplace_back(kAllGroup);
  const Discretization disc(options.samples, ds.scale());

  AgreementReport out;
  for (const std::string& group : groups) {
    for (const std::string& term : ds.terms()) {
      std::size_t n = 0;
      try {
        const IntervalCollection collection = group_collection(ds, group, term);
        n = collection.size();
        if (n < 2) throw Error(ErrorCode::TooFewSources, "1 response");
        const AgreementFS fs = build_iaa(collection);
        const Attributes attrs = attributes(fs.membership(), disc);
        const double gamma = options.method == GammaMethod::Exact
                                 ? gamma_exact(collection).gamma
                                 : gamma_alpha(fs.membership(), options.cuts, disc).gamma;
        out.rows.push_back(
            {group, term, n, attrs.height, attrs.centroid, gamma, attrs.support_length, attrs.core_length});
      } catch (const Error& e) {
        if (e.code() != ErrorCode::TooFewSources && e.code() != ErrorCode::EmptySupport &&
            e.code() != ErrorCode::EmptySet) {
          throw;
        }
        out.skipped.push_back({group, term, e.what()});
      }
    }
  }
  return out;
}

std::vector<SeriesPoint> emit_series(const SurveyDataset& ds, std::string_view group, std::string_view term,
                                     std::size_t samples) {
  const AgreementFS fs = build_iaa(group_collection(ds, group, term));
  std::vector<SeriesPoint> series;
  series.reserve(samples);
  for (double x : sample_grid(ds.scale(), samples)) series.push_back({x, fs(x)});
  return series;
}

// --- output -----------------------------------------------------------------

std::string format_real(double value) {
  if (value == 0.0) value = 0.0;  // no "-0.00000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.6g", value);
  return buf;
}

double printed_value(double value) {
  if (value == 0.0) return 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return std::strtod(buf, nullptr);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_report(std::ostream& out, const AgreementReport& report, DataFormat format) {
  if (format == DataFormat::Csv) {
    out << "Group,Term,Height,Centroid,Agr. Rat.,N,Support,Core\n";
    for (const ReportRow& row : report.rows) {
      out << csv_field(row.group) << ',' << csv_field(row.term) << ',' << format_real(row.height) << ','
          << format_real(row.centroid) << ',' << format_real(row.gamma) << ',' << row.n << ','
          << format_real(row.support_length) << ',' << format_real(row.core_length) << '\n';
    }
    return;
  }
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const ReportRow& row : report.rows) {
    rows.push_back({{"group", row.group},
                    {"term", row.term},
                    {"height", printed_value(row.height)},
                    {"centroid", printed_value(row.centroid)},
                    {"gamma", printed_value(row.gamma)},
                    {"n", row.n},
                    {"support", printed_value(row.support_length)},
                    {"core", printed_value(row.core_length)}});
  }
  out << rows.dump(2) << '\n';
}

void write_series(std::ostream& out, std::span<const SeriesPoint> series, DataFormat format) {
  if (format == DataFormat::Csv) {
    out << "x,mu\n";
    for (const SeriesPoint& p : series) out << format_real(p.x) << ',' << format_real(p.mu) << '\n';
    return;
  }
  nlohmann::json pairs = nlohmann::json::array();
  for (const SeriesPoint& p : series) pairs.push_back({printed_value(p.x), printed_value(p.mu)});
  out << pairs.dump() << '\n';
}

}  // namespace lingagree
