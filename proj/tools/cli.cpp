#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"
#include "lingagree/agreement.hpp"
#include "lingagree/error.hpp"
#include "lingagree/fuzzy_set.hpp"
#include "lingagree/iaa.hpp"
#include "lingagree/survey.hpp"

namespace lingagree::cli {

namespace {

struct Config {
  std::string input = "-";
  std::string format = "csv";
  std::string input_format = "auto";
  std::string mode = "exact";
  std::size_t alpha_cuts = 10;
  std::size_t samples = kDefaultSamples;
  std::pair<double, double> scale{0.0, 10.0};
  std::string group;
  std::string term;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view text, std::string_view source, std::size_t line_no) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::ParseError, std::string(source) + ": line " + std::to_string(line_no) +
                                           ": not a number: '" + std::string(text) + "'");
  }
  return value;
}

DataFormat output_format(const Config& cfg) { return cfg.format == "json" ? DataFormat::Json : DataFormat::Csv; }

std::string source_name(const Config& cfg) { return cfg.input == "-" ? "<stdin>" : cfg.input; }

// Slurps the selected input so the caller can sniff its format.
std::string read_input(const Config& cfg, std::istream& in) {
  std::ostringstream buffer;
  if (cfg.input == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(cfg.input, std::ios::binary);
    if (!file) throw Error(ErrorCode::ParseError, "cannot open '" + cfg.input + "'");
    buffer << file.rdbuf();
  }
  return buffer.str();
}

Interval scale_of(const Config& cfg) { return {cfg.scale.first, cfg.scale.second}; }

IntervalCollection intervals_in_scale(const Config& cfg, std::istream& in) {
  std::istringstream text(read_input(cfg, in));
  IntervalCollection collection = read_interval_list(text, source_name(cfg));
  const Interval scale = scale_of(cfg);
  for (std::size_t i = 0; i < collection.size(); ++i) {
    const Interval& iv = collection[i];
    if (iv.l() < scale.l() || iv.r() > scale.r()) {
      throw Error(ErrorCode::RangeError, source_name(cfg) + ": interval " + std::to_string(i + 1) + " [" +
                                             format_real(iv.l()) + ", " + format_real(iv.r()) +
                                             "] outside scale [" + format_real(scale.l()) + ", " +
                                             format_real(scale.r()) + "]");
    }
  }
  return collection;
}

SurveyDataset load_dataset(const Config& cfg, std::istream& in) {
  const std::string content = read_input(cfg, in);
  DataFormat format = DataFormat::Csv;
  if (cfg.input_format == "json") {
    format = DataFormat::Json;
  } else if (cfg.input_format == "auto") {
    const auto first = content.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && content[first] == '[') format = DataFormat::Json;
  }
  std::istringstream stream(content);
  return load_survey(stream, format, scale_of(cfg), source_name(cfg));
}

void run_gamma(const Config& cfg, std::istream& in, std::ostream& out) {
  std::istringstream text(read_input(cfg, in));
  const IntervalCollection collection = read_interval_list(text, source_name(cfg));
  const GammaBreakdown result =
      cfg.mode == "exact" ? gamma_exact(collection)
                          : gamma_alpha(build_iaa(collection).membership(), cfg.alpha_cuts, Discretization(cfg.samples));

  if (output_format(cfg) == DataFormat::Json) {
    nlohmann::ordered_json doc;
    doc["gamma"] = printed_value(result.gamma);
    doc["weight_sum"] = printed_value(result.weight_sum);
    doc["terms"] = nlohmann::ordered_json::array();
    for (const GammaTerm& t : result.terms) {
      doc["terms"].push_back({{"level", t.level},
                              {"weight", printed_value(t.weight)},
                              {"length", printed_value(t.length)},
                              {"lower_length", printed_value(t.lower_length)},
                              {"ratio", printed_value(t.ratio)}});
    }
    out << doc.dump(2) << '\n';
    return;
  }
  out << "gamma," << format_real(result.gamma) << '\n';
  out << "weight_sum," << format_real(result.weight_sum) << '\n';
  out << "level,weight,length,lower_length,ratio\n";
  for (const GammaTerm& t : result.terms) {
    out << t.level << ',' << format_real(t.weight) << ',' << format_real(t.length) << ','
        << format_real(t.lower_length) << ',' << format_real(t.ratio) << '\n';
  }
}

void run_build(const Config& cfg, std::istream& in, std::ostream& out) {
  const AgreementFS fs = build_iaa(intervals_in_scale(cfg, in));
  std::vector<SeriesPoint> series;
  for (double x : sample_grid(scale_of(cfg), cfg.samples)) series.push_back({x, fs(x)});
  write_series(out, series, output_format(cfg));
}

void run_attrs(const Config& cfg, std::istream& in, std::ostream& out) {
  const AgreementFS fs = build_iaa(intervals_in_scale(cfg, in));
  const Attributes a = attributes(fs.membership(), Discretization(cfg.samples, scale_of(cfg)));
  if (output_format(cfg) == DataFormat::Json) {
    nlohmann::ordered_json doc{{"n", fs.n()},
                               {"height", printed_value(a.height)},
                               {"centroid", printed_value(a.centroid)},
                               {"support", printed_value(a.support_length)},
                               {"core", printed_value(a.core_length)}};
    out << doc.dump(2) << '\n';
    return;
  }
  out << "n," << fs.n() << '\n'
      << "height," << format_real(a.height) << '\n'
      << "centroid," << format_real(a.centroid) << '\n'
      << "support," << format_real(a.support_length) << '\n'
      << "core," << format_real(a.core_length) << '\n';
}

void run_report(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  const SurveyDataset ds = load_dataset(cfg, in);
  ReportOptions options;
  options.method = cfg.mode == "exact" ? GammaMethod::Exact : GammaMethod::Alpha;
  options.cuts = cfg.alpha_cuts;
  options.samples = cfg.samples;
  const AgreementReport rep = report(ds, options);
  write_report(out, rep, output_format(cfg));
  for (const SkippedCell& cell : rep.skipped) {
    err << "skipped " << cell.group << '/' << cell.term << ": " << cell.reason << '\n';
  }
}

void run_series(const Config& cfg, std::istream& in, std::ostream& out) {
  const SurveyDataset ds = load_dataset(cfg, in);
  write_series(out, emit_series(ds, cfg.group, cfg.term, cfg.samples), output_format(cfg));
}

void add_input(CLI::App* sub, Config& cfg) {
  sub->add_option("--input", cfg.input, "Input file, or - for stdin")->capture_default_str();
}

void add_format(CLI::App* sub, Config& cfg) {
  sub->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

void add_samples(CLI::App* sub, Config& cfg) {
  sub->add_option("--samples", cfg.samples, "Grid points for sampled computations")
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()))
      ->capture_default_str();
}

void add_scale(CLI::App* sub, Config& cfg) {
  sub->add_option("--scale", cfg.scale, "Response scale LO HI")->capture_default_str();
}

void add_gamma_method(CLI::App* sub, Config& cfg) {
  sub->add_option("--mode", cfg.mode, "Agreement ratio from exact level sets or from alpha-cuts")
      ->check(CLI::IsMember({"exact", "alpha"}))
      ->capture_default_str();
  sub->add_option("--alpha-cuts", cfg.alpha_cuts, "Number of alpha-cuts in alpha mode")
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()))
      ->capture_default_str();
}

void add_input_format(CLI::App* sub, Config& cfg) {
  sub->add_option("--input-format", cfg.input_format, "Survey input format")
      ->check(CLI::IsMember({"auto", "csv", "json"}))
      ->capture_default_str();
}

}  // namespace

IntervalCollection read_interval_list(std::istream& in, std::string_view source) {
  std::vector<Interval> intervals;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
      throw Error(ErrorCode::ParseError,
                  std::string(source) + ": line " + std::to_string(line_no) + ": expected 'l,r'");
    }
    const double l = parse_number(trim(line.substr(0, comma)), source, line_no);
    const double r = parse_number(trim(line.substr(comma + 1)), source, line_no);
    try {
      intervals.emplace_back(l, r);
    } catch (const Error& e) {
      throw Error(e.code(), std::string(source) + ": line " + std::to_string(line_no) + ": " + e.message());
    }
  }
  if (intervals.empty()) throw Error(ErrorCode::EmptyCollection, std::string(source) + ": no intervals");
  return IntervalCollection(std::move(intervals));
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Agreement analysis of interval-valued survey responses", "lingagree"};
  app.require_subcommand(1);

  auto* gamma = app.add_subcommand("gamma", "Agreement ratio of an interval list, with per-level breakdown");
  add_input(gamma, cfg);
  add_format(gamma, cfg);
  add_gamma_method(gamma, cfg);
  add_samples(gamma, cfg);

  auto* build = app.add_subcommand("build", "Sampled IAA membership of an interval list");
  add_input(build, cfg);
  add_format(build, cfg);
  add_samples(build, cfg);
  add_scale(build, cfg);

  auto* attrs = app.add_subcommand("attrs", "Height, centroid, support and core of an interval list's IAA set");
  add_input(attrs, cfg);
  add_format(attrs, cfg);
  add_samples(attrs, cfg);
  add_scale(attrs, cfg);

  auto* report_cmd = app.add_subcommand("report", "Per group and term agreement report of a survey file");
  add_input(report_cmd, cfg);
  add_input_format(report_cmd, cfg);
  add_format(report_cmd, cfg);
  add_gamma_method(report_cmd, cfg);
  add_samples(report_cmd, cfg);
  add_scale(report_cmd, cfg);

  auto* series = app.add_subcommand("series", "Sampled IAA membership for one group and term of a survey file");
  add_input(series, cfg);
  add_input_format(series, cfg);
  add_format(series, cfg);
  add_samples(series, cfg);
  add_scale(series, cfg);
  series->add_option("--group", cfg.group, "Group, PS or ALL")->required();
  series->add_option("--term", cfg.term, "Term code or full name")->required();

  try {
    app.parse(argc, argv);
    if (!(cfg.scale.first < cfg.scale.second)) {
      throw CLI::ValidationError("--scale", "LO must be less than HI");
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  }

  try {
    if (gamma->parsed()) run_gamma(cfg, in, out);
    if (build->parsed()) run_build(cfg, in, out);
    if (attrs->parsed()) run_attrs(cfg, in, out);
    if (report_cmd->parsed()) run_report(cfg, in, out, err);
    if (series->parsed()) run_series(cfg, in, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kOk;
}

}  // namespace lingagree::cli
