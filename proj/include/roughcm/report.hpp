#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "roughcm/classifiers.hpp"
#include "roughcm/core.hpp"
#include "roughcm/indices.hpp"
#include "roughcm/matrices.hpp"
#include "roughcm/oracle.hpp"

namespace roughcm {

using Json = nlohmann::ordered_json;

/// Reads a decision table: header row, one object per data row (ids 1..n in
/// row order). The decision column defaults to the last one.
DecisionSystem parse_csv(std::string_view text,
                         const std::optional<std::string>& decision_column,
                         std::string_view source = "<input>");
DecisionSystem ingest_csv(const std::filesystem::path& path,
                          const std::optional<std::string>& decision_column);

struct AnalysisOptions {
  std::vector<std::string> attributes;  // empty: every condition attribute
  std::optional<std::filesystem::path> classifier_file;  // empty: mrc
  TieBreak tie_break;
  std::string source_name = "<input>";
};

// Built by run_analysis or analysis_report_from_json; there is no meaningful
// default value.
struct AnalysisReport {
  std::string source;
  std::size_t objects = 0;
  std::vector<std::string> attributes;
  std::string decision_attribute;

  Partition granules;
  Partition decisions;
  std::vector<std::string> decision_labels;
  GranuleFrequencyMatrix frequencies;

  ClassifierKind classifier_kind = ClassifierKind::Mrc;
  TieBreak tie_break;
  RoughClassifier classifier;
  ValidationReport validation;

  RoughConfusionMatrix confusion;
  Rational success;
  Rational gamma_hat;
  std::vector<std::optional<Rational>> alpha_hat;
  std::optional<Rational> alpha_aggregate;
  Rational alpha_from_gamma_hat;

  ApproximationSummary approximation;
  BoundsReport bounds;
  TheoremReport theorems;
};

/// Runs partitioning, the frequency matrix, the classifier, the confusion
/// matrix, every index, the bounds and the theorem checks.
AnalysisReport run_analysis(const DecisionSystem& ds, const AnalysisOptions& options);

Json to_json(const AnalysisReport& report);
AnalysisReport analysis_report_from_json(const Json& json);
std::string render_json(const AnalysisReport& report);
std::string render_text(const AnalysisReport& report);

Json to_json(const FuzzSummary& summary);
std::string render_json(const FuzzSummary& summary);
std::string render_text(const FuzzSummary& summary);

}  // namespace roughcm
