#include "roughcm/roughcm.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "roughcm/classifiers.hpp"
#include "roughcm/core.hpp"
#include "roughcm/error.hpp"
#include "roughcm/indices.hpp"
#include "roughcm/matrices.hpp"
#include "roughcm/oracle.hpp"
#include "roughcm/report.hpp"

namespace rc = roughcm;

struct rcm_system { rc::DecisionSystem value; };
struct rcm_partition { rc::Partition value; };
struct rcm_object_set { rc::ObjectSet value; };
struct rcm_gfm { rc::GranuleFrequencyMatrix value; };
struct rcm_classifier { rc::RoughClassifier value; };
struct rcm_confusion { rc::RoughConfusionMatrix value; };
struct rcm_report { rc::AnalysisReport value; };
struct rcm_fuzz_result { rc::FuzzSummary value; };

namespace {

thread_local std::string last_error;

template <class F>
rcm_status guarded(F&& body) noexcept {
  try {
    body();
    return RCM_OK;
  } catch (const rc::Error& e) {
    last_error = e.what();
    return static_cast<rcm_status>(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return RCM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return RCM_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return RCM_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw rc::Error(rc::ErrorCode::InvalidArgument, what);
}

rcm_rational to_c(const rc::Rational& r) { return {r.numerator(), r.denominator()}; }

char* to_c_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<std::string> names_of(const char* const* names, size_t count) {
  require(count == 0 || names != nullptr, "attribute names are null");
  std::vector<std::string> out;
  for (size_t i = 0; i < count; ++i) {
    require(names[i] != nullptr, "attribute name is null");
    out.emplace_back(names[i]);
  }
  return out;
}

rc::TieBreak tie_break_of(rcm_tie_break kind, uint64_t seed) {
  switch (kind) {
    case RCM_TIE_LOWEST: return {rc::TieBreak::Kind::Lowest, seed};
    case RCM_TIE_HIGHEST: return {rc::TieBreak::Kind::Highest, seed};
    case RCM_TIE_RANDOM: return {rc::TieBreak::Kind::SeededRandom, seed};
  }
  throw rc::Error(rc::ErrorCode::InvalidArgument, "unknown tie-break policy");
}

template <class Handle, class Value>
void emit(Handle** out, Value&& value) {
  *out = new Handle{std::forward<Value>(value)};
}

}  // namespace

extern "C" {

const char* rcm_version(void) { return "1.0.0"; }

const char* rcm_status_string(rcm_status status) {
  if (status == RCM_OK) return "ok";
  if (status == RCM_ERR_INTERNAL) return "internal error";
  return rc::to_string(static_cast<rc::ErrorCode>(status));
}

const char* rcm_last_error_message(void) { return last_error.c_str(); }

void rcm_string_free(char* s) { std::free(s); }

// decision systems

rcm_status rcm_system_from_csv_file(const char* path, const char* decision_column,
                                    rcm_system** out) {
  return guarded([&] {
    require(path && out, "null argument");
    std::optional<std::string> column;
    if (decision_column) column = decision_column;
    emit(out, rc::ingest_csv(path, column));
  });
}

rcm_status rcm_system_from_csv_text(const char* text, const char* decision_column,
                                    rcm_system** out) {
  return guarded([&] {
    require(text && out, "null argument");
    std::optional<std::string> column;
    if (decision_column) column = decision_column;
    emit(out, rc::parse_csv(text, column));
  });
}

rcm_status rcm_system_generate(const rcm_generator_config* config, rcm_system** out) {
  return guarded([&] {
    require(config && out, "null argument");
    rc::GeneratorConfig cfg{config->n_objects, config->n_attributes,
                            config->values_per_attribute, config->n_decision_values,
                            config->seed};
    emit(out, rc::random_decision_system(cfg));
  });
}

void rcm_system_free(rcm_system* system) { delete system; }

size_t rcm_system_object_count(const rcm_system* system) {
  return system ? system->value.object_count() : 0;
}

size_t rcm_system_attribute_count(const rcm_system* system) {
  return system ? system->value.condition_attributes().size() : 0;
}

const char* rcm_system_attribute_name(const rcm_system* system, size_t index) {
  if (!system || index >= system->value.condition_attributes().size()) return nullptr;
  return system->value.condition_attributes()[index].name.c_str();
}

const char* rcm_system_decision_name(const rcm_system* system) {
  return system ? system->value.decision_attribute().name.c_str() : nullptr;
}

// partitions

rcm_status rcm_partition_by_attributes(const rcm_system* system, const char* const* names,
                                       size_t count, rcm_partition** out) {
  return guarded([&] {
    require(system && out, "null argument");
    const auto attrs = names_of(names, count);
    emit(out, rc::partition_by_attributes(system->value, attrs));
  });
}

rcm_status rcm_decision_partition(const rcm_system* system, rcm_partition** out) {
  return guarded([&] {
    require(system && out, "null argument");
    emit(out, rc::decision_partition(system->value));
  });
}

rcm_status rcm_partition_from_blocks(const uint64_t* ids, const size_t* block_sizes,
                                     size_t block_count, rcm_partition** out) {
  return guarded([&] {
    require(out && (block_count == 0 || (ids && block_sizes)), "null argument");
    std::vector<std::vector<rc::ObjectId>> blocks;
    size_t offset = 0;
    for (size_t b = 0; b < block_count; ++b) {
      blocks.emplace_back(ids + offset, ids + offset + block_sizes[b]);
      offset += block_sizes[b];
    }
    emit(out, rc::Partition(std::move(blocks)));
  });
}

void rcm_partition_free(rcm_partition* partition) { delete partition; }

size_t rcm_partition_block_count(const rcm_partition* partition) {
  return partition ? partition->value.size() : 0;
}

rcm_status rcm_partition_block(const rcm_partition* partition, size_t index,
                               const uint64_t** ids, size_t* size) {
  return guarded([&] {
    require(partition && ids && size, "null argument");
    const auto& block = partition->value.block(index);
    *ids = block.members().data();
    *size = block.size();
  });
}

// object sets

rcm_status rcm_object_set_new(const uint64_t* ids, size_t count, rcm_object_set** out) {
  return guarded([&] {
    require(out && (count == 0 || ids), "null argument");
    emit(out, rc::ObjectSet(std::vector<rc::ObjectId>(ids, ids + count)));
  });
}

void rcm_object_set_free(rcm_object_set* set) { delete set; }

size_t rcm_object_set_size(const rcm_object_set* set) { return set ? set->value.size() : 0; }

const uint64_t* rcm_object_set_data(const rcm_object_set* set) {
  return set ? set->value.members().data() : nullptr;
}

rcm_status rcm_lower_approximation(const rcm_partition* partition, const rcm_object_set* set,
                                   rcm_object_set** out) {
  return guarded([&] {
    require(partition && set && out, "null argument");
    emit(out, rc::lower_approximation(partition->value, set->value));
  });
}

rcm_status rcm_upper_approximation(const rcm_partition* partition, const rcm_object_set* set,
                                   rcm_object_set** out) {
  return guarded([&] {
    require(partition && set && out, "null argument");
    emit(out, rc::upper_approximation(partition->value, set->value));
  });
}

rcm_status rcm_is_definable(const rcm_partition* partition, const rcm_object_set* set,
                            int* out) {
  return guarded([&] {
    require(partition && set && out, "null argument");
    *out = rc::is_definable(partition->value, set->value) ? 1 : 0;
  });
}

rcm_status rcm_deterministic_region(const rcm_partition* granules,
                                    const rcm_partition* decisions, rcm_object_set** out) {
  return guarded([&] {
    require(granules && decisions && out, "null argument");
    emit(out, rc::deterministic_region(granules->value, decisions->value));
  });
}

// matrices

rcm_status rcm_gfm_from_partitions(const rcm_partition* granules,
                                   const rcm_partition* decisions, rcm_gfm** out) {
  return guarded([&] {
    require(granules && decisions && out, "null argument");
    emit(out, rc::granule_frequency_matrix(granules->value, decisions->value));
  });
}

namespace {

std::vector<std::vector<rc::Count>> unflatten(const uint64_t* cells, size_t rows, size_t cols) {
  require(cells || rows * cols == 0, "null argument");
  std::vector<std::vector<rc::Count>> out(rows);
  for (size_t i = 0; i < rows; ++i) out[i].assign(cells + i * cols, cells + (i + 1) * cols);
  return out;
}

}  // namespace

rcm_status rcm_gfm_from_counts(const uint64_t* cells, size_t rows, size_t cols, rcm_gfm** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    emit(out, rc::GranuleFrequencyMatrix::from_counts(unflatten(cells, rows, cols)));
  });
}

void rcm_gfm_free(rcm_gfm* gfm) { delete gfm; }
size_t rcm_gfm_granule_count(const rcm_gfm* gfm) { return gfm ? gfm->value.granule_count() : 0; }
size_t rcm_gfm_class_count(const rcm_gfm* gfm) { return gfm ? gfm->value.class_count() : 0; }
uint64_t rcm_gfm_total(const rcm_gfm* gfm) { return gfm ? gfm->value.total() : 0; }

rcm_status rcm_gfm_cell(const rcm_gfm* gfm, size_t granule, size_t cls, uint64_t* out) {
  return guarded([&] {
    require(gfm && out, "null argument");
    require(granule >= 1 && cls >= 1, "indices are 1-based");
    *out = gfm->value.cell(granule - 1, cls - 1);
  });
}

rcm_status rcm_confusion_matrix(const rcm_gfm* gfm, const rcm_classifier* classifier,
                                rcm_confusion** out) {
  return guarded([&] {
    require(gfm && classifier && out, "null argument");
    emit(out, rc::confusion_matrix(gfm->value, classifier->value));
  });
}

rcm_status rcm_confusion_from_counts(const uint64_t* cells, size_t k, rcm_confusion** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    emit(out, rc::RoughConfusionMatrix::from_counts(unflatten(cells, k, k)));
  });
}

void rcm_confusion_free(rcm_confusion* cm) { delete cm; }
size_t rcm_confusion_class_count(const rcm_confusion* cm) { return cm ? cm->value.class_count() : 0; }
uint64_t rcm_confusion_total(const rcm_confusion* cm) { return cm ? cm->value.total() : 0; }

rcm_status rcm_confusion_cell(const rcm_confusion* cm, size_t predicted, size_t actual,
                              uint64_t* out) {
  return guarded([&] {
    require(cm && out, "null argument");
    require(predicted >= 1 && actual >= 1, "indices are 1-based");
    *out = cm->value.cell(predicted - 1, actual - 1);
  });
}

// classifiers

rcm_status rcm_classifier_new(const size_t* classes, size_t granule_count, size_t class_count,
                              rcm_classifier** out) {
  return guarded([&] {
    require(out && (granule_count == 0 || classes), "null argument");
    std::vector<size_t> assignment;
    for (size_t g = 0; g < granule_count; ++g) {
      if (classes[g] == 0 || classes[g] > class_count)
        throw rc::Error(rc::ErrorCode::IndexOutOfRange,
                        "granule " + std::to_string(g + 1) + " mapped to class " +
                            std::to_string(classes[g]) + " outside 1.." +
                            std::to_string(class_count));
      assignment.push_back(classes[g] - 1);
    }
    emit(out, rc::RoughClassifier(std::move(assignment), class_count));
  });
}

rcm_status rcm_classifier_mrc(const rcm_gfm* gfm, rcm_tie_break tie_break, uint64_t seed,
                              rcm_classifier** out) {
  return guarded([&] {
    require(gfm && out, "null argument");
    emit(out, rc::maximal_row_classifier(gfm->value, tie_break_of(tie_break, seed)));
  });
}

rcm_status rcm_classifier_parse(const char* text, size_t granule_count, size_t class_count,
                                rcm_classifier** out) {
  return guarded([&] {
    require(text && out, "null argument");
    emit(out, rc::parse_classifier_mapping(text, granule_count, class_count));
  });
}

rcm_status rcm_classifier_format(const rcm_classifier* classifier, char** out) {
  return guarded([&] {
    require(classifier && out, "null argument");
    *out = to_c_string(rc::format_classifier_mapping(classifier->value));
  });
}

void rcm_classifier_free(rcm_classifier* classifier) { delete classifier; }

size_t rcm_classifier_granule_count(const rcm_classifier* classifier) {
  return classifier ? classifier->value.granule_count() : 0;
}

rcm_status rcm_classifier_class_of(const rcm_classifier* classifier, size_t granule,
                                   size_t* cls) {
  return guarded([&] {
    require(classifier && cls, "null argument");
    require(granule >= 1, "granule indices are 1-based");
    *cls = classifier->value(granule - 1) + 1;
  });
}

rcm_status rcm_validate_overlap(const rcm_classifier* classifier, const rcm_gfm* gfm,
                                size_t* violations, size_t capacity, size_t* violation_count) {
  return guarded([&] {
    require(classifier && gfm && violation_count, "null argument");
    const auto report = rc::validate_overlap(classifier->value, gfm->value);
    if (violations)
      for (size_t i = 0; i < report.violations.size() && i < capacity; ++i)
        violations[i] = report.violations[i] + 1;
    *violation_count = report.violations.size();
  });
}

rcm_status rcm_predictor_set(const rcm_classifier* classifier, size_t cls,
                             const rcm_partition* granules, rcm_object_set** out) {
  return guarded([&] {
    require(classifier && granules && out, "null argument");
    require(cls >= 1, "class indices are 1-based");
    emit(out, rc::predictor_set(classifier->value, cls - 1, granules->value));
  });
}

// indices

uint64_t rcm_indicator(uint64_t value) { return rc::indicator(value); }

rcm_status rcm_success_ratio(const rcm_confusion* cm, rcm_rational* out) {
  return guarded([&] {
    require(cm && out, "null argument");
    *out = to_c(rc::success_ratio(cm->value));
  });
}

rcm_status rcm_gamma_hat(const rcm_confusion* cm, rcm_rational* out) {
  return guarded([&] {
    require(cm && out, "null argument");
    *out = to_c(rc::gamma_hat(cm->value));
  });
}

rcm_status rcm_alpha_hat(const rcm_confusion* cm, size_t cls, rcm_rational* out) {
  return guarded([&] {
    require(cm && out, "null argument");
    require(cls >= 1, "class indices are 1-based");
    *out = to_c(rc::alpha_hat(cm->value, cls - 1));
  });
}

rcm_status rcm_alpha_aggregate(const rcm_confusion* cm, rcm_rational* out) {
  return guarded([&] {
    require(cm && out, "null argument");
    const auto a = rc::alpha_aggregate(cm->value);
    if (!a) throw rc::Error(rc::ErrorCode::UndefinedClass, "confusion matrix is empty");
    *out = to_c(*a);
  });
}

rcm_status rcm_alpha_from_gamma(rcm_rational gamma, rcm_rational* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    if (gamma.den == 0) throw rc::Error(rc::ErrorCode::Range, "zero denominator");
    *out = to_c(rc::alpha_from_gamma(rc::Rational(gamma.num, gamma.den)));
  });
}

rcm_status rcm_approximation_summary(const rcm_partition* granules,
                                     const rcm_partition* decisions,
                                     rcm_class_approximation* out, size_t capacity,
                                     size_t* class_count, rcm_rational* gamma) {
  return guarded([&] {
    require(granules && decisions && class_count, "null argument");
    const auto summary = rc::approximation_summary(granules->value, decisions->value);
    if (out)
      for (size_t i = 0; i < summary.classes.size() && i < capacity; ++i) {
        const auto& c = summary.classes[i];
        out[i] = {c.size, c.lower, c.upper, to_c(c.lower_precision), to_c(c.upper_precision),
                  to_c(c.accuracy)};
      }
    *class_count = summary.classes.size();
    if (gamma) *gamma = to_c(summary.gamma);
  });
}

rcm_status rcm_confusion_bounds(const rcm_confusion* cm, int rule_validated, int is_mrc,
                                rcm_class_bounds* out, size_t capacity, size_t* class_count) {
  return guarded([&] {
    require(cm && class_count, "null argument");
    rc::ValidationReport validation;
    if (!rule_validated) validation.violations.push_back(0);
    const auto bounds = rc::confusion_bounds(cm->value, validation, is_mrc != 0);
    if (out)
      for (size_t i = 0; i < bounds.classes.size() && i < capacity; ++i) {
        const auto& b = bounds.classes[i];
        out[i] = {b.class_size, b.nl_star,          b.nl_star2,         b.nu_star,
                  b.nu_star2,   b.nl_m.value_or(0), b.nu_m.value_or(0), b.nl_m.has_value(),
                  b.clamped};
      }
    *class_count = bounds.classes.size();
  });
}

// oracle

rcm_status rcm_oracle_lower(const rcm_partition* partition, const rcm_object_set* set,
                            rcm_object_set** out) {
  return guarded([&] {
    require(partition && set && out, "null argument");
    emit(out, rc::oracle_lower(partition->value, set->value));
  });
}

rcm_status rcm_oracle_upper(const rcm_partition* partition, const rcm_object_set* set,
                            rcm_object_set** out) {
  return guarded([&] {
    require(partition && set && out, "null argument");
    emit(out, rc::oracle_upper(partition->value, set->value));
  });
}

rcm_status rcm_exhaustive_best_classifier(const rcm_gfm* gfm, rcm_classifier** out,
                                          rcm_rational* success_ratio) {
  return guarded([&] {
    require(gfm && out && success_ratio, "null argument");
    auto best = rc::exhaustive_best_classifier(gfm->value);
    *success_ratio = to_c(best.success_ratio);
    emit(out, std::move(best.classifier));
  });
}

rcm_status rcm_verify_theorems(const rcm_system* system, const char* const* names, size_t count,
                               const rcm_classifier* classifier, rcm_classifier_kind kind,
                               size_t* failures) {
  return guarded([&] {
    require(system && classifier && failures, "null argument");
    rc::VerificationContext context;
    switch (kind) {
      case RCM_KIND_MRC: context.kind = rc::ClassifierKind::Mrc; break;
      case RCM_KIND_RANDOM_VALIDATED: context.kind = rc::ClassifierKind::RandomValidated; break;
      case RCM_KIND_SUPPLIED: context.kind = rc::ClassifierKind::Supplied; break;
      default: throw rc::Error(rc::ErrorCode::InvalidArgument, "unknown classifier kind");
    }
    const auto attrs = names_of(names, count);
    *failures = rc::verify_theorems(system->value, attrs, classifier->value, context).failures();
  });
}

void rcm_fuzz_config_default(rcm_fuzz_config* config) {
  if (!config) return;
  const rc::FuzzConfig d;
  *config = {d.trials, d.seed, d.max_objects, d.max_attributes, d.max_values, d.max_classes,
             d.threads};
}

rcm_status rcm_fuzz_run(const rcm_fuzz_config* config, rcm_fuzz_result** out) {
  return guarded([&] {
    require(config && out, "null argument");
    rc::FuzzConfig cfg;
    cfg.trials = config->trials;
    cfg.seed = config->seed;
    cfg.max_objects = config->max_objects;
    cfg.max_attributes = config->max_attributes;
    cfg.max_values = config->max_values;
    cfg.max_classes = config->max_classes;
    cfg.threads = config->threads;
    emit(out, rc::run_fuzz(cfg));
  });
}

void rcm_fuzz_free(rcm_fuzz_result* result) { delete result; }

size_t rcm_fuzz_trials_run(const rcm_fuzz_result* result) {
  return result ? result->value.trials_run : 0;
}

size_t rcm_fuzz_failed_trials(const rcm_fuzz_result* result) {
  return result ? result->value.failed_trials : 0;
}

rcm_status rcm_fuzz_render(const rcm_fuzz_result* result, rcm_format format, char** out) {
  return guarded([&] {
    require(result && out, "null argument");
    *out = to_c_string(format == RCM_FORMAT_TEXT ? rc::render_text(result->value)
                                                 : rc::render_json(result->value));
  });
}

// reports

void rcm_analysis_options_default(rcm_analysis_options* options) {
  if (!options) return;
  *options = {nullptr, 0, nullptr, RCM_TIE_LOWEST, 0, nullptr};
}

rcm_status rcm_analyze(const rcm_system* system, const rcm_analysis_options* options,
                       rcm_report** out) {
  return guarded([&] {
    require(system && out, "null argument");
    rc::AnalysisOptions opts;
    if (options) {
      opts.attributes = names_of(options->attributes, options->attribute_count);
      if (options->classifier_path) opts.classifier_file = options->classifier_path;
      opts.tie_break = tie_break_of(options->tie_break, options->seed);
      if (options->source_name) opts.source_name = options->source_name;
    }
    emit(out, rc::run_analysis(system->value, opts));
  });
}

rcm_status rcm_report_from_json(const char* json, rcm_report** out) {
  return guarded([&] {
    require(json && out, "null argument");
    rc::Json parsed;
    try {
      parsed = rc::Json::parse(json);
    } catch (const rc::Json::exception& e) {
      throw rc::Error(rc::ErrorCode::Parse, e.what());
    }
    emit(out, rc::analysis_report_from_json(parsed));
  });
}

void rcm_report_free(rcm_report* report) { delete report; }

int rcm_report_rule_satisfied(const rcm_report* report) {
  return report && report->value.validation.satisfies_rule() ? 1 : 0;
}

int rcm_report_theorems_pass(const rcm_report* report) {
  return report && report->value.theorems.overall_pass() ? 1 : 0;
}

rcm_status rcm_report_render(const rcm_report* report, rcm_format format, char** out) {
  return guarded([&] {
    require(report && out, "null argument");
    *out = to_c_string(format == RCM_FORMAT_TEXT ? rc::render_text(report->value)
                                                 : rc::render_json(report->value));
  });
}

}  // extern "C"
