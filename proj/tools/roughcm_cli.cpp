// roughcm: rough confusion matrix analysis of decision tables.
//
//   roughcm analyze --input table.csv [--attributes A,B] [--classifier mrc|FILE] ...
//   roughcm fuzz [--trials N] [--seed N] ...
//
// Exit codes: 0 success, 1 input or configuration error, 2 the classifier
// violates the overlap condition (analyze) or theorem checks failed (fuzz).

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "roughcm/roughcm.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitValidation = 2;

int fail(rcm_status status) {
  std::cerr << "roughcm: " << rcm_status_string(status) << ": " << rcm_last_error_message()
            << '\n';
  return kExitInput;
}

rcm_format format_of(const std::string& name) {
  return name == "text" ? RCM_FORMAT_TEXT : RCM_FORMAT_JSON;
}

// Handles closed on scope exit.
template <class T, void (*Free)(T*)>
struct Owned {
  T* ptr = nullptr;
  Owned() = default;
  Owned(const Owned&) = delete;
  Owned& operator=(const Owned&) = delete;
  ~Owned() { Free(ptr); }
};

struct AnalyzeArgs {
  std::string input;
  std::string decision;
  std::vector<std::string> attributes;
  std::string classifier = "mrc";
  std::string tie_break = "lowest";
  std::uint64_t seed = 0;
  std::string format = "json";
};

struct FuzzArgs {
  rcm_fuzz_config config{};
  std::string format = "text";
};

int run_analyze(const AnalyzeArgs& args) {
  Owned<rcm_system, rcm_system_free> system;
  if (auto s = rcm_system_from_csv_file(args.input.c_str(),
                                        args.decision.empty() ? nullptr : args.decision.c_str(),
                                        &system.ptr);
      s != RCM_OK)
    return fail(s);

  std::vector<const char*> names;
  for (const auto& a : args.attributes) names.push_back(a.c_str());
  const std::string source = std::filesystem::path(args.input).filename().string();

  rcm_analysis_options options;
  rcm_analysis_options_default(&options);
  options.attributes = names.data();
  options.attribute_count = names.size();
  if (args.classifier != "mrc") options.classifier_path = args.classifier.c_str();
  options.tie_break = args.tie_break == "highest"  ? RCM_TIE_HIGHEST
                      : args.tie_break == "random" ? RCM_TIE_RANDOM
                                                   : RCM_TIE_LOWEST;
  options.seed = args.seed;
  options.source_name = source.c_str();

  Owned<rcm_report, rcm_report_free> report;
  if (auto s = rcm_analyze(system.ptr, &options, &report.ptr); s != RCM_OK) return fail(s);

  char* rendered = nullptr;
  if (auto s = rcm_report_render(report.ptr, format_of(args.format), &rendered); s != RCM_OK)
    return fail(s);
  std::fputs(rendered, stdout);
  rcm_string_free(rendered);
  return rcm_report_rule_satisfied(report.ptr) ? kExitOk : kExitValidation;
}

int run_fuzz(const FuzzArgs& args) {
  Owned<rcm_fuzz_result, rcm_fuzz_free> result;
  if (auto s = rcm_fuzz_run(&args.config, &result.ptr); s != RCM_OK) return fail(s);
  char* rendered = nullptr;
  if (auto s = rcm_fuzz_render(result.ptr, format_of(args.format), &rendered); s != RCM_OK)
    return fail(s);
  std::fputs(rendered, stdout);
  rcm_string_free(rendered);
  return rcm_fuzz_failed_trials(result.ptr) == 0 ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rough set analysis of classifiers through rough confusion matrices"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(rcm_version()));

  AnalyzeArgs analyze;
  auto* an = app.add_subcommand("analyze", "Analyze a decision table and emit a report");
  an->add_option("--input", analyze.input, "CSV decision table")->required();
  an->add_option("--decision", analyze.decision, "Decision column (default: last column)");
  an->add_option("--attributes", analyze.attributes,
                 "Comma-separated condition attributes (default: all)")
      ->delimiter(',');
  an->add_option("--classifier", analyze.classifier,
                 "'mrc' or a granule-to-class mapping file")
      ->capture_default_str();
  an->add_option("--tie-break", analyze.tie_break, "Maximal row classifier tie policy")
      ->check(CLI::IsMember({"lowest", "highest", "random"}))
      ->capture_default_str();
  an->add_option("--seed", analyze.seed, "Seed for --tie-break random")->capture_default_str();
  an->add_option("--format", analyze.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  FuzzArgs fuzz;
  rcm_fuzz_config_default(&fuzz.config);
  auto* fz = app.add_subcommand("fuzz", "Check the bound theorems on random decision tables");
  fz->add_option("--trials", fuzz.config.trials, "Number of random systems")->capture_default_str();
  fz->add_option("--seed", fuzz.config.seed, "Base seed")->capture_default_str();
  fz->add_option("--max-objects", fuzz.config.max_objects, "Upper bound on n (2..100)")
      ->capture_default_str();
  fz->add_option("--max-attributes", fuzz.config.max_attributes,
                 "Upper bound on condition attributes (1..8)")
      ->capture_default_str();
  fz->add_option("--max-classes", fuzz.config.max_classes, "Upper bound on k (2..8)")
      ->capture_default_str();
  fz->add_option("--threads", fuzz.config.threads, "Worker threads")->capture_default_str();
  fz->add_option("--format", fuzz.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (an->parsed()) return run_analyze(analyze);
  return run_fuzz(fuzz);
}
