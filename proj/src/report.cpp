#include "roughcm/report.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "roughcm/error.hpp"

namespace roughcm {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

AnalysisReport run_analysis(const DecisionSystem& ds, const AnalysisOptions& options) {
  std::vector<std::string> attributes =
      options.attributes.empty() ? ds.condition_names() : options.attributes;
  Partition granules = partition_by_attributes(ds, attributes);
  Partition decisions = decision_partition(ds);
  std::vector<std::string> labels = decision_labels(ds, decisions);
  GranuleFrequencyMatrix gfm = granule_frequency_matrix(granules, decisions);

  ClassifierKind kind = ClassifierKind::Mrc;
  std::optional<RoughClassifier> f;
  if (options.classifier_file) {
    kind = ClassifierKind::Supplied;
    const std::string text = read_file(*options.classifier_file);
    try {
      f = parse_classifier_mapping(text, gfm.granule_count(), gfm.class_count());
    } catch (const Error& e) {
      throw Error(e.code(), options.classifier_file->filename().string() + ": " + e.what());
    }
  } else {
    f = maximal_row_classifier(gfm, options.tie_break);
  }

  ValidationReport validation = validate_overlap(*f, gfm);
  RoughConfusionMatrix cm = confusion_matrix(gfm, *f);
  const Rational g_hat = gamma_hat(cm);
  BoundsReport bounds = confusion_bounds(cm, validation, kind == ClassifierKind::Mrc);
  TheoremReport theorems =
      verify_theorems(ds, attributes, *f, {kind, options.tie_break, std::nullopt});

  return AnalysisReport{
      .source = options.source_name,
      .objects = ds.object_count(),
      .attributes = std::move(attributes),
      .decision_attribute = ds.decision_attribute().name,
      .granules = granules,
      .decisions = decisions,
      .decision_labels = std::move(labels),
      .frequencies = gfm,
      .classifier_kind = kind,
      .tie_break = options.tie_break,
      .classifier = *f,
      .validation = std::move(validation),
      .confusion = cm,
      .success = success_ratio(cm),
      .gamma_hat = g_hat,
      .alpha_hat = alpha_hat_per_class(cm),
      .alpha_aggregate = alpha_aggregate(cm),
      .alpha_from_gamma_hat = alpha_from_gamma(g_hat),
      .approximation = approximation_summary(granules, decisions),
      .bounds = std::move(bounds),
      .theorems = std::move(theorems),
  };
}

// JSON

namespace {

Json rational_json(const Rational& r) {
  const std::string decimal = to_decimal_string(r);
  return Json{{"num", r.numerator()},
              {"den", r.denominator()},
              {"decimal", std::strtod(decimal.c_str(), nullptr)}};
}

Json optional_rational_json(const std::optional<Rational>& r) {
  return r ? rational_json(*r) : Json(nullptr);
}

Rational rational_from(const Json& j) {
  const auto den = j.at("den").get<std::int64_t>();
  if (den <= 0) throw Error(ErrorCode::Parse, "rational with non-positive denominator");
  return Rational(j.at("num").get<std::int64_t>(), den);
}

std::optional<Rational> optional_rational_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return rational_from(j);
}

Json blocks_json(const Partition& p) {
  Json out = Json::array();
  for (const auto& b : p.blocks()) out.push_back(b.members());
  return out;
}

Json optional_count(const std::optional<Count>& c) { return c ? Json(*c) : Json(nullptr); }

std::optional<Count> optional_count_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<Count>();
}

std::vector<std::size_t> one_based(const std::vector<std::size_t>& v) {
  std::vector<std::size_t> out;
  for (auto x : v) out.push_back(x + 1);
  return out;
}

std::vector<std::size_t> zero_based(const std::vector<std::size_t>& v) {
  std::vector<std::size_t> out;
  for (auto x : v) {
    if (x == 0) throw Error(ErrorCode::Parse, "index 0 in a 1-based list");
    out.push_back(x - 1);
  }
  return out;
}

}  // namespace

Json to_json(const AnalysisReport& r) {
  Json j;
  j["input"] = {{"source", r.source},
                {"objects", r.objects},
                {"granules", r.granules.size()},
                {"classes", r.decisions.size()},
                {"attributes", r.attributes},
                {"decision", r.decision_attribute}};
  j["granules"] = blocks_json(r.granules);

  Json classes = Json::array();
  for (std::size_t i = 0; i < r.decisions.size(); ++i)
    classes.push_back({{"label", r.decision_labels.at(i)},
                       {"members", r.decisions.blocks()[i].members()}});
  j["decision_classes"] = std::move(classes);

  j["granule_frequency_matrix"] = {{"cells", r.frequencies.rows()},
                                   {"granule_sizes", r.frequencies.granule_sizes()},
                                   {"class_sizes", r.frequencies.class_sizes()},
                                   {"total", r.frequencies.total()}};

  j["classifier"] = {
      {"kind", std::string(to_string(r.classifier_kind))},
      {"tie_break", std::string(to_string(r.tie_break.kind))},
      {"seed", r.tie_break.kind == TieBreak::Kind::SeededRandom ? Json(r.tie_break.seed)
                                                                 : Json(nullptr)},
      {"mapping", one_based(r.classifier.assignment())}};
  j["validation"] = {{"satisfies_rule", r.validation.satisfies_rule()},
                     {"violations", one_based(r.validation.violations)}};
  j["confusion_matrix"] = {{"cells", r.confusion.rows()},
                           {"row_sums", r.confusion.row_sums()},
                           {"col_sums", r.confusion.col_sums()},
                           {"total", r.confusion.total()}};

  Json alpha_hat = Json::array();
  for (const auto& a : r.alpha_hat) alpha_hat.push_back(optional_rational_json(a));
  j["indices"] = {{"success_ratio", rational_json(r.success)},
                  {"gamma_hat", rational_json(r.gamma_hat)},
                  {"alpha_hat", std::move(alpha_hat)},
                  {"alpha", optional_rational_json(r.alpha_aggregate)},
                  {"alpha_from_gamma_hat", rational_json(r.alpha_from_gamma_hat)}};

  Json approx = Json::array();
  for (std::size_t i = 0; i < r.approximation.classes.size(); ++i) {
    const auto& c = r.approximation.classes[i];
    approx.push_back({{"class", i + 1},
                      {"n", c.size},
                      {"nl", c.lower},
                      {"nu", c.upper},
                      {"p_lower", rational_json(c.lower_precision)},
                      {"p_upper", rational_json(c.upper_precision)},
                      {"alpha", rational_json(c.accuracy)}});
  }
  j["approximation"] = {{"gamma", rational_json(r.approximation.gamma)},
                        {"classes", std::move(approx)}};

  Json bounds = Json::array();
  for (std::size_t i = 0; i < r.bounds.classes.size(); ++i) {
    const auto& b = r.bounds.classes[i];
    bounds.push_back({{"class", i + 1},
                      {"size", b.class_size},
                      {"nl_star", b.nl_star},
                      {"nl_star2", b.nl_star2},
                      {"nl_m", optional_count(b.nl_m)},
                      {"nu_star", b.nu_star},
                      {"nu_star2", b.nu_star2},
                      {"nu_m", optional_count(b.nu_m)},
                      {"clamped", b.clamped}});
  }
  j["bounds"] = {{"rule_validated", r.bounds.rule_validated},
                 {"mrc_classifier", r.bounds.mrc_classifier},
                 {"classes", std::move(bounds)}};

  Json checks = Json::array();
  for (const auto& c : r.theorems.checks)
    checks.push_back({{"property", c.property},
                      {"class", c.class_index ? Json(*c.class_index + 1) : Json(nullptr)},
                      {"statement", c.statement},
                      {"values", c.values},
                      {"status", std::string(to_string(c.status))}});
  j["theorems"] = {{"overall_pass", r.theorems.overall_pass()},
                   {"failures", r.theorems.failures()},
                   {"classifier_kind", std::string(to_string(r.theorems.context.kind))},
                   {"tie_break", std::string(to_string(r.theorems.context.tie_break.kind))},
                   {"checks", std::move(checks)}};
  return j;
}

AnalysisReport analysis_report_from_json(const Json& j) {
  try {
    const Json& input = j.at("input");
    const auto blocks = [](const Json& arr) {
      return Partition(arr.get<std::vector<std::vector<ObjectId>>>());
    };

    std::vector<std::vector<ObjectId>> class_blocks;
    std::vector<std::string> labels;
    for (const auto& c : j.at("decision_classes")) {
      labels.push_back(c.at("label").get<std::string>());
      class_blocks.push_back(c.at("members").get<std::vector<ObjectId>>());
    }
    Partition decisions(class_blocks);
    if (decisions.blocks().size() != labels.size())
      throw Error(ErrorCode::Parse, "decision classes do not form a partition");

    const Json& cls = j.at("classifier");
    TieBreak tie{parse_tie_break(cls.at("tie_break").get<std::string>()), 0};
    if (!cls.at("seed").is_null()) tie.seed = cls.at("seed").get<std::uint64_t>();
    RoughClassifier f(zero_based(cls.at("mapping").get<std::vector<std::size_t>>()),
                      decisions.size());

    const Json& idx = j.at("indices");
    std::vector<std::optional<Rational>> alpha_hat;
    for (const auto& a : idx.at("alpha_hat")) alpha_hat.push_back(optional_rational_from(a));

    ApproximationSummary approx;
    approx.gamma = rational_from(j.at("approximation").at("gamma"));
    for (const auto& c : j.at("approximation").at("classes")) {
      approx.classes.push_back({c.at("n").get<Count>(), c.at("nl").get<Count>(),
                                c.at("nu").get<Count>(), rational_from(c.at("p_lower")),
                                rational_from(c.at("p_upper")), rational_from(c.at("alpha"))});
    }

    BoundsReport bounds;
    bounds.rule_validated = j.at("bounds").at("rule_validated").get<bool>();
    bounds.mrc_classifier = j.at("bounds").at("mrc_classifier").get<bool>();
    for (const auto& b : j.at("bounds").at("classes")) {
      ClassBounds cb;
      cb.class_size = b.at("size").get<Count>();
      cb.nl_star = b.at("nl_star").get<Count>();
      cb.nl_star2 = b.at("nl_star2").get<Count>();
      cb.nl_m = optional_count_from(b.at("nl_m"));
      cb.nu_star = b.at("nu_star").get<Count>();
      cb.nu_star2 = b.at("nu_star2").get<Count>();
      cb.nu_m = optional_count_from(b.at("nu_m"));
      cb.clamped = b.at("clamped").get<bool>();
      bounds.classes.push_back(cb);
    }

    const Json& th = j.at("theorems");
    TheoremReport theorems;
    theorems.context.kind = parse_classifier_kind(th.at("classifier_kind").get<std::string>());
    theorems.context.tie_break = tie;
    theorems.context.tie_break.kind = parse_tie_break(th.at("tie_break").get<std::string>());
    for (const auto& c : th.at("checks")) {
      InequalityCheck check;
      check.property = c.at("property").get<std::string>();
      if (!c.at("class").is_null()) check.class_index = c.at("class").get<std::size_t>() - 1;
      check.statement = c.at("statement").get<std::string>();
      check.values = c.at("values").get<std::vector<std::int64_t>>();
      check.status = parse_check_status(c.at("status").get<std::string>());
      theorems.checks.push_back(std::move(check));
    }

    ValidationReport validation{zero_based(j.at("validation").at("violations").get<std::vector<std::size_t>>())};

    return AnalysisReport{
        .source = input.at("source").get<std::string>(),
        .objects = input.at("objects").get<std::size_t>(),
        .attributes = input.at("attributes").get<std::vector<std::string>>(),
        .decision_attribute = input.at("decision").get<std::string>(),
        .granules = blocks(j.at("granules")),
        .decisions = std::move(decisions),
        .decision_labels = std::move(labels),
        .frequencies = GranuleFrequencyMatrix::from_counts(
            j.at("granule_frequency_matrix").at("cells").get<std::vector<std::vector<Count>>>()),
        .classifier_kind = parse_classifier_kind(cls.at("kind").get<std::string>()),
        .tie_break = tie,
        .classifier = std::move(f),
        .validation = std::move(validation),
        .confusion = RoughConfusionMatrix::from_counts(
            j.at("confusion_matrix").at("cells").get<std::vector<std::vector<Count>>>()),
        .success = rational_from(idx.at("success_ratio")),
        .gamma_hat = rational_from(idx.at("gamma_hat")),
        .alpha_hat = std::move(alpha_hat),
        .alpha_aggregate = optional_rational_from(idx.at("alpha")),
        .alpha_from_gamma_hat = rational_from(idx.at("alpha_from_gamma_hat")),
        .approximation = std::move(approx),
        .bounds = std::move(bounds),
        .theorems = std::move(theorems),
    };
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("malformed report: ") + e.what());
  }
}

std::string render_json(const AnalysisReport& report) { return to_json(report).dump(2) + "\n"; }

// Text

namespace {

std::string show(const Rational& r) {
  return to_fraction_string(r) + " (" + to_decimal_string(r) + ")";
}

std::string show(const std::optional<Rational>& r) { return r ? show(*r) : "undefined"; }

std::string show_set(const ObjectSet& s) {
  std::string out = "{";
  for (auto it = s.begin(); it != s.end(); ++it) out += (it == s.begin() ? "" : ", ") + std::to_string(*it);
  return out + "}";
}

template <class Row>
void table_row(std::ostream& out, const std::string& label, const Row& cells, Count sum) {
  out << "  " << std::left << std::setw(6) << label << std::right;
  for (auto c : cells) out << std::setw(6) << c;
  out << std::setw(7) << sum << '\n';
}

void table_header(std::ostream& out, std::size_t k, const std::string& last) {
  out << "  " << std::setw(6) << "";
  for (std::size_t j = 0; j < k; ++j) out << std::setw(6) << ("Y" + std::to_string(j + 1));
  out << std::setw(7) << last << '\n';
}

}  // namespace

std::string render_text(const AnalysisReport& r) {
  std::ostringstream out;
  const std::size_t k = r.decisions.size();

  out << "Rough confusion analysis of " << r.source << '\n';
  out << "objects " << r.objects << ", granules " << r.granules.size() << ", classes " << k
      << '\n';
  out << "attributes:";
  for (const auto& a : r.attributes) out << ' ' << a;
  out << "\ndecision: " << r.decision_attribute << "\n\n";

  out << "Granules\n";
  for (std::size_t i = 0; i < r.granules.size(); ++i)
    out << "  X" << (i + 1) << " = " << show_set(r.granules.blocks()[i]) << '\n';
  out << "Decision classes\n";
  for (std::size_t j = 0; j < k; ++j)
    out << "  Y" << (j + 1) << " = " << show_set(r.decisions.blocks()[j]) << "  ("
        << r.decision_attribute << " = " << r.decision_labels[j] << ")\n";

  out << "\nGranule frequency matrix\n";
  table_header(out, k, "Size");
  for (std::size_t i = 0; i < r.frequencies.granule_count(); ++i)
    table_row(out, "X" + std::to_string(i + 1), r.frequencies.row(i),
              r.frequencies.granule_sizes()[i]);
  table_row(out, "Size", r.frequencies.class_sizes(), r.frequencies.total());

  out << "\nClassifier: " << to_string(r.classifier_kind);
  if (r.classifier_kind == ClassifierKind::Mrc) {
    out << " (tie-break " << to_string(r.tie_break.kind);
    if (r.tie_break.kind == TieBreak::Kind::SeededRandom) out << ", seed " << r.tie_break.seed;
    out << ")";
  }
  out << '\n';
  for (std::size_t i = 0; i < r.classifier.granule_count(); ++i)
    out << "  X" << (i + 1) << " -> Y" << (r.classifier(i) + 1) << '\n';
  if (r.validation.satisfies_rule()) {
    out << "Overlap condition: satisfied\n";
  } else {
    out << "Overlap condition: VIOLATED at granules";
    for (auto v : r.validation.violations) out << " X" << (v + 1);
    out << '\n';
  }

  out << "\nConfusion matrix (rows predicted, columns true)\n";
  table_header(out, k, "Sum");
  const auto rows = r.confusion.rows();
  for (std::size_t i = 0; i < k; ++i)
    table_row(out, "^Y" + std::to_string(i + 1), rows[i], r.confusion.row_sums()[i]);
  table_row(out, "Sum", r.confusion.col_sums(), r.confusion.total());

  out << "\nIndices\n";
  out << "  success ratio          " << show(r.success) << '\n';
  out << "  gamma_hat              " << show(r.gamma_hat) << '\n';
  for (std::size_t j = 0; j < r.alpha_hat.size(); ++j)
    out << "  " << std::left << std::setw(23) << ("alpha_hat Y" + std::to_string(j + 1))
        << std::right << show(r.alpha_hat[j]) << '\n';
  out << "  alpha                  " << show(r.alpha_aggregate) << '\n';
  out << "  alpha from gamma_hat   " << show(r.alpha_from_gamma_hat) << '\n';

  out << "\nApproximation quality\n";
  out << "  gamma " << show(r.approximation.gamma) << '\n';
  for (std::size_t j = 0; j < r.approximation.classes.size(); ++j) {
    const auto& c = r.approximation.classes[j];
    out << "  Y" << (j + 1) << ": n " << c.size << ", nl " << c.lower << ", nu " << c.upper
        << ", p_lower " << show(c.lower_precision) << ", p_upper " << show(c.upper_precision)
        << ", alpha " << show(c.accuracy) << '\n';
  }

  out << "\nConfusion bounds (" << (r.bounds.rule_validated ? "overlap validated" : "NOT validated")
      << (r.bounds.mrc_classifier ? ", mrc" : "") << ")\n";
  out << "  class   |Y|   nl*  nl**  nl^m   nu*  nu**  nu^m\n";
  auto opt = [](const std::optional<Count>& c) { return c ? std::to_string(*c) : std::string("-"); };
  for (std::size_t j = 0; j < r.bounds.classes.size(); ++j) {
    const auto& b = r.bounds.classes[j];
    out << "  " << std::left << std::setw(6) << ("Y" + std::to_string(j + 1)) << std::right
        << std::setw(5) << b.class_size << std::setw(6) << b.nl_star << std::setw(6)
        << b.nl_star2 << std::setw(6) << opt(b.nl_m) << std::setw(6) << b.nu_star
        << std::setw(6) << b.nu_star2 << std::setw(6) << opt(b.nu_m)
        << (b.clamped ? "  (clamped)" : "") << '\n';
  }

  std::size_t applicable = 0;
  for (const auto& c : r.theorems.checks)
    if (c.status != CheckStatus::NotApplicable) ++applicable;
  out << "\nTheorem checks: " << (r.theorems.overall_pass() ? "pass" : "FAIL") << " ("
      << applicable << " applicable, " << r.theorems.failures() << " failed)\n";
  for (const auto& c : r.theorems.checks) {
    if (c.status == CheckStatus::NotApplicable) continue;
    out << "  " << std::left << std::setw(5) << to_string(c.status) << std::setw(17)
        << c.property << std::setw(4)
        << (c.class_index ? "Y" + std::to_string(*c.class_index + 1) : std::string("-"))
        << std::right << c.statement << "  [";
    for (std::size_t i = 0; i < c.values.size(); ++i) out << (i ? ", " : "") << c.values[i];
    out << "]\n";
  }
  return out.str();
}

// Fuzz summary

Json to_json(const FuzzSummary& s) {
  Json first = nullptr;
  if (s.first_counterexample) {
    const auto& f = *s.first_counterexample;
    first = {{"trial", f.trial},
             {"classifier", std::string(to_string(f.kind))},
             {"config",
              {{"n_objects", f.config.n_objects},
               {"n_attributes", f.config.n_attributes},
               {"values_per_attribute", f.config.values_per_attribute},
               {"n_decision_values", f.config.n_decision_values},
               {"seed", f.config.seed}}},
             {"detail", f.detail}};
  }
  return Json{{"trials", s.config.trials},
              {"seed", s.config.seed},
              {"max_objects", s.config.max_objects},
              {"max_attributes", s.config.max_attributes},
              {"max_values", s.config.max_values},
              {"max_classes", s.config.max_classes},
              {"rng", Rng::kAlgorithm},
              {"seed_derivation", "splitmix64(base, trial)"},
              {"trials_run", s.trials_run},
              {"passed", s.trials_run - s.failed_trials},
              {"failed_trials", s.failed_trials},
              {"mrc_failures", s.mrc_failures},
              {"random_validated_failures", s.random_failures},
              {"checks_evaluated", s.checks_evaluated},
              {"first_counterexample", std::move(first)}};
}

std::string render_json(const FuzzSummary& s) { return to_json(s).dump(2) + "\n"; }

std::string render_text(const FuzzSummary& s) {
  std::ostringstream out;
  out << (s.trials_run - s.failed_trials) << "/" << s.trials_run << " trials pass (seed "
      << s.config.seed << ", max objects " << s.config.max_objects << ", max attributes "
      << s.config.max_attributes << ", max classes " << s.config.max_classes << ")\n";
  out << "mrc failures: " << s.mrc_failures
      << ", random-validated failures: " << s.random_failures
      << ", checks evaluated: " << s.checks_evaluated << '\n';
  if (s.first_counterexample) {
    const auto& f = *s.first_counterexample;
    out << "first counterexample: trial " << f.trial << " (" << to_string(f.kind)
        << "), n_objects " << f.config.n_objects << ", n_attributes " << f.config.n_attributes
        << ", values " << f.config.values_per_attribute << ", k "
        << f.config.n_decision_values << ", seed " << f.config.seed << "\n  " << f.detail
        << '\n';
  }
  return out.str();
}

}  // namespace roughcm
