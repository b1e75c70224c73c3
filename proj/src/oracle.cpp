#include "roughcm/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <exception>
#include <thread>

#include "roughcm/error.hpp"
#include "roughcm/indices.hpp"

namespace roughcm {

void GeneratorConfig::validate() const {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::Config, what);
  };
  require(n_objects >= 2 && n_objects <= 100, "n_objects must lie in 2..100");
  require(n_attributes >= 1 && n_attributes <= 8, "n_attributes must lie in 1..8");
  require(values_per_attribute >= 1 && values_per_attribute <= 6,
          "values_per_attribute must lie in 1..6");
  require(n_decision_values >= 2 && n_decision_values <= 8,
          "n_decision_values must lie in 2..8");
  require(n_decision_values <= n_objects, "n_decision_values exceeds n_objects");
}

DecisionSystem random_decision_system(const GeneratorConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);

  std::vector<ObjectId> ids(cfg.n_objects);
  for (std::size_t r = 0; r < ids.size(); ++r) ids[r] = r + 1;

  std::vector<Attribute> conditions;
  for (std::size_t a = 0; a < cfg.n_attributes; ++a) {
    Attribute attr{"a" + std::to_string(a + 1), {}};
    for (std::size_t r = 0; r < cfg.n_objects; ++r)
      attr.values.push_back("v" + std::to_string(rng.below(cfg.values_per_attribute)));
    conditions.push_back(std::move(attr));
  }

  Attribute decision{"d", {}};
  for (;;) {
    decision.values.clear();
    std::set<std::uint64_t> distinct;
    for (std::size_t r = 0; r < cfg.n_objects; ++r) {
      const auto v = rng.below(cfg.n_decision_values);
      distinct.insert(v);
      decision.values.push_back("c" + std::to_string(v));
    }
    if (distinct.size() >= 2) break;
  }
  return DecisionSystem(std::move(ids), std::move(conditions), std::move(decision));
}

RoughClassifier random_validated_classifier(const GranuleFrequencyMatrix& gfm, Rng& rng) {
  std::vector<std::size_t> assignment;
  for (std::size_t i = 0; i < gfm.granule_count(); ++i) {
    std::vector<std::size_t> met;
    auto row = gfm.row(i);
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] > 0) met.push_back(j);
    assignment.push_back(met[rng.below(met.size())]);
  }
  return RoughClassifier(std::move(assignment), gfm.class_count());
}

namespace {

const ObjectSet& owning_block(const Partition& p, ObjectId x) {
  for (const auto& block : p.blocks())
    for (ObjectId member : block)
      if (member == x) return block;
  throw Error(ErrorCode::UniverseMismatch, "object " + std::to_string(x) + " has no block");
}

void require_members_known(const Partition& p, const ObjectSet& y) {
  for (ObjectId id : y) {
    bool found = false;
    for (const auto& block : p.blocks())
      for (ObjectId member : block) found = found || member == id;
    if (!found)
      throw Error(ErrorCode::UniverseMismatch,
                  "object " + std::to_string(id) + " is not in the partition's universe");
  }
}

template <class Keep>
ObjectSet per_element(const Partition& p, const ObjectSet& y, Keep keep) {
  require_members_known(p, y);
  std::vector<ObjectId> out;
  for (const auto& block : p.blocks())
    for (ObjectId x : block)
      if (keep(owning_block(p, x))) out.push_back(x);
  return ObjectSet(std::move(out));
}

}  // namespace

ObjectSet oracle_lower(const Partition& p, const ObjectSet& y) {
  return per_element(p, y, [&](const ObjectSet& block) {
    return std::all_of(block.begin(), block.end(), [&](ObjectId m) { return y.contains(m); });
  });
}

ObjectSet oracle_upper(const Partition& p, const ObjectSet& y) {
  return per_element(p, y, [&](const ObjectSet& block) {
    return std::any_of(block.begin(), block.end(), [&](ObjectId m) { return y.contains(m); });
  });
}

BestClassifier exhaustive_best_classifier(const GranuleFrequencyMatrix& gfm,
                                          std::uint64_t limit) {
  const std::size_t m = gfm.granule_count();
  const std::size_t k = gfm.class_count();
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (space > limit / k)
      throw Error(ErrorCode::InstanceTooLarge,
                  std::to_string(k) + "^" + std::to_string(m) + " classifiers exceed the limit of " +
                      std::to_string(limit));
    space *= k;
  }

  std::vector<std::size_t> current(m, 0);
  std::vector<std::size_t> best = current;
  Count best_score = 0;
  bool have_best = false;
  for (std::uint64_t n = 0; n < space; ++n) {
    Count score = 0;
    for (std::size_t i = 0; i < m; ++i) score += gfm.cell(i, current[i]);
    if (!have_best || score > best_score) {
      best_score = score;
      best = current;
      have_best = true;
    }
    for (std::size_t i = m; i-- > 0;) {
      if (++current[i] < k) break;
      current[i] = 0;
    }
  }
  return {RoughClassifier(std::move(best), k), make_ratio(best_score, gfm.total())};
}

std::string_view to_string(ClassifierKind kind) noexcept {
  switch (kind) {
    case ClassifierKind::Mrc: return "mrc";
    case ClassifierKind::RandomValidated: return "random-validated";
    case ClassifierKind::Supplied: return "file";
  }
  return "file";
}

ClassifierKind parse_classifier_kind(std::string_view text) {
  if (text == "mrc") return ClassifierKind::Mrc;
  if (text == "random-validated") return ClassifierKind::RandomValidated;
  if (text == "file") return ClassifierKind::Supplied;
  throw Error(ErrorCode::Parse, "unknown classifier kind '" + std::string(text) + "'");
}

std::string_view to_string(CheckStatus status) noexcept {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "not-applicable";
  }
  return "not-applicable";
}

CheckStatus parse_check_status(std::string_view text) {
  if (text == "pass") return CheckStatus::Pass;
  if (text == "fail") return CheckStatus::Fail;
  if (text == "not-applicable") return CheckStatus::NotApplicable;
  throw Error(ErrorCode::Parse, "unknown check status '" + std::string(text) + "'");
}

std::size_t TheoremReport::failures() const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(),
      [](const InequalityCheck& c) { return c.status == CheckStatus::Fail; }));
}

namespace {

bool non_decreasing(const std::vector<std::int64_t>& v) {
  return std::is_sorted(v.begin(), v.end());
}

std::int64_t as_signed(Count c) { return static_cast<std::int64_t>(c); }

}  // namespace

TheoremReport verify_theorems(const DecisionSystem& ds,
                              std::span<const std::string> attributes,
                              const RoughClassifier& f,
                              const VerificationContext& context) {
  const Partition granules = partition_by_attributes(ds, attributes);
  const Partition decisions = decision_partition(ds);
  const GranuleFrequencyMatrix gfm = granule_frequency_matrix(granules, decisions);
  const ValidationReport validation = validate_overlap(f, gfm);
  const RoughConfusionMatrix cm = confusion_matrix(gfm, f);
  const bool is_mrc = context.kind == ClassifierKind::Mrc;
  const BoundsReport bounds = confusion_bounds(cm, validation, is_mrc);
  const bool validated = validation.satisfies_rule();

  TheoremReport report;
  report.context = context;
  auto add = [&](std::string property, std::optional<std::size_t> cls, std::string statement,
                 std::vector<std::int64_t> values, bool applicable, bool ok) {
    report.checks.push_back(
        {std::move(property), cls, std::move(statement), std::move(values),
         !applicable ? CheckStatus::NotApplicable : ok ? CheckStatus::Pass : CheckStatus::Fail});
  };

  // Generated classifiers must satisfy the overlap condition by construction.
  {
    const bool generated = context.kind != ClassifierKind::Supplied;
    add("overlap", std::nullopt, "violating granules == 0",
        {as_signed(validation.violations.size())}, generated || validated, validated);
  }

  for (std::size_t j = 0; j < decisions.size(); ++j) {
    const ObjectSet& y = decisions.blocks()[j];
    const ObjectSet low = oracle_lower(granules, y);
    const ObjectSet upp = oracle_upper(granules, y);
    const auto nl = as_signed(low.size());
    const auto nu = as_signed(upp.size());
    const auto size = as_signed(y.size());
    const ClassBounds& b = bounds.classes[j];

    add("oracle_agreement", j, "core |Low| == oracle |Low|, core |Upp| == oracle |Upp|",
        {as_signed(lower_approximation(granules, y).size()), nl,
         as_signed(upper_approximation(granules, y).size()), nu},
        true,
        lower_approximation(granules, y) == low && upper_approximation(granules, y) == upp);

    std::vector<std::int64_t> thm1{nl, as_signed(b.nl_star2), as_signed(b.nl_star), size};
    add("thm1", j, "nl <= nl** <= nl* <= |Y|", thm1, validated, non_decreasing(thm1));
    std::vector<std::int64_t> thm2{size, as_signed(b.nu_star), as_signed(b.nu_star2), nu};
    add("thm2", j, "|Y| <= nu* <= nu** <= nu", thm2, validated, non_decreasing(thm2));

    if (is_mrc) {
      std::vector<std::int64_t> thm3{nl, as_signed(*b.nl_m), as_signed(b.nl_star2)};
      add("thm3", j, "nl <= nl^m <= nl**", thm3, validated, non_decreasing(thm3));
      std::vector<std::int64_t> thm4{as_signed(b.nl_star2), as_signed(*b.nu_m), nu};
      add("thm4", j, "nl** <= nu^m <= nu", thm4, validated, non_decreasing(thm4));
    } else {
      add("thm3", j, "nl <= nl^m <= nl**", {}, false, false);
      add("thm4", j, "nl** <= nu^m <= nu", {}, false, false);
    }

    // Granules inside Y_j are all sent to j.
    std::int64_t contained = 0;
    std::int64_t contained_mapped = 0;
    std::vector<ObjectId> predicted;
    for (std::size_t s = 0; s < granules.size(); ++s) {
      const ObjectSet& x = granules.blocks()[s];
      if (std::all_of(x.begin(), x.end(), [&](ObjectId id) { return y.contains(id); })) {
        ++contained;
        if (f(s) == j) ++contained_mapped;
      }
      if (f(s) == j) predicted.insert(predicted.end(), x.begin(), x.end());
    }
    add("lemma1_1", j, "granules inside Y == those sent to Y", {contained, contained_mapped},
        validated, contained == contained_mapped);

    // Low(Y_j) is covered by the predictor set.
    const ObjectSet predictor(std::move(predicted));
    const auto covered = as_signed(set_intersection(low, predictor).size());
    add("lemma1_2", j, "|Low(Y) ∩ Ŷ| == |Low(Y)|", {covered, nl}, validated, covered == nl);

    // An empty diagonal cell forces an empty row.
    const auto diag = as_signed(cm.cell(j, j));
    const auto row = as_signed(cm.row_sums()[j]);
    add("lemma1_3", j, "n_jj == 0 implies n_j. == 0", {diag, row}, validated,
        diag > 0 || row == 0);

    const auto reach = as_signed(cm.row_sums()[j] + cm.col_sums()[j] - cm.cell(j, j));
    add("base_lower", j, "nl <= n_jj", {nl, diag}, validated, nl <= diag);
    add("base_upper", j, "n_j. + n_.j - n_jj <= nu", {reach, nu}, validated, reach <= nu);
  }
  return report;
}

// Fuzzing

void FuzzConfig::validate() const {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::Config, what);
  };
  require(max_objects >= 2 && max_objects <= 100, "max-objects must lie in 2..100");
  require(max_attributes >= 1 && max_attributes <= 8, "max-attributes must lie in 1..8");
  require(max_values >= 1 && max_values <= 6, "max-values must lie in 1..6");
  require(max_classes >= 2 && max_classes <= 8, "max-classes must lie in 2..8 (k >= 2)");
  require(threads >= 1, "threads must be at least 1");
}

GeneratorConfig fuzz_trial_config(const FuzzConfig& config, std::size_t index) {
  Rng rng(derive_seed(config.seed, index));
  GeneratorConfig cfg;
  cfg.n_objects = rng.between(2, config.max_objects);
  cfg.n_attributes = rng.between(1, config.max_attributes);
  cfg.values_per_attribute = rng.between(1, config.max_values);
  cfg.n_decision_values = rng.between(2, std::min(config.max_classes, cfg.n_objects));
  cfg.seed = rng.next();
  return cfg;
}

namespace {

std::string describe_failure(const TheoremReport& report) {
  for (const auto& c : report.checks) {
    if (c.status != CheckStatus::Fail) continue;
    std::ostringstream out;
    out << c.property;
    if (c.class_index) out << " class " << (*c.class_index + 1);
    out << ": " << c.statement << " with [";
    for (std::size_t i = 0; i < c.values.size(); ++i) out << (i ? ", " : "") << c.values[i];
    out << "]";
    return out.str();
  }
  return {};
}

struct TrialOutcome {
  std::size_t checks = 0;
  std::optional<FuzzFailure> mrc;
  std::optional<FuzzFailure> random;
};

TrialOutcome run_trial(const FuzzConfig& config, std::size_t index) {
  const GeneratorConfig cfg = fuzz_trial_config(config, index);
  const DecisionSystem ds = random_decision_system(cfg);
  const std::vector<std::string> attributes = ds.condition_names();
  const GranuleFrequencyMatrix gfm =
      granule_frequency_matrix(partition_by_attributes(ds, attributes), decision_partition(ds));

  TrialOutcome outcome;
  const TieBreak lowest{};
  const TheoremReport mrc = verify_theorems(ds, attributes, maximal_row_classifier(gfm, lowest),
                                            {ClassifierKind::Mrc, lowest, cfg});
  outcome.checks += mrc.checks.size();
  if (!mrc.overall_pass())
    outcome.mrc = FuzzFailure{index, cfg, ClassifierKind::Mrc, describe_failure(mrc)};

  Rng rng(derive_seed(cfg.seed, 1));
  const TheoremReport random =
      verify_theorems(ds, attributes, random_validated_classifier(gfm, rng),
                      {ClassifierKind::RandomValidated, lowest, cfg});
  outcome.checks += random.checks.size();
  if (!random.overall_pass())
    outcome.random =
        FuzzFailure{index, cfg, ClassifierKind::RandomValidated, describe_failure(random)};
  return outcome;
}

void merge_failure(std::optional<FuzzFailure>& first, const std::optional<FuzzFailure>& f) {
  if (f && (!first || f->trial < first->trial)) first = f;
}

}  // namespace

FuzzSummary run_fuzz(const FuzzConfig& config) {
  config.validate();
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(config.threads, std::max<std::size_t>(config.trials, 1)));
  std::vector<FuzzSummary> partial(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned w) {
    FuzzSummary& s = partial[w];
    try {
      for (std::size_t t = w; t < config.trials; t += workers) {
        const TrialOutcome o = run_trial(config, t);
        ++s.trials_run;
        if (o.mrc || o.random) ++s.failed_trials;
        s.checks_evaluated += o.checks;
        if (o.mrc) ++s.mrc_failures;
        if (o.random) ++s.random_failures;
        merge_failure(s.first_counterexample, o.mrc);
        merge_failure(s.first_counterexample, o.random);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  FuzzSummary summary;
  summary.config = config;
  for (const auto& s : partial) {
    summary.trials_run += s.trials_run;
    summary.failed_trials += s.failed_trials;
    summary.checks_evaluated += s.checks_evaluated;
    summary.mrc_failures += s.mrc_failures;
    summary.random_failures += s.random_failures;
    merge_failure(summary.first_counterexample, s.first_counterexample);
  }
  return summary;
}

}  // namespace roughcm
