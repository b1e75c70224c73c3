#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "roughcm/error.hpp"
#include "roughcm/report.hpp"
#include "support.hpp"

using namespace roughcm;
using namespace roughcm::testing;

namespace {

const std::filesystem::path kData = ROUGHCM_DATA_DIR;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

AnalysisOptions example_options() {
  AnalysisOptions o;
  o.attributes = kExampleAttributes;
  o.source_name = "table3.csv";
  return o;
}

std::string fraction_text(const Json& r) {
  const auto num = r.at("num").get<std::int64_t>();
  const auto den = r.at("den").get<std::int64_t>();
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace

TEST_CASE("parse_csv") {
  SUBCASE("table file") {
    const auto ds = ingest_csv(kData / "table3.csv", std::nullopt);
    CHECK(ds.object_count() == 6);
    CHECK(ds.condition_names() == std::vector<std::string>{"Price", "Guarantee", "Sound", "Screen"});
    CHECK(ds.decision_attribute().name == "d");
    CHECK(ds.condition("Screen").values == table3().condition("Screen").values);
    CHECK(ds.decision_attribute().values == table3().decision_attribute().values);
  }

  SUBCASE("quotes, CRLF, BOM and an explicit decision column") {
    const auto ds = parse_csv("\xEF\xBB\xBF" "cls,\"a,b\",c\r\nx,\"1,2\",\"say \"\"hi\"\"\"\r\ny, 3 ,q\r\n\r\n", "cls");
    CHECK(ds.decision_attribute().name == "cls");
    CHECK(ds.decision_attribute().values == std::vector<std::string>{"x", "y"});
    CHECK(ds.condition_names() == std::vector<std::string>{"a,b", "c"});
    CHECK(ds.condition("a,b").values == std::vector<std::string>{"1,2", "3"});
    CHECK(ds.condition("c").values == std::vector<std::string>{"say \"hi\"", "q"});
  }

  SUBCASE("diagnostics") {
    CHECK(code_of([] { parse_csv("a,d\n1,x\n2\n", std::nullopt); }) == ErrorCode::Parse);
    CHECK(code_of([] { parse_csv("a,a,d\n1,2,x\n", std::nullopt); }) == ErrorCode::Parse);
    CHECK(code_of([] { parse_csv("a,,d\n1,2,x\n", std::nullopt); }) == ErrorCode::Parse);
    CHECK(code_of([] { parse_csv("a,d\n1,\n2,y\n", std::nullopt); }) == ErrorCode::Parse);
    CHECK(code_of([] { parse_csv("d\nx\ny\n", std::nullopt); }) == ErrorCode::Parse);
    CHECK(code_of([] { parse_csv("a,d\n", std::nullopt); }) == ErrorCode::Parse);
    CHECK(code_of([] { parse_csv("", std::nullopt); }) == ErrorCode::Parse);
    CHECK(code_of([] { parse_csv("a,d\n1,\"x\n", std::nullopt); }) == ErrorCode::Parse);
    CHECK(code_of([] { parse_csv("a,d\n1,x\n2,y\n", "z"); }) == ErrorCode::UnknownAttribute);
    CHECK(code_of([] { parse_csv("a,d\n1,x\n2,x\n", std::nullopt); }) == ErrorCode::DegenerateDecision);
    CHECK(code_of([] { ingest_csv(kData / "missing.csv", std::nullopt); }) == ErrorCode::Io);

    try {
      parse_csv("a,d\n1,x\n2,y,z\n", std::nullopt, "t.csv");
      FAIL("expected a parse error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("t.csv:3") != std::string::npos);
    }
  }
}

TEST_CASE("run_analysis on the worked example") {
  const auto r = run_analysis(table3(), example_options());
  CHECK(r.granules == Partition({{1, 6}, {2}, {3}, {4, 5}}));
  CHECK(r.decision_labels == std::vector<std::string>{"high", "low"});
  CHECK(r.classifier_kind == ClassifierKind::Mrc);
  CHECK(r.classifier == example_classifier());
  CHECK(r.validation.satisfies_rule());
  CHECK(r.confusion.rows() == std::vector<std::vector<Count>>{{3, 1}, {0, 2}});
  CHECK(r.success == Rational(5, 6));
  CHECK(r.gamma_hat == Rational(5, 6));
  CHECK(r.alpha_hat == std::vector<std::optional<Rational>>{Rational(3, 4), Rational(2, 3)});
  CHECK(r.alpha_aggregate == Rational(5, 7));
  CHECK(r.alpha_from_gamma_hat == Rational(5, 7));
  CHECK(r.approximation.gamma == Rational(2, 3));
  CHECK(r.bounds.classes[1].nu_star == 3);
  CHECK(r.theorems.overall_pass());

  SUBCASE("empty attribute list means every condition attribute") {
    AnalysisOptions o;
    const auto all = run_analysis(table3(), o);
    CHECK(all.granules.size() == 6);
    CHECK(all.attributes.size() == 4);
  }
}

TEST_CASE("supplied classifier files") {
  auto o = example_options();

  o.classifier_file = kData / "table3_example.map";
  const auto ok = run_analysis(table3(), o);
  CHECK(ok.classifier_kind == ClassifierKind::Supplied);
  CHECK(ok.classifier == example_classifier());
  CHECK(ok.validation.satisfies_rule());

  o.classifier_file = kData / "table3_x4_to_y2.map";
  const auto bad = run_analysis(table3(), o);
  CHECK_FALSE(bad.validation.satisfies_rule());
  CHECK(bad.validation.violations == std::vector<std::size_t>{3});
  CHECK(bad.theorems.overall_pass());
  CHECK(to_json(bad)["validation"]["violations"] == Json::array({4}));

  o.classifier_file = kData / "nope.map";
  CHECK(code_of([&] { run_analysis(table3(), o); }) == ErrorCode::Io);
}

TEST_CASE("JSON report") {
  const auto r = run_analysis(table3(), example_options());
  const Json j = to_json(r);

  CHECK(j["input"]["granules"] == 4);
  CHECK(j["input"]["decision"] == "d");
  CHECK(j["granules"] == Json::parse("[[1,6],[2],[3],[4,5]]"));
  CHECK(j["classifier"]["kind"] == "mrc");
  CHECK(j["classifier"]["seed"].is_null());
  CHECK(j["classifier"]["mapping"] == Json::parse("[1,2,2,1]"));
  CHECK(j["confusion_matrix"]["cells"] == Json::parse("[[3,1],[0,2]]"));
  CHECK(j["indices"]["gamma_hat"]["num"] == 5);
  CHECK(j["indices"]["gamma_hat"]["den"] == 6);
  CHECK(j["indices"]["gamma_hat"]["decimal"].get<double>() == doctest::Approx(0.833333));
  CHECK(j["indices"]["alpha"]["num"] == 5);
  CHECK(j["approximation"]["gamma"]["den"] == 3);
  CHECK(j["bounds"]["classes"][0]["nl_m"] == 2);
  CHECK(j["theorems"]["overall_pass"] == true);

  SUBCASE("round trip") {
    const auto back = analysis_report_from_json(Json::parse(render_json(r)));
    CHECK(render_json(back) == render_json(r));
    CHECK(render_text(back) == render_text(r));
  }

  SUBCASE("deterministic") {
    CHECK(render_json(run_analysis(table3(), example_options())) == render_json(r));
  }

  SUBCASE("random tie breaking records its seed") {
    auto o = example_options();
    o.tie_break = {TieBreak::Kind::SeededRandom, 1234};
    const Json jr = to_json(run_analysis(table3(), o));
    CHECK(jr["classifier"]["tie_break"] == "random");
    CHECK(jr["classifier"]["seed"] == 1234);
  }
}

TEST_CASE("text and JSON carry the same numbers") {
  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const auto ds = random_decision_system(random_config(rng));
    AnalysisOptions o;
    o.attributes = random_attribute_subset(ds, rng);
    const auto r = run_analysis(ds, o);
    const Json j = to_json(r);
    const std::string text = render_text(r);
    CAPTURE(trial);

    for (const char* key : {"success_ratio", "gamma_hat", "alpha", "alpha_from_gamma_hat"}) {
      const Json& v = j["indices"][key];
      if (v.is_null()) continue;
      CHECK(text.find(fraction_text(v)) != std::string::npos);
      CHECK(text.find(to_decimal_string(Rational(v["num"].get<std::int64_t>(), v["den"].get<std::int64_t>()))) !=
            std::string::npos);
    }
    CHECK(text.find("gamma " + fraction_text(j["approximation"]["gamma"])) != std::string::npos);
    CHECK((text.find("Theorem checks: pass") != std::string::npos) == j["theorems"]["overall_pass"].get<bool>());
  }
}

TEST_CASE("fuzz summary rendering") {
  FuzzConfig cfg;
  cfg.trials = 20;
  const auto s = run_fuzz(cfg);
  const Json j = to_json(s);
  CHECK(j.dump() == to_json(run_fuzz(cfg)).dump());
  CHECK(render_text(s).find("20/20 trials pass") != std::string::npos);
  CHECK(Json::parse(render_json(s)) == j);
}
