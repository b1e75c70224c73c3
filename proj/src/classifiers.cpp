#include "roughcm/classifiers.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "roughcm/error.hpp"
#include "roughcm/rng.hpp"

namespace roughcm {

RoughClassifier::RoughClassifier(std::vector<std::size_t> assignment,
                                 std::size_t class_count)
    : assignment_(std::move(assignment)), classes_(class_count) {
  if (assignment_.empty())
    throw Error(ErrorCode::InvalidArgument, "classifier covers no granules");
  if (classes_ == 0) throw Error(ErrorCode::InvalidArgument, "classifier has no classes");
  for (std::size_t i = 0; i < assignment_.size(); ++i) {
    if (assignment_[i] >= classes_)
      throw Error(ErrorCode::IndexOutOfRange,
                  "granule " + std::to_string(i + 1) + " mapped to class " +
                      std::to_string(assignment_[i] + 1) + " but k = " +
                      std::to_string(classes_));
  }
}

std::size_t RoughClassifier::operator()(std::size_t granule) const {
  if (granule >= assignment_.size())
    throw Error(ErrorCode::IndexOutOfRange, "granule index out of range");
  return assignment_[granule];
}

std::string_view to_string(TieBreak::Kind kind) noexcept {
  switch (kind) {
    case TieBreak::Kind::Lowest: return "lowest";
    case TieBreak::Kind::Highest: return "highest";
    case TieBreak::Kind::SeededRandom: return "random";
  }
  return "lowest";
}

TieBreak::Kind parse_tie_break(std::string_view text) {
  if (text == "lowest") return TieBreak::Kind::Lowest;
  if (text == "highest") return TieBreak::Kind::Highest;
  if (text == "random") return TieBreak::Kind::SeededRandom;
  throw Error(ErrorCode::InvalidArgument,
              "unknown tie-break policy '" + std::string(text) + "'");
}

namespace {

void require_same_shape(const RoughClassifier& f, const GranuleFrequencyMatrix& gfm) {
  if (f.granule_count() != gfm.granule_count() || f.class_count() != gfm.class_count())
    throw Error(ErrorCode::ShapeMismatch, "classifier and frequency matrix disagree in shape");
}

}  // namespace

ValidationReport validate_overlap(const RoughClassifier& f,
                                  const GranuleFrequencyMatrix& gfm) {
  require_same_shape(f, gfm);
  ValidationReport report;
  for (std::size_t i = 0; i < gfm.granule_count(); ++i)
    if (gfm.cell(i, f(i)) == 0) report.violations.push_back(i);
  return report;
}

RoughClassifier maximal_row_classifier(const GranuleFrequencyMatrix& gfm,
                                       TieBreak tie_break) {
  Rng rng(tie_break.seed);
  std::vector<std::size_t> assignment;
  assignment.reserve(gfm.granule_count());
  for (std::size_t i = 0; i < gfm.granule_count(); ++i) {
    auto row = gfm.row(i);
    const Count best = *std::max_element(row.begin(), row.end());
    std::vector<std::size_t> ties;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] == best) ties.push_back(j);
    switch (tie_break.kind) {
      case TieBreak::Kind::Lowest: assignment.push_back(ties.front()); break;
      case TieBreak::Kind::Highest: assignment.push_back(ties.back()); break;
      case TieBreak::Kind::SeededRandom:
        // one draw per row, tied or not, so a row's choice does not depend on
        // how many earlier rows were tied
        assignment.push_back(ties[rng.below(ties.size())]);
        break;
    }
  }
  return RoughClassifier(std::move(assignment), gfm.class_count());
}

bool is_row_maximal(const RoughClassifier& f, const GranuleFrequencyMatrix& gfm) {
  require_same_shape(f, gfm);
  for (std::size_t i = 0; i < gfm.granule_count(); ++i) {
    auto row = gfm.row(i);
    if (row[f(i)] != *std::max_element(row.begin(), row.end())) return false;
  }
  return true;
}

Rational success_ratio(const RoughConfusionMatrix& cm) {
  return make_ratio(cm.diagonal_sum(), cm.total());
}

RoughClassifier parse_classifier_mapping(std::string_view text,
                                         std::size_t granule_count,
                                         std::size_t class_count) {
  std::vector<std::size_t> assignment(granule_count, 0);
  std::vector<bool> seen(granule_count, false);

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) fields.push_back(line.substr(start, i - start));
    }
    if (fields.empty()) continue;

    const std::string where = "line " + std::to_string(line_no);
    if (fields.size() != 2)
      throw Error(ErrorCode::Parse, where + ": expected 'granule class', got " +
                                        std::to_string(fields.size()) + " fields");
    std::size_t values[2];
    for (int f = 0; f < 2; ++f) {
      auto [ptr, ec] = std::from_chars(fields[f].data(), fields[f].data() + fields[f].size(),
                                       values[f]);
      if (ec != std::errc() || ptr != fields[f].data() + fields[f].size())
        throw Error(ErrorCode::Parse,
                    where + ": '" + std::string(fields[f]) + "' is not a non-negative integer");
    }
    const auto [granule, cls] = values;
    if (granule < 1 || granule > granule_count)
      throw Error(ErrorCode::Parse, where + ": granule " + std::to_string(granule) +
                                        " outside 1.." + std::to_string(granule_count));
    if (cls < 1 || cls > class_count)
      throw Error(ErrorCode::Parse, where + ": class " + std::to_string(cls) +
                                        " outside 1.." + std::to_string(class_count));
    if (seen[granule - 1])
      throw Error(ErrorCode::Parse,
                  where + ": granule " + std::to_string(granule) + " assigned twice");
    seen[granule - 1] = true;
    assignment[granule - 1] = cls - 1;
  }

  for (std::size_t g = 0; g < granule_count; ++g)
    if (!seen[g])
      throw Error(ErrorCode::Parse, "granule " + std::to_string(g + 1) + " has no class");
  return RoughClassifier(std::move(assignment), class_count);
}

std::string format_classifier_mapping(const RoughClassifier& f) {
  std::ostringstream out;
  out << "# granule class\n";
  for (std::size_t i = 0; i < f.granule_count(); ++i) out << (i + 1) << ' ' << (f(i) + 1) << '\n';
  return out.str();
}

}  // namespace roughcm
