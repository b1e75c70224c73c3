#include <fstream>
#include <set>
#include <sstream>

#include "roughcm/error.hpp"
#include "roughcm/report.hpp"

namespace roughcm {

namespace {

struct Record {
  std::size_t line = 0;  // 1-based line where the record starts
  std::vector<std::string> fields;
};

bool is_blank(std::string_view s) {
  return s.find_first_not_of(" \t") == std::string_view::npos;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

// RFC 4180 style: comma separated, double quotes with "" escapes, CRLF or LF.
// Unquoted fields are trimmed of spaces and tabs; quoted fields are verbatim.
std::vector<Record> split_records(std::string_view text, std::string_view source) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

  std::vector<Record> records;
  Record current;
  std::string field;
  bool quoted = false;      // inside quotes
  bool was_quoted = false;  // current field started with a quote
  bool record_has_content = false;
  std::size_t line = 1;
  current.line = 1;

  auto end_field = [&] {
    current.fields.push_back(was_quoted ? field : trim(field));
    field.clear();
    was_quoted = false;
  };
  auto end_record = [&] {
    end_field();
    if (record_has_content) records.push_back(std::move(current));
    current = Record{};
    record_has_content = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!is_blank(field))
          throw Error(ErrorCode::Parse, std::string(source) + ":" + std::to_string(line) +
                                            ": quote inside an unquoted field");
        field.clear();
        quoted = was_quoted = true;
        record_has_content = true;
        break;
      case ',':
        end_field();
        record_has_content = true;
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') break;
        [[fallthrough]];
      case '\n':
        end_record();
        ++line;
        current.line = line;
        break;
      default:
        if (c != ' ' && c != '\t') record_has_content = true;
        field += c;
    }
  }
  if (quoted)
    throw Error(ErrorCode::Parse, std::string(source) + ":" + std::to_string(current.line) +
                                      ": unterminated quoted field");
  end_record();
  return records;
}

}  // namespace

DecisionSystem parse_csv(std::string_view text,
                         const std::optional<std::string>& decision_column,
                         std::string_view source) {
  const std::string src(source);
  const std::vector<Record> records = split_records(text, source);
  if (records.empty()) throw Error(ErrorCode::Parse, src + ": no header row");

  const auto& header = records.front().fields;
  if (header.size() < 2)
    throw Error(ErrorCode::Parse, src + ": need at least 2 columns, header has " +
                                      std::to_string(header.size()));
  std::set<std::string> names;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (header[c].empty())
      throw Error(ErrorCode::Parse, src + ":" + std::to_string(records.front().line) +
                                        ": column " + std::to_string(c + 1) + " has no name");
    if (!names.insert(header[c]).second)
      throw Error(ErrorCode::Parse, src + ":" + std::to_string(records.front().line) +
                                        ": duplicate column '" + header[c] + "'");
  }
  if (records.size() < 2) throw Error(ErrorCode::Parse, src + ": no data rows");

  std::size_t decision = header.size() - 1;
  if (decision_column) {
    auto it = std::find(header.begin(), header.end(), *decision_column);
    if (it == header.end())
      throw Error(ErrorCode::UnknownAttribute,
                  src + ": decision column '" + *decision_column + "' not in header");
    decision = static_cast<std::size_t>(it - header.begin());
  }

  std::vector<Attribute> columns(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) columns[c].name = header[c];
  std::vector<ObjectId> ids;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const Record& rec = records[r];
    const std::string where = src + ":" + std::to_string(rec.line);
    if (rec.fields.size() != header.size())
      throw Error(ErrorCode::Parse, where + ": row has " + std::to_string(rec.fields.size()) +
                                        " fields, header has " + std::to_string(header.size()));
    for (std::size_t c = 0; c < header.size(); ++c) {
      if (rec.fields[c].empty())
        throw Error(ErrorCode::Parse, where + ": empty cell in column '" + header[c] + "'");
      columns[c].values.push_back(rec.fields[c]);
    }
    ids.push_back(r);
  }

  Attribute decision_attr = std::move(columns[decision]);
  columns.erase(columns.begin() + static_cast<std::ptrdiff_t>(decision));
  std::set<std::string_view> distinct(decision_attr.values.begin(), decision_attr.values.end());
  if (distinct.size() < 2)
    throw Error(ErrorCode::DegenerateDecision,
                src + ": decision column '" + decision_attr.name + "' has " +
                    std::to_string(distinct.size()) + " distinct value(s), need at least 2");
  return DecisionSystem(std::move(ids), std::move(columns), std::move(decision_attr));
}

DecisionSystem ingest_csv(const std::filesystem::path& path,
                          const std::optional<std::string>& decision_column) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_csv(buffer.str(), decision_column, path.filename().string());
}

}  // namespace roughcm
