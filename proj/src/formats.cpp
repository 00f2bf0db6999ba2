// Copyright 2026 The nereval Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nereval/formats.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numeric>

#include <json.hpp>

#include "nereval/errors.hpp"
#include "nereval/utf8.hpp"

namespace nereval {

namespace {

using ordered_json = nlohmann::ordered_json;

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  return 1 + static_cast<std::size_t>(
                 std::count(text.begin(), text.begin() + static_cast<long>(offset), '\n'));
}

void require_utf8(std::string_view text) {
  const std::size_t bad = find_invalid_utf8(text);
  if (bad != std::string_view::npos) {
    throw EncodingError("invalid UTF-8 byte", line_of_offset(text, bad));
  }
}

// Lines without their terminators; a final unterminated line counts.
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      if (pos < text.size()) lines.push_back(text.substr(pos));
      break;
    }
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = nl + 1;
  }
  return lines;
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

std::vector<std::string_view> split_columns(std::string_view line) {
  std::vector<std::string_view> cols;
  std::size_t pos = 0;
  while (pos < line.size()) {
    const std::size_t start = line.find_first_not_of(" \t", pos);
    if (start == std::string_view::npos) break;
    std::size_t end = line.find_first_of(" \t", start);
    if (end == std::string_view::npos) end = line.size();
    cols.push_back(line.substr(start, end - start));
    pos = end;
  }
  return cols;
}

bool has_whitespace(std::string_view s) {
  return s.find_first_of(" \t\r\n") != std::string_view::npos;
}

std::string md_cell(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string csv_cell(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string md_row(const std::vector<std::string>& cells) {
  std::string out = "|";
  for (const std::string& c : cells) {
    out += ' ';
    out += md_cell(c);
    out += " |";
  }
  out += '\n';
  return out;
}

std::string md_separator(std::size_t n) {
  std::string out = "|";
  for (std::size_t i = 0; i < n; ++i) out += " --- |";
  out += '\n';
  return out;
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out += ',';
    out += csv_cell(cells[i]);
  }
  out += '\n';
  return out;
}

std::string table(const std::vector<std::string>& header,
                  const std::vector<std::vector<std::string>>& rows,
                  ReportFormat format) {
  std::string out;
  if (format == ReportFormat::Markdown) {
    out += md_row(header);
    out += md_separator(header.size());
    for (const auto& row : rows) out += md_row(row);
  } else {
    out += csv_row(header);
    for (const auto& row : rows) out += csv_row(row);
  }
  return out;
}

ordered_json scores_json(const Scores& s) {
  return ordered_json{
      {"precision", s.precision}, {"recall", s.recall}, {"f1", s.f1}};
}

std::size_t total_support(const EvalReport& report) {
  return std::accumulate(report.classes.begin(), report.classes.end(),
                         static_cast<std::size_t>(0),
                         [](std::size_t acc, const ClassScore& c) {
                           return acc + c.support;
                         });
}

}  // namespace

std::vector<Sentence> parse_conll(std::string_view text) {
  require_utf8(text);
  std::vector<Sentence> sentences;
  Sentence current;
  const auto lines = split_lines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::string_view line = lines[li];
    if (is_blank(line)) {
      if (!current.tokens.empty()) {
        sentences.push_back(std::move(current));
        current = Sentence{};
      }
      continue;
    }
    if (current.tokens.empty() && line.front() == '#') continue;
    const auto cols = split_columns(line);
    if (cols.size() < 2) {
      throw ParseError("expected at least 2 columns (token and tag), got " +
                           std::to_string(cols.size()),
                       li + 1);
    }
    current.tokens.emplace_back(cols.front());
    current.tags.push_back(Tag::parse(cols.back()));
  }
  if (!current.tokens.empty()) sentences.push_back(std::move(current));
  return sentences;
}

std::string write_conll(const std::vector<Sentence>& sentences) {
  std::string out;
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    const Sentence& sent = sentences[s];
    if (sent.tokens.size() != sent.tags.size()) {
      throw InvalidInputError("sequence " + std::to_string(s) + ": " +
                              std::to_string(sent.tokens.size()) + " tokens vs " +
                              std::to_string(sent.tags.size()) + " tags");
    }
    if (s > 0) out += '\n';
    for (std::size_t i = 0; i < sent.tokens.size(); ++i) {
      const std::string tag = sent.tags[i].str();
      if (sent.tokens[i].empty() || has_whitespace(sent.tokens[i]) ||
          tag.empty() || has_whitespace(tag)) {
        throw InvalidInputError("sequence " + std::to_string(s) + ", token " +
                                std::to_string(i) +
                                ": empty or whitespace-bearing column");
      }
      out += sent.tokens[i];
      out += ' ';
      out += tag;
      out += '\n';
    }
  }
  return out;
}

std::vector<StandoffEntity> parse_brat_ann(std::string_view text) {
  require_utf8(text);
  std::vector<StandoffEntity> entities;
  const auto lines = split_lines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::string_view line = lines[li];
    const std::size_t line_no = li + 1;
    if (line.empty() || line.front() != 'T') continue;

    const std::size_t tab1 = line.find('\t');
    if (tab1 == std::string_view::npos) {
      throw ParseError("entity line has no tab separator", line_no);
    }
    StandoffEntity entity;
    entity.id = std::string(line.substr(0, tab1));

    const std::size_t tab2 = line.find('\t', tab1 + 1);
    const std::string_view body =
        line.substr(tab1 + 1, (tab2 == std::string_view::npos ? line.size() : tab2) -
                                  tab1 - 1);
    if (tab2 != std::string_view::npos) {
      entity.surface = std::string(line.substr(tab2 + 1));
    }

    const std::size_t space = body.find(' ');
    if (space == std::string_view::npos || space == 0) {
      throw ParseError("expected '<label> <start> <end>' after entity id", line_no);
    }
    entity.label = std::string(body.substr(0, space));

    // Fragment list: "start end" pairs separated by ';'.
    std::string_view spans = body.substr(space + 1);
    std::size_t pos = 0;
    while (pos <= spans.size()) {
      std::size_t semi = spans.find(';', pos);
      if (semi == std::string_view::npos) semi = spans.size();
      const std::string_view pair = spans.substr(pos, semi - pos);
      const std::size_t sp = pair.find(' ');
      if (sp == std::string_view::npos) {
        throw ParseError("fragment '" + std::string(pair) +
                             "' is not '<start> <end>'",
                         line_no);
      }
      auto parse_offset = [&](std::string_view field) {
        if (field.empty() ||
            field.find_first_not_of("0123456789") != std::string_view::npos) {
          throw ParseError("non-numeric offset '" + std::string(field) + "'",
                           line_no);
        }
        return static_cast<std::size_t>(std::stoull(std::string(field)));
      };
      Fragment f;
      f.start = parse_offset(pair.substr(0, sp));
      f.end = parse_offset(pair.substr(sp + 1));
      if (f.start >= f.end) {
        throw ParseError("fragment start " + std::to_string(f.start) +
                             " is not before end " + std::to_string(f.end),
                         line_no);
      }
      entity.fragments.push_back(f);
      if (semi == spans.size()) break;
      pos = semi + 1;
    }
    if (entity.fragments.empty()) {
      throw ParseError("entity has no fragments", line_no);
    }
    std::sort(entity.fragments.begin(), entity.fragments.end());
    for (std::size_t k = 1; k < entity.fragments.size(); ++k) {
      if (entity.fragments[k].start < entity.fragments[k - 1].end) {
        throw ParseError("overlapping fragments within one entity", line_no);
      }
    }
    entities.push_back(std::move(entity));
  }
  return entities;
}

std::vector<RunScores> parse_runs_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("runs")) {
    throw SchemaError("expected a top-level object with a \"runs\" array");
  }
  const auto& runs = doc["runs"];
  if (!runs.is_array()) {
    throw SchemaError("\"runs\" must be an array");
  }
  std::vector<RunScores> out;
  out.reserve(runs.size());
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const auto& entry = runs[i];
    const std::string where = "runs[" + std::to_string(i) + "]";
    if (!entry.is_object()) throw SchemaError(where + " is not an object");
    if (!entry.contains("seed") || !entry["seed"].is_number_integer()) {
      throw SchemaError(where + " needs an integer \"seed\"");
    }
    if (!entry.contains("metrics") || !entry["metrics"].is_object()) {
      throw SchemaError(where + " needs a \"metrics\" object");
    }
    RunScores run;
    run.seed = entry["seed"].get<long long>();
    for (const auto& [name, value] : entry["metrics"].items()) {
      if (!value.is_number()) {
        throw SchemaError(where + ".metrics[\"" + name + "\"] is not a number");
      }
      const double v = value.get<double>();
      if (!std::isfinite(v)) {
        throw SchemaError(where + ".metrics[\"" + name + "\"] is not finite");
      }
      run.metrics[name] = v;
    }
    out.push_back(std::move(run));
  }
  return out;
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "markdown" || name == "md") return ReportFormat::Markdown;
  if (name == "csv") return ReportFormat::Csv;
  throw ConfigError("unknown output format: '" + std::string(name) +
                    "' (expected json, markdown or csv)");
}

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  return buf;
}

std::string format_score(double fraction) {
  return format_number(fraction * 100.0);
}

std::string format_mean_std(double mean, double std_dev) {
  return format_number(mean) + " ± " + format_number(std_dev);
}

std::string emit_report(const EvalReport& report, ReportFormat format) {
  if (format == ReportFormat::Json) {
    ordered_json doc;
    doc["classes"] = ordered_json::array();
    for (const ClassScore& c : report.classes) {
      doc["classes"].push_back(ordered_json{{"label", c.label},
                                            {"precision", c.precision},
                                            {"recall", c.recall},
                                            {"f1", c.f1},
                                            {"support", c.support}});
    }
    doc["averages"] = ordered_json{{"micro", scores_json(report.micro)},
                                   {"macro", scores_json(report.macro)},
                                   {"weighted", scores_json(report.weighted)}};
    return doc.dump(2) + "\n";
  }

  const std::vector<std::string> header = {"class", "precision", "recall", "f1",
                                           "support"};
  std::vector<std::vector<std::string>> rows;
  for (const ClassScore& c : report.classes) {
    rows.push_back({c.label, format_score(c.precision), format_score(c.recall),
                    format_score(c.f1), std::to_string(c.support)});
  }
  const std::string support = std::to_string(total_support(report));
  for (const auto& [name, s] :
       {std::pair<const char*, Scores>{"micro", report.micro},
        {"macro", report.macro},
        {"weighted", report.weighted}}) {
    rows.push_back({name, format_score(s.precision), format_score(s.recall),
                    format_score(s.f1), support});
  }
  return table(header, rows, format);
}

std::string emit_comparison(const ComparisonTable& tbl, ReportFormat format) {
  const bool with_model = std::any_of(tbl.rows.begin(), tbl.rows.end(),
                                      [](const auto& r) { return !r.model.empty(); });
  if (format == ReportFormat::Json) {
    ordered_json doc;
    doc["columns"] = tbl.columns;
    doc["rows"] = ordered_json::array();
    for (const auto& row : tbl.rows) {
      ordered_json jrow;
      jrow["methodology"] = row.methodology;
      if (with_model) jrow["model"] = row.model;
      ordered_json cells = ordered_json::object();
      for (std::size_t i = 0; i < tbl.columns.size(); ++i) {
        const AggregateScore& cell = row.cells[i];
        if (cell.n == 0) {
          cells[tbl.columns[i]] = nullptr;
        } else {
          cells[tbl.columns[i]] = ordered_json{
              {"mean", cell.mean}, {"std", cell.std_dev}, {"n", cell.n}};
        }
      }
      jrow["scores"] = std::move(cells);
      doc["rows"].push_back(std::move(jrow));
    }
    return doc.dump(2) + "\n";
  }

  std::vector<std::string> header = {"methodology"};
  if (with_model) header.push_back("model");
  header.insert(header.end(), tbl.columns.begin(), tbl.columns.end());
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : tbl.rows) {
    std::vector<std::string> cells = {row.methodology};
    if (with_model) cells.push_back(row.model);
    for (const AggregateScore& cell : row.cells) {
      if (cell.n == 0) {
        cells.push_back("-");
      } else if (cell.n == 1) {
        cells.push_back(format_score(cell.mean));
      } else {
        cells.push_back(format_mean_std(cell.mean * 100.0, cell.std_dev * 100.0));
      }
    }
    rows.push_back(std::move(cells));
  }
  return table(header, rows, format);
}

std::string emit_aggregates(const std::vector<AggregateScore>& aggregates,
                            ReportFormat format) {
  if (format == ReportFormat::Json) {
    ordered_json doc;
    doc["aggregates"] = ordered_json::array();
    for (const AggregateScore& a : aggregates) {
      doc["aggregates"].push_back(ordered_json{
          {"metric", a.metric},
          {"mean", a.mean},
          {"std", a.std_dev},
          {"n", a.n},
          {"formatted", format_mean_std(a.mean, a.std_dev)}});
    }
    return doc.dump(2) + "\n";
  }

  const std::vector<std::string> header = {"metric", "mean ± std", "runs"};
  std::vector<std::vector<std::string>> rows;
  for (const AggregateScore& a : aggregates) {
    rows.push_back(
        {a.metric, format_mean_std(a.mean, a.std_dev), std::to_string(a.n)});
  }
  return table(header, rows, format);
}

}  // namespace nereval
