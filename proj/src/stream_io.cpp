// Copyright 2026 The streamaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "streamaudit/stream_io.hpp"
#include "streamaudit/error.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace streamaudit {

using detail::trim;

namespace {

struct Field {
  std::string text;
  bool quoted = false;
};

enum class Dialect { Arff, Csv };

// Comma-separated fields with optional quoting. ARFF accepts ' and " quotes;
// CSV accepts only ". Escapes inside quotes are rejected in both dialects.
std::vector<Field> split_fields(std::string_view line, Dialect dialect,
                                std::size_t lineno) {
  const std::string_view quotes = dialect == Dialect::Arff ? "'\"" : "\"";
  std::vector<Field> fields;
  std::size_t pos = 0;
  for (;;) {
    while (pos < line.size() && detail::is_space(line[pos]))
      ++pos;
    Field field;
    if (pos < line.size() && quotes.find(line[pos]) != std::string_view::npos) {
      const char q = line[pos];
      std::size_t close = pos + 1;
      while (close < line.size() && line[close] != q) {
        if (dialect == Dialect::Arff && line[close] == '\\')
          throw UnsupportedFeature(lineno, "escape sequences in quoted values");
        ++close;
      }
      if (close >= line.size())
        throw ParseError(lineno, "unterminated quoted value");
      field.text = std::string(line.substr(pos + 1, close - pos - 1));
      field.quoted = true;
      pos = close + 1;
      if (pos < line.size() && line[pos] == q)
        throw UnsupportedFeature(lineno, "escaped quotes in quoted values");
      while (pos < line.size() && detail::is_space(line[pos]))
        ++pos;
      if (pos < line.size() && line[pos] != ',')
        throw ParseError(lineno, "unexpected text after quoted value");
    } else {
      std::size_t comma = line.find(',', pos);
      if (comma == std::string_view::npos)
        comma = line.size();
      field.text = std::string(trim(line.substr(pos, comma - pos)));
      pos = comma;
    }
    fields.push_back(std::move(field));
    if (pos >= line.size())
      break;
    ++pos; // comma
  }
  return fields;
}

std::size_t resolve_column(const ColumnSelector& selector,
                           const std::vector<std::string>& names,
                           bool names_known) {
  if (std::holds_alternative<std::monostate>(selector))
    return names.size() - 1;
  if (const auto* index = std::get_if<std::size_t>(&selector)) {
    if (*index >= names.size())
      fail(ErrorCode::InvalidArgument,
           "class column " + std::to_string(*index) + " out of range (" +
               std::to_string(names.size()) + " columns)");
    return *index;
  }
  const auto& name = std::get<std::string>(selector);
  if (!names_known)
    fail(ErrorCode::InvalidArgument,
         "class column selected by name '" + name + "' but input has no header");
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end())
    fail(ErrorCode::InvalidArgument, "no column named '" + name + "'");
  return static_cast<std::size_t>(it - names.begin());
}

// ---------------------------------------------------------------------------
// ARFF

struct ArffHeaderLine {
  std::string keyword; // lower-cased, without '@'
  std::string_view rest;
};

ArffHeaderLine split_keyword(std::string_view line) {
  std::size_t end = 1;
  while (end < line.size() && !detail::is_space(line[end]))
    ++end;
  return {detail::lower(line.substr(1, end - 1)), trim(line.substr(end))};
}

// Name token at the front of `text`: quoted, or up to whitespace / '{'.
std::pair<std::string, std::string_view> take_name(std::string_view text,
                                                   std::size_t lineno) {
  if (text.empty())
    throw ParseError(lineno, "missing name");
  if (text.front() == '\'' || text.front() == '"') {
    const auto close = text.find(text.front(), 1);
    if (close == std::string_view::npos)
      throw ParseError(lineno, "unterminated quoted name");
    return {std::string(text.substr(1, close - 1)), trim(text.substr(close + 1))};
  }
  std::size_t end = 0;
  while (end < text.size() && !detail::is_space(text[end]) && text[end] != '{')
    ++end;
  return {std::string(text.substr(0, end)), trim(text.substr(end))};
}

Attribute parse_attribute(std::string_view rest, std::size_t lineno) {
  auto [name, type] = take_name(rest, lineno);
  if (name.empty())
    throw ParseError(lineno, "empty attribute name");
  if (type.empty())
    throw ParseError(lineno, "attribute '" + name + "' has no type");

  if (type.front() == '{') {
    if (type.back() != '}')
      throw ParseError(lineno, "unterminated nominal value list");
    const auto inner = trim(type.substr(1, type.size() - 2));
    if (inner.empty())
      throw ParseError(lineno, "nominal attribute '" + name + "' has no values");
    std::vector<std::string> values;
    for (auto& field : split_fields(inner, Dialect::Arff, lineno)) {
      if (field.text.empty() && !field.quoted)
        throw ParseError(lineno, "empty nominal value in '" + name + "'");
      if (std::find(values.begin(), values.end(), field.text) != values.end())
        throw ParseError(lineno, "nominal attribute '" + name +
                                     "' repeats value '" + field.text + "'");
      values.push_back(std::move(field.text));
    }
    return Attribute::nominal(std::move(name), std::move(values));
  }

  const auto kind = detail::lower(type);
  if (kind == "numeric" || kind == "real" || kind == "integer")
    return Attribute::numeric(std::move(name));
  const auto head = kind.substr(0, kind.find_first_of(" \t"));
  if (head == "string" || head == "date" || head == "relational")
    throw UnsupportedFeature(lineno, head + " attribute '" + name + "'");
  throw ParseError(lineno, "unknown attribute type '" + std::string(type) + "'");
}

double parse_value(const Field& field, const Attribute& attr, std::size_t lineno) {
  if (!field.quoted && field.text == "?")
    throw UnsupportedFeature(lineno, "missing value '?' for '" + attr.name + "'");
  if (attr.is_nominal()) {
    auto index = attr.value_index(field.quoted ? std::string_view(field.text)
                                               : trim(field.text));
    if (!index)
      throw ParseError(lineno, "'" + field.text + "' is not a declared value of '" +
                                   attr.name + "'");
    return static_cast<double>(*index);
  }
  auto value = detail::parse_real(field.text);
  if (!value)
    throw ParseError(lineno, "'" + field.text + "' is not a number for '" +
                                 attr.name + "'");
  return *value;
}

Instance make_instance(const std::vector<double>& row, std::size_t class_index) {
  Instance inst;
  inst.features.reserve(row.size() - 1);
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i == class_index)
      inst.label = label_at(static_cast<std::size_t>(row[i]));
    else
      inst.features.push_back(row[i]);
  }
  return inst;
}

// ---------------------------------------------------------------------------
// writing

std::string quote_if_needed(const std::string& text) {
  const bool needs = text.empty() || text == "?" ||
                     text.find_first_of(" \t,'\"{}%") != std::string::npos;
  if (!needs)
    return text;
  const bool has_single = text.find('\'') != std::string::npos;
  const bool has_double = text.find('"') != std::string::npos;
  if (has_single && has_double)
    fail(ErrorCode::InvalidArgument,
         "cannot write '" + text + "': contains both quote characters");
  const char q = has_single ? '"' : '\'';
  return q + text + q;
}

bool starts_arff(std::string_view content) {
  std::istringstream in{std::string(content)};
  std::string line;
  while (std::getline(in, line)) {
    const auto t = trim(line);
    if (t.empty() || t.front() == '%' || t.front() == '#')
      continue;
    return t.front() == '@';
  }
  return true;
}

} // namespace

StreamDataset parse_arff(std::istream& source, const ArffOptions& options) {
  StreamDataset ds;
  std::vector<std::size_t> attribute_lines;
  bool in_data = false;
  std::vector<double> row;
  std::string raw;
  std::size_t lineno = 0;

  while (std::getline(source, raw)) {
    ++lineno;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '%')
      continue;

    if (!in_data) {
      if (line.front() != '@')
        throw ParseError(lineno, "expected @relation, @attribute or @data");
      auto [keyword, rest] = split_keyword(line);
      if (keyword == "relation") {
        ds.relation = rest.empty() ? std::string{} : take_name(rest, lineno).first;
      } else if (keyword == "attribute") {
        ds.schema.attributes.push_back(parse_attribute(rest, lineno));
        attribute_lines.push_back(lineno);
      } else if (keyword == "data") {
        if (ds.schema.attributes.empty())
          throw ParseError(lineno, "@data before any @attribute");
        std::vector<std::string> names;
        for (const auto& a : ds.schema.attributes)
          names.push_back(a.name);
        ds.schema.class_index = resolve_column(options.class_attribute, names, true);
        if (!ds.schema.class_attribute().is_nominal())
          throw ParseError(attribute_lines[ds.schema.class_index],
                           "class attribute '" + ds.schema.class_attribute().name +
                               "' must be nominal");
        in_data = true;
      } else {
        throw ParseError(lineno, "unknown header keyword '@" + keyword + "'");
      }
      continue;
    }

    if (line.front() == '{')
      throw UnsupportedFeature(lineno, "sparse data rows");
    const auto fields = split_fields(line, Dialect::Arff, lineno);
    const auto& attrs = ds.schema.attributes;
    if (fields.size() != attrs.size())
      throw ParseError(lineno, "expected " + std::to_string(attrs.size()) +
                                   " values, found " + std::to_string(fields.size()));
    row.clear();
    for (std::size_t i = 0; i < fields.size(); ++i)
      row.push_back(parse_value(fields[i], attrs[i], lineno));
    ds.instances.push_back(make_instance(row, ds.schema.class_index));
  }

  if (!in_data)
    throw ParseError(lineno + 1, "missing @data section");
  return ds;
}

StreamDataset parse_csv(std::istream& source, const CsvOptions& options) {
  struct Record {
    std::vector<Field> fields;
    std::size_t line;
  };
  std::vector<Record> records;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(source, raw)) {
    ++lineno;
    const auto line = trim(raw);
    if (line.empty())
      continue;
    if (records.empty() && line.front() == '#')
      continue;
    records.push_back({split_fields(line, Dialect::Csv, lineno), lineno});
  }
  if (records.empty())
    throw ParseError(lineno + 1, "empty input");

  const std::size_t width = records.front().fields.size();
  for (std::size_t r = 0; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.fields.size() != width)
      throw ParseError(rec.line, "ragged row " + std::to_string(r + 1) +
                                     ": expected " + std::to_string(width) +
                                     " fields, found " +
                                     std::to_string(rec.fields.size()));
    for (const auto& f : rec.fields)
      if (f.text.empty())
        throw UnsupportedFeature(rec.line, "empty cell");
  }

  std::vector<std::string> names;
  std::size_t first_data = 0;
  if (options.has_header) {
    for (const auto& f : records.front().fields)
      names.push_back(f.text);
    first_data = 1;
  } else {
    for (std::size_t c = 0; c < width; ++c)
      names.push_back("col" + std::to_string(c + 1));
  }
  if (first_data >= records.size())
    throw ParseError(records.back().line + 1, "empty input: no data rows");

  StreamDataset ds;
  ds.schema.class_index = resolve_column(options.class_column, names, options.has_header);

  for (std::size_t c = 0; c < width; ++c) {
    bool numeric = c != ds.schema.class_index;
    for (std::size_t r = first_data; numeric && r < records.size(); ++r)
      numeric = detail::parse_real(records[r].fields[c].text).has_value();
    if (numeric) {
      ds.schema.attributes.push_back(Attribute::numeric(names[c]));
      continue;
    }
    std::vector<std::string> values;
    for (std::size_t r = first_data; r < records.size(); ++r) {
      const auto& text = records[r].fields[c].text;
      if (std::find(values.begin(), values.end(), text) == values.end())
        values.push_back(text);
    }
    ds.schema.attributes.push_back(Attribute::nominal(names[c], std::move(values)));
  }

  std::vector<double> row(width);
  ds.instances.reserve(records.size() - first_data);
  for (std::size_t r = first_data; r < records.size(); ++r) {
    for (std::size_t c = 0; c < width; ++c)
      row[c] = parse_value(records[r].fields[c], ds.schema.attributes[c], records[r].line);
    ds.instances.push_back(make_instance(row, ds.schema.class_index));
  }
  return ds;
}

void write_arff(std::ostream& out, const StreamDataset& ds) {
  ds.schema.validate();
  out << "@relation " << quote_if_needed(ds.relation) << "\n\n";
  for (const auto& attr : ds.schema.attributes) {
    out << "@attribute " << quote_if_needed(attr.name) << ' ';
    if (attr.is_nominal()) {
      out << '{';
      for (std::size_t i = 0; i < attr.values.size(); ++i)
        out << (i ? "," : "") << quote_if_needed(attr.values[i]);
      out << '}';
    } else {
      out << "numeric";
    }
    out << '\n';
  }
  out << "\n@data\n";
  const auto& attrs = ds.schema.attributes;
  for (const auto& inst : ds.instances) {
    std::size_t feature = 0;
    for (std::size_t i = 0; i < attrs.size(); ++i) {
      if (i)
        out << ',';
      if (i == ds.schema.class_index) {
        out << quote_if_needed(attrs[i].values.at(index_of(inst.label)));
        continue;
      }
      const double v = inst.features.at(feature++);
      if (attrs[i].is_nominal())
        out << quote_if_needed(attrs[i].values.at(static_cast<std::size_t>(v)));
      else
        out << detail::format_real(v);
    }
    out << '\n';
  }
}

StreamDataset load_dataset(const std::string& path, DatasetFormat format) {
  std::string content;
  if (path == "-") {
    content.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file)
      fail(ErrorCode::Io, "cannot open '" + path + "'");
    content.assign(std::istreambuf_iterator<char>(file), {});
  }
  if (format == DatasetFormat::Auto) {
    const bool csv_name = path.size() >= 4 &&
                          detail::iequals(std::string_view(path).substr(path.size() - 4), ".csv");
    if (path == "-")
      format = starts_arff(content) ? DatasetFormat::Arff : DatasetFormat::Csv;
    else
      format = csv_name ? DatasetFormat::Csv : DatasetFormat::Arff;
  }
  std::istringstream in(content);
  StreamDataset ds = format == DatasetFormat::Csv ? parse_csv(in) : parse_arff(in);
  if (ds.relation.empty() || format == DatasetFormat::Csv) {
    const auto slash = path.find_last_of('/');
    ds.relation = path == "-" ? "stdin" : path.substr(slash == std::string::npos ? 0 : slash + 1);
  }
  return ds;
}

DatasetSummary dataset_summary(const StreamDataset& ds) {
  DatasetSummary s;
  s.n_instances = ds.size();
  s.n_features = ds.schema.num_features();
  s.class_values = ds.class_values();
  s.class_counts.assign(ds.num_classes(), 0);
  for (const auto& inst : ds.instances)
    ++s.class_counts.at(index_of(inst.label));
  return s;
}

PredictionLog parse_prediction_log(std::istream& source) {
  PredictionLog log;
  std::string raw;
  std::size_t lineno = 0;
  bool header = false;
  while (std::getline(source, raw)) {
    ++lineno;
    const auto line = trim(raw);
    if (line.empty() || (!header && line.front() == '#'))
      continue;
    auto fields = split_fields(line, Dialect::Csv, lineno);
    if (fields.size() != 2)
      throw ParseError(lineno, "expected 2 fields, found " + std::to_string(fields.size()));
    if (!header) {
      if (fields[0].text != "true" || fields[1].text != "predicted")
        throw ParseError(lineno, "prediction log header must be 'true,predicted'");
      header = true;
      continue;
    }
    if (fields[0].text.empty() || fields[1].text.empty())
      throw UnsupportedFeature(lineno, "empty cell");
    log.truth.push_back(std::move(fields[0].text));
    log.predicted.push_back(std::move(fields[1].text));
  }
  if (!header)
    throw ParseError(lineno + 1, "empty input: missing 'true,predicted' header");
  return log;
}

} // namespace streamaudit
