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

#include "streamaudit/dataset.hpp"
#include "streamaudit/error.hpp"

#include <algorithm>
#include <unordered_set>

namespace streamaudit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  case ErrorCode::Io: return "Io";
  case ErrorCode::Parse: return "ParseError";
  case ErrorCode::UnsupportedFeature: return "UnsupportedFeature";
  case ErrorCode::EmptyStream: return "EmptyStream";
  case ErrorCode::ZeroVariance: return "ZeroVariance";
  case ErrorCode::NotBinary: return "NotBinary";
  case ErrorCode::LagTooLarge: return "LagTooLarge";
  case ErrorCode::InvalidRho: return "InvalidRho";
  case ErrorCode::InvalidModel: return "InvalidModel";
  case ErrorCode::SchemaMismatch: return "SchemaMismatch";
  case ErrorCode::LabelMismatch: return "LabelMismatch";
  case ErrorCode::EmptyLog: return "EmptyLog";
  }
  return "Unknown";
}

Attribute Attribute::numeric(std::string name) {
  return Attribute{std::move(name), Kind::Numeric, {}};
}

Attribute Attribute::nominal(std::string name, std::vector<std::string> values) {
  return Attribute{std::move(name), Kind::Nominal, std::move(values)};
}

std::optional<std::size_t> Attribute::value_index(std::string_view value) const {
  auto it = std::find(values.begin(), values.end(), value);
  if (it == values.end())
    return std::nullopt;
  return static_cast<std::size_t>(it - values.begin());
}

const Attribute& Schema::feature(std::size_t feature) const {
  return attributes.at(feature < class_index ? feature : feature + 1);
}

void Schema::validate() const {
  if (attributes.empty())
    fail(ErrorCode::InvalidArgument, "schema has no attributes");
  if (class_index >= attributes.size())
    fail(ErrorCode::InvalidArgument, "class attribute index out of range");
  for (const auto& attr : attributes) {
    if (!attr.is_nominal())
      continue;
    if (attr.values.empty())
      fail(ErrorCode::InvalidArgument,
           "nominal attribute '" + attr.name + "' has no values");
    std::unordered_set<std::string> seen;
    for (const auto& v : attr.values)
      if (!seen.insert(v).second)
        fail(ErrorCode::InvalidArgument, "nominal attribute '" + attr.name +
                                             "' repeats value '" + v + "'");
  }
  if (!class_attribute().is_nominal())
    fail(ErrorCode::InvalidArgument,
         "class attribute '" + class_attribute().name + "' must be nominal");
}

std::vector<Label> StreamDataset::labels() const {
  std::vector<Label> out;
  out.reserve(instances.size());
  for (const auto& inst : instances)
    out.push_back(inst.label);
  return out;
}

} // namespace streamaudit
