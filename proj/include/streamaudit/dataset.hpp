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

#ifndef STREAMAUDIT_DATASET_HPP
#define STREAMAUDIT_DATASET_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace streamaudit {

/// Class value of one instance, as an index into the class attribute's
/// nominal value list.
enum class Label : std::uint32_t {};

constexpr std::size_t index_of(Label label) noexcept {
  return static_cast<std::size_t>(label);
}

constexpr Label label_at(std::size_t index) noexcept {
  return static_cast<Label>(static_cast<std::uint32_t>(index));
}

struct Attribute {
  enum class Kind { Numeric, Nominal };

  std::string name;
  Kind kind = Kind::Numeric;
  std::vector<std::string> values; // nominal only, in declaration order

  static Attribute numeric(std::string name);
  static Attribute nominal(std::string name, std::vector<std::string> values);

  bool is_nominal() const noexcept { return kind == Kind::Nominal; }
  std::optional<std::size_t> value_index(std::string_view value) const;

  bool operator==(const Attribute&) const = default;
};

/// Attribute list plus the position of the class attribute. Features are the
/// remaining attributes in file order.
struct Schema {
  std::vector<Attribute> attributes;
  std::size_t class_index = 0;

  const Attribute& class_attribute() const { return attributes.at(class_index); }
  std::size_t num_classes() const { return class_attribute().values.size(); }
  std::size_t num_features() const { return attributes.size() - 1; }

  /// Attribute backing feature slot `feature`.
  const Attribute& feature(std::size_t feature) const;

  /// Throws InvalidArgument / Parse-family errors when the invariants
  /// (non-empty duplicate-free nominal lists, nominal class) do not hold.
  void validate() const;

  bool operator==(const Schema&) const = default;
};

/// Nominal feature values are stored as their index into the attribute's
/// value list.
struct Instance {
  std::vector<double> features;
  Label label{};

  bool operator==(const Instance&) const = default;
};

struct StreamDataset {
  std::string relation = "stream";
  Schema schema;
  std::vector<Instance> instances; // position is the time index

  std::size_t size() const noexcept { return instances.size(); }
  bool empty() const noexcept { return instances.empty(); }
  std::size_t num_classes() const { return schema.num_classes(); }
  const std::vector<std::string>& class_values() const {
    return schema.class_attribute().values;
  }

  std::vector<Label> labels() const;

  /// Equality covers schema, class position and instances; the relation
  /// name is cosmetic.
  friend bool operator==(const StreamDataset& a, const StreamDataset& b) {
    return a.schema == b.schema && a.instances == b.instances;
  }
};

} // namespace streamaudit

#endif // STREAMAUDIT_DATASET_HPP
