// Copyright 2026 The Minimut Authors
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

#include "minimut/mutagen/mutation.h"

#include <nlohmann/json.hpp>

namespace minimut {

PointOverflow::PointOverflow(std::int64_t point_index, std::int64_t stride)
    : std::runtime_error("mutation point " + std::to_string(point_index) +
                         " does not fit id stride " + std::to_string(stride) +
                         "; raise stride") {}

std::int64_t AssignMuid(std::int64_t ordinal, std::int64_t point_index,
                        std::int64_t stride) {
  if (point_index >= stride) throw PointOverflow(point_index, stride);
  if (ordinal < 0 || point_index < 0) {
    throw std::invalid_argument("negative mutation ordinal or point index");
  }
  return ordinal * stride + point_index;
}

MuidParts DecomposeMuid(std::int64_t muid, std::int64_t stride) {
  return {muid / stride, muid % stride};
}

namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t Fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

SeededStream::SeededStream(std::uint64_t seed, std::string operator_name)
    : seed_(seed), operator_name_(std::move(operator_name)) {}

std::uint64_t SeededStream::Value(std::uint64_t seed,
                                  std::string_view operator_name,
                                  std::uint64_t n) {
  const std::uint64_t key = SplitMix64(seed) ^ Fnv1a(operator_name);
  return SplitMix64(key + SplitMix64(n));
}

std::size_t SeededStream::DrawIndex(std::size_t size) {
  if (size == 0) throw EmptyChoices("draw from an empty choice list");
  const std::uint64_t v = Value(seed_, operator_name_, cursor_++);
  return static_cast<std::size_t>(v % size);
}

std::string MutationInfoJson(const std::vector<MutationRecord>& records) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const MutationRecord& r : records) {
    nlohmann::ordered_json entry;
    entry["muid"] = r.muid;
    entry["operator"] = r.operator_name;
    entry["file"] = r.file;
    entry["line"] = r.line;
    entry["column"] = r.column;
    entry["original"] = r.original_text;
    entry["replacement"] = r.replacement_text;
    nlohmann::ordered_json args = nlohmann::ordered_json::object();
    for (const auto& [key, value] : r.args) args[key] = value;
    entry["args"] = std::move(args);
    doc.push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

std::vector<MutationRecord> ParseMutationInfo(std::string_view json,
                                              std::int64_t stride) {
  const nlohmann::json doc = nlohmann::json::parse(json);
  if (!doc.is_array()) {
    throw std::invalid_argument("MutationInfo must be a JSON array");
  }
  std::vector<MutationRecord> records;
  for (const auto& entry : doc) {
    MutationRecord r;
    r.muid = entry.at("muid").get<std::int64_t>();
    r.operator_name = entry.at("operator").get<std::string>();
    r.file = entry.at("file").get<std::string>();
    r.line = entry.at("line").get<int>();
    r.column = entry.at("column").get<int>();
    r.original_text = entry.at("original").get<std::string>();
    r.replacement_text = entry.at("replacement").get<std::string>();
    for (const auto& [key, value] : entry.at("args").items()) {
      r.args[key] = value.get<std::string>();
    }
    const MuidParts parts = DecomposeMuid(r.muid, stride);
    r.ordinal = static_cast<int>(parts.ordinal);
    r.point.point_index = static_cast<int>(parts.point_index);
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace minimut
