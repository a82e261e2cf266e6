// Copyright 2026 The gapcover Authors
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


#include "gapcover/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>

#include "gapcover/errors.hpp"
#include "json.hpp"

namespace gapcover {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void Malformed(const std::string& message) {
  throw Error(ErrorKind::kMalformedInput, message);
}

const Json& Field(const Json& obj, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end()) Malformed(std::string("missing field '") + name + "'");
  return *it;
}

std::int64_t AsInteger(const Json& value, const std::string& path) {
  if (value.is_number_unsigned()) {
    auto v = value.get<std::uint64_t>();
    if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
      Malformed("field '" + path + "': integer too large");
    return static_cast<std::int64_t>(v);
  }
  if (value.is_number_integer()) return value.get<std::int64_t>();
  Malformed("field '" + path + "': expected an integer, got " +
            std::string(value.type_name()));
}

std::size_t AsCount(const Json& value, const std::string& path) {
  std::int64_t v = AsInteger(value, path);
  if (v < 0) Malformed("field '" + path + "': expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

std::vector<IndexSet> AsIndexSets(const Json& value, const std::string& path) {
  if (!value.is_array()) Malformed("field '" + path + "': expected an array");
  std::vector<IndexSet> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    const std::string item_path = path + "[" + std::to_string(i) + "]";
    if (!value[i].is_array())
      Malformed("field '" + item_path + "': expected an array");
    IndexSet s;
    for (std::size_t j = 0; j < value[i].size(); ++j) {
      s.push_back(AsCount(value[i][j],
                          item_path + "[" + std::to_string(j) + "]"));
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::size_t LineOf(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(
                 std::count(text.begin(), text.begin() + byte, '\n'));
}

Json IndexSetsToJson(const std::vector<IndexSet>& sets) {
  Json arr = Json::array();
  for (const auto& s : sets) arr.push_back(s);
  return arr;
}

}  // namespace

PromiseInstance ParseInstance(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    Malformed("JSON syntax error at line " +
              std::to_string(LineOf(text, e.byte == 0 ? 0 : e.byte - 1)) +
              ": " + e.what());
  }
  if (!doc.is_object()) Malformed("top-level value must be an object");

  const Json& type = Field(doc, "type");
  if (!type.is_string()) Malformed("field 'type': expected a string");

  const std::int64_t d = AsInteger(Field(doc, "d"), "d");
  const Json& eta = Field(doc, "eta");
  if (!eta.is_object()) Malformed("field 'eta': expected {\"num\":P,\"den\":Q}");
  const std::int64_t num = AsInteger(Field(eta, "num"), "eta.num");
  const std::int64_t den = AsInteger(Field(eta, "den"), "eta.den");
  if (den <= 0) Malformed("field 'eta.den': must be positive");
  GapParams params = GapParams::Create(d, Rational(num, den));

  const auto kind = type.get<std::string>();
  if (kind == "set_cover") {
    auto n = AsCount(Field(doc, "universe_size"), "universe_size");
    auto sets = AsIndexSets(Field(doc, "sets"), "sets");
    return {SetCoverInstance::Create(n, std::move(sets)), std::move(params)};
  }
  if (kind == "hypergraph_vc") {
    auto n = AsCount(Field(doc, "vertex_count"), "vertex_count");
    auto k = AsCount(Field(doc, "k"), "k");
    auto edges = AsIndexSets(Field(doc, "edges"), "edges");
    return {HypergraphInstance::Create(n, k, std::move(edges)),
            std::move(params)};
  }
  Malformed("field 'type': unknown instance type '" + kind + "'");
}

std::string SerializeInstance(const PromiseInstance& inst) {
  Json doc;
  if (const auto* sc = std::get_if<SetCoverInstance>(&inst.instance)) {
    doc["type"] = "set_cover";
    doc["universe_size"] = sc->universe_size();
    doc["sets"] = IndexSetsToJson(sc->sets());
  } else {
    const auto& hg = std::get<HypergraphInstance>(inst.instance);
    doc["type"] = "hypergraph_vc";
    doc["vertex_count"] = hg.vertex_count();
    doc["k"] = hg.uniformity();
    doc["edges"] = IndexSetsToJson(hg.edges());
  }
  doc["d"] = inst.params.d();
  doc["eta"] = {
      {"num", numerator(inst.params.eta()).convert_to<std::int64_t>()},
      {"den", denominator(inst.params.eta()).convert_to<std::int64_t>()}};
  return doc.dump() + "\n";
}

Rational ParseRational(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      Malformed("not a rational number: '" + std::string(text) + "'");
    }
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  std::int64_t num = parse_int(text.substr(0, slash));
  std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) Malformed("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string FormatRational(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace gapcover
