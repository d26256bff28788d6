#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "cc4/errors.hpp"
#include "cc4/network.hpp"

namespace cc4 {
namespace {

using ordered_json = nlohmann::ordered_json;

const ordered_json& require_field(const ordered_json& doc, const char* key) {
  if (!doc.contains(key)) {
    throw ParseError(std::string("model document: missing field '") + key + "'");
  }
  return doc.at(key);
}

int require_int(const ordered_json& doc, const char* key) {
  const ordered_json& value = require_field(doc, key);
  if (!value.is_number_integer()) {
    throw ParseError(std::string("model document: field '") + key +
                     "' is not an integer");
  }
  return value.get<int>();
}

std::vector<std::int8_t> require_signs(const ordered_json& unit,
                                       const char* key, int expected_size) {
  const ordered_json& arr = require_field(unit, key);
  if (!arr.is_array() || static_cast<int>(arr.size()) != expected_size) {
    throw ParseError(std::string("model document: '") + key +
                     "' must be an array of " + std::to_string(expected_size) +
                     " weights");
  }
  std::vector<std::int8_t> weights;
  weights.reserve(arr.size());
  for (const ordered_json& w : arr) {
    if (!w.is_number_integer() ||
        (w.get<int>() != 1 && w.get<int>() != -1)) {
      throw ParseError(std::string("model document: '") + key +
                       "' entries must be +1 or -1");
    }
    weights.push_back(static_cast<std::int8_t>(w.get<int>()));
  }
  return weights;
}

}  // namespace

std::string CC4Network::to_json() const {
  ordered_json doc;
  doc["input_width"] = input_width_;
  doc["output_width"] = output_width_;
  doc["radius"] = radius_;
  doc["tie_policy"] = to_string(tie_policy_.kind);
  if (tie_policy_.kind == TieBreak::SeededRandom) {
    doc["seed"] = tie_policy_.seed;
  }
  ordered_json units = ordered_json::array();
  for (const HiddenUnit& unit : units_) {
    ordered_json u;
    u["input_weights"] = unit.input_weights;
    u["bias_weight"] = unit.bias_weight;
    u["output_weights"] = unit.output_weights;
    u["ones_count"] = unit.ones_count;
    units.push_back(std::move(u));
  }
  doc["hidden_units"] = std::move(units);
  return doc.dump(2) + "\n";
}

CC4Network CC4Network::from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& err) {
    throw ParseError(std::string("model document: ") + err.what());
  }
  if (!doc.is_object()) {
    throw ParseError("model document: top level is not an object");
  }

  const int input_width = require_int(doc, "input_width");
  const int output_width = require_int(doc, "output_width");
  const int radius = require_int(doc, "radius");
  if (input_width < 1 || output_width < 1 || radius < 0) {
    throw ParseError("model document: widths must be >= 1 and radius >= 0");
  }

  const ordered_json& policy_name = require_field(doc, "tie_policy");
  if (!policy_name.is_string()) {
    throw ParseError("model document: 'tie_policy' is not a string");
  }
  TiePolicy policy;
  try {
    policy.kind = tie_break_from_string(policy_name.get<std::string>());
  } catch (const std::invalid_argument& err) {
    throw ParseError(std::string("model document: ") + err.what());
  }
  if (doc.contains("seed")) {
    const ordered_json& seed = doc.at("seed");
    if (!seed.is_number_unsigned() && !seed.is_number_integer()) {
      throw ParseError("model document: 'seed' is not an integer");
    }
    policy.seed = seed.get<std::uint64_t>();
  }

  const ordered_json& units_doc = require_field(doc, "hidden_units");
  if (!units_doc.is_array() || units_doc.empty()) {
    throw ParseError("model document: 'hidden_units' must be a non-empty array");
  }

  std::vector<HiddenUnit> units;
  units.reserve(units_doc.size());
  for (const ordered_json& u : units_doc) {
    if (!u.is_object()) {
      throw ParseError("model document: hidden unit is not an object");
    }
    HiddenUnit unit;
    unit.input_weights = require_signs(u, "input_weights", input_width);
    unit.bias_weight = require_int(u, "bias_weight");
    unit.output_weights = require_signs(u, "output_weights", output_width);
    unit.ones_count = require_int(u, "ones_count");

    int positive = 0;
    for (std::int8_t w : unit.input_weights) {
      positive += w > 0;
    }
    if (unit.ones_count != positive) {
      throw ParseError("model document: ones_count " +
                       std::to_string(unit.ones_count) +
                       " does not match the input weights");
    }
    if (unit.bias_weight != radius - unit.ones_count + 1) {
      throw ParseError("model document: bias_weight " +
                       std::to_string(unit.bias_weight) +
                       " inconsistent with radius and ones_count");
    }
    units.push_back(std::move(unit));
  }

  return CC4Network(input_width, output_width, radius, policy,
                    std::move(units));
}

}  // namespace cc4
