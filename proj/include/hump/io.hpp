#pragma once

// JSON forms of tableaux and bijection traces.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hump/bijections.hpp"
#include "hump/error.hpp"
#include "hump/hook_tableaux.hpp"

namespace hump {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const HookTableau& t) {
  return ordered_json{{"row1", t.row1}, {"row2", t.row2}, {"column", t.column}};
}

/// {"row1":[...],"row2":[...],"column":[...]}; missing rows read as empty.
inline HookTableau tableau_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::domain, std::string("tableau JSON: ") + e.what());
  }
  require(j.is_object(), errc::domain, "tableau JSON must be an object");
  HookTableau t;
  auto read = [&](const char* key, std::vector<int>& dst) {
    if (!j.contains(key)) return;
    try {
      dst = j.at(key).get<std::vector<int>>();
    } catch (const nlohmann::json::exception&) {
      fail(errc::domain, std::string("tableau JSON: '") + key + "' must be an array of integers");
    }
  };
  read("row1", t.row1);
  read("row2", t.row2);
  read("column", t.column);
  return t;
}

inline ordered_json to_json(const Decomposition& d) {
  auto segments = ordered_json::array();
  for (const auto& s : d.segments)
    segments.push_back({{"name", s.name}, {"range", {s.begin, s.end}}, {"text", s.text.str()}});
  return segments;
}

/// {input, output, segments:[{name, range:[begin,end), text}]}.
inline ordered_json trace_json(const std::string& input, const ordered_json& output, const Decomposition& d) {
  return ordered_json{{"input", input}, {"output", output}, {"segments", to_json(d)}};
}

}  // namespace hump
