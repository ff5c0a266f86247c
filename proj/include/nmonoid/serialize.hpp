#pragma once

// JSON encodings of the library's result types. Object keys come out sorted
// because nlohmann::json stores objects in std::map.

#include <optional>

#include <nlohmann/json.hpp>

#include "nmonoid/complex.hpp"
#include "nmonoid/length_set.hpp"
#include "nmonoid/length_table.hpp"
#include "nmonoid/omission.hpp"

namespace nmonoid {

using nlohmann::json;

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

inline json length_set_json(const std::optional<LengthSet>& s) {
  return s ? json(s->lengths()) : json(nullptr);
}

/// Array of rows; each row is the sorted length list, or null for a gap.
inline json length_table_json(const LengthTable& t) {
  json rows = json::array();
  for (Int n = 0; n <= t.bound(); ++n) rows.push_back(length_set_json(t.at(n)));
  return rows;
}

inline json verdict_json(const OmissionVerdict& v) {
  return {
      {"lengths_equal", optional_json(v.lengths_equal)},
      {"frobenius_equal", optional_json(v.frobenius_equal)},
      {"shortcut_used", shortcut_name(v.shortcut_used)},
      {"witness", optional_json(v.witness)},
  };
}

inline json complex_json(const OmissionComplex& c) {
  json violations = json::array();
  for (const auto& [face, missing] : downward_closure_violations(c)) {
    violations.push_back({{"face", face}, {"missing_subset", missing}});
  }
  return {
      {"ground_set", c.ground_set()},
      {"maximal_faces", c.maximal_faces()},
      {"minimal_nonfaces", c.minimal_nonfaces()},
      {"downward_closed", c.downward_closed()},
      {"violations", violations},
      {"shortcut_used", shortcut_name(c.shortcut_used())},
      {"face_count", c.faces().size()},
      {"assumed_nonfaces", c.assumed_nonfaces()},
  };
}

inline json boundary_json(const BoundaryReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back({{"n", f.n}, {"side", f.side}});
  return {{"bound", r.bound}, {"checked_s1", r.checked_s1}, {"checked_sw1", r.checked_sw1}, {"failures", failures}};
}

inline json tightness_json(const std::vector<TightnessCell>& cells) {
  json rows = json::array();
  for (const auto& c : cells) {
    rows.push_back({
        {"w", c.w},
        {"d", c.d},
        {"largest_bad_a", optional_json(c.largest_bad_a)},
        {"bound", tightness_limit(c.w)},
        {"scanned", c.scanned},
        {"bad_count", c.bad_count},
    });
  }
  return rows;
}

inline json survey_json(const std::vector<SurveyCell>& cells) {
  json rows = json::array();
  for (const auto& c : cells) {
    rows.push_back({
        {"a", c.a},
        {"d", c.d},
        {"w", c.w},
        {"face_count", c.faces},
        {"subset_count", c.subsets},
        {"maximal_faces", c.maximal_faces},
        {"minimal_nonfaces", c.minimal_nonfaces},
        {"downward_closed", c.downward_closed},
        {"violations", c.violations},
        {"shortcut_used", shortcut_name(c.shortcut_used)},
    });
  }
  return rows;
}

}  // namespace nmonoid
