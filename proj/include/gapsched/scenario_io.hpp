// Copyright 2026 The gapsched Authors
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

// Scenario files and schedule exports.
//
// JSON is the canonical scenario format:
//
//   {
//     "epoch": "2009-01-02T08:00:00Z",
//     "horizon": {"start": "...", "end": "..."},          // optional
//     "cost_params": {"hourly_rate": 100, "currency": "DHS", "penalty_mode": false},
//     "policy": "first_fit",                             // first_fit | best_fit | append
//     "resources": [{"id": "R1", "note": 12.5, "competence": [...], "busy": [{"start", "end"}]}],
//     "preventive_tasks": [{"id": "T1", "release": "...", "due": "...", ...}],
//     "dynamic_tasks": [...]                             // arrival order
//   }
//
// Task fields: id, title, release, due, duration_minutes | duration_hours,
// earliest_due, earliness_penalty, tardiness_penalty, base_cost, type,
// resource. A dynamic task may omit release/due; it then arrives at the
// epoch and its due date is release + duration.
//
// CSV is a flat import with one task per line and the columns
// id, duration (hours), start, end, cost, resource ("R8=15,75"), kind.

#ifndef GAPSCHED_SCENARIO_IO_HPP_
#define GAPSCHED_SCENARIO_IO_HPP_

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gapsched/costing.hpp"
#include "gapsched/domain.hpp"
#include "gapsched/scheduler.hpp"

namespace gapsched {

struct Scenario {
  TimePoint epoch;
  std::optional<Interval> horizon;
  std::vector<Task> preventive_tasks;
  std::vector<Task> dynamic_tasks;  // arrival order
  std::vector<Resource> resources;
  CostParams cost_params;
  InsertionPolicy policy = InsertionPolicy::FirstFit;

  const Resource* find_resource(std::string_view id) const {
    for (const auto& r : resources) {
      if (r.id == id) return &r;
    }
    return nullptr;
  }

  bool operator==(const Scenario&) const = default;
};

/// Checks every cross-field invariant; throws Validation with a field path.
inline void validate(const Scenario& s) {
  validate(s.cost_params);
  if (s.horizon && s.horizon->end < s.horizon->start) {
    throw Error(ErrorCode::Validation, "horizon end precedes start", "horizon");
  }
  std::set<std::string, std::less<>> resource_ids;
  for (std::size_t i = 0; i < s.resources.size(); ++i) {
    const std::string field = "resources[" + std::to_string(i) + "]";
    validate(s.resources[i], field);
    if (!resource_ids.insert(s.resources[i].id).second) {
      throw Error(ErrorCode::Validation, "duplicate resource id '" + s.resources[i].id + "'", field + ".id");
    }
  }
  std::set<std::string, std::less<>> task_ids;
  auto check_list = [&](const std::vector<Task>& tasks, std::string_view list, TaskKind kind) {
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      const auto& t = tasks[i];
      const std::string field = std::string(list) + "[" + std::to_string(i) + "]";
      validate(t, field);
      if (t.kind != kind) throw Error(ErrorCode::Validation, "task kind does not match its list", field + ".kind");
      if (!task_ids.insert(t.id).second) throw Error(ErrorCode::Validation, "duplicate task id '" + t.id + "'", field + ".id");
      if (t.resource && !resource_ids.contains(*t.resource)) {
        throw Error(ErrorCode::Validation, "unknown resource '" + *t.resource + "'", field + ".resource");
      }
      for (const auto& r : s.resources) {
        if (!r.competence.empty() && t.required_type >= r.competence.size()) {
          throw Error(ErrorCode::Validation, "resource " + r.id + " has no competence for type " +
                                                 std::to_string(t.required_type), field + ".type");
        }
      }
      if (kind == TaskKind::Preventive && s.horizon && !s.horizon->contains({t.release, t.due})) {
        throw Error(ErrorCode::Validation, "task lies outside the horizon", field);
      }
    }
  };
  check_list(s.preventive_tasks, "preventive_tasks", TaskKind::Preventive);
  check_list(s.dynamic_tasks, "dynamic_tasks", TaskKind::Dynamic);
}

/// Preventive plan for a scenario.
inline Schedule plan(const Scenario& s) {
  return plan_preventive(s.preventive_tasks, s.resources, s.epoch, s.horizon);
}

// ---------------------------------------------------------------------------
// JSON

namespace detail {

using nlohmann::json;

inline const json& require(const json& j, const char* key, const std::string& field) {
  auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorCode::Validation, "missing required field", field + "." + key);
  return *it;
}

inline std::string get_string(const json& j, const std::string& field) {
  if (!j.is_string()) throw Error(ErrorCode::Parse, "expected a string", field);
  return j.get<std::string>();
}

inline std::int64_t get_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) throw Error(ErrorCode::Parse, "expected an integer", field);
  return j.get<std::int64_t>();
}

inline TimePoint get_time(const json& j, const std::string& field) {
  const std::string text = get_string(j, field);
  try {
    return parse_iso8601(text);
  } catch (const Error& e) {
    throw Error(ErrorCode::Parse, e.what(), field);
  }
}

inline Rational get_rational(const json& j, const std::string& field) {
  try {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_number_float()) {
      // shortest round-trip text of the double, read back as an exact decimal
      char buf[64];
      auto [p, ec] = std::to_chars(buf, buf + sizeof buf, j.get<double>());
      return parse_rational(std::string_view(buf, static_cast<std::size_t>(p - buf)));
    }
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    throw Error(ErrorCode::Parse, e.what(), field);
  }
  throw Error(ErrorCode::Parse, "expected a number", field);
}

inline json rational_to_json(const Rational& r) {
  const std::string text = format_rational(r);
  if (text.find('/') != std::string::npos) return text;
  if (text.find('.') == std::string::npos) return json(std::stoll(text));
  // emit as a number only if it survives the double round trip
  const double d = std::stod(text);
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, d);
  if (std::string_view(buf, static_cast<std::size_t>(p - buf)) == text) return json(d);
  return text;
}

inline Interval get_interval(const json& j, const std::string& field) {
  if (!j.is_object()) throw Error(ErrorCode::Parse, "expected an object with start/end", field);
  Interval iv{get_time(require(j, "start", field), field + ".start"), get_time(require(j, "end", field), field + ".end")};
  return iv;
}

inline json interval_to_json(const Interval& iv) {
  return json{{"start", format_iso8601(iv.start)}, {"end", format_iso8601(iv.end)}};
}

inline Task task_from_json(const json& j, TaskKind kind, TimePoint default_release, const std::string& field) {
  if (!j.is_object()) throw Error(ErrorCode::Parse, "expected an object", field);
  Task t;
  t.kind = kind;
  t.id = get_string(require(j, "id", field), field + ".id");
  t.title = j.contains("title") ? get_string(j["title"], field + ".title") : t.id;
  if (j.contains("kind")) {
    const auto k = get_string(j["kind"], field + ".kind");
    if (k != to_string(kind)) throw Error(ErrorCode::Validation, "task kind does not match its list", field + ".kind");
  }
  std::optional<Duration> duration;
  if (j.contains("duration_minutes")) duration = Duration(get_int(j["duration_minutes"], field + ".duration_minutes"));
  if (j.contains("duration_hours")) {
    const Rational h = get_rational(j["duration_hours"], field + ".duration_hours");
    const Rational m = h * 60;
    if (boost::multiprecision::denominator(m) != 1) {
      throw Error(ErrorCode::Validation, "duration must be a whole number of minutes", field + ".duration_hours");
    }
    const Duration d(static_cast<std::int64_t>(boost::multiprecision::numerator(m)));
    if (duration && *duration != d) {
      throw Error(ErrorCode::Validation, "duration_hours and duration_minutes disagree", field + ".duration_hours");
    }
    duration = d;
  }
  const bool has_release = j.contains("release");
  const bool has_due = j.contains("due");
  if (has_release) t.release = get_time(j["release"], field + ".release");
  if (has_due) t.due = get_time(j["due"], field + ".due");
  if (kind == TaskKind::Preventive || (has_release && has_due)) {
    if (!has_release) throw Error(ErrorCode::Validation, "missing required field", field + ".release");
    if (!has_due) throw Error(ErrorCode::Validation, "missing required field", field + ".due");
    t.duration = duration.value_or(t.due - t.release);
  } else {
    if (!duration) throw Error(ErrorCode::Validation, "missing required field", field + ".duration_minutes");
    t.duration = *duration;
    if (!has_release) t.release = has_due ? t.due - t.duration : default_release;
    if (!has_due) t.due = t.release + t.duration;
  }
  if (j.contains("earliest_due")) t.earliest_due = get_time(j["earliest_due"], field + ".earliest_due");
  if (j.contains("earliness_penalty")) t.earliness_penalty = get_int(j["earliness_penalty"], field + ".earliness_penalty");
  if (j.contains("tardiness_penalty")) t.tardiness_penalty = get_int(j["tardiness_penalty"], field + ".tardiness_penalty");
  if (j.contains("base_cost")) t.base_cost = get_int(j["base_cost"], field + ".base_cost");
  if (j.contains("type")) {
    const auto k = get_int(j["type"], field + ".type");
    if (k < 0) throw Error(ErrorCode::Validation, "type must be non-negative", field + ".type");
    t.required_type = static_cast<std::size_t>(k);
  }
  if (j.contains("resource") && !j["resource"].is_null()) t.resource = get_string(j["resource"], field + ".resource");
  validate(t, field);
  return t;
}

inline json task_to_json(const Task& t) {
  json j{{"id", t.id},
         {"title", t.title},
         {"kind", to_string(t.kind)},
         {"release", format_iso8601(t.release)},
         {"due", format_iso8601(t.due)},
         {"duration_minutes", t.duration.count()},
         {"earliness_penalty", t.earliness_penalty},
         {"tardiness_penalty", t.tardiness_penalty},
         {"base_cost", t.base_cost},
         {"type", t.required_type}};
  if (t.earliest_due) j["earliest_due"] = format_iso8601(*t.earliest_due);
  if (t.resource) j["resource"] = *t.resource;
  return j;
}

inline Resource resource_from_json(const json& j, const std::string& field) {
  if (!j.is_object()) throw Error(ErrorCode::Parse, "expected an object", field);
  Resource r;
  r.id = get_string(require(j, "id", field), field + ".id");
  if (j.contains("competence")) {
    const auto& row = j["competence"];
    if (!row.is_array()) throw Error(ErrorCode::Parse, "expected an array", field + ".competence");
    for (std::size_t i = 0; i < row.size(); ++i) {
      r.competence.push_back(get_rational(row[i], field + ".competence[" + std::to_string(i) + "]"));
    }
  }
  if (j.contains("note")) {
    r.note = get_rational(j["note"], field + ".note");
  } else if (r.competence.size() == 1) {
    r.note = r.competence.front();
  } else {
    throw Error(ErrorCode::Validation, "missing required field", field + ".note");
  }
  if (j.contains("busy")) {
    const auto& busy = j["busy"];
    if (!busy.is_array()) throw Error(ErrorCode::Parse, "expected an array", field + ".busy");
    for (std::size_t i = 0; i < busy.size(); ++i) {
      r.busy.push_back(get_interval(busy[i], field + ".busy[" + std::to_string(i) + "]"));
    }
  }
  validate(r, field);
  return r;
}

inline json resource_to_json(const Resource& r) {
  json j{{"id", r.id}, {"note", rational_to_json(r.note)}};
  if (!r.competence.empty()) {
    json row = json::array();
    for (const auto& c : r.competence) row.push_back(rational_to_json(c));
    j["competence"] = std::move(row);
  }
  if (!r.busy.empty()) {
    json busy = json::array();
    for (const auto& b : r.busy) busy.push_back(interval_to_json(b));
    j["busy"] = std::move(busy);
  }
  return j;
}

inline json parse_json_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // translate the byte offset into line:column
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t upto = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::Parse, "invalid JSON at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
}

inline std::vector<Task> task_list_from_json(const json& arr, TaskKind kind, TimePoint default_release,
                                             const std::string& list) {
  if (!arr.is_array()) throw Error(ErrorCode::Parse, "expected an array", list);
  std::vector<Task> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(task_from_json(arr[i], kind, default_release, list + "[" + std::to_string(i) + "]"));
  }
  return out;
}

}  // namespace detail

inline Scenario scenario_from_json(const nlohmann::json& j) {
  using detail::require;
  if (!j.is_object()) throw Error(ErrorCode::Parse, "scenario must be a JSON object");
  Scenario s;
  s.epoch = detail::get_time(require(j, "epoch", "scenario"), "epoch");
  if (j.contains("horizon") && !j["horizon"].is_null()) s.horizon = detail::get_interval(j["horizon"], "horizon");
  if (j.contains("cost_params")) {
    const auto& cp = j["cost_params"];
    if (!cp.is_object()) throw Error(ErrorCode::Parse, "expected an object", "cost_params");
    if (cp.contains("hourly_rate")) s.cost_params.hourly_rate = detail::get_int(cp["hourly_rate"], "cost_params.hourly_rate");
    if (cp.contains("currency")) s.cost_params.currency = detail::get_string(cp["currency"], "cost_params.currency");
    if (cp.contains("penalty_mode")) {
      if (!cp["penalty_mode"].is_boolean()) throw Error(ErrorCode::Parse, "expected a boolean", "cost_params.penalty_mode");
      s.cost_params.penalty_mode = cp["penalty_mode"].get<bool>();
    }
  }
  if (j.contains("policy")) s.policy = parse_policy(detail::get_string(j["policy"], "policy"));
  if (j.contains("resources")) {
    const auto& arr = j["resources"];
    if (!arr.is_array()) throw Error(ErrorCode::Parse, "expected an array", "resources");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      s.resources.push_back(detail::resource_from_json(arr[i], "resources[" + std::to_string(i) + "]"));
    }
  }
  const TimePoint arrival = s.horizon ? s.horizon->start : s.epoch;
  if (j.contains("preventive_tasks")) {
    s.preventive_tasks = detail::task_list_from_json(j["preventive_tasks"], TaskKind::Preventive, arrival, "preventive_tasks");
  }
  if (j.contains("dynamic_tasks")) {
    s.dynamic_tasks = detail::task_list_from_json(j["dynamic_tasks"], TaskKind::Dynamic, arrival, "dynamic_tasks");
  }
  validate(s);
  return s;
}

inline nlohmann::json to_json(const Scenario& s) {
  using nlohmann::json;
  json j{{"epoch", format_iso8601(s.epoch)},
         {"cost_params",
          {{"hourly_rate", s.cost_params.hourly_rate},
           {"currency", s.cost_params.currency},
           {"penalty_mode", s.cost_params.penalty_mode}}},
         {"policy", to_string(s.policy)}};
  if (s.horizon) j["horizon"] = detail::interval_to_json(*s.horizon);
  json resources = json::array();
  for (const auto& r : s.resources) resources.push_back(detail::resource_to_json(r));
  j["resources"] = std::move(resources);
  json prev = json::array();
  for (const auto& t : s.preventive_tasks) prev.push_back(detail::task_to_json(t));
  j["preventive_tasks"] = std::move(prev);
  json dyn = json::array();
  for (const auto& t : s.dynamic_tasks) dyn.push_back(detail::task_to_json(t));
  j["dynamic_tasks"] = std::move(dyn);
  return j;
}

inline std::string serialize_scenario(const Scenario& s) { return to_json(s).dump(2) + "\n"; }

/// A dynamic-task list file: either a bare array or {"dynamic_tasks": [...]}.
/// Tasks without a release arrive at the scenario's horizon start (or epoch).
inline std::vector<Task> parse_dynamics(std::string_view text, const Scenario& context) {
  const auto j = detail::parse_json_text(text);
  const TimePoint arrival = context.horizon ? context.horizon->start : context.epoch;
  if (j.is_array()) return detail::task_list_from_json(j, TaskKind::Dynamic, arrival, "dynamic_tasks");
  if (j.is_object() && j.contains("dynamic_tasks")) {
    return detail::task_list_from_json(j["dynamic_tasks"], TaskKind::Dynamic, arrival, "dynamic_tasks");
  }
  throw Error(ErrorCode::Parse, "expected an array of tasks or an object with 'dynamic_tasks'");
}

// ---------------------------------------------------------------------------
// CSV

namespace detail {

inline std::vector<std::string> split_csv_line(std::string_view line, char delim) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == delim) {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(std::move(cur));
  for (auto& f : out) {
    const auto b = f.find_first_not_of(" \t\r");
    const auto e = f.find_last_not_of(" \t\r");
    f = b == std::string::npos ? std::string() : f.substr(b, e - b + 1);
  }
  return out;
}

inline std::string lower_ascii(std::string_view s) {
  std::string out;
  for (unsigned char c : s) out += static_cast<char>(std::tolower(c));
  return out;
}

inline TimePoint csv_time(const std::string& text, const std::string& field) {
  try {
    if (text.find('T') != std::string::npos && text.find('-') != std::string::npos) return parse_iso8601(text);
    return parse_dmy(text);
  } catch (const Error& e) {
    throw Error(ErrorCode::Parse, e.what(), field);
  }
}

}  // namespace detail

/// Flat CSV import. Recognized header names (case-insensitive):
///   id | n (task number), duration | dur*, start | d*but, end | fin,
///   cost | co*t (ignored, recomputed), resource | *ressour*, kind | type.
/// The delimiter is a tab or ';' when the header contains one, ',' otherwise.
/// A resource cell "R8=15,75" declares R8 with note 15.75 and pins the task
/// to it; a bare "R8" must refer to a resource declared on another line.
inline Scenario parse_scenario_csv(std::string_view text, const CostParams& params = {}) {
  std::vector<std::string_view> lines;
  for (std::size_t pos = 0; pos <= text.size();) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  std::size_t header_line = 0;
  while (header_line < lines.size() && lines[header_line].find_first_not_of(" \t\r") == std::string_view::npos) ++header_line;
  if (header_line == lines.size()) throw Error(ErrorCode::Parse, "empty CSV input");
  const std::string_view header = lines[header_line];
  const char delim = header.find('\t') != std::string_view::npos ? '\t'
                     : header.find(';') != std::string_view::npos ? ';'
                                                                   : ',';
  enum Col { Id, Dur, Start, End, Cost, Res, Kind };
  std::map<Col, std::size_t> cols;
  const auto names = detail::split_csv_line(header, delim);
  for (std::size_t i = 0; i < names.size(); ++i) {
    const std::string n = detail::lower_ascii(names[i]);
    if (n.empty()) continue;
    if (n == "id" || n[0] == 'n') cols.emplace(Id, i);
    else if (n.starts_with("dur")) cols.emplace(Dur, i);
    else if (n == "start" || (n.starts_with("d") && n.find("but") != std::string::npos)) cols.emplace(Start, i);
    else if (n == "end" || n == "fin") cols.emplace(End, i);
    else if (n == "cost" || n.starts_with("co")) cols.emplace(Cost, i);
    else if (n.find("resour") != std::string::npos || n.find("ressour") != std::string::npos) cols.emplace(Res, i);
    else if (n == "kind" || n.find("type") != std::string::npos) cols.emplace(Kind, i);
  }
  for (Col c : {Id, Start, End}) {
    if (!cols.contains(c)) throw Error(ErrorCode::Parse, "CSV header lacks a required column (id, start, end)", "line 1");
  }

  Scenario s;
  s.cost_params = params;
  std::map<std::string, Rational> declared;
  std::vector<std::pair<std::string, std::size_t>> references;  // bare ids, line
  std::optional<TimePoint> earliest;
  for (std::size_t ln = header_line + 1; ln < lines.size(); ++ln) {
    if (lines[ln].find_first_not_of(" \t\r") == std::string_view::npos) continue;
    const std::string where = "line " + std::to_string(ln + 1);
    const auto cells = detail::split_csv_line(lines[ln], delim);
    auto cell = [&](Col c) -> std::string {
      auto it = cols.find(c);
      if (it == cols.end() || it->second >= cells.size()) return {};
      return cells[it->second];
    };
    Task t;
    t.id = cell(Id);
    if (t.id.empty()) throw Error(ErrorCode::Validation, "missing task id", where + ".id");
    t.title = t.id;
    t.release = detail::csv_time(cell(Start), where + ".start");
    t.due = detail::csv_time(cell(End), where + ".end");
    t.duration = t.due - t.release;
    if (const auto d = cell(Dur); !d.empty()) {
      const Rational m = parse_rational(d) * 60;
      if (boost::multiprecision::denominator(m) != 1) {
        throw Error(ErrorCode::Validation, "duration must be a whole number of minutes", where + ".duration");
      }
      t.duration = Duration(static_cast<std::int64_t>(boost::multiprecision::numerator(m)));
    }
    const std::string kind = detail::lower_ascii(cell(Kind));
    t.kind = kind.starts_with("dyn") ? TaskKind::Dynamic : TaskKind::Preventive;
    if (const auto r = cell(Res); !r.empty()) {
      if (auto eq = r.find('='); eq != std::string::npos) {
        const std::string id = r.substr(0, eq);
        Rational note;
        try {
          note = parse_rational(r.substr(eq + 1));
        } catch (const Error& e) {
          throw Error(ErrorCode::Parse, e.what(), where + ".resource");
        }
        if (auto it = declared.find(id); it != declared.end() && it->second != note) {
          throw Error(ErrorCode::Validation, "resource " + id + " declared with two notes", where + ".resource");
        }
        declared[id] = note;
        t.resource = id;
      } else {
        t.resource = r;
        references.emplace_back(r, ln + 1);
      }
    }
    try {
      validate(t, where);
    } catch (const Error& e) {
      throw Error(ErrorCode::Validation, e.what(), where);
    }
    earliest = earliest ? std::min(*earliest, t.release) : t.release;
    (t.kind == TaskKind::Preventive ? s.preventive_tasks : s.dynamic_tasks).push_back(std::move(t));
  }
  for (const auto& [id, line] : references) {
    if (!declared.contains(id)) {
      throw Error(ErrorCode::Validation, "unknown resource '" + id + "'", "line " + std::to_string(line) + ".resource");
    }
  }
  for (const auto& [id, note] : declared) s.resources.push_back(Resource{id, note, {}, {}});
  s.epoch = earliest.value_or(TimePoint{});
  validate(s);
  return s;
}

enum class ScenarioFormat { Json, Csv };

inline Scenario parse_scenario(std::string_view text, ScenarioFormat format = ScenarioFormat::Json) {
  if (format == ScenarioFormat::Csv) return parse_scenario_csv(text);
  return scenario_from_json(detail::parse_json_text(text));
}

// ---------------------------------------------------------------------------
// Gantt export

struct GanttRow {
  std::string row_type;  // "task" | "window"
  std::string id;        // task id, or "W<index>"
  TimePoint start;
  TimePoint end;
  std::optional<std::string> resource_id;
  std::optional<TaskKind> kind;
  Money cost = 0;
};

/// Tasks and the gaps between them (zero-length gaps included), in start
/// order.
inline std::vector<GanttRow> export_gantt(const Schedule& s, const CostReport& report) {
  std::vector<GanttRow> rows;
  std::map<std::string, Money, std::less<>> task_cost_by_id;
  for (const auto& r : report.task_rows) task_cost_by_id[r.task_id] = r.cost;
  std::map<std::size_t, Money> window_cost;
  for (const auto& w : report.window_rows) window_cost[w.index] = w.cost;
  for (std::size_t i = 0; i < s.placements.size(); ++i) {
    const auto& p = s.placements[i];
    if (i > 0) {
      rows.push_back({"window", "W" + std::to_string(i), s.placements[i - 1].end, p.start, std::nullopt, std::nullopt,
                      window_cost.contains(i) ? window_cost[i] : 0});
    }
    auto it = task_cost_by_id.find(p.task.id);
    rows.push_back({"task", p.task.id, p.start, p.end, p.resource_id, p.task.kind,
                    it != task_cost_by_id.end() ? it->second : 0});
  }
  return rows;
}

inline nlohmann::json gantt_to_json(const std::vector<GanttRow>& rows) {
  using nlohmann::json;
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back({{"row_type", r.row_type},
                   {"id", r.id},
                   {"start", format_iso8601(r.start)},
                   {"end", format_iso8601(r.end)},
                   {"minutes", (r.end - r.start).count()},
                   {"resource_id", r.resource_id ? json(*r.resource_id) : json(nullptr)},
                   {"kind", r.kind ? json(to_string(*r.kind)) : json(nullptr)},
                   {"cost", r.cost}});
  }
  return json{{"rows", std::move(arr)}};
}

inline constexpr std::string_view kGanttCsvHeader = "row_type,id,start,end,minutes,resource_id,kind,cost";

inline std::string gantt_to_csv(const std::vector<GanttRow>& rows) {
  std::string out(kGanttCsvHeader);
  out += "\n";
  for (const auto& r : rows) {
    out += r.row_type + "," + r.id + "," + format_iso8601(r.start) + "," + format_iso8601(r.end) + "," +
           std::to_string((r.end - r.start).count()) + "," + r.resource_id.value_or("") + "," +
           (r.kind ? std::string(to_string(*r.kind)) : std::string()) + "," + std::to_string(r.cost) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Schedule JSON (service and CLI output)

inline nlohmann::json to_json(const Placement& p) {
  using nlohmann::json;
  return json{{"task_id", p.task.id},
              {"title", p.task.title},
              {"kind", to_string(p.task.kind)},
              {"start", format_iso8601(p.start)},
              {"end", format_iso8601(p.end)},
              {"minutes", p.duration().count()},
              {"resource_id", p.resource_id ? json(*p.resource_id) : json(nullptr)},
              {"t1_minutes", p.t1.count()},
              {"t2_minutes", p.t2.count()},
              {"appended", p.appended}};
}

inline nlohmann::json to_json(const Window& w) {
  return nlohmann::json{{"index", w.index},
                        {"start", format_iso8601(w.start)},
                        {"end", format_iso8601(w.end)},
                        {"minutes", w.length().count()}};
}

inline nlohmann::json to_json(const Schedule& s) {
  using nlohmann::json;
  json placements = json::array();
  for (const auto& p : s.placements) placements.push_back(to_json(p));
  json windows = json::array();
  for (const auto& w : compute_windows(s)) windows.push_back(to_json(w));
  json gaps = json::array();
  for (const auto& w : gap_rows(s)) gaps.push_back(to_json(w));
  const Assignment a = assignment_of(s);
  return json{{"epoch", format_iso8601(s.epoch)},
              {"horizon", detail::interval_to_json(s.horizon)},
              {"horizon_extended", s.horizon_extended},
              {"placements", std::move(placements)},
              {"windows", std::move(windows)},
              {"gap_rows", std::move(gaps)},
              {"assignments", a.task_to_resource},
              {"unassigned", a.unassigned}};
}

}  // namespace gapsched

#endif  // GAPSCHED_SCENARIO_IO_HPP_
