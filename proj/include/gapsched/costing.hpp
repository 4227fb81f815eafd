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

// Cost evaluation of a schedule.
//
// Global cost = sum of task costs + sum of lost (idle window) costs, where a
// window's lost cost is its length in hours times the hourly rate. Task cost
// is duration x rate by default, or the earliness/tardiness model
//   W * late_hours + h * early_hours + base_cost
// when CostParams::penalty_mode is set.

#ifndef GAPSCHED_COSTING_HPP_
#define GAPSCHED_COSTING_HPP_

#include <algorithm>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gapsched/domain.hpp"
#include "gapsched/scheduler.hpp"

namespace gapsched {

struct WindowRow {
  std::size_t index = 0;
  TimePoint start;
  TimePoint end;
  Duration length;
  Money cost = 0;

  bool operator==(const WindowRow&) const = default;
};

struct TaskRow {
  std::string task_id;
  std::string title;
  TaskKind kind = TaskKind::Preventive;
  TimePoint start;
  TimePoint end;
  Duration duration;
  std::optional<std::string> resource_id;
  std::optional<Rational> note;
  Money cost = 0;

  bool operator==(const TaskRow&) const = default;
};

struct CostReport {
  Money hourly_rate = 0;
  std::string currency;
  std::vector<WindowRow> window_rows;
  std::vector<TaskRow> task_rows;
  Money total_window_cost = 0;
  Money total_task_cost = 0;
  Money global_cost = 0;

  Duration total_idle() const {
    Duration d;
    for (const auto& w : window_rows) d += w.length;
    return d;
  }

  bool operator==(const CostReport&) const = default;
};

struct DeviationPenalties {
  Money tardiness_rate = 0;  // W, per hour late
  Money earliness_rate = 0;  // h, per hour early
  Money base_cost = 0;       // C0
  TimePoint earliest_due;
  TimePoint latest_due;

  static DeviationPenalties of(const Task& t) {
    return {t.tardiness_penalty, t.earliness_penalty, t.base_cost, t.due_window_start(), t.due};
  }
};

/// Idle cost over all consecutive placement pairs.
inline Money lost_cost(const Schedule& s, const CostParams& p) {
  Money sum = 0;
  for (const auto& w : gap_rows(s)) sum += price(w.length(), p.hourly_rate);
  return sum;
}

inline Money task_cost(const Task& t, const CostParams& p) {
  if (t.duration.count() <= 0) throw Error(ErrorCode::Validation, "duration must be positive", "task " + t.id);
  return price(t.duration, p.hourly_rate);
}

/// Earliness/tardiness cost of completing at the placement's end. At most one
/// of the two deviations is non-zero.
inline Money deviation_cost(const Placement& pl, const DeviationPenalties& d) {
  if (d.latest_due < d.earliest_due) throw Error(ErrorCode::Validation, "due window is inverted", "task " + pl.task.id);
  const TimePoint completion = pl.end;
  const Duration late = std::max(Duration(0), completion - d.latest_due);
  const Duration early = std::max(Duration(0), d.earliest_due - completion);
  return price(late, d.tardiness_rate) + price(early, d.earliness_rate) + d.base_cost;
}

/// Full report for `s`. `resources` is only used to print competence notes.
inline CostReport global_cost(const Schedule& s, const CostParams& p, std::span<const Resource> resources = {}) {
  validate(p);
  CostReport r;
  r.hourly_rate = p.hourly_rate;
  r.currency = p.currency;
  for (const auto& w : gap_rows(s)) {
    const Money c = price(w.length(), p.hourly_rate);
    r.window_rows.push_back({w.index, w.start, w.end, w.length(), c});
    r.total_window_cost += c;
  }
  for (const auto& pl : s.placements) {
    TaskRow row{pl.task.id, pl.task.title, pl.task.kind, pl.start, pl.end, pl.duration(), pl.resource_id, {}, 0};
    if (pl.resource_id) {
      auto it = std::find_if(resources.begin(), resources.end(),
                             [&](const Resource& res) { return res.id == *pl.resource_id; });
      if (it != resources.end()) row.note = it->competence_for(pl.task.required_type);
    }
    row.cost = p.penalty_mode ? deviation_cost(pl, DeviationPenalties::of(pl.task)) : task_cost(pl.task, p);
    r.total_task_cost += row.cost;
    r.task_rows.push_back(std::move(row));
  }
  r.global_cost = r.total_window_cost + r.total_task_cost;
  return r;
}

/// Lost-cost reduction from `before` to `after`.
inline Money gain(const CostReport& before, const CostReport& after) {
  if (before.hourly_rate != after.hourly_rate) {
    throw Error(ErrorCode::Validation, "reports priced at different hourly rates");
  }
  return before.total_window_cost - after.total_window_cost;
}

/// Reduction relative to `before`, in tenths of a percent, rounded half-up
/// (366 means 36.6 %). Zero when `before` has no lost cost.
inline std::int64_t reduction_permille(const CostReport& before, const CostReport& after) {
  if (before.total_window_cost == 0) return 0;
  const Money g = gain(before, after);
  const auto num = g * 1000;
  const auto den = before.total_window_cost;
  return num >= 0 ? (2 * num + den) / (2 * den) : -((-2 * num + den) / (2 * den));
}

inline std::string format_permille(std::int64_t tenths) {
  const bool neg = tenths < 0;
  const auto a = neg ? -tenths : tenths;
  return (neg ? "-" : "") + std::to_string(a / 10) + "." + std::to_string(a % 10);
}

// ---------------------------------------------------------------------------
// Performance objective

enum class Unit { Money, Minutes, Quality };
enum class Direction { AtMost, AtLeast };

struct Measure {
  Rational value;
  Unit unit = Unit::Money;
};

/// AtMost for cost/duration style objectives, AtLeast for quality.
inline bool check_performance_objective(const Measure& value, const Measure& objective, Direction direction) {
  if (value.unit != objective.unit) throw Error(ErrorCode::Validation, "objective and value use different units");
  return direction == Direction::AtMost ? value.value <= objective.value : value.value >= objective.value;
}

// ---------------------------------------------------------------------------
// Serialization

inline nlohmann::json to_json(const CostReport& r) {
  using nlohmann::json;
  json windows = json::array();
  for (const auto& w : r.window_rows) {
    windows.push_back({{"index", w.index},
                       {"start", format_iso8601(w.start)},
                       {"end", format_iso8601(w.end)},
                       {"minutes", w.length.count()},
                       {"cost", w.cost}});
  }
  json tasks = json::array();
  for (const auto& t : r.task_rows) {
    json row{{"task_id", t.task_id},
             {"title", t.title},
             {"kind", to_string(t.kind)},
             {"start", format_iso8601(t.start)},
             {"end", format_iso8601(t.end)},
             {"minutes", t.duration.count()},
             {"resource_id", t.resource_id ? json(*t.resource_id) : json(nullptr)},
             {"note", t.note ? json(format_rational(*t.note)) : json(nullptr)},
             {"cost", t.cost}};
    tasks.push_back(std::move(row));
  }
  return json{{"hourly_rate", r.hourly_rate},
              {"currency", r.currency},
              {"window_rows", std::move(windows)},
              {"task_rows", std::move(tasks)},
              {"total_window_cost", r.total_window_cost},
              {"total_task_cost", r.total_task_cost},
              {"global_cost", r.global_cost}};
}

inline CostReport cost_report_from_json(const nlohmann::json& j) {
  try {
    CostReport r;
    r.hourly_rate = j.at("hourly_rate").get<Money>();
    r.currency = j.at("currency").get<std::string>();
    for (const auto& w : j.at("window_rows")) {
      r.window_rows.push_back({w.at("index").get<std::size_t>(), parse_iso8601(w.at("start").get<std::string>()),
                               parse_iso8601(w.at("end").get<std::string>()),
                               Duration(w.at("minutes").get<std::int64_t>()), w.at("cost").get<Money>()});
    }
    for (const auto& t : j.at("task_rows")) {
      TaskRow row;
      row.task_id = t.at("task_id").get<std::string>();
      row.title = t.at("title").get<std::string>();
      row.kind = t.at("kind").get<std::string>() == "dynamic" ? TaskKind::Dynamic : TaskKind::Preventive;
      row.start = parse_iso8601(t.at("start").get<std::string>());
      row.end = parse_iso8601(t.at("end").get<std::string>());
      row.duration = Duration(t.at("minutes").get<std::int64_t>());
      if (!t.at("resource_id").is_null()) row.resource_id = t.at("resource_id").get<std::string>();
      if (!t.at("note").is_null()) row.note = parse_rational(t.at("note").get<std::string>());
      row.cost = t.at("cost").get<Money>();
      r.task_rows.push_back(std::move(row));
    }
    r.total_window_cost = j.at("total_window_cost").get<Money>();
    r.total_task_cost = j.at("total_task_cost").get<Money>();
    r.global_cost = j.at("global_cost").get<Money>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("malformed cost report: ") + e.what());
  }
}

namespace detail {

inline std::string render_columns(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line.append(width[i] - row[i].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

}  // namespace detail

inline std::string totals_line(const CostReport& r) {
  return "Cout Total fenetre: " + std::to_string(r.total_window_cost) +
         " | Cout Total Taches: " + std::to_string(r.total_task_cost) +
         " | Cout Global: " + std::to_string(r.global_cost) + " " + r.currency;
}

/// Aligned text: task table, window table, then the totals line.
inline std::string render_text(const CostReport& r) {
  std::vector<std::vector<std::string>> tasks{
      {"No", "Task", "Kind", "Start", "End", "Hours", "Resource", "Note", "Cost"}};
  for (std::size_t i = 0; i < r.task_rows.size(); ++i) {
    const auto& t = r.task_rows[i];
    tasks.push_back({std::to_string(i + 1), t.task_id, std::string(to_string(t.kind)), format_listing(t.start),
                     format_listing(t.end), format_hours(t.duration), t.resource_id.value_or("-"),
                     t.note ? format_rational(*t.note) : "-", std::to_string(t.cost)});
  }
  std::vector<std::vector<std::string>> windows{{"Window", "Hours", "Lost"}};
  for (const auto& w : r.window_rows) {
    windows.push_back({"#" + std::to_string(w.index), format_hours(w.length), std::to_string(w.cost)});
  }
  std::string out = detail::render_columns(tasks);
  out += "\n";
  out += detail::render_columns(windows);
  out += "\n" + totals_line(r) + "\n";
  return out;
}

}  // namespace gapsched

#endif  // GAPSCHED_COSTING_HPP_
