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

// Core value types for single-machine maintenance scheduling.
//
// A Schedule is an ordered list of non-overlapping Placements on one machine.
// The idle time between two consecutive placements is a Window; its length
// priced at the hourly rate is the "lost" cost the engine tries to shrink by
// inserting dynamic (corrective) tasks into it.

#ifndef GAPSCHED_DOMAIN_HPP_
#define GAPSCHED_DOMAIN_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gapsched/error.hpp"
#include "gapsched/rational.hpp"
#include "gapsched/time.hpp"

namespace gapsched {

/// Integer count of currency units.
using Money = std::int64_t;

/// Prices a duration at a per-hour rate, rounding half away from zero to the
/// nearest unit. Exact whenever the duration is a whole number of hours.
inline Money price(Duration d, Money per_hour) {
  const std::int64_t num = d.count() * per_hour;
  return num >= 0 ? (num + 30) / 60 : -((-num + 30) / 60);
}

enum class TaskKind { Preventive, Dynamic };

inline std::string_view to_string(TaskKind k) { return k == TaskKind::Preventive ? "preventive" : "dynamic"; }

struct Task {
  std::string id;
  std::string title;
  TaskKind kind = TaskKind::Preventive;
  TimePoint release;
  TimePoint due;
  Duration duration;
  // Lower end of the due window; the upper end is `due`. Absent means the
  // window collapses onto `due`.
  std::optional<TimePoint> earliest_due;
  Money earliness_penalty = 0;  // per hour early
  Money tardiness_penalty = 0;  // per hour late
  Money base_cost = 0;
  std::size_t required_type = 0;
  // Resource the task must be bound to, if any.
  std::optional<std::string> resource;

  TimePoint due_window_start() const { return earliest_due.value_or(due); }

  bool operator==(const Task&) const = default;
};

/// Throws Validation with `field` prefixed on the first broken invariant.
inline void validate(const Task& t, const std::string& field = "task") {
  if (t.id.empty()) throw Error(ErrorCode::Validation, "id must not be empty", field + ".id");
  if (!(t.release < t.due)) throw Error(ErrorCode::Validation, "release must be before due", field + ".due");
  if (t.duration.count() <= 0) throw Error(ErrorCode::Validation, "duration must be positive", field + ".duration");
  if (t.earliest_due && *t.earliest_due > t.due) {
    throw Error(ErrorCode::Validation, "earliest_due must not be after due", field + ".earliest_due");
  }
  if (t.earliness_penalty < 0 || t.tardiness_penalty < 0) {
    throw Error(ErrorCode::Validation, "penalties must be non-negative", field);
  }
}

struct Resource {
  std::string id;
  Rational note;
  // Competence per task type; empty means `note` applies to every type.
  std::vector<Rational> competence;
  // External unavailability, sorted and pairwise disjoint.
  std::vector<Interval> busy;

  const Rational& competence_for(std::size_t type) const {
    if (competence.empty()) return note;
    if (type >= competence.size()) {
      throw Error(ErrorCode::Validation, "no competence defined for task type " + std::to_string(type),
                  "resource " + id);
    }
    return competence[type];
  }

  bool free_during(const Interval& iv) const {
    return std::none_of(busy.begin(), busy.end(), [&](const Interval& b) { return b.overlaps(iv); });
  }

  bool operator==(const Resource&) const = default;
};

inline void validate(const Resource& r, const std::string& field = "resource") {
  if (r.id.empty()) throw Error(ErrorCode::Validation, "id must not be empty", field + ".id");
  if (r.note < 0 || r.note > 20) throw Error(ErrorCode::Validation, "note must lie in [0, 20]", field + ".note");
  if (r.competence.size() == 1 && r.competence.front() != r.note) {
    throw Error(ErrorCode::Validation, "single-type competence must equal note", field + ".competence");
  }
  for (std::size_t i = 0; i < r.busy.size(); ++i) {
    if (r.busy[i].empty()) throw Error(ErrorCode::Validation, "empty busy interval", field + ".busy");
    if (i > 0 && r.busy[i].start < r.busy[i - 1].end) {
      throw Error(ErrorCode::Validation, "busy intervals must be sorted and disjoint", field + ".busy");
    }
  }
}

/// A maximal idle interval between two consecutive placements.
struct Window {
  TimePoint start;
  TimePoint end;
  std::size_t index = 0;  // 1-based ordinal among the schedule's gaps

  Duration length() const { return end - start; }
  bool operator==(const Window&) const = default;
};

inline Duration window_length(const Window& w) { return w.length(); }

struct Placement {
  Task task;
  TimePoint start;
  TimePoint end;
  std::optional<std::string> resource_id;
  Duration t1;  // slack left before the task inside its host window
  Duration t2;  // slack left after it
  bool appended = false;

  const std::string& task_id() const { return task.id; }
  Interval interval() const { return {start, end}; }
  Duration duration() const { return end - start; }

  bool operator==(const Placement&) const = default;
};

struct Schedule {
  TimePoint epoch;
  Interval horizon;
  std::vector<Placement> placements;  // ordered by start
  bool horizon_extended = false;

  const Placement* find(std::string_view task_id) const {
    for (const auto& p : placements) {
      if (p.task.id == task_id) return &p;
    }
    return nullptr;
  }

  bool operator==(const Schedule&) const = default;
};

inline void validate(const Schedule& s) {
  for (std::size_t i = 0; i < s.placements.size(); ++i) {
    const auto& p = s.placements[i];
    if (p.end - p.start != p.task.duration) {
      throw Error(ErrorCode::Validation, "placement length differs from task duration", "placement " + p.task.id);
    }
    if (p.t1.count() < 0 || p.t2.count() < 0) {
      throw Error(ErrorCode::Validation, "negative slack", "placement " + p.task.id);
    }
    if (i > 0 && p.start < s.placements[i - 1].end) {
      throw Error(ErrorCode::Validation, "placements overlap on the machine", "placement " + p.task.id);
    }
  }
}

struct CostParams {
  Money hourly_rate = 100;
  std::string currency = "DHS";
  // When set, task costs come from the earliness/tardiness model instead of
  // duration x rate.
  bool penalty_mode = false;

  bool operator==(const CostParams&) const = default;
};

inline void validate(const CostParams& p) {
  if (p.hourly_rate <= 0) throw Error(ErrorCode::Validation, "hourly_rate must be positive", "cost_params.hourly_rate");
}

/// Maximal free sub-intervals of `horizon` not covered by `busy`.
/// `busy` must be sorted and pairwise disjoint; parts outside the horizon are
/// ignored.
inline std::vector<Window> subtract_busy(const Interval& horizon, std::span<const Interval> busy) {
  for (std::size_t i = 1; i < busy.size(); ++i) {
    if (busy[i].start < busy[i - 1].end) {
      throw Error(ErrorCode::Validation, "busy intervals overlap or are unsorted", "busy[" + std::to_string(i) + "]");
    }
  }
  std::vector<Window> free;
  TimePoint cursor = horizon.start;
  for (const auto& b : busy) {
    if (b.end <= horizon.start || b.start >= horizon.end) continue;
    if (cursor < b.start) free.push_back({cursor, b.start, free.size() + 1});
    cursor = std::max(cursor, b.end);
  }
  if (cursor < horizon.end) free.push_back({cursor, horizon.end, free.size() + 1});
  return free;
}

}  // namespace gapsched

#endif  // GAPSCHED_DOMAIN_HPP_
