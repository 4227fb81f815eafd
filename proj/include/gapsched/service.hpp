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

// In-memory dispatcher sessions.
//
// A session owns a scenario, its planned preventive schedule and the stack of
// dynamic insertions committed on top of it. Every accepted mutation (commit
// or undo) bumps the revision by one. Writers may pass the revision they last
// saw; a mismatch is rejected with Conflict instead of being merged.
//
// Readers get immutable snapshots: each mutation publishes a fresh State and
// never touches the old one, so a reader only holds the session lock long
// enough to copy a shared_ptr.
//
// With an event log attached, every create/commit/undo is appended as one
// JSON line before the new state is published; SessionStore::restore feeds
// such a file back through the same code paths.

#ifndef GAPSCHED_SERVICE_HPP_
#define GAPSCHED_SERVICE_HPP_

#include <cstdint>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "gapsched/costing.hpp"
#include "gapsched/scenario_io.hpp"
#include "gapsched/scheduler.hpp"

namespace gapsched {

struct SessionEvent {
  enum class Type { Commit, Undo };
  Type type = Type::Commit;
  std::uint64_t revision = 0;  // revision reached by this event
  std::optional<Task> task;    // commits only
};

/// One immutable revision of a session.
struct SessionState {
  std::uint64_t revision = 0;
  Schedule current;
  CostReport report;
  // Schedules before each commit still in effect; undo pops the top one.
  std::vector<Schedule> undo_stack;
  std::vector<SessionEvent> events;
};

struct SessionSnapshot {
  std::string id;
  std::shared_ptr<const Scenario> scenario;
  InsertionPolicy policy = InsertionPolicy::FirstFit;
  CostReport baseline;
  std::shared_ptr<const SessionState> state;

  Money gain() const { return baseline.total_window_cost - state->report.total_window_cost; }
};

struct TaskOutcome {
  bool committed = false;
  std::uint64_t revision = 0;  // after the call
  Placement placement;
  std::optional<Window> host;
  CostReport projected;
  Money gain = 0;           // lost cost removed by this insertion alone
  Money gain_vs_baseline = 0;
  std::int64_t reduction_permille = 0;  // versus the baseline
};

class SessionStore {
 public:
  SessionStore() = default;
  SessionStore(const SessionStore&) = delete;
  SessionStore& operator=(const SessionStore&) = delete;

  /// Appends events to `path` from now on. Existing content is kept.
  void attach_event_log(const std::string& path) {
    std::lock_guard lock(log_mutex_);
    log_.open(path, std::ios::app | std::ios::binary);
    if (!log_) throw Error(ErrorCode::Io, "cannot open event log '" + path + "'");
  }

  /// Rebuilds sessions from an event log written by a previous store.
  void restore(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot read event log '" + path + "'");
    replaying_ = true;
    std::string line;
    std::size_t lineno = 0;
    try {
      while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        apply_logged(detail::parse_json_text(line));
      }
    } catch (const Error& e) {
      replaying_ = false;
      const std::string where = "event log line " + std::to_string(lineno);
      throw Error(e.code(), e.message(), e.field().empty() ? where : where + ", " + e.field());
    }
    replaying_ = false;
  }

  SessionSnapshot create(const Scenario& scenario, std::optional<InsertionPolicy> policy = std::nullopt) {
    validate(scenario);
    auto s = std::make_shared<Session>();
    s->scenario = std::make_shared<const Scenario>(scenario);
    s->policy = policy.value_or(scenario.policy);
    auto state = std::make_shared<SessionState>();
    state->current = plan(scenario);
    state->report = global_cost(state->current, scenario.cost_params, scenario.resources);
    s->baseline = state->report;
    s->state = std::move(state);

    std::unique_lock lock(map_mutex_);
    s->id = "s" + std::to_string(++next_id_);
    log_event({{"type", "create"},
               {"session", s->id},
               {"policy", to_string(s->policy)},
               {"scenario", to_json(scenario)}});
    sessions_.emplace(s->id, s);
    return snapshot_of(*s);
  }

  SessionSnapshot get(const std::string& id) const {
    const auto s = find(id);
    std::lock_guard lock(s->mutex);
    return snapshot_of(*s);
  }

  std::vector<std::string> ids() const {
    std::shared_lock lock(map_mutex_);
    std::vector<std::string> out;
    for (const auto& [id, s] : sessions_) out.push_back(id);
    return out;
  }

  /// Previews or commits one dynamic task. `expected_revision`, when given,
  /// must equal the session's current revision.
  TaskOutcome post_task(const std::string& id, const Task& task, bool commit,
                        std::optional<std::uint64_t> expected_revision = std::nullopt,
                        std::optional<InsertionPolicy> policy = std::nullopt) {
    validate(task, "task");
    const auto s = find(id);
    std::lock_guard lock(s->mutex);
    const auto held = s->state;  // keeps `state` alive past the swap below
    const auto& state = *held;
    check_revision(state, expected_revision);

    InsertionResult r = insert_dynamic(state.current, task, policy.value_or(s->policy), s->scenario->resources);
    TaskOutcome out;
    out.placement = r.placement;
    out.host = r.host;
    out.projected = global_cost(r.schedule, s->scenario->cost_params, s->scenario->resources);
    out.gain = gain(state.report, out.projected);
    out.gain_vs_baseline = gain(s->baseline, out.projected);
    out.reduction_permille = reduction_permille(s->baseline, out.projected);
    out.revision = state.revision;
    if (!commit) return out;

    auto next = std::make_shared<SessionState>(state);
    next->revision = state.revision + 1;
    next->undo_stack.push_back(state.current);
    next->current = std::move(r.schedule);
    next->report = out.projected;
    next->events.push_back({SessionEvent::Type::Commit, next->revision, task});
    log_event({{"type", "commit"},
               {"session", id},
               {"revision", next->revision},
               {"policy", to_string(policy.value_or(s->policy))},
               {"task", detail::task_to_json(task)}});
    s->state = std::move(next);
    out.committed = true;
    out.revision = state.revision + 1;
    return out;
  }

  SessionSnapshot undo(const std::string& id, std::optional<std::uint64_t> expected_revision = std::nullopt) {
    const auto s = find(id);
    std::lock_guard lock(s->mutex);
    const auto held = s->state;  // keeps `state` alive past the swap below
    const auto& state = *held;
    check_revision(state, expected_revision);
    if (state.undo_stack.empty()) throw Error(ErrorCode::Conflict, "nothing to undo", "session " + id);

    auto next = std::make_shared<SessionState>(state);
    next->revision = state.revision + 1;
    next->current = std::move(next->undo_stack.back());
    next->undo_stack.pop_back();
    next->report = global_cost(next->current, s->scenario->cost_params, s->scenario->resources);
    next->events.push_back({SessionEvent::Type::Undo, next->revision, std::nullopt});
    log_event({{"type", "undo"}, {"session", id}, {"revision", next->revision}});
    s->state = std::move(next);
    return snapshot_of(*s);
  }

 private:
  struct Session {
    std::string id;
    std::shared_ptr<const Scenario> scenario;
    InsertionPolicy policy = InsertionPolicy::FirstFit;
    CostReport baseline;
    std::shared_ptr<const SessionState> state;
    mutable std::mutex mutex;  // serializes writers; readers copy `state`
  };

  static SessionSnapshot snapshot_of(const Session& s) { return {s.id, s.scenario, s.policy, s.baseline, s.state}; }

  static void check_revision(const SessionState& state, std::optional<std::uint64_t> expected) {
    if (expected && *expected != state.revision) {
      throw Error(ErrorCode::Conflict,
                  "stale revision " + std::to_string(*expected) + ", session is at " + std::to_string(state.revision),
                  "expected_revision");
    }
  }

  std::shared_ptr<Session> find(const std::string& id) const {
    std::shared_lock lock(map_mutex_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) throw Error(ErrorCode::NotFound, "no session '" + id + "'", "session");
    return it->second;
  }

  void log_event(const nlohmann::json& event) {
    if (replaying_) return;
    std::lock_guard lock(log_mutex_);
    if (!log_.is_open()) return;
    log_ << event.dump() << '\n';
    log_.flush();
    if (!log_) throw Error(ErrorCode::Io, "event log write failed");
  }

  void apply_logged(const nlohmann::json& e) {
    const std::string type = detail::get_string(detail::require(e, "type", "event"), "type");
    const std::string id = detail::get_string(detail::require(e, "session", "event"), "session");
    if (type == "create") {
      const Scenario sc = scenario_from_json(detail::require(e, "scenario", "event"));
      const auto snap = create(sc, parse_policy(detail::get_string(e.at("policy"), "policy")));
      if (snap.id != id) throw Error(ErrorCode::Validation, "session ids out of sequence", "session");
      return;
    }
    const auto revision = static_cast<std::uint64_t>(detail::get_int(detail::require(e, "revision", "event"), "revision"));
    if (type == "commit") {
      const auto& tj = detail::require(e, "task", "event");
      const Task t = detail::task_from_json(tj, TaskKind::Dynamic, TimePoint{}, "task");
      post_task(id, t, true, revision - 1, parse_policy(detail::get_string(e.at("policy"), "policy")));
    } else if (type == "undo") {
      undo(id, revision - 1);
    } else {
      throw Error(ErrorCode::Parse, "unknown event type '" + type + "'", "type");
    }
  }

  mutable std::shared_mutex map_mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t next_id_ = 0;

  std::mutex log_mutex_;
  std::ofstream log_;
  bool replaying_ = false;
};

// ---------------------------------------------------------------------------
// JSON views used by the HTTP layer and the tests

inline nlohmann::json totals_json(const CostReport& r) {
  return {{"total_window_cost", r.total_window_cost},
          {"total_task_cost", r.total_task_cost},
          {"global_cost", r.global_cost},
          {"currency", r.currency}};
}

/// Dynamic tasks from the scenario that have not been placed yet.
inline std::vector<const Task*> pending_tasks(const SessionSnapshot& s) {
  std::vector<const Task*> out;
  for (const auto& t : s.scenario->dynamic_tasks) {
    if (!s.state->current.find(t.id)) out.push_back(&t);
  }
  return out;
}

inline nlohmann::json summary_json(const SessionSnapshot& s) {
  using nlohmann::json;
  json pending = json::array();
  for (const Task* t : pending_tasks(s)) pending.push_back(detail::task_to_json(*t));
  return {{"id", s.id},
          {"revision", s.state->revision},
          {"policy", to_string(s.policy)},
          {"placements", s.state->current.placements.size()},
          {"windows", compute_windows(s.state->current).size()},
          {"baseline", totals_json(s.baseline)},
          {"current", totals_json(s.state->report)},
          {"gain", s.gain()},
          {"reduction_permille", reduction_permille(s.baseline, s.state->report)},
          {"unassigned", assignment_of(s.state->current).unassigned},
          {"undo_depth", s.state->undo_stack.size()},
          {"pending_tasks", std::move(pending)}};
}

inline nlohmann::json schedule_json(const SessionSnapshot& s) {
  auto j = to_json(s.state->current);
  j["session"] = s.id;
  j["revision"] = s.state->revision;
  return j;
}

inline nlohmann::json costs_json(const SessionSnapshot& s) {
  return {{"session", s.id},
          {"revision", s.state->revision},
          {"report", to_json(s.state->report)},
          {"baseline", totals_json(s.baseline)},
          {"gain", s.gain()},
          {"reduction_permille", reduction_permille(s.baseline, s.state->report)},
          {"reduction_percent", format_permille(reduction_permille(s.baseline, s.state->report))}};
}

/// Windows with their lost cost; `fits` flags the ones long enough for a
/// task of `probe` minutes.
inline nlohmann::json windows_json(const SessionSnapshot& s, std::optional<Duration> probe = std::nullopt) {
  using nlohmann::json;
  json rows = json::array();
  for (const auto& w : compute_windows(s.state->current)) {
    json row = to_json(w);
    row["cost"] = price(w.length(), s.scenario->cost_params.hourly_rate);
    if (probe) row["fits"] = w.length() >= *probe;
    rows.push_back(std::move(row));
  }
  return {{"session", s.id}, {"revision", s.state->revision}, {"windows", std::move(rows)}};
}

inline nlohmann::json history_json(const SessionSnapshot& s) {
  using nlohmann::json;
  json events = json::array();
  for (const auto& e : s.state->events) {
    json row{{"revision", e.revision}, {"type", e.type == SessionEvent::Type::Commit ? "commit" : "undo"}};
    if (e.task) row["task_id"] = e.task->id;
    events.push_back(std::move(row));
  }
  return {{"session", s.id}, {"revision", s.state->revision}, {"events", std::move(events)}};
}

inline nlohmann::json outcome_json(const std::string& session, const TaskOutcome& o) {
  using nlohmann::json;
  return {{"session", session},
          {"mode", o.committed ? "commit" : "preview"},
          {"revision", o.revision},
          {"placement", to_json(o.placement)},
          {"window_index", o.host ? json(o.host->index) : json(nullptr)},
          {"t1_minutes", o.placement.t1.count()},
          {"t2_minutes", o.placement.t2.count()},
          {"resource_id", o.placement.resource_id ? json(*o.placement.resource_id) : json(nullptr)},
          {"appended", o.placement.appended},
          {"projected", to_json(o.projected)},
          {"gain", o.gain},
          {"gain_vs_baseline", o.gain_vs_baseline},
          {"reduction_permille", o.reduction_permille}};
}

inline nlohmann::json error_json(const Error& e) {
  return {{"error", {{"code", to_string(e.code())}, {"message", e.message()}, {"field", e.field()}}}};
}

}  // namespace gapsched

#endif  // GAPSCHED_SERVICE_HPP_
