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

// Preventive planning and dynamic-task insertion on a single machine.
//
// The pipeline is:
//   1. sort_tasks: release ascending, then duration ascending, then id.
//   2. plan_preventive: place each task at max(release, previous end), then
//      bind resources with assign_resources (longest task first, most
//      competent free resource first).
//   3. insert_dynamic / insert_batch: put each corrective task at the start
//      of a window chosen by the InsertionPolicy, or append it after the last
//      placement when nothing fits.
//
// Every operation returns a new Schedule; inputs are never mutated.

#ifndef GAPSCHED_SCHEDULER_HPP_
#define GAPSCHED_SCHEDULER_HPP_

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gapsched/domain.hpp"

namespace gapsched {

enum class InsertionPolicy { FirstFit, BestFit, Append };

inline std::string_view to_string(InsertionPolicy p) {
  switch (p) {
    case InsertionPolicy::FirstFit: return "first_fit";
    case InsertionPolicy::BestFit: return "best_fit";
    case InsertionPolicy::Append: return "append";
  }
  return "first_fit";
}

inline InsertionPolicy parse_policy(std::string_view s) {
  if (s == "first_fit" || s == "first-fit" || s == "firstfit") return InsertionPolicy::FirstFit;
  if (s == "best_fit" || s == "best-fit" || s == "bestfit") return InsertionPolicy::BestFit;
  if (s == "append") return InsertionPolicy::Append;
  throw Error(ErrorCode::Parse, "unknown insertion policy '" + std::string(s) + "'", "policy");
}

// ---------------------------------------------------------------------------
// Ordering

/// Release ascending, then duration ascending, then id. Rejects duplicate ids.
inline std::vector<Task> sort_tasks(std::vector<Task> tasks) {
  std::sort(tasks.begin(), tasks.end(), [](const Task& a, const Task& b) {
    if (a.release != b.release) return a.release < b.release;
    if (a.duration != b.duration) return a.duration < b.duration;
    return a.id < b.id;
  });
  std::set<std::string_view> seen;
  for (const auto& t : tasks) {
    if (!seen.insert(t.id).second) throw Error(ErrorCode::Validation, "duplicate task id '" + t.id + "'");
  }
  return tasks;
}

// ---------------------------------------------------------------------------
// Rate-monotonic utilization test

struct PeriodicTask {
  Duration execution;  // worst-case execution time
  Duration period;
};

struct SchedulabilityReport {
  std::size_t n = 0;
  Rational utilization;
  long double bound = 1.0L;
  bool feasible = true;
};

/// n * (2^(1/n) - 1); exactly 1 for n == 1, decreasing towards ln 2.
inline long double rm_bound(std::size_t n) {
  if (n <= 1) return 1.0L;
  const long double nn = static_cast<long double>(n);
  // expm1 keeps full precision for large n, where 2^(1/n) - 1 is tiny
  return nn * std::expm1(std::log(2.0L) / nn);
}

/// Sufficient (not necessary) condition; callers use it as a report, never as
/// a reason to refuse scheduling. An empty set is reported feasible with
/// bound 1.
inline SchedulabilityReport check_schedulability(std::span<const PeriodicTask> periodic) {
  SchedulabilityReport r;
  r.n = periodic.size();
  for (std::size_t i = 0; i < periodic.size(); ++i) {
    const auto& p = periodic[i];
    if (p.period.count() <= 0) {
      throw Error(ErrorCode::Domain, "period must be positive", "periodic[" + std::to_string(i) + "].period");
    }
    if (p.execution.count() < 0) {
      throw Error(ErrorCode::Domain, "execution time must be non-negative",
                  "periodic[" + std::to_string(i) + "].execution");
    }
    r.utilization += Rational(p.execution.count(), p.period.count());
  }
  r.bound = rm_bound(r.n);
  if (r.n <= 1) {
    r.feasible = r.utilization <= 1;
  } else {
    // For n >= 2 the bound is irrational, so U (rational) is never equal to it.
    r.feasible = r.utilization.convert_to<long double>() <= r.bound;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Resources

struct RankedResource {
  const Resource* resource = nullptr;
  Rational competence;
  bool available = true;
};

/// Descending competence for `task_type`, ties by id. When `at` is given,
/// resources whose calendar overlaps it stay in the list with available=false.
inline std::vector<RankedResource> rank_resources(std::span<const Resource> resources, std::size_t task_type,
                                                  std::optional<Interval> at = std::nullopt) {
  std::vector<RankedResource> ranked;
  ranked.reserve(resources.size());
  for (const auto& r : resources) {
    ranked.push_back({&r, r.competence_for(task_type), !at || r.free_during(*at)});
  }
  std::stable_sort(ranked.begin(), ranked.end(), [](const RankedResource& a, const RankedResource& b) {
    if (a.competence != b.competence) return a.competence > b.competence;
    return a.resource->id < b.resource->id;
  });
  return ranked;
}

struct Assignment {
  std::map<std::string, std::string> task_to_resource;
  std::vector<std::string> unassigned;

  bool operator==(const Assignment&) const = default;
};

/// Binds a resource to every placement, longest first (ties: earlier release,
/// then id). Each task gets the most competent resource that is free during
/// its interval, where "free" accounts for the resource's calendar, for
/// `occupied` (placements already holding resources) and for bindings made
/// earlier in this call. Within one call a resource that has not yet been
/// used is preferred over re-using one, so a plan spreads over the team the
/// way a competence ranking intends; a resource is re-used only when every
/// fresh one is busy. Tasks pinned to a resource get that one or nothing.
inline Assignment assign_resources(std::span<const Placement> placements, std::span<const Resource> resources,
                                   std::span<const Placement> occupied = {}) {
  std::map<std::string, std::vector<Interval>, std::less<>> taken;
  for (const auto& p : occupied) {
    if (p.resource_id) taken[*p.resource_id].push_back(p.interval());
  }
  auto is_free = [&](const Resource& r, const Interval& iv) {
    if (!r.free_during(iv)) return false;
    auto it = taken.find(r.id);
    if (it == taken.end()) return true;
    return std::none_of(it->second.begin(), it->second.end(), [&](const Interval& o) { return o.overlaps(iv); });
  };

  std::vector<const Placement*> order;
  order.reserve(placements.size());
  for (const auto& p : placements) order.push_back(&p);
  std::stable_sort(order.begin(), order.end(), [](const Placement* a, const Placement* b) {
    if (a->task.duration != b->task.duration) return a->task.duration > b->task.duration;
    if (a->task.release != b->task.release) return a->task.release < b->task.release;
    return a->task.id < b->task.id;
  });

  Assignment out;
  std::set<std::string, std::less<>> used;
  for (const Placement* p : order) {
    const Interval iv = p->interval();
    const Resource* chosen = nullptr;
    if (p->task.resource) {
      auto it = std::find_if(resources.begin(), resources.end(),
                             [&](const Resource& r) { return r.id == *p->task.resource; });
      if (it == resources.end()) {
        throw Error(ErrorCode::Validation, "unknown resource '" + *p->task.resource + "'", "task " + p->task.id);
      }
      if (is_free(*it, iv)) chosen = &*it;
    } else {
      const auto ranked = rank_resources(resources, p->task.required_type);
      const Resource* fallback = nullptr;
      for (const auto& rr : ranked) {
        if (!is_free(*rr.resource, iv)) continue;
        if (!used.contains(rr.resource->id)) {
          chosen = rr.resource;
          break;
        }
        if (!fallback) fallback = rr.resource;
      }
      if (!chosen) chosen = fallback;
    }
    if (!chosen) {
      out.unassigned.push_back(p->task.id);
      continue;
    }
    used.insert(chosen->id);
    taken[chosen->id].push_back(iv);
    out.task_to_resource.emplace(p->task.id, chosen->id);
  }
  std::sort(out.unassigned.begin(), out.unassigned.end());
  return out;
}

/// Bindings currently recorded on a schedule's placements.
inline Assignment assignment_of(const Schedule& s) {
  Assignment a;
  for (const auto& p : s.placements) {
    if (p.resource_id) {
      a.task_to_resource.emplace(p.task.id, *p.resource_id);
    } else {
      a.unassigned.push_back(p.task.id);
    }
  }
  std::sort(a.unassigned.begin(), a.unassigned.end());
  return a;
}

// ---------------------------------------------------------------------------
// Windows

/// One entry per consecutive placement pair, zero-length gaps included.
inline std::vector<Window> gap_rows(const Schedule& s) {
  std::vector<Window> rows;
  for (std::size_t i = 1; i < s.placements.size(); ++i) {
    rows.push_back({s.placements[i - 1].end, s.placements[i].start, i});
  }
  return rows;
}

/// Non-empty gaps only; each keeps its ordinal among all gaps.
inline std::vector<Window> compute_windows(const Schedule& s) {
  std::vector<Window> rows = gap_rows(s);
  std::erase_if(rows, [](const Window& w) { return w.length().count() <= 0; });
  return rows;
}

inline Duration total_idle(const Schedule& s) {
  Duration sum;
  for (const auto& w : gap_rows(s)) sum += w.length();
  return sum;
}

/// FirstFit: earliest window at least `d` long. BestFit: least leftover,
/// earliest on ties. Append never selects a window.
inline std::optional<Window> find_window(const Schedule& s, Duration d, InsertionPolicy policy) {
  if (d.count() <= 0) throw Error(ErrorCode::Validation, "duration must be positive", "duration");
  if (policy == InsertionPolicy::Append) return std::nullopt;
  std::optional<Window> best;
  for (const auto& w : compute_windows(s)) {
    if (w.length() < d) continue;
    if (policy == InsertionPolicy::FirstFit) return w;
    if (!best || w.length() < best->length()) best = w;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Planning and insertion

/// Sequences preventive tasks on the machine (each starts at its release or
/// when the previous one ends, whichever is later) and binds resources.
/// The horizon defaults to the span of the resulting placements.
inline Schedule plan_preventive(std::vector<Task> tasks, std::span<const Resource> resources, TimePoint epoch,
                                std::optional<Interval> horizon = std::nullopt) {
  tasks = sort_tasks(std::move(tasks));
  Schedule s;
  s.epoch = epoch;
  std::optional<TimePoint> cursor;
  for (auto& t : tasks) {
    validate(t, "task " + t.id);
    const TimePoint start = cursor ? std::max(*cursor, t.release) : t.release;
    Placement p;
    p.start = start;
    p.end = start + t.duration;
    p.task = std::move(t);
    cursor = p.end;
    s.placements.push_back(std::move(p));
  }
  const Assignment a = assign_resources(s.placements, resources);
  for (auto& p : s.placements) {
    if (auto it = a.task_to_resource.find(p.task.id); it != a.task_to_resource.end()) p.resource_id = it->second;
  }
  if (horizon) {
    s.horizon = *horizon;
  } else if (!s.placements.empty()) {
    s.horizon = {s.placements.front().start, s.placements.back().end};
  } else {
    s.horizon = {epoch, epoch};
  }
  if (!s.placements.empty() && s.placements.back().end > s.horizon.end) {
    s.horizon.end = s.placements.back().end;
    s.horizon_extended = true;
  }
  return s;
}

struct InsertionResult {
  Schedule schedule;
  Placement placement;
  std::optional<Window> host;  // window the task went into; empty when appended

  bool appended() const { return placement.appended; }
};

/// Places one dynamic task at the start of the window picked by `policy`
/// (t1 = 0, t2 = leftover), or right after the last placement when no
/// window fits. The most competent resource free over the new interval is
/// bound to it.
inline InsertionResult insert_dynamic(const Schedule& s, const Task& t, InsertionPolicy policy,
                                      std::span<const Resource> resources) {
  if (t.kind != TaskKind::Dynamic) {
    throw Error(ErrorCode::Validation, "only dynamic tasks can be inserted", "task " + t.id + ".kind");
  }
  if (t.duration.count() <= 0) throw Error(ErrorCode::Validation, "duration must be positive", "task " + t.id + ".duration");
  if (s.find(t.id)) throw Error(ErrorCode::Validation, "duplicate task id '" + t.id + "'", "task " + t.id + ".id");

  InsertionResult out{s, {}, find_window(s, t.duration, policy)};
  Placement p;
  p.task = t;
  std::size_t position = 0;
  if (out.host) {
    p.start = out.host->start;
    p.end = p.start + t.duration;
    p.t1 = Duration(0);
    p.t2 = out.host->length() - t.duration;
    position = out.host->index;  // lands after placement #index (1-based)
  } else {
    p.start = s.placements.empty() ? t.release : s.placements.back().end;
    p.end = p.start + t.duration;
    p.appended = true;
    position = s.placements.size();
  }

  const Placement one[] = {p};
  const Assignment a = assign_resources(one, resources, s.placements);
  if (auto it = a.task_to_resource.find(t.id); it != a.task_to_resource.end()) p.resource_id = it->second;

  auto& placements = out.schedule.placements;
  placements.insert(placements.begin() + static_cast<std::ptrdiff_t>(position), p);
  auto& h = out.schedule.horizon;
  if (placements.size() == 1 && h.empty()) h = p.interval();
  if (p.end > h.end) {
    h.end = p.end;
    out.schedule.horizon_extended = true;
  }
  if (p.start < h.start) {
    h.start = p.start;
    out.schedule.horizon_extended = true;
  }
  out.placement = std::move(p);
  return out;
}

struct BatchResult {
  Schedule schedule;
  std::vector<Placement> placements;  // in arrival order
  std::vector<std::string> appended;
  std::vector<std::string> unassigned;
};

/// Inserts tasks in arrival order; each sees the windows left by the previous
/// ones, residual sub-windows included.
inline BatchResult insert_batch(const Schedule& s, std::span<const Task> tasks, InsertionPolicy policy,
                                std::span<const Resource> resources) {
  BatchResult out{s, {}, {}, {}};
  for (const auto& t : tasks) {
    InsertionResult r = insert_dynamic(out.schedule, t, policy, resources);
    if (r.appended()) out.appended.push_back(t.id);
    if (!r.placement.resource_id) out.unassigned.push_back(t.id);
    out.placements.push_back(r.placement);
    out.schedule = std::move(r.schedule);
  }
  return out;
}

}  // namespace gapsched

#endif  // GAPSCHED_SCHEDULER_HPP_
