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

// Bundled reference runs: a ten-task preventive plan and two published
// schedules obtained by inserting three and nine corrective tasks into it.
//
// Each fixture carries the scenario, the published placements verbatim, the
// values as they were printed (some of which are arithmetically wrong), and
// strictly recomputed expectations. Replaying a fixture rebuilds the
// published schedule, prices it, and reports every printed value that the
// arithmetic does not reproduce.

#ifndef GAPSCHED_FIXTURES_HPP_
#define GAPSCHED_FIXTURES_HPP_

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gapsched/costing.hpp"
#include "gapsched/fixture_data.hpp"
#include "gapsched/scenario_io.hpp"

namespace gapsched {

inline constexpr std::array<std::string_view, 3> kFixtureNames{"tableau1", "run3dyn", "run9dyn"};

/// Raw text of a bundled file ("tableau1.json", "dyn3.json", ...).
inline std::string_view fixture_file(std::string_view filename) {
  for (const auto& [name, text] : fixture_data::kFiles) {
    if (name == filename) return text;
  }
  throw Error(ErrorCode::NotFound, "no bundled fixture file '" + std::string(filename) + "'");
}

struct PublishedPlacement {
  std::string task_id;
  TimePoint start;
  TimePoint end;
  std::optional<std::string> resource_id;
  std::optional<Money> printed_cost;
  std::optional<std::string> printed_resource;
};

struct PrintedTotals {
  std::optional<Money> window;
  std::optional<Money> task;
  std::optional<Money> global;
};

struct FixtureExpectation {
  Money total_window_cost = 0;
  std::vector<std::int64_t> gap_hours;  // strict arithmetic, one per consecutive pair
  std::vector<PublishedPlacement> placements;
  std::optional<std::vector<Money>> printed_window_costs;
  PrintedTotals printed_totals;
  std::optional<int> printed_reduction_percent;
};

struct Fixture {
  std::string name;
  Scenario scenario;
  FixtureExpectation expected;
};

inline Fixture load_fixture(std::string_view name) {
  using nlohmann::json;
  std::string file;
  for (auto n : kFixtureNames) {
    if (n == name) file = "replay_" + std::string(n) + ".json";
  }
  if (file.empty()) throw Error(ErrorCode::NotFound, "unknown fixture '" + std::string(name) + "'");
  const json j = json::parse(fixture_file(file));

  Fixture f;
  f.name = j.at("name").get<std::string>();
  f.scenario = parse_scenario(fixture_file(j.at("scenario").get<std::string>()));
  if (j.contains("dynamics")) {
    f.scenario.dynamic_tasks = parse_dynamics(fixture_file(j.at("dynamics").get<std::string>()), f.scenario);
    validate(f.scenario);
  }
  const auto& pub = j.at("published");
  for (const auto& p : pub.at("placements")) {
    PublishedPlacement pp;
    pp.task_id = p.at("task_id").get<std::string>();
    pp.start = parse_iso8601(p.at("start").get<std::string>());
    pp.end = parse_iso8601(p.at("end").get<std::string>());
    if (p.contains("resource_id") && !p["resource_id"].is_null()) pp.resource_id = p["resource_id"].get<std::string>();
    if (p.contains("printed_cost") && !p["printed_cost"].is_null()) pp.printed_cost = p["printed_cost"].get<Money>();
    if (p.contains("printed_resource")) pp.printed_resource = p["printed_resource"].get<std::string>();
    f.expected.placements.push_back(std::move(pp));
  }
  if (!pub.at("printed_window_costs").is_null()) {
    f.expected.printed_window_costs = pub["printed_window_costs"].get<std::vector<Money>>();
  }
  const auto& tot = pub.at("printed_totals");
  auto opt_money = [](const json& v) { return v.is_null() ? std::optional<Money>{} : std::optional<Money>{v.get<Money>()}; };
  f.expected.printed_totals = {opt_money(tot.at("window")), opt_money(tot.at("task")), opt_money(tot.at("global"))};
  if (!pub.at("printed_reduction_percent").is_null()) {
    f.expected.printed_reduction_percent = pub["printed_reduction_percent"].get<int>();
  }
  const auto& exp = j.at("expected");
  f.expected.total_window_cost = exp.at("total_window_cost").get<Money>();
  f.expected.gap_hours = exp.at("gap_hours").get<std::vector<std::int64_t>>();
  return f;
}

/// The published schedule, rebuilt verbatim from the fixture's placements.
inline Schedule replay_schedule(const Fixture& f) {
  Schedule s;
  s.epoch = f.scenario.epoch;
  s.horizon = f.scenario.horizon.value_or(Interval{f.scenario.epoch, f.scenario.epoch});
  auto find_task = [&](const std::string& id) -> const Task& {
    for (const auto* list : {&f.scenario.preventive_tasks, &f.scenario.dynamic_tasks}) {
      for (const auto& t : *list) {
        if (t.id == id) return t;
      }
    }
    throw Error(ErrorCode::Validation, "published placement names unknown task '" + id + "'");
  };
  for (const auto& pp : f.expected.placements) {
    Placement p;
    p.task = find_task(pp.task_id);
    p.start = pp.start;
    p.end = pp.end;
    p.resource_id = pp.resource_id;
    s.placements.push_back(std::move(p));
  }
  std::stable_sort(s.placements.begin(), s.placements.end(),
                   [](const Placement& a, const Placement& b) { return a.start < b.start; });
  if (!s.placements.empty()) {
    if (s.placements.back().end > s.horizon.end) {
      s.horizon.end = s.placements.back().end;
      s.horizon_extended = true;
    }
    if (s.placements.front().start < s.horizon.start) {
      s.horizon.start = s.placements.front().start;
      s.horizon_extended = true;
    }
  }
  validate(s);
  return s;
}

struct ReplayOutcome {
  CostReport report;
  CostReport baseline;   // preventive plan alone, replayed
  bool pass = false;
  std::string transcript;  // human-readable row-by-row comparison
};

/// Replays a fixture and compares it against both its strict expectations
/// (which decide pass/fail) and its printed values (reported only).
inline ReplayOutcome replay(const Fixture& f) {
  ReplayOutcome out;
  const Schedule s = replay_schedule(f);
  out.report = global_cost(s, f.scenario.cost_params, f.scenario.resources);

  Fixture base = f;
  std::erase_if(base.expected.placements, [&](const PublishedPlacement& p) {
    return std::none_of(f.scenario.preventive_tasks.begin(), f.scenario.preventive_tasks.end(),
                        [&](const Task& t) { return t.id == p.task_id; });
  });
  out.baseline = global_cost(replay_schedule(base), f.scenario.cost_params, f.scenario.resources);

  std::ostringstream os;
  os << "replay " << f.name << ": " << s.placements.size() << " placements, " << out.report.window_rows.size()
     << " gap rows\n";
  bool ok = true;

  for (std::size_t i = 0; i < out.report.task_rows.size(); ++i) {
    const auto& row = out.report.task_rows[i];
    const auto& pub = f.expected.placements;
    auto it = std::find_if(pub.begin(), pub.end(), [&](const PublishedPlacement& p) { return p.task_id == row.task_id; });
    os << "  task " << row.task_id << " " << format_hours(row.duration) << " h cost " << row.cost;
    if (it != pub.end() && it->printed_cost) {
      os << (*it->printed_cost == row.cost ? "  ok" : "  MISMATCH printed " + std::to_string(*it->printed_cost));
    } else {
      os << "  (not printed)";
    }
    if (it != pub.end() && it->printed_resource && it->printed_resource != row.resource_id) {
      os << "  resource printed " << *it->printed_resource << " / listed " << row.resource_id.value_or("-");
    }
    os << "\n";
  }

  const auto& printed_w = f.expected.printed_window_costs;
  if (out.report.window_rows.size() != f.expected.gap_hours.size()) {
    ok = false;
    os << "  FAIL gap row count " << out.report.window_rows.size() << " != expected " << f.expected.gap_hours.size()
       << "\n";
  }
  for (std::size_t i = 0; i < out.report.window_rows.size(); ++i) {
    const auto& w = out.report.window_rows[i];
    os << "  window #" << w.index << " " << format_hours(w.length) << " h lost " << w.cost;
    if (i < f.expected.gap_hours.size()) {
      if (w.length != Duration::hours(f.expected.gap_hours[i])) {
        ok = false;
        os << "  FAIL expected " << f.expected.gap_hours[i] << " h";
      }
    }
    if (printed_w && i < printed_w->size()) {
      os << ((*printed_w)[i] == w.cost ? "  printed ok" : "  MISMATCH printed " + std::to_string((*printed_w)[i]));
    }
    os << "\n";
  }

  const auto& pt = f.expected.printed_totals;
  auto total_line = [&](const char* label, Money computed, const std::optional<Money>& printed) {
    os << "  " << label << " computed " << computed;
    if (printed) {
      os << (*printed == computed ? "  printed ok"
                                  : "  FLAG printed " + std::to_string(*printed) + " / computed " +
                                        std::to_string(computed));
    }
    os << "\n";
  };
  total_line("window total", out.report.total_window_cost, pt.window);
  total_line("task total  ", out.report.total_task_cost, pt.task);
  total_line("global total", out.report.global_cost, pt.global);

  if (out.report.total_window_cost != f.expected.total_window_cost) {
    ok = false;
    os << "  FAIL window total " << out.report.total_window_cost << " != " << f.expected.total_window_cost << "\n";
  }
  if (out.baseline.total_window_cost != out.report.total_window_cost) {
    const auto permille = reduction_permille(out.baseline, out.report);
    os << "  reduction vs baseline " << format_permille(permille) << " %";
    if (f.expected.printed_reduction_percent) {
      const auto diff = permille - *f.expected.printed_reduction_percent * 10;
      os << " (printed " << *f.expected.printed_reduction_percent << " %, "
         << (diff >= -10 && diff <= 10 ? "within 1 pt" : "OFF BY MORE THAN 1 pt") << ")";
      if (diff < -10 || diff > 10) ok = false;
    }
    os << "\n";
  }
  os << (ok ? "PASS" : "FAIL") << "\n";
  out.pass = ok;
  out.transcript = os.str();
  return out;
}

}  // namespace gapsched

#endif  // GAPSCHED_FIXTURES_HPP_
