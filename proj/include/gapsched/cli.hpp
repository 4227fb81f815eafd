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

// The `gapsched` command line.
//
//   gapsched validate <scenario>
//   gapsched schedule <scenario> [--dynamics FILE]
//   gapsched insert   <scenario> --dynamics FILE
//   gapsched report   <scenario> [--dynamics FILE]
//   gapsched export   <scenario> [--dynamics FILE] [--format csv|json]
//   gapsched replay   <fixture|all>
//   gapsched serve    [--listen HOST:PORT] [--event-log FILE]
//
// Scenario commands plan the preventive tasks, then insert the scenario's
// dynamic tasks followed by those of --dynamics, in arrival order. "-" reads
// the scenario from stdin. Errors go to stderr as one JSON object.

#ifndef GAPSCHED_CLI_HPP_
#define GAPSCHED_CLI_HPP_

#include <csignal>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <pthread.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "gapsched/costing.hpp"
#include "gapsched/fixtures.hpp"
#include "gapsched/http_service.hpp"
#include "gapsched/scenario_io.hpp"
#include "gapsched/service.hpp"

namespace gapsched {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kReplayFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kParse = 3;
inline constexpr int kValidation = 4;
inline constexpr int kNotFound = 5;
inline constexpr int kConflict = 6;
inline constexpr int kIo = 7;
}  // namespace exit_code

inline int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse: return exit_code::kParse;
    case ErrorCode::Validation:
    case ErrorCode::Domain: return exit_code::kValidation;
    case ErrorCode::NotFound: return exit_code::kNotFound;
    case ErrorCode::Conflict: return exit_code::kConflict;
    case ErrorCode::Io: return exit_code::kIo;
  }
  return exit_code::kIo;
}

namespace cli_detail {

struct Options {
  std::string input;
  std::string input_format;  // "", "json" or "csv"
  std::string dynamics;
  std::string policy;
  std::optional<Money> rate;
  std::string format = "text";
  std::string fixture;
  std::string listen = "127.0.0.1:8080";
  std::string event_log;
};

inline std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream ss;
  if (path == "-") {
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Io, "cannot read '" + path + "'");
  ss << f.rdbuf();
  return ss.str();
}

inline Scenario load_scenario(const Options& o, std::istream& in) {
  ScenarioFormat fmt = ScenarioFormat::Json;
  if (o.input_format == "csv" || (o.input_format.empty() && o.input.ends_with(".csv"))) fmt = ScenarioFormat::Csv;
  Scenario s = parse_scenario(read_input(o.input, in), fmt);
  if (!o.policy.empty()) s.policy = parse_policy(o.policy);
  if (o.rate) {
    s.cost_params.hourly_rate = *o.rate;
    validate(s.cost_params);
  }
  if (!o.dynamics.empty()) {
    for (auto& t : parse_dynamics(read_input(o.dynamics, in), s)) s.dynamic_tasks.push_back(std::move(t));
    validate(s);
  }
  return s;
}

struct PipelineResult {
  Scenario scenario;
  Schedule baseline_schedule;
  CostReport baseline;
  BatchResult batch;
  CostReport report;
};

inline PipelineResult run_pipeline(const Options& o, std::istream& in) {
  PipelineResult r;
  r.scenario = load_scenario(o, in);
  r.baseline_schedule = plan(r.scenario);
  r.baseline = global_cost(r.baseline_schedule, r.scenario.cost_params, r.scenario.resources);
  r.batch = insert_batch(r.baseline_schedule, r.scenario.dynamic_tasks, r.scenario.policy, r.scenario.resources);
  r.report = global_cost(r.batch.schedule, r.scenario.cost_params, r.scenario.resources);
  return r;
}

inline std::string gain_line(const PipelineResult& r) {
  return "Gain vs preventive plan: " + std::to_string(gain(r.baseline, r.report)) + " " + r.report.currency + " (" +
         format_permille(reduction_permille(r.baseline, r.report)) + " %)";
}

inline std::string opt_or_dash(const std::optional<std::string>& s) { return s.value_or("-"); }

inline void cmd_validate(const Options& o, std::istream& in, std::ostream& out) {
  const Scenario s = load_scenario(o, in);
  if (o.format == "json") {
    out << nlohmann::json{{"valid", true},
                          {"preventive_tasks", s.preventive_tasks.size()},
                          {"dynamic_tasks", s.dynamic_tasks.size()},
                          {"resources", s.resources.size()}}
               .dump(2)
        << "\n";
    return;
  }
  out << "valid: " << s.preventive_tasks.size() << " preventive tasks, " << s.dynamic_tasks.size()
      << " dynamic tasks, " << s.resources.size() << " resources\n";
}

inline void cmd_schedule(const Options& o, std::istream& in, std::ostream& out) {
  const auto r = run_pipeline(o, in);
  const Schedule& s = r.batch.schedule;
  if (o.format == "json") {
    auto j = to_json(s);
    j["policy"] = to_string(r.scenario.policy);
    out << j.dump(2) << "\n";
    return;
  }
  std::vector<std::vector<std::string>> rows{{"No", "Task", "Kind", "Start", "End", "Hours", "Resource", "t1", "t2"}};
  for (std::size_t i = 0; i < s.placements.size(); ++i) {
    const auto& p = s.placements[i];
    const bool inserted = p.task.kind == TaskKind::Dynamic;
    rows.push_back({std::to_string(i + 1), p.task.id + (p.appended ? " (appended)" : ""),
                    std::string(to_string(p.task.kind)), format_iso8601(p.start), format_iso8601(p.end),
                    format_hours(p.duration()), opt_or_dash(p.resource_id), inserted ? format_hours(p.t1) : "-",
                    inserted ? format_hours(p.t2) : "-"});
  }
  std::vector<std::vector<std::string>> windows{{"Window", "Start", "End", "Hours"}};
  for (const auto& w : compute_windows(s)) {
    windows.push_back({"#" + std::to_string(w.index), format_iso8601(w.start), format_iso8601(w.end),
                       format_hours(w.length())});
  }
  out << "policy " << to_string(r.scenario.policy) << ", " << s.placements.size() << " placements, "
      << gap_rows(s).size() << " gap rows, " << compute_windows(s).size() << " windows, idle "
      << format_hours(total_idle(s)) << " h\n\n";
  out << detail::render_columns(rows) << "\n" << detail::render_columns(windows);
  const auto unassigned = assignment_of(s).unassigned;
  if (!unassigned.empty()) {
    out << "\nunassigned:";
    for (const auto& id : unassigned) out << " " << id;
    out << "\n";
  }
}

inline void cmd_insert(const Options& o, std::istream& in, std::ostream& out) {
  if (o.dynamics.empty()) throw Error(ErrorCode::Validation, "insert needs --dynamics", "--dynamics");
  const auto r = run_pipeline(o, in);
  if (o.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& p : r.batch.placements) rows.push_back(to_json(p));
    out << nlohmann::json{{"policy", to_string(r.scenario.policy)},
                          {"insertions", std::move(rows)},
                          {"appended", r.batch.appended},
                          {"baseline", totals_json(r.baseline)},
                          {"report", to_json(r.report)},
                          {"gain", gain(r.baseline, r.report)},
                          {"reduction_permille", reduction_permille(r.baseline, r.report)}}
               .dump(2)
        << "\n";
    return;
  }
  std::vector<std::vector<std::string>> rows{{"Task", "Start", "End", "Hours", "Resource", "t1", "t2", "Placed"}};
  for (const auto& p : r.batch.placements) {
    std::string placed = "window";
    if (p.appended) placed = "appended";
    rows.push_back({p.task.id, format_iso8601(p.start), format_iso8601(p.end), format_hours(p.duration()),
                    opt_or_dash(p.resource_id), format_hours(p.t1), format_hours(p.t2), placed});
  }
  out << "policy " << to_string(r.scenario.policy) << "\n\n" << detail::render_columns(rows) << "\n";
  out << "before: " << totals_line(r.baseline) << "\n";
  out << "after:  " << totals_line(r.report) << "\n";
  out << gain_line(r) << "\n";
}

inline void cmd_report(const Options& o, std::istream& in, std::ostream& out) {
  const auto r = run_pipeline(o, in);
  if (o.format == "json") {
    out << to_json(r.report).dump(2) << "\n";
    return;
  }
  out << render_text(r.report);
  if (!r.scenario.dynamic_tasks.empty()) out << gain_line(r) << "\n";
}

inline void cmd_export(const Options& o, std::istream& in, std::ostream& out) {
  const auto r = run_pipeline(o, in);
  const auto rows = export_gantt(r.batch.schedule, r.report);
  if (o.format == "json") {
    out << gantt_to_json(rows).dump(2) << "\n";
  } else {
    out << gantt_to_csv(rows);
  }
}

inline bool cmd_replay(const Options& o, std::ostream& out) {
  std::vector<std::string> names;
  if (o.fixture == "all") {
    names.assign(kFixtureNames.begin(), kFixtureNames.end());
  } else {
    names.push_back(o.fixture);
  }
  bool all_pass = true;
  nlohmann::json runs = nlohmann::json::array();
  for (const auto& name : names) {
    const auto outcome = replay(load_fixture(name));
    all_pass = all_pass && outcome.pass;
    if (o.format == "json") {
      runs.push_back({{"fixture", name},
                      {"pass", outcome.pass},
                      {"report", to_json(outcome.report)},
                      {"baseline", totals_json(outcome.baseline)},
                      {"reduction_permille", reduction_permille(outcome.baseline, outcome.report)},
                      {"transcript", outcome.transcript}});
    } else {
      out << outcome.transcript;
    }
  }
  if (o.format == "json") out << (names.size() == 1 ? runs[0] : runs).dump(2) << "\n";
  return all_pass;
}

inline std::pair<std::string, int> split_listen(const std::string& listen) {
  const auto colon = listen.rfind(':');
  if (colon == std::string::npos) throw Error(ErrorCode::Parse, "expected HOST:PORT", "--listen");
  try {
    std::size_t used = 0;
    const int port = std::stoi(listen.substr(colon + 1), &used);
    if (used != listen.size() - colon - 1 || port < 0 || port > 65535) throw std::out_of_range("port");
    return {listen.substr(0, colon), port};
  } catch (const std::exception&) {
    throw Error(ErrorCode::Parse, "bad port in '" + listen + "'", "--listen");
  }
}

// Runs until SIGINT or SIGTERM.
inline void cmd_serve(const Options& o, std::ostream& out) {
  const auto [host, port] = split_listen(o.listen);
  SessionStore store;
  if (!o.event_log.empty()) {
    if (std::ifstream(o.event_log).good()) store.restore(o.event_log);
    store.attach_event_log(o.event_log);
  }
  std::optional<InsertionPolicy> policy;
  if (!o.policy.empty()) policy = parse_policy(o.policy);
  HttpService service(store, policy);

  // Block the stop signals before any server thread exists, then wait for
  // them on this thread.
  sigset_t stop_signals;
  sigemptyset(&stop_signals);
  sigaddset(&stop_signals, SIGINT);
  sigaddset(&stop_signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &stop_signals, nullptr);

  const int bound = service.bind(host, port);
  std::thread server([&] { service.serve(); });
  service.wait_until_ready();
  out << "listening on " << host << ":" << bound << " (" << store.ids().size() << " sessions restored)" << std::endl;
  int sig = 0;
  sigwait(&stop_signals, &sig);
  service.stop();
  server.join();
  pthread_sigmask(SIG_UNBLOCK, &stop_signals, nullptr);
}

}  // namespace cli_detail

/// Entry point shared by the executable and the tests.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                   std::istream& in = std::cin) {
  using cli_detail::Options;
  Options o;
  CLI::App app{"Single-machine maintenance scheduling: idle windows, resource assignment and dynamic insertion."};
  app.require_subcommand(1);

  const std::vector<std::string> policies{"first_fit", "best_fit", "append"};
  auto scenario_command = [&](const std::string& name, const std::string& help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("scenario", o.input, "Scenario file (JSON or CSV), - for stdin")->required();
    c->add_option("--input-format", o.input_format, "Force the scenario format")
        ->check(CLI::IsMember({"json", "csv"}));
    c->add_option("--policy", o.policy, "Insertion policy for dynamic tasks")->check(CLI::IsMember(policies));
    c->add_option("--rate", o.rate, "Hourly rate override")->check(CLI::PositiveNumber);
    return c;
  };

  auto* validate_cmd = scenario_command("validate", "Check a scenario and report its size");
  validate_cmd->add_option("--dynamics", o.dynamics, "Extra dynamic tasks (JSON)");
  validate_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* schedule_cmd = scenario_command("schedule", "Plan preventive tasks and insert dynamic ones");
  schedule_cmd->add_option("--dynamics", o.dynamics, "Extra dynamic tasks (JSON)");
  schedule_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* insert_cmd = scenario_command("insert", "Insert dynamic tasks and compare costs with the preventive plan");
  insert_cmd->add_option("--dynamics", o.dynamics, "Dynamic tasks (JSON)")->required();
  insert_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* report_cmd = scenario_command("report", "Cost report of the resulting schedule");
  report_cmd->add_option("--dynamics", o.dynamics, "Extra dynamic tasks (JSON)");
  report_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* export_cmd = scenario_command("export", "Gantt rows (tasks and windows)");
  export_cmd->add_option("--dynamics", o.dynamics, "Extra dynamic tasks (JSON)");
  export_cmd->add_option("--format", o.format, "csv (default) or json")->check(CLI::IsMember({"csv", "json"}));

  auto* replay_cmd = app.add_subcommand("replay", "Replay a bundled reference run and compare with its printed values");
  std::vector<std::string> fixture_choices(kFixtureNames.begin(), kFixtureNames.end());
  fixture_choices.push_back("all");
  replay_cmd->add_option("fixture", o.fixture, "tableau1, run3dyn, run9dyn or all")
      ->required()
      ->check(CLI::IsMember(fixture_choices));
  replay_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* serve_cmd = app.add_subcommand("serve", "Run the JSON session service");
  serve_cmd->add_option("--listen", o.listen, "HOST:PORT, port 0 picks a free one")
      ->envname("GAPSCHED_LISTEN")
      ->capture_default_str();
  serve_cmd->add_option("--event-log", o.event_log, "Append-only event log; replayed on start")
      ->envname("GAPSCHED_EVENT_LOG");
  serve_cmd->add_option("--policy", o.policy, "Default policy for new sessions")
      ->envname("GAPSCHED_POLICY")
      ->check(CLI::IsMember(policies));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);  // --help
    err << error_json(Error(ErrorCode::Parse, e.what(), "arguments")).dump() << "\n";
    return exit_code::kUsage;
  }
  if (export_cmd->parsed() && o.format == "text") o.format = "csv";

  try {
    if (validate_cmd->parsed()) cli_detail::cmd_validate(o, in, out);
    if (schedule_cmd->parsed()) cli_detail::cmd_schedule(o, in, out);
    if (insert_cmd->parsed()) cli_detail::cmd_insert(o, in, out);
    if (report_cmd->parsed()) cli_detail::cmd_report(o, in, out);
    if (export_cmd->parsed()) cli_detail::cmd_export(o, in, out);
    if (replay_cmd->parsed() && !cli_detail::cmd_replay(o, out)) return exit_code::kReplayFailed;
    if (serve_cmd->parsed()) cli_detail::cmd_serve(o, out);
  } catch (const Error& e) {
    err << error_json(e).dump() << "\n";
    return exit_code_for(e.code());
  }
  return exit_code::kOk;
}

}  // namespace gapsched

#endif  // GAPSCHED_CLI_HPP_
