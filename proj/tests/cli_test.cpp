#include <gtest/gtest.h>

#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>

#include "gapsched/cli.hpp"
#include "test_support.hpp"

extern char** environ;

namespace gapsched {
namespace {

using nlohmann::json;

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

const std::string kFixtures = std::string(GAPSCHED_SOURCE_DIR) + "/fixtures/";

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "gapsched");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  std::istringstream in(stdin_text);
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err, in);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// Runs the built executable and captures its stdout.
Run run_binary(const std::vector<std::string>& args) {
  std::string cmd = GAPSCHED_CLI_PATH;
  for (const auto& a : args) cmd += " '" + a + "'";
  cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  Run r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

TEST(CliTest, ReportOnTableau1) {
  const auto r = run({"report", kFixtures + "tableau1.json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("Cout Total fenetre: 13100 | Cout Total Taches: 4600 | Cout Global: 17700 DHS"),
            std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find("Fri Jan 02 08:00:00 GMT 2009"), std::string::npos);
}

TEST(CliTest, JsonReportRoundTripsToCostReport) {
  const auto r = run({"report", kFixtures + "tableau1.json", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const CostReport report = cost_report_from_json(json::parse(r.out));
  const Scenario s = testing::tableau1();
  EXPECT_EQ(report, global_cost(plan(s), s.cost_params, s.resources));
  EXPECT_EQ(report.total_window_cost, 13100);
}

TEST(CliTest, EmptyScenarioReportsZeros) {
  const auto r = run({"report", "-"}, R"({"epoch": "2009-01-02T08:00:00Z"})");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("Cout Total fenetre: 0 | Cout Total Taches: 0 | Cout Global: 0 DHS"), std::string::npos);
}

TEST(CliTest, InsertThreeDynamics) {
  const auto r = run({"insert", kFixtures + "tableau1.json", "--dynamics", kFixtures + "dyn3.json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("before: Cout Total fenetre: 13100"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("after:  Cout Total fenetre: 8300"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("Gain vs preventive plan: 4800 DHS (36.6 %)"), std::string::npos);

  const auto j = json::parse(
      run({"insert", kFixtures + "tableau1.json", "--dynamics", kFixtures + "dyn3.json", "--format", "json"}).out);
  EXPECT_EQ(j["gain"], 4800);
  EXPECT_EQ(j["reduction_permille"], 366);
  EXPECT_EQ(j["insertions"].size(), 3u);
  EXPECT_EQ(j["insertions"][1]["t2_minutes"], 60);
}

TEST(CliTest, InsertRequiresDynamics) {
  const auto r = run({"insert", kFixtures + "tableau1.json"});
  EXPECT_EQ(r.code, exit_code::kUsage);
  EXPECT_TRUE(r.out.empty());
}

TEST(CliTest, RateOverrideScalesLinearly) {
  for (const Money rate : {1, 100, 250, 999}) {
    const auto r = run({"report", kFixtures + "tableau1.json", "--format", "json", "--rate", std::to_string(rate)});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["total_window_cost"], 131 * rate);
    EXPECT_EQ(j["total_task_cost"], 46 * rate);
  }
  EXPECT_EQ(run({"report", kFixtures + "tableau1.json", "--rate", "0"}).code, exit_code::kUsage);
}

TEST(CliTest, PolicyFlag) {
  const auto first = json::parse(
      run({"schedule", kFixtures + "tableau1.json", "--dynamics", kFixtures + "dyn3.json", "--format", "json"}).out);
  const auto best = json::parse(run({"schedule", kFixtures + "tableau1.json", "--dynamics", kFixtures + "dyn3.json",
                                     "--format", "json", "--policy", "best_fit"})
                                    .out);
  const auto append = json::parse(run({"schedule", kFixtures + "tableau1.json", "--dynamics", kFixtures + "dyn3.json",
                                       "--format", "json", "--policy", "append"})
                                      .out);
  EXPECT_EQ(first["policy"], "first_fit");
  EXPECT_EQ(best["policy"], "best_fit");
  EXPECT_EQ(first["placements"].size(), 13u);
  EXPECT_EQ(append["horizon_extended"], true);
  EXPECT_EQ(append["placements"][12]["appended"], true);
}

TEST(CliTest, ScheduleText) {
  const auto r = run({"schedule", kFixtures + "tableau1.json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("10 placements, 9 gap rows, 9 windows, idle 131 h"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("#2      2009-01-02T16:00:00Z  2009-01-04T08:00:00Z  40"), std::string::npos) << r.out;
}

TEST(CliTest, CsvInput) {
  const auto r = run({"report", kFixtures + "tableau1.csv", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["total_window_cost"], 13100);
  const auto forced = run({"validate", "-", "--input-format", "csv"}, testing::read_file(kFixtures + "tableau1.csv"));
  EXPECT_EQ(forced.out, "valid: 10 preventive tasks, 0 dynamic tasks, 10 resources\n");
}

TEST(CliTest, ValidateAndErrors) {
  EXPECT_EQ(run({"validate", kFixtures + "tableau1.json"}).out,
            "valid: 10 preventive tasks, 0 dynamic tasks, 10 resources\n");

  const auto invalid = run({"validate", "-"}, R"({"epoch": "2009-01-02T08:00:00Z",
      "preventive_tasks": [{"id": "A", "release": "2009-01-02T08:00:00Z", "due": "2009-01-02T08:00:00Z"}]})");
  EXPECT_EQ(invalid.code, exit_code::kValidation);
  const auto err = json::parse(invalid.err);
  EXPECT_EQ(err["error"]["code"], "validation");
  EXPECT_EQ(err["error"]["field"], "preventive_tasks[0].due");

  EXPECT_EQ(run({"validate", "-"}, "{").code, exit_code::kParse);
  EXPECT_EQ(run({"validate", "/nonexistent/scenario.json"}).code, exit_code::kIo);
  EXPECT_EQ(run({"frobnicate"}).code, exit_code::kUsage);
  EXPECT_EQ(json::parse(run({"frobnicate"}).err)["error"]["code"], "parse");
  EXPECT_EQ(run({"replay", "tableau9"}).code, exit_code::kUsage);
  EXPECT_EQ(run({"--help"}).code, exit_code::kOk);
}

TEST(CliTest, ReplayFixtures) {
  const auto t1 = run({"replay", "tableau1"});
  EXPECT_EQ(t1.code, 0);
  EXPECT_NE(t1.out.find("window total computed 13100  printed ok"), std::string::npos) << t1.out;

  const auto r3 = run({"replay", "run3dyn"});
  EXPECT_EQ(r3.code, 0);
  EXPECT_NE(r3.out.find("FLAG printed 9000 / computed 9400"), std::string::npos) << r3.out;
  EXPECT_NE(r3.out.find("reduction vs baseline 36.6 %"), std::string::npos);
  EXPECT_EQ(r3.out.substr(r3.out.size() - 5), "PASS\n");

  const auto r9 = json::parse(run({"replay", "run9dyn", "--format", "json"}).out);
  EXPECT_EQ(r9["pass"], true);
  EXPECT_EQ(r9["report"]["total_window_cost"], 6100);
  EXPECT_EQ(r9["report"]["window_rows"].size(), 18u);
  EXPECT_EQ(r9["reduction_permille"], 534);

  const auto all = run({"replay", "all", "--format", "json"});
  EXPECT_EQ(all.code, 0);
  EXPECT_EQ(json::parse(all.out).size(), 3u);
}

TEST(CliTest, ExportGantt) {
  const auto csv = run({"export", kFixtures + "tableau1.json"});
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.rfind(std::string(kGanttCsvHeader) + "\n", 0), 0u);
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 1 + 10 + 9);

  const auto j = json::parse(run({"export", kFixtures + "tableau1.json", "--dynamics", kFixtures + "dyn9.json",
                                  "--format", "json"})
                                 .out);
  EXPECT_EQ(j["rows"].size(), 19u + 18u);
}

TEST(CliBinaryTest, EveryCommandIsByteIdenticalAcrossRuns) {
  const std::string t1 = kFixtures + "tableau1.json";
  const std::string d9 = kFixtures + "dyn9.json";
  const std::vector<std::vector<std::string>> commands{
      {"validate", t1},
      {"validate", t1, "--format", "json"},
      {"schedule", t1, "--dynamics", d9},
      {"schedule", t1, "--dynamics", d9, "--format", "json"},
      {"insert", t1, "--dynamics", d9},
      {"insert", t1, "--dynamics", d9, "--format", "json", "--policy", "best_fit"},
      {"report", t1, "--dynamics", d9},
      {"report", kFixtures + "tableau1.csv", "--format", "json"},
      {"export", t1, "--dynamics", d9},
      {"export", t1, "--format", "json"},
      {"replay", "all"},
      {"replay", "all", "--format", "json"},
  };
  for (const auto& c : commands) {
    const auto a = run_binary(c);
    const auto b = run_binary(c);
    EXPECT_EQ(a.code, 0) << c[0];
    EXPECT_FALSE(a.out.empty()) << c[0];
    EXPECT_EQ(a.out, b.out) << c[0];
    EXPECT_EQ(a.out, run(c).out) << c[0];  // the binary and the in-process entry point agree
  }
}

// A `gapsched serve` child process on an ephemeral port.
class ServeProcess {
 public:
  explicit ServeProcess(std::vector<std::string> extra) {
    int fds[2];
    if (pipe(fds) != 0) throw std::runtime_error("pipe");
    posix_spawn_file_actions_t actions;
    posix_spawn_file_actions_init(&actions);
    posix_spawn_file_actions_adddup2(&actions, fds[1], STDOUT_FILENO);
    posix_spawn_file_actions_addclose(&actions, fds[0]);
    std::vector<std::string> args{GAPSCHED_CLI_PATH, "serve", "--listen", "127.0.0.1:0"};
    args.insert(args.end(), extra.begin(), extra.end());
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    argv.push_back(nullptr);
    if (posix_spawn(&pid_, argv[0], &actions, nullptr, argv.data(), environ) != 0) throw std::runtime_error("spawn");
    posix_spawn_file_actions_destroy(&actions);
    close(fds[1]);
    out_ = fdopen(fds[0], "r");
    char line[512];
    if (!fgets(line, sizeof line, out_)) throw std::runtime_error("serve printed nothing");
    banner_ = line;
    const auto colon = banner_.find(':', banner_.find("127.0.0.1"));
    port_ = std::stoi(banner_.substr(colon + 1));
  }
  ~ServeProcess() {
    if (pid_ > 0) stop();
    if (out_) fclose(out_);
  }
  int stop() {
    kill(pid_, SIGTERM);
    int status = 0;
    waitpid(pid_, &status, 0);
    pid_ = 0;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  int port() const { return port_; }
  const std::string& banner() const { return banner_; }

 private:
  pid_t pid_ = 0;
  FILE* out_ = nullptr;
  int port_ = 0;
  std::string banner_;
};

TEST(CliBinaryTest, ServeAnswersAndRestoresFromTheEventLog) {
  const std::string log = (std::filesystem::temp_directory_path() / ("gapsched_serve_" + std::to_string(getpid()))).string();
  std::remove(log.c_str());
  {
    ServeProcess server({"--event-log", log});
    EXPECT_NE(server.banner().find("0 sessions restored"), std::string::npos) << server.banner();
    httplib::Client client("127.0.0.1", server.port());
    auto created = client.Post("/sessions", R"({"fixture": "tableau1"})", "application/json");
    ASSERT_TRUE(created);
    EXPECT_EQ(created->status, 201);
    const auto td2 = detail::task_to_json(testing::dynamics("dyn3.json")[1]);
    auto commit = client.Post("/sessions/s1/tasks?mode=commit", json{{"task", td2}}.dump(), "application/json");
    ASSERT_TRUE(commit);
    EXPECT_EQ(json::parse(commit->body)["gain"], 3900);
    EXPECT_EQ(server.stop(), 0);
  }
  {
    ServeProcess server({"--event-log", log, "--policy", "best_fit"});
    EXPECT_NE(server.banner().find("1 sessions restored"), std::string::npos) << server.banner();
    httplib::Client client("127.0.0.1", server.port());
    auto costs = client.Get("/sessions/s1/costs");
    ASSERT_TRUE(costs);
    const auto j = json::parse(costs->body);
    EXPECT_EQ(j["revision"], 1);
    EXPECT_EQ(j["gain"], 3900);
    auto fresh = client.Post("/sessions", serialize_scenario([] {
                               auto s = testing::tableau1();
                               return s;
                             }()),
                             "application/json");
    ASSERT_TRUE(fresh);
    EXPECT_EQ(json::parse(fresh->body)["policy"], "first_fit");  // the scenario names its own policy
  }
  std::remove(log.c_str());
}

}  // namespace
}  // namespace gapsched
