#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "gapsched/costing.hpp"
#include "gapsched/scheduler.hpp"
#include "test_support.hpp"

namespace gapsched {
namespace {

using testing::jan2009;
using testing::make_resource;
using testing::make_task;

Schedule tableau1_plan() { return plan(testing::tableau1()); }

std::vector<std::int64_t> gap_hours(const Schedule& s) {
  std::vector<std::int64_t> out;
  for (const auto& w : gap_rows(s)) out.push_back(w.length().count() / 60);
  return out;
}

// ---------------------------------------------------------------------------
// sort_tasks

TEST(SortTasksTest, Tableau1IsAlreadyInReleaseOrder) {
  const auto sorted = sort_tasks(testing::tableau1().preventive_tasks);
  std::vector<std::string> ids;
  for (const auto& t : sorted) ids.push_back(t.id);
  EXPECT_EQ(ids, (std::vector<std::string>{"T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "T9", "T10"}));
}

TEST(SortTasksTest, EmptyAndTieBreaks) {
  EXPECT_TRUE(sort_tasks({}).empty());
  const TimePoint r = jan2009(3, 8);
  const auto sorted = sort_tasks({make_task("long", TaskKind::Preventive, r, Duration::hours(4)),
                                  make_task("short", TaskKind::Preventive, r, Duration::hours(2))});
  EXPECT_EQ(sorted.front().id, "short");
  const auto by_id = sort_tasks({make_task("b", TaskKind::Preventive, r, Duration::hours(2)),
                                 make_task("a", TaskKind::Preventive, r, Duration::hours(2))});
  EXPECT_EQ(by_id.front().id, "a");
}

TEST(SortTasksTest, RejectsDuplicateIds) {
  const auto a = make_task("T", TaskKind::Preventive, jan2009(3, 8), Duration::hours(2));
  const auto b = make_task("T", TaskKind::Preventive, jan2009(5, 8), Duration::hours(1));
  const auto c = make_task("U", TaskKind::Preventive, jan2009(4, 8), Duration::hours(1));
  EXPECT_THROW(sort_tasks({a, c, b}), Error);
}

// ---------------------------------------------------------------------------
// check_schedulability

TEST(SchedulabilityTest, SingleTaskBoundIsExactlyOne) {
  const PeriodicTask one[] = {{Duration(1), Duration(2)}};
  const auto r = check_schedulability(one);
  EXPECT_EQ(r.n, 1u);
  EXPECT_EQ(r.utilization, Rational(1, 2));
  EXPECT_EQ(r.bound, 1.0L);
  EXPECT_TRUE(r.feasible);
}

TEST(SchedulabilityTest, TwoTasksAboveBoundAreInfeasible) {
  const PeriodicTask two[] = {{Duration(1), Duration(2)}, {Duration(1), Duration(3)}};
  const auto r = check_schedulability(two);
  EXPECT_EQ(r.utilization, Rational(5, 6));
  // oracle: 2 (sqrt 2 - 1) through a square root, not an exponential
  EXPECT_NEAR(static_cast<double>(r.bound), 2.0 * (std::sqrt(2.0) - 1.0), 1e-12);
  EXPECT_NEAR(static_cast<double>(r.bound), 0.8284271247461901, 1e-12);
  EXPECT_FALSE(r.feasible);
}

TEST(SchedulabilityTest, ThreeTasksAtPointTwoAreFeasible) {
  const PeriodicTask three[] = {{Duration(1), Duration(5)}, {Duration(2), Duration(10)}, {Duration(3), Duration(15)}};
  const auto r = check_schedulability(three);
  EXPECT_EQ(r.utilization, Rational(3, 5));
  EXPECT_NEAR(static_cast<double>(r.bound), 3.0 * (std::cbrt(2.0) - 1.0), 1e-12);
  EXPECT_NEAR(static_cast<double>(r.bound), 0.7797631496846196, 1e-12);
  EXPECT_TRUE(r.feasible);
}

TEST(SchedulabilityTest, ZeroPeriodIsADomainError) {
  const PeriodicTask bad[] = {{Duration(1), Duration(0)}};
  try {
    check_schedulability(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Domain);
  }
}

TEST(SchedulabilityTest, UtilizationIsExactRational) {
  // 1/3 + 1/3 + 1/3 must be exactly 1, not 0.999...
  const PeriodicTask t[] = {{Duration(1), Duration(3)}, {Duration(1), Duration(3)}, {Duration(1), Duration(3)}};
  EXPECT_EQ(check_schedulability(t).utilization, Rational(1));
}

// ---------------------------------------------------------------------------
// rank_resources

TEST(RankResourcesTest, FixtureOrderByNote) {
  const auto s = testing::tableau1();
  const auto ranked = rank_resources(s.resources, 0);
  std::vector<std::string> ids;
  for (const auto& r : ranked) ids.push_back(r.resource->id);
  EXPECT_EQ(ids, (std::vector<std::string>{"R2", "R9", "R5", "R6", "R8", "R3", "R4", "R1", "R7", "R10"}));
  EXPECT_EQ(ranked[4].competence, Rational(63, 4));
}

TEST(RankResourcesTest, SingleAndTies) {
  const std::vector<Resource> one{make_resource("Z", Rational(3))};
  EXPECT_EQ(rank_resources(one, 0).front().resource->id, "Z");
  const std::vector<Resource> tied{make_resource("B", Rational(10)), make_resource("A", Rational(10))};
  const auto ranked = rank_resources(tied, 0);
  EXPECT_EQ(ranked[0].resource->id, "A");
  EXPECT_EQ(ranked[1].resource->id, "B");
}

TEST(RankResourcesTest, UnavailableResourcesAreKeptButFlagged) {
  std::vector<Resource> rs{make_resource("A", Rational(19)), make_resource("B", Rational(10))};
  rs[0].busy = {{jan2009(2, 8), jan2009(2, 12)}};
  const auto ranked = rank_resources(rs, 0, Interval{jan2009(2, 9), jan2009(2, 10)});
  ASSERT_EQ(ranked.size(), 2u);
  EXPECT_EQ(ranked[0].resource->id, "A");
  EXPECT_FALSE(ranked[0].available);
  EXPECT_TRUE(ranked[1].available);
}

TEST(RankResourcesTest, PerTypeCompetenceRow) {
  std::vector<Resource> rs{make_resource("A", Rational(10)), make_resource("B", Rational(12))};
  rs[0].competence = {Rational(10), Rational(18)};
  rs[1].competence = {Rational(12), Rational(5)};
  EXPECT_EQ(rank_resources(rs, 0).front().resource->id, "B");
  EXPECT_EQ(rank_resources(rs, 1).front().resource->id, "A");
  EXPECT_THROW(rank_resources(rs, 2), Error);
}

// ---------------------------------------------------------------------------
// assign_resources

TEST(AssignResourcesTest, LongestEarliestTaskGetsTheTopResource) {
  const Schedule s = tableau1_plan();
  EXPECT_EQ(s.find("T3")->resource_id, std::optional<std::string>("R2"));
}

TEST(AssignResourcesTest, OneTaskOneResource) {
  const std::vector<Resource> rs{make_resource("only", Rational(5))};
  Placement p;
  p.task = make_task("T", TaskKind::Preventive, jan2009(2, 8), Duration::hours(2));
  p.start = p.task.release;
  p.end = p.task.due;
  const Placement ps[] = {p};
  const auto a = assign_resources(ps, rs);
  EXPECT_EQ(a.task_to_resource.at("T"), "only");
  EXPECT_TRUE(a.unassigned.empty());
}

TEST(AssignResourcesTest, FullTableau1PairingIsOverlapFreeAndRankMonotone) {
  const auto scenario = testing::tableau1();
  const Schedule s = plan(scenario);
  std::map<std::string, Rational> note;
  for (const auto& r : scenario.resources) note[r.id] = r.note;
  // brute force over every pair of placements
  for (const auto& a : s.placements) {
    ASSERT_TRUE(a.resource_id.has_value()) << a.task.id;
    for (const auto& b : s.placements) {
      if (&a == &b) continue;
      if (a.resource_id == b.resource_id) { EXPECT_FALSE(a.interval().overlaps(b.interval())); }
      if (a.duration() > b.duration()) { EXPECT_GE(note[*a.resource_id], note[*b.resource_id]) << a.task.id << b.task.id; }
    }
  }
  const std::map<std::string, std::string> expected{{"T3", "R2"}, {"T5", "R9"}, {"T9", "R5"}, {"T6", "R6"},
                                                    {"T2", "R8"}, {"T4", "R3"}, {"T7", "R4"}, {"T10", "R1"},
                                                    {"T1", "R7"}, {"T8", "R10"}};
  EXPECT_EQ(assignment_of(s).task_to_resource, expected);
}

TEST(AssignResourcesTest, BusyCalendarLeavesTaskUnassigned) {
  std::vector<Resource> rs{make_resource("R", Rational(10))};
  rs[0].busy = {{jan2009(2, 0), jan2009(3, 0)}};
  const auto s = plan_preventive({make_task("A", TaskKind::Preventive, jan2009(2, 8), Duration::hours(2)),
                                  make_task("B", TaskKind::Preventive, jan2009(4, 8), Duration::hours(2))},
                                 rs, jan2009(2, 0));
  EXPECT_EQ(assignment_of(s).unassigned, std::vector<std::string>{"A"});
  EXPECT_EQ(s.find("B")->resource_id, std::optional<std::string>("R"));
}

TEST(AssignResourcesTest, ResourceIsReusedOnlyWhenNoFreshOneIsFree) {
  const std::vector<Resource> rs{make_resource("hi", Rational(19)), make_resource("lo", Rational(2))};
  const auto s = plan_preventive({make_task("A", TaskKind::Preventive, jan2009(2, 8), Duration::hours(5)),
                                  make_task("B", TaskKind::Preventive, jan2009(3, 8), Duration::hours(3)),
                                  make_task("C", TaskKind::Preventive, jan2009(4, 8), Duration::hours(1))},
                                 rs, jan2009(2, 0));
  EXPECT_EQ(*s.find("A")->resource_id, "hi");
  EXPECT_EQ(*s.find("B")->resource_id, "lo");
  EXPECT_EQ(*s.find("C")->resource_id, "hi");  // everyone used once; best free one again
}

TEST(AssignResourcesTest, PinnedTaskKeepsItsResource) {
  const std::vector<Resource> rs{make_resource("hi", Rational(19)), make_resource("lo", Rational(2))};
  auto t = make_task("A", TaskKind::Preventive, jan2009(2, 8), Duration::hours(5));
  t.resource = "lo";
  const auto s = plan_preventive({t}, rs, jan2009(2, 0));
  EXPECT_EQ(*s.find("A")->resource_id, "lo");
}

TEST(AssignResourcesTest, InvariantUnderPositiveScalingOfCompetence) {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 200; ++iter) {
    auto inst = testing::random_instance(rng, 12, 4, 6);
    const Schedule base = plan_preventive(inst.preventive, inst.resources, inst.epoch);
    const auto base_rank = rank_resources(inst.resources, 0);
    const Rational factor(std::uniform_int_distribution<int>(1, 1000)(rng),
                          std::uniform_int_distribution<int>(1, 1000)(rng));
    auto scaled = inst.resources;
    for (auto& r : scaled) r.note *= factor;  // notes may leave [0, 20]; ranking does not care
    const Schedule after = plan_preventive(inst.preventive, scaled, inst.epoch);
    EXPECT_EQ(assignment_of(base), assignment_of(after));
    const auto scaled_rank = rank_resources(scaled, 0);
    for (std::size_t i = 0; i < base_rank.size(); ++i) {
      EXPECT_EQ(base_rank[i].resource->id, scaled_rank[i].resource->id);
    }
  }
}

// ---------------------------------------------------------------------------
// compute_windows / find_window

TEST(ComputeWindowsTest, Tableau1NineWindows) {
  const auto windows = compute_windows(tableau1_plan());
  ASSERT_EQ(windows.size(), 9u);
  std::vector<std::int64_t> hours;
  for (const auto& w : windows) hours.push_back(w.length().count() / 60);
  EXPECT_EQ(hours, (std::vector<std::int64_t>{2, 40, 2, 10, 16, 2, 26, 9, 24}));
  EXPECT_EQ(windows[1].start, jan2009(2, 16));
  EXPECT_EQ(windows[1].end, jan2009(4, 8));
}

TEST(ComputeWindowsTest, SinglePlacementHasNoWindow) {
  const auto s = plan_preventive({make_task("A", TaskKind::Preventive, jan2009(2, 8), Duration::hours(2))}, {},
                                 jan2009(2, 0));
  EXPECT_TRUE(compute_windows(s).empty());
  EXPECT_TRUE(gap_rows(s).empty());
}

TEST(ComputeWindowsTest, PublishedNineInsertionRunHasEighteenGapRows) {
  const auto s = replay_schedule(load_fixture("run9dyn"));
  EXPECT_EQ(gap_hours(s), (std::vector<std::int64_t>{0, 1, 1, 0, 0, 1, 1, 1, 0, 14, 2, 1, 9, 4, 9, 1, 15, 1}));
  // zero-length gaps are rows but not windows; ordinals are preserved
  const auto windows = compute_windows(s);
  EXPECT_EQ(windows.size(), 14u);  // four of the 18 gaps are zero
  EXPECT_EQ(windows.front().index, 2u);
}

// Brute-force reference: scan every window in order.
std::optional<std::size_t> first_fit_oracle(const std::vector<Window>& ws, Duration d) {
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (ws[i].length() >= d) return ws[i].index;
  }
  return std::nullopt;
}
std::optional<std::size_t> best_fit_oracle(const std::vector<Window>& ws, Duration d) {
  std::optional<std::size_t> best;
  Duration slack;
  for (const auto& w : ws) {
    if (w.length() < d) continue;
    if (!best || w.length() - d < slack) {
      best = w.index;
      slack = w.length() - d;
    }
  }
  return best;
}

TEST(FindWindowTest, ThirtyNineHoursGoesToTheFortyHourWindow) {
  const auto w = find_window(tableau1_plan(), Duration::hours(39), InsertionPolicy::FirstFit);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->start, jan2009(2, 16));
  EXPECT_EQ(w->end, jan2009(4, 8));
}

TEST(FindWindowTest, NothingFitsReturnsEmpty) {
  EXPECT_FALSE(find_window(tableau1_plan(), Duration::hours(41), InsertionPolicy::FirstFit));
  EXPECT_FALSE(find_window(tableau1_plan(), Duration::hours(41), InsertionPolicy::BestFit));
  EXPECT_FALSE(find_window(tableau1_plan(), Duration::hours(1), InsertionPolicy::Append));
  EXPECT_THROW(find_window(tableau1_plan(), Duration(0), InsertionPolicy::FirstFit), Error);
}

TEST(FindWindowTest, EightHoursFirstFitVersusBestFit) {
  const Schedule s = tableau1_plan();
  const auto ws = compute_windows(s);
  // on the bare plan: best fit is the 9 h window (#8), first fit the 40 h one (#2)
  EXPECT_EQ(best_fit_oracle(ws, Duration::hours(8)), 8u);
  EXPECT_EQ(find_window(s, Duration::hours(8), InsertionPolicy::BestFit)->index, 8u);
  EXPECT_EQ(first_fit_oracle(ws, Duration::hours(8)), 2u);
  EXPECT_EQ(find_window(s, Duration::hours(8), InsertionPolicy::FirstFit)->index, 2u);

  // once TD1 and TD2 are in, first fit picks the 10 h window T4 -> T5
  const auto dyn = testing::dynamics("dyn3.json");
  const auto after = insert_batch(s, std::span(dyn).first(2), InsertionPolicy::FirstFit, testing::tableau1().resources);
  const auto w = find_window(after.schedule, Duration::hours(8), InsertionPolicy::FirstFit);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->start, jan2009(4, 22));
  EXPECT_EQ(w->length(), Duration::hours(10));
  EXPECT_EQ(find_window(after.schedule, Duration::hours(8), InsertionPolicy::BestFit)->length(), Duration::hours(9));
}

TEST(FindWindowTest, AgreesWithOraclesOnRandomSchedules) {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 500; ++iter) {
    const auto inst = testing::random_instance(rng);
    const Schedule s = plan_preventive(inst.preventive, {}, inst.epoch);
    const auto ws = compute_windows(s);
    const Duration d = Duration::hours(std::uniform_int_distribution<int>(1, 30)(rng));
    const auto ff = find_window(s, d, InsertionPolicy::FirstFit);
    const auto bf = find_window(s, d, InsertionPolicy::BestFit);
    EXPECT_EQ(ff ? std::optional(ff->index) : std::nullopt, first_fit_oracle(ws, d));
    EXPECT_EQ(bf ? std::optional(bf->index) : std::nullopt, best_fit_oracle(ws, d));
  }
}

// ---------------------------------------------------------------------------
// insert_dynamic / insert_batch

TEST(InsertDynamicTest, ThirtyNineHourTaskLeavesNinetyTwoIdleHours) {
  const auto dyn = testing::dynamics("dyn3.json");
  const auto r = insert_dynamic(tableau1_plan(), dyn[1], InsertionPolicy::FirstFit, testing::tableau1().resources);
  EXPECT_EQ(total_idle(r.schedule), Duration::hours(92));
  EXPECT_EQ(r.placement.start, jan2009(2, 16));
  EXPECT_EQ(r.placement.t1, Duration(0));
  EXPECT_EQ(r.placement.t2, Duration::hours(1));
  ASSERT_TRUE(r.host);
  EXPECT_EQ(r.host->index, 2u);
  EXPECT_FALSE(r.appended());
  EXPECT_EQ(r.placement.resource_id, std::optional<std::string>("R2"));
}

TEST(InsertDynamicTest, ExactFitLeavesNoSlack) {
  const auto d = make_task("D", TaskKind::Dynamic, jan2009(2, 8), Duration::hours(2));
  const auto r = insert_dynamic(tableau1_plan(), d, InsertionPolicy::FirstFit, {});
  EXPECT_EQ(r.placement.t1, Duration(0));
  EXPECT_EQ(r.placement.t2, Duration(0));
  EXPECT_EQ(r.placement.start, jan2009(2, 10));
  EXPECT_FALSE(r.placement.resource_id);
}

TEST(InsertDynamicTest, ThreeFixtureTasksGiveLostCost8300) {
  const auto scenario = testing::tableau1();
  Schedule s = plan(scenario);
  for (const auto& t : testing::dynamics("dyn3.json")) {
    s = insert_dynamic(s, t, InsertionPolicy::FirstFit, scenario.resources).schedule;
  }
  EXPECT_EQ(lost_cost(s, scenario.cost_params), 8300);
}

TEST(InsertDynamicTest, RejectsBadInput) {
  const Schedule s = tableau1_plan();
  auto prev = make_task("P", TaskKind::Preventive, jan2009(2, 8), Duration::hours(1));
  EXPECT_THROW(insert_dynamic(s, prev, InsertionPolicy::FirstFit, {}), Error);
  auto zero = make_task("Z", TaskKind::Dynamic, jan2009(2, 8), Duration::hours(1));
  zero.duration = Duration(0);
  EXPECT_THROW(insert_dynamic(s, zero, InsertionPolicy::FirstFit, {}), Error);
  auto dup = make_task("T1", TaskKind::Dynamic, jan2009(2, 8), Duration::hours(1));
  EXPECT_THROW(insert_dynamic(s, dup, InsertionPolicy::FirstFit, {}), Error);
}

TEST(InsertDynamicTest, AppendsAfterLastPlacementWhenNothingFits) {
  const Schedule s = tableau1_plan();
  const auto big = make_task("BIG", TaskKind::Dynamic, jan2009(2, 8), Duration::hours(50));
  const auto r = insert_dynamic(s, big, InsertionPolicy::FirstFit, {});
  EXPECT_TRUE(r.appended());
  EXPECT_EQ(r.placement.start, jan2009(9, 17));
  EXPECT_EQ(r.schedule.placements.back().task.id, "BIG");
  EXPECT_TRUE(r.schedule.horizon_extended);
  EXPECT_EQ(r.schedule.horizon.end, jan2009(9, 17) + Duration::hours(50));
  EXPECT_EQ(total_idle(r.schedule), total_idle(s));

  const auto small = make_task("S", TaskKind::Dynamic, jan2009(2, 8), Duration::hours(1));
  EXPECT_TRUE(insert_dynamic(s, small, InsertionPolicy::Append, {}).appended());
}

TEST(InsertDynamicTest, IntoEmptySchedulePlacesAtRelease) {
  Schedule empty;
  const auto t = make_task("D", TaskKind::Dynamic, jan2009(5, 9), Duration::hours(3));
  const auto r = insert_dynamic(empty, t, InsertionPolicy::FirstFit, {});
  EXPECT_EQ(r.placement.start, jan2009(5, 9));
  EXPECT_EQ(r.schedule.placements.size(), 1u);
}

TEST(InsertBatchTest, ThreeTaskBatch) {
  const auto scenario = testing::tableau1();
  const auto dyn = testing::dynamics("dyn3.json");
  const auto r = insert_batch(plan(scenario), dyn, InsertionPolicy::FirstFit, scenario.resources);
  EXPECT_EQ(lost_cost(r.schedule, scenario.cost_params), 8300);
  EXPECT_TRUE(r.appended.empty());
  EXPECT_EQ(r.schedule.find("TD3")->start, jan2009(4, 22));
}

TEST(InsertBatchTest, EmptyBatchIsIdentity) {
  const Schedule s = tableau1_plan();
  EXPECT_EQ(insert_batch(s, {}, InsertionPolicy::FirstFit, {}).schedule, s);
}

TEST(InsertBatchTest, NineTaskBatchBeatsThePublishedRun) {
  const auto scenario = testing::tableau1();
  const auto dyn = testing::dynamics("dyn9.json");
  Duration sum;
  for (const auto& t : dyn) sum += t.duration;
  EXPECT_EQ(sum, Duration::hours(73));
  const auto r = insert_batch(plan(scenario), dyn, InsertionPolicy::FirstFit, scenario.resources);
  const Money lost = lost_cost(r.schedule, scenario.cost_params);
  EXPECT_LE(lost, 6100);
  if (r.appended.empty()) { EXPECT_EQ(lost, 13100 - 7300); }
  EXPECT_TRUE(testing::overlap_free(r.schedule));
}

TEST(InsertBatchTest, ResidualSubWindowsAreReused) {
  // 10 h window; 4 h then 5 h both land in it
  const auto s = plan_preventive({make_task("A", TaskKind::Preventive, jan2009(2, 0), Duration::hours(1)),
                                  make_task("B", TaskKind::Preventive, jan2009(2, 11), Duration::hours(1))},
                                 {}, jan2009(2, 0));
  const std::vector<Task> dyn{make_task("X", TaskKind::Dynamic, jan2009(2, 0), Duration::hours(4)),
                              make_task("Y", TaskKind::Dynamic, jan2009(2, 0), Duration::hours(5))};
  const auto r = insert_batch(s, dyn, InsertionPolicy::FirstFit, {});
  EXPECT_TRUE(r.appended.empty());
  EXPECT_EQ(r.schedule.find("Y")->start, jan2009(2, 5));
  EXPECT_EQ(total_idle(r.schedule), Duration::hours(1));
}

// Builds idle time directly from a set of intervals, independent of Schedule.
Duration idle_of(std::vector<Interval> ivs) {
  std::sort(ivs.begin(), ivs.end());
  Duration idle;
  for (std::size_t i = 1; i < ivs.size(); ++i) idle += ivs[i].start - ivs[i - 1].end;
  return idle;
}

TEST(InsertBatchTest, PolicyDominanceOnTotalsBruteForce) {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (int iter = 0; iter < 150; ++iter) {
    auto inst = testing::random_instance(rng, 10, 4, 3);
    if (inst.preventive.size() > 6) inst.preventive.resize(6);  // at most 5 windows
    if (inst.dynamic.size() > 4) inst.dynamic.resize(4);
    const Schedule base = plan_preventive(inst.preventive, inst.resources, inst.epoch);
    const Duration before = total_idle(base);
    Duration inserted;
    for (const auto& t : inst.dynamic) inserted += t.duration;

    // every capacity-feasible mapping of tasks to windows, tasks packed from
    // each window's start: all such placements yield the same idle total
    const auto ws = compute_windows(base);
    const std::size_t n = inst.dynamic.size();
    std::size_t combos = 1;
    for (std::size_t i = 0; i < n; ++i) combos *= std::max<std::size_t>(ws.size(), 1);
    for (std::size_t code = 0; code < combos && !ws.empty(); ++code) {
      std::vector<Duration> used(ws.size());
      std::vector<Interval> ivs;
      for (const auto& p : base.placements) ivs.push_back(p.interval());
      std::size_t c = code;
      bool fits = true;
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t w = c % ws.size();
        c /= ws.size();
        const TimePoint start = ws[w].start + used[w];
        used[w] += inst.dynamic[i].duration;
        if (used[w] > ws[w].length()) {
          fits = false;
          break;
        }
        ivs.push_back({start, start + inst.dynamic[i].duration});
      }
      if (fits) { EXPECT_EQ(idle_of(ivs), before - inserted); }
    }

    // both policies, every arrival order
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    do {
      std::vector<Task> seq;
      for (auto i : order) seq.push_back(inst.dynamic[i]);
      for (auto policy : {InsertionPolicy::FirstFit, InsertionPolicy::BestFit}) {
        const auto r = insert_batch(base, seq, policy, inst.resources);
        EXPECT_TRUE(testing::overlap_free(r.schedule));
        if (r.appended.empty()) {
          EXPECT_EQ(total_idle(r.schedule), before - inserted);
          ++checked;
        }
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
  EXPECT_GT(checked, 100);
}

TEST(InsertBatchTest, MonotoneLostCostPerFittingInsertion) {
  std::mt19937_64 rng(31337);
  const CostParams params;
  for (int iter = 0; iter < 300; ++iter) {
    const auto inst = testing::random_instance(rng);
    Schedule s = plan_preventive(inst.preventive, inst.resources, inst.epoch);
    for (const auto& t : inst.dynamic) {
      const Money before = lost_cost(s, params);
      const auto r = insert_dynamic(s, t, InsertionPolicy::FirstFit, inst.resources);
      const Money after = lost_cost(r.schedule, params);
      if (!r.appended()) { EXPECT_EQ(before - after, price(t.duration, params.hourly_rate)); }
      s = r.schedule;
    }
    EXPECT_TRUE(testing::overlap_free(s));
  }
}

TEST(InsertBatchTest, ResourcesNeverDoubleBooked) {
  std::mt19937_64 rng(4242);
  for (int iter = 0; iter < 300; ++iter) {
    auto inst = testing::random_instance(rng, 12, 6, 3);
    // give resources random calendars
    for (auto& r : inst.resources) {
      if (rng() % 2) r.busy = {{inst.epoch + Duration::hours(5), inst.epoch + Duration::hours(20)}};
    }
    Schedule s = plan_preventive(inst.preventive, inst.resources, inst.epoch);
    s = insert_batch(s, inst.dynamic, InsertionPolicy::BestFit, inst.resources).schedule;
    std::map<std::string, std::vector<Interval>> by_res;
    for (const auto& p : s.placements) {
      if (!p.resource_id) continue;
      const auto& res = *std::find_if(inst.resources.begin(), inst.resources.end(),
                                      [&](const Resource& r) { return r.id == *p.resource_id; });
      EXPECT_TRUE(res.free_during(p.interval()));
      for (const auto& other : by_res[*p.resource_id]) EXPECT_FALSE(other.overlaps(p.interval()));
      by_res[*p.resource_id].push_back(p.interval());
    }
  }
}

}  // namespace
}  // namespace gapsched
