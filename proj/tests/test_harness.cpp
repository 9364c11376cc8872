#include "catch2/catch_amalgamated.hpp"
#include "misere/harness.hpp"

using namespace misere;

TEST_CASE("run_check basics", "[harness]") {
  GamePool pool;
  SpaceCache spaces;

  Report r = run_check(pool, spaces, "outcomes");
  CHECK(r.status == Report::Status::Pass);
  CHECK(r.instances_checked == 8);
  CHECK(r.counterexamples.empty());

  r = run_check(pool, spaces, "il", {{"x_bound", 2}});
  CHECK(r.status == Report::Status::Pass);
  CHECK(r.instances_checked == 4);

  r = run_check(pool, spaces, "il", {{"x_bound", 3}});
  CHECK(r.instances_checked == 16);

  CHECK_THROWS_AS(run_check(pool, spaces, "no-such-check"), std::invalid_argument);
}

TEST_CASE("run_all filters and keeps registry order", "[harness]") {
  GamePool pool;
  SpaceCache spaces;
  auto reports = run_all(pool, spaces, {"ggir", "il"}, {{"x_bound", 2}, {"g_bound", 1}});
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].theorem == "il");
  CHECK(reports[1].theorem == "ggir");
  CHECK_FALSE(any_failed(reports));
}

TEST_CASE("reports serialize deterministically", "[harness]") {
  auto render = [] {
    GamePool pool;
    SpaceCache spaces;
    Report r = run_check(pool, spaces, "z-gt-zero");
    auto j = report_json(r);
    j.erase("elapsed_ms");
    return j.dump();
  };
  std::string a = render(), b = render();
  CHECK(a == b);

  GamePool pool;
  SpaceCache spaces;
  auto j = report_json(run_check(pool, spaces, "outcomes"));
  CHECK(j.contains("theorem"));
  CHECK(j.contains("anchor"));
  CHECK(j.contains("params"));
  CHECK(j.contains("status"));
  CHECK(j.contains("instances_checked"));
  CHECK(j.contains("counterexamples"));
  CHECK(j.contains("elapsed_ms"));
  CHECK(j["status"] == "pass");
}

TEST_CASE("registry ids and anchors are unique", "[harness]") {
  std::unordered_set<std::string> ids, anchors;
  for (const TheoremCheck& c : theorem_registry()) {
    CHECK(ids.insert(c.id).second);
    CHECK(anchors.insert(c.anchor).second);
    CHECK_FALSE(c.anchor.empty());
  }
}

TEST_CASE("quick registry sweep at toy bounds", "[harness]") {
  GamePool pool;
  SpaceCache spaces;
  Params small = {{"x_bound", 2},  {"g_bound", 1},       {"bound", 2},
                  {"i_max", 2},    {"samples", 5},       {"extra_samples", 5},
                  {"dist_bound", 2}, {"witness_bound", 3}, {"pairs_bound", 2},
                  {"n_max", 1},    {"max_dist_bound", 1}};
  for (const TheoremCheck& c : theorem_registry()) {
    Report r = run_check(pool, spaces, c.id, small);
    INFO(c.id);
    CHECK(r.status != Report::Status::Fail);
  }
}
