#include <doctest.h>

#include <stdexcept>

#include "rrmo/harness.hpp"

using namespace rrmo;

namespace {

const char* kGsemoSmoke = R"({
  "algorithm": "gsemo",
  "spec": "rrmo:n=10,m=2",
  "budget": 1000000,
  "seeds": {"master": 1, "count": 30},
  "pc": 0.5,
  "crossover": "one-point",
  "parallelism": 2
})";

}  // namespace

TEST_CASE("config parsing") {
    auto cfg = ExperimentConfig::from_json_text(kGsemoSmoke);
    CHECK(cfg.algo == Algo::Gsemo);
    CHECK(cfg.seeds.size() == 30);
    CHECK(cfg.seeds.front() == 1);
    CHECK(cfg.seeds.back() == 30);
    CHECK(cfg.budget == 1000000);

    // Round trip through the JSON writer.
    auto again = ExperimentConfig::from_json_text(cfg.to_json_text());
    CHECK(again.seeds == cfg.seeds);
    CHECK(again.pc == cfg.pc);

    CHECK_THROWS_AS(ExperimentConfig::from_json_text("{"), std::invalid_argument);
    CHECK_THROWS_AS(ExperimentConfig::from_json_text("{}"), std::invalid_argument);
    CHECK_THROWS_AS(ExperimentConfig::from_json_text(
                        R"({"algorithm":"nsga3","spec":"rrmo:n=10,m=2","budget":1,
                            "seeds":[1],"pc":0.5,"crossover":"one-point"})"),
                    std::invalid_argument);  // nsga3 without mu
    CHECK_THROWS_AS(ExperimentConfig::from_json_text(
                        R"({"algorithm":"gsemo","spec":"rrmo:n=10,m=2","budget":1,
                            "seeds":[],"pc":0.5,"crossover":"one-point"})"),
                    std::invalid_argument);  // empty seed list
}

TEST_CASE("nsga3 defaults fall back to the theorem-compliant values") {
    auto cfg = ExperimentConfig::from_json_text(R"({
      "algorithm": "nsga3", "spec": "rrmo:n=20,m=2", "budget": 100,
      "seeds": [5], "pc": 0.9, "crossover": "one-point", "mu": 16})");
    auto run_cfg = cfg.nsga3_config(5);
    CHECK(run_cfg.p == 159);
    CHECK(run_cfg.eps_nad == 28);
    CHECK(run_cfg.seed == 5);
}

TEST_CASE("budget 0 experiment") {
    auto cfg = ExperimentConfig::from_json_text(kGsemoSmoke);
    cfg.budget = 0;
    cfg.seeds.resize(10);
    auto records = run_experiment(cfg);
    REQUIRE(records.size() == 10);
    for (const auto& r : records) {
        CHECK(!r.covered);
        CHECK(r.evaluations == 0);
    }
    auto stats = summarize(records);
    CHECK(stats.cover_rate == 0.0);
}

TEST_CASE("smoke experiment covers everywhere and is deterministic") {
    auto cfg = ExperimentConfig::from_json_text(kGsemoSmoke);
    auto records = run_experiment(cfg);
    auto stats = summarize(records);
    CHECK(stats.runs == 30);
    CHECK(stats.cover_rate == 1.0);
    CHECK(stats.first_hit_rate == 1.0);
    CHECK(stats.median_evals > 0);
    CHECK(stats.max_evals >= static_cast<std::uint64_t>(stats.median_evals));

    // Identical config, rerun: byte-identical payload.
    auto records2 = run_experiment(cfg);
    CHECK(to_csv_stable(records) == to_csv_stable(records2));

    // Worker count changes wallclock only.
    auto serial = cfg;
    serial.parallelism = 1;
    auto records3 = run_experiment(serial);
    CHECK(to_csv_stable(records) == to_csv_stable(records3));

    // Records come back in seed order.
    for (std::size_t i = 0; i < records.size(); ++i)
        CHECK(records[i].seed == cfg.seeds[i]);

    // Full CSV shape: header plus one line per record, wallclock last.
    auto csv = to_csv(records);
    CHECK(csv.rfind(RunRecord::csv_header(), 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 31);
}

TEST_CASE("summary medians cover the even and odd cases") {
    RunRecord a, b, c;
    a.covered = true;
    a.full_cover_eval = 10;
    b.covered = true;
    b.full_cover_eval = 20;
    c.covered = false;
    auto s = summarize({a, b, c});
    CHECK(s.cover_rate == doctest::Approx(2.0 / 3.0));
    CHECK(s.median_evals == doctest::Approx(15.0));
    CHECK(s.mean_evals == doctest::Approx(15.0));
    CHECK(s.max_evals == 20);
}
