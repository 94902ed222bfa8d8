// Copyright 2026 The mqas Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch_amalgamated.hpp>

#include <filesystem>
#include <set>

#include "mqas/bench.hpp"
#include "mqas/circuit_io.hpp"
#include "mqas/stats.hpp"

using namespace mqas;
namespace fs = std::filesystem;

namespace {

ExperimentSpec small_spec(const fs::path &out) {
    ExperimentSpec spec;
    spec.name = "unit";
    spec.problem = ground_state_problem(
        "h2", load_hamiltonian(std::string(MQAS_SOURCE_DIR) + "/data/hamiltonians/H2_sto3g.json"));
    spec.runs = 2;
    spec.search.iterations = 60;
    spec.finetune.max_steps = 20;
    spec.estimator.dataset.size = 300;
    spec.out = out;
    spec.seed = 5;
    return spec;
}

fs::path fresh_dir(const std::string &name) {
    const auto dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    return dir;
}

std::size_t record_files(const fs::path &dir) {
    std::size_t n = 0;
    for (const auto &e : fs::directory_iterator(dir / "records")) {
        n += e.path().extension() == ".json" ? 1 : 0;
    }
    return n;
}

RunRecord fake(const std::string &cell, double reward, double gates) {
    RunRecord r;
    r.id = cell + std::to_string(reward);
    r.problem_id = "p";
    r.cell = cell;
    r.best_reward = reward;
    r.total_gates = static_cast<std::size_t>(gates);
    return r;
}

} // namespace

TEST_CASE("Bench::cells", "[Bench]") {
    CHECK(parse_cell("baseline")->variant == SearchVariant::Baseline);
    const auto c = parse_cell("all-in-one-low");
    REQUIRE(c.has_value());
    CHECK(c->variant == SearchVariant::AllInOne);
    CHECK(c->magic_class == MagicClass::Low);
    CHECK(c->name() == "all-in-one-low");
    CHECK_FALSE(parse_cell("baseline-low").has_value());
    CHECK_FALSE(parse_cell("magic-pw").has_value());
    const auto all = full_matrix();
    CHECK(all.size() == 7);
    std::set<std::string> names;
    for (const auto &cell : all) {
        names.insert(cell.name());
    }
    CHECK(names.size() == 7);
}

TEST_CASE("Bench::run seeds", "[Bench]") {
    const Cell base{};
    const Cell low{SearchVariant::AllInOne, MagicClass::Low};
    CHECK(run_seed(1, base, 0) == run_seed(1, base, 0));
    CHECK(run_seed(1, base, 0) != run_seed(1, base, 1));
    CHECK(run_seed(1, base, 0) != run_seed(1, low, 0));
    CHECK(run_seed(1, base, 0) != run_seed(2, base, 0));
}

TEST_CASE("Bench::summarize against a direct recomputation", "[Bench]") {
    std::vector<RunRecord> records{fake("a", 0.1, 10), fake("a", 0.5, 20), fake("a", 0.9, 18),
                                   fake("b", 0.3, 12), fake("b", 0.4, 14)};
    records.push_back(fake("b", 99.0, 0));
    records.back().status = "error";
    const auto rows = summarize(records, {"cell"});
    bool seen = false;
    for (const auto &row : rows) {
        if (row.keys == std::vector<std::string>{"a"} && row.metric == "best_reward") {
            seen = true;
            CHECK(row.median == Catch::Approx(0.5));
            CHECK(row.mean == Catch::Approx(0.5));
            CHECK(row.std == Catch::Approx(0.4));
            CHECK(row.q1 == Catch::Approx(0.3));
            CHECK(row.q3 == Catch::Approx(0.7));
            CHECK(row.count == 3);
        }
        if (row.keys == std::vector<std::string>{"b"}) {
            // The failed run is excluded.
            CHECK(row.count == 2);
        }
    }
    CHECK(seen);
    const auto csv = summary_csv(rows, {"cell"});
    CHECK(csv.rfind("cell,metric,median,mean,std,q1,q3,count\n", 0) == 0);
    CHECK_THROWS_AS(summarize(std::vector<RunRecord>{}, {"cell"}), std::invalid_argument);
}

TEST_CASE("Bench::mean and std formatting", "[Bench]") {
    const std::vector<double> gates{12, 16, 20, 16};
    CHECK(format_mean_std(gates) == "16±3");
    const std::vector<double> steps{100, 122, 144};
    CHECK(format_mean_std(steps) == "122±22");
    CHECK(format_mean_std(std::vector<double>{1.25, 1.75}, 2) == "1.50±0.35");
}

TEST_CASE("Bench::one variant, one run", "[Bench]") {
    const auto dir = fresh_dir("mqas_test_bench_unit");
    auto spec = small_spec(dir);
    spec.runs = 1;
    const auto records = run_experiment(spec);
    REQUIRE(records.size() == 1);
    const auto &r = records[0];
    CHECK(r.status == "ok");
    CHECK(r.cell == "baseline");
    CHECK(r.finetune.has_value());
    CHECK(r.final_energy.has_value());
    CHECK(*r.final_energy <= r.finetune->initial_objective);
    CHECK(r.tree_m2_count > 0);
    CHECK(r.tree_m2_relative_change == 0.0);
    CHECK(r.total_gates == r.best_circuit.size());
    CHECK(record_files(dir) == 1);
    CHECK(fs::exists(dir / "summary.csv"));
    CHECK(fs::exists(dir / "surrogate.json"));

    const auto loaded = load_records(dir / "records");
    REQUIRE(loaded.size() == 1);
    CHECK(record_line(loaded[0]) == record_line(r));
}

TEST_CASE("Bench::resume and matrix size", "[Bench]") {
    const auto dir = fresh_dir("mqas_test_bench_matrix");
    auto spec = small_spec(dir);
    spec.cells = {Cell{}, Cell{SearchVariant::AllInOne, MagicClass::Low}};
    spec.jobs = 2;
    std::size_t computed = 0;
    const auto first = run_experiment(spec, [&](const RunRecord &, bool resumed) {
        computed += resumed ? 0 : 1;
    });
    CHECK(first.size() == 4);
    CHECK(computed == 4);
    CHECK(record_files(dir) == 4);
    for (const auto &r : first) {
        CHECK(r.status == "ok");
        REQUIRE(r.tree_m2_relative_change.has_value());
    }

    std::size_t recomputed = 0;
    const auto second = run_experiment(spec, [&](const RunRecord &, bool resumed) {
        recomputed += resumed ? 0 : 1;
    });
    CHECK(recomputed == 0);
    REQUIRE(second.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(record_line(second[i]) == record_line(first[i]));
    }

    // Relative change uses the baseline cell's mean tree M2.
    std::vector<double> base;
    for (const auto &r : first) {
        if (r.cell == "baseline") {
            base.push_back(r.tree_m2_mean);
        }
    }
    const double m = mean(base);
    for (const auto &r : first) {
        if (r.cell != "baseline") {
            CHECK(*r.tree_m2_relative_change == Catch::Approx((r.tree_m2_mean - m) / m));
        }
    }
}

TEST_CASE("Bench::records replay exactly", "[Bench]") {
    auto spec = small_spec(fresh_dir("mqas_test_bench_replay"));
    const auto estimator = make_estimator(spec.estimator);
    const auto ctx = make_context(spec, estimator.get());
    const Cell cell{SearchVariant::MagicPW, MagicClass::High};
    auto a = execute_run(ctx, cell, 0, 123);
    auto b = execute_run(ctx, cell, 0, 123);
    a.timestamps = b.timestamps = nlohmann::json::object();
    CHECK(record_line(a) == record_line(b));
    CHECK(record_line(record_from_json(to_json(a))) == record_line(a));
}

TEST_CASE("Bench::failures become error records", "[Bench]") {
    auto spec = small_spec(fresh_dir("mqas_test_bench_error"));
    spec.search.gamma = 0;
    const auto ctx = make_context(spec, nullptr);
    const auto r = execute_run(ctx, Cell{}, 0, 1);
    CHECK(r.status == "error");
    CHECK_FALSE(r.error.empty());
    const auto line = record_line(r);
    CHECK(record_from_json(nlohmann::json::parse(line)).status == "error");
}

TEST_CASE("Bench::experiment config", "[Bench]") {
    const auto spec = load_experiment(std::string(MQAS_SOURCE_DIR) + "/configs/h2.json");
    CHECK(spec.cells.size() == 7);
    CHECK(spec.runs == 10);
    CHECK(spec.search.iterations == 1000);
    CHECK_THROWS_AS(experiment_from_json({{"problem", {{"kind", "magic-max"}, {"n", 2}}},
                                          {"variants", {"baseline", "magic-xyz"}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(experiment_from_json({{"problem", {{"kind", "magic-max"}, {"n", 2}}},
                                          {"iterations", 5}}),
                    std::invalid_argument);
}
