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

#include <cstdlib>
#include <filesystem>
#include <sys/wait.h>

#include <json.hpp>

#include "mqas/circuit_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int run(const std::string &args) {
    const std::string cmd = std::string("cd ") + MQAS_SOURCE_DIR + " && " + MQAS_CLI + " " + args +
                            " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

json without_timestamps(const fs::path &p) {
    auto j = json::parse(mqas::read_text_file(p));
    j.erase("timestamps");
    return j;
}

fs::path tmp(const std::string &name) {
    const auto dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    return dir;
}

} // namespace

TEST_CASE("Cli::usage errors exit with 2", "[Cli]") {
    CHECK(run("") == 2);
    CHECK(run("frobnicate") == 2);
    CHECK(run("search --config configs/smoke.json --bogus") == 2);
    CHECK(run("search --config configs/smoke.json --variant magic") == 2);
    CHECK(run("search --config configs/smoke.json --variant magic-pw --magic-class medium") == 2);
    CHECK(run("--help") == 0);
}

TEST_CASE("Cli::runtime errors exit nonzero", "[Cli]") {
    const auto dir = tmp("mqas_cli_bad");
    fs::create_directories(dir);
    mqas::write_text_file(dir / "bad.json", "{\"problem\": {\"kind\": \"nope\"}}");
    CHECK(run("search --config " + (dir / "bad.json").string()) == 1);
}

TEST_CASE("Cli::search is deterministic", "[Cli]") {
    const auto a = tmp("mqas_cli_search_a");
    const auto b = tmp("mqas_cli_search_b");
    REQUIRE(run("search --config configs/smoke.json --variant baseline --seed 1 --out " + a.string()) == 0);
    REQUIRE(run("search --config configs/smoke.json --variant baseline --seed 1 --out " + b.string()) == 0);
    CHECK(without_timestamps(a / "record.json") == without_timestamps(b / "record.json"));
    CHECK(mqas::read_text_file(a / "record.json").find("\"timestamps\"") != std::string::npos);
}

TEST_CASE("Cli::bench and report", "[Cli]") {
    const auto dir = tmp("mqas_cli_bench");
    REQUIRE(run("bench --config configs/smoke.json --out " + dir.string()) == 0);
    std::size_t files = 0;
    for (const auto &e : fs::directory_iterator(dir / "records")) {
        files += e.path().extension() == ".json" ? 1 : 0;
    }
    CHECK(files == 4);
    CHECK(fs::exists(dir / "summary.csv"));

    const auto out = tmp("mqas_cli_report");
    REQUIRE(run("report --records " + (dir / "records").string() + " --out " + out.string()) == 0);
    const auto summary = mqas::read_text_file(out / "summary.csv");
    CHECK(summary.rfind("problem,cell,metric,median,mean,std,q1,q3,count\n", 0) == 0);
    const auto runs = mqas::read_text_file(out / "runs.csv");
    CHECK(runs.rfind("id,experiment,problem,cell,variant,magic_class,seed,run_index,status,", 0) == 0);
    CHECK(mqas::read_text_file(out / "finetune_traces.csv").rfind("id,cell,step,objective\n", 0) == 0);

    REQUIRE(run("report --records " + (dir / "records").string() + " --group-by variant,magic_class --out " +
                out.string()) == 0);
    CHECK(mqas::read_text_file(out / "summary.csv").rfind("variant,magic_class,metric,", 0) == 0);
}

TEST_CASE("Cli::surrogate and target pipeline", "[Cli]") {
    const auto dir = tmp("mqas_cli_pipeline");
    fs::create_directories(dir);
    mqas::write_text_file(dir / "dataset.json", R"({"size": 300, "max_qubits": 4})");
    REQUIRE(run("gen-dataset --config " + (dir / "dataset.json").string() + " --seed 3 --out " +
                (dir / "ds").string()) == 0);
    REQUIRE(run("train-surrogate --dataset " + (dir / "ds/dataset.jsonl").string() + " --out " +
                (dir / "model").string()) == 0);
    REQUIRE(run("eval-surrogate --model " + (dir / "model/surrogate.json").string() + " --out " +
                (dir / "eval").string()) == 0);
    CHECK(fs::exists(dir / "eval/report.json"));

    mqas::write_text_file(dir / "targets.json",
                          R"({"qubit_counts": [4], "runs": 2, "short_budget": 50, "long_budget": 200})");
    REQUIRE(run("gen-targets --config " + (dir / "targets.json").string() + " --out " +
                (dir / "targets").string()) == 0);
    CHECK(mqas::read_text_file(dir / "targets/manifest.csv").rfind("n,level,m2,cnot_count,t_count\n", 0) == 0);

    mqas::write_text_file(dir / "sa.json",
                          json{{"problem", {{"kind", "state-approx"},
                                            {"target", (dir / "targets/n4_low.json").string()}}},
                               {"search", {{"iterations", 100}}},
                               {"estimator", {{"kind", "none"}}}}
                              .dump());
    REQUIRE(run("search --config " + (dir / "sa.json").string() + " --out " + (dir / "sa").string()) == 0);
    const auto record = json::parse(mqas::read_text_file(dir / "sa/record.json"));
    CHECK(record["status"] == "ok");
    mqas::write_text_file(dir / "best.json", record["best_circuit"].dump());
    REQUIRE(run("finetune --config " + (dir / "sa.json").string() + " --circuit " +
                (dir / "best.json").string() + " --out " + (dir / "ft").string()) == 0);
    CHECK(fs::exists(dir / "ft/trace.csv"));
}
