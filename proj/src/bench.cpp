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

#include "mqas/bench.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mqas/circuit_io.hpp"
#include "mqas/hash.hpp"
#include "mqas/magic.hpp"
#include "mqas/parallel.hpp"
#include "mqas/stats.hpp"

namespace mqas {

using nlohmann::json;
namespace fs = std::filesystem;

std::string Cell::name() const {
    if (variant == SearchVariant::Baseline) {
        return "baseline";
    }
    return std::string(variant_name(variant)) + "-" + std::string(magic_class_name(magic_class));
}

std::optional<Cell> parse_cell(std::string_view name) {
    if (name == "baseline") {
        return Cell{};
    }
    for (std::string_view suffix : {"-high", "-low"}) {
        if (name.size() > suffix.size() && name.ends_with(suffix)) {
            const auto v = parse_variant(name.substr(0, name.size() - suffix.size()));
            if (v && *v != SearchVariant::Baseline) {
                return Cell{*v, *parse_magic_class(suffix.substr(1))};
            }
        }
    }
    return std::nullopt;
}

std::vector<Cell> full_matrix() {
    std::vector<Cell> cells{Cell{}};
    for (auto v : {SearchVariant::MagicPW, SearchVariant::MagicUCT, SearchVariant::AllInOne}) {
        for (auto m : {MagicClass::High, MagicClass::Low}) {
            cells.push_back({v, m});
        }
    }
    return cells;
}

namespace {

void check_keys(const json &j, const std::set<std::string> &allowed, const std::string &what) {
    if (!j.is_object()) {
        throw std::invalid_argument(what + " must be a JSON object");
    }
    for (const auto &[key, _] : j.items()) {
        if (!allowed.contains(key)) {
            throw std::invalid_argument("unknown " + what + " key '" + key + "'");
        }
    }
}

fs::path resolve(const fs::path &base, const std::string &p) {
    fs::path path(p);
    if (path.is_relative() && !base.empty()) {
        path = base / path;
    }
    return path;
}

std::string iso_now() {
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json optional_json(const std::optional<double> &v) { return v ? json(*v) : json(nullptr); }

std::optional<double> optional_double(const json &j, const char *key) {
    if (!j.contains(key) || j[key].is_null()) {
        return std::nullopt;
    }
    return j[key].get<double>();
}

} // namespace

DatasetSpec dataset_spec_from_json(const json &j, DatasetSpec base) {
    check_keys(j,
               {"min_qubits", "max_qubits", "min_gates", "max_gates", "gate_set", "size", "seed"},
               "dataset");
    base.min_qubits = j.value("min_qubits", base.min_qubits);
    base.max_qubits = j.value("max_qubits", base.max_qubits);
    base.min_gates = j.value("min_gates", base.min_gates);
    base.max_gates = j.value("max_gates", base.max_gates);
    base.size = j.value("size", base.size);
    base.seed = j.value("seed", base.seed);
    if (j.contains("gate_set")) {
        base.gate_set.clear();
        for (const auto &g : j["gate_set"]) {
            const auto k = parse_gate_kind(g.get<std::string>());
            if (!k) {
                throw std::invalid_argument("unknown gate '" + g.get<std::string>() + "'");
            }
            base.gate_set.push_back(*k);
        }
    }
    return base;
}

json to_json(const DatasetSpec &s) {
    json gates = json::array();
    for (auto k : s.gate_set) {
        gates.push_back(std::string(gate_name(k)));
    }
    return {{"min_qubits", s.min_qubits}, {"max_qubits", s.max_qubits},
            {"min_gates", s.min_gates},   {"max_gates", s.max_gates},
            {"gate_set", gates},          {"size", s.size},
            {"seed", s.seed}};
}

EstimatorSpec estimator_spec_from_json(const json &j, const fs::path &base_dir) {
    check_keys(j, {"kind", "model", "dataset", "lambda", "samples", "seed"}, "estimator");
    EstimatorSpec s;
    const auto kind = j.value("kind", std::string("surrogate"));
    if (kind == "none") {
        s.kind = EstimatorSpec::Kind::None;
    } else if (kind == "exact") {
        s.kind = EstimatorSpec::Kind::Exact;
    } else if (kind == "sampled") {
        s.kind = EstimatorSpec::Kind::Sampled;
    } else if (kind == "surrogate") {
        s.kind = EstimatorSpec::Kind::Surrogate;
    } else {
        throw std::invalid_argument("unknown estimator kind '" + kind + "'");
    }
    if (j.contains("model")) {
        s.model_path = resolve(base_dir, j["model"].get<std::string>());
    }
    if (j.contains("dataset")) {
        s.dataset = dataset_spec_from_json(j["dataset"]);
    }
    s.lambda = j.value("lambda", s.lambda);
    s.samples = j.value("samples", s.samples);
    s.sampling_seed = j.value("seed", s.sampling_seed);
    return s;
}

std::unique_ptr<MagicEstimator> make_estimator(const EstimatorSpec &spec,
                                               const std::optional<fs::path> &save_model) {
    switch (spec.kind) {
    case EstimatorSpec::Kind::None:
        return nullptr;
    case EstimatorSpec::Kind::Exact:
        return std::make_unique<ExactEstimator>();
    case EstimatorSpec::Kind::Sampled:
        return std::make_unique<SampledEstimator>(spec.samples, spec.sampling_seed);
    case EstimatorSpec::Kind::Surrogate: {
        SurrogateModel model = spec.model_path
                                   ? load_surrogate(*spec.model_path)
                                   : train_surrogate(generate_dataset(spec.dataset), spec.lambda);
        if (save_model && !spec.model_path) {
            save_surrogate(model, *save_model);
        }
        return std::make_unique<SurrogateEstimator>(std::move(model));
    }
    }
    return nullptr;
}

ExperimentSpec experiment_from_json(const json &j, const fs::path &base_dir) {
    check_keys(j,
               {"name", "problem", "variants", "runs", "search", "finetune", "estimator", "seed",
                "out", "jobs"},
               "experiment");
    if (!j.contains("problem")) {
        throw std::invalid_argument("experiment config needs a 'problem'");
    }
    ExperimentSpec s;
    try {
        s.name = j.value("name", s.name);
        s.problem = problem_from_json(j["problem"], base_dir);
        if (j.contains("variants")) {
            const auto &v = j["variants"];
            if (v.is_string() && v.get<std::string>() == "all") {
                s.cells = full_matrix();
            } else {
                s.cells.clear();
                for (const auto &name : v) {
                    const auto cell = parse_cell(name.get<std::string>());
                    if (!cell) {
                        throw std::invalid_argument("unknown variant '" + name.get<std::string>() +
                                                    "'");
                    }
                    s.cells.push_back(*cell);
                }
            }
        }
        s.runs = j.value("runs", s.runs);
        if (j.contains("search")) {
            s.search = search_config_from_json(j["search"], s.search);
        }
        if (j.contains("finetune")) {
            s.finetune = adam_settings_from_json(j["finetune"], s.finetune);
        }
        if (j.contains("estimator")) {
            s.estimator = estimator_spec_from_json(j["estimator"], base_dir);
        }
        s.seed = j.value("seed", s.seed);
        if (j.contains("out")) {
            s.out = j["out"].get<std::string>();
        }
        s.jobs = j.value("jobs", s.jobs);
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("bad experiment value: ") + e.what());
    }
    if (s.cells.empty() || s.runs == 0) {
        throw std::invalid_argument("experiment needs at least one variant and one run");
    }
    return s;
}

ExperimentSpec load_experiment(const fs::path &path) {
    const auto text = read_text_file(path);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(path.string() + ": " + e.what(), e.byte,
                         line_column(text, e.byte == 0 ? 0 : e.byte - 1));
    }
    // Data paths in presets are relative to the working directory.
    return experiment_from_json(j);
}

std::uint64_t run_seed(std::uint64_t master, const Cell &cell, std::size_t run) {
    return mix64(mix64(master) ^ fnv1a64(cell.name()) ^ mix64(0x9e37 + run));
}

std::string config_hash(const ExperimentSpec &spec, const Cell &cell,
                        const MagicEstimator *estimator) {
    SearchConfig search = spec.search;
    search.seed = 0;
    search.variant = cell.variant;
    search.magic_class = cell.magic_class;
    json problem = to_json(spec.problem);
    if (spec.problem.hamiltonian) {
        problem["hamiltonian_hash"] = hex64(fnv1a64(to_json(*spec.problem.hamiltonian).dump()));
    }
    json est = nullptr;
    if (estimator != nullptr) {
        est = estimator->describe();
        if (const auto *s = dynamic_cast<const SurrogateEstimator *>(estimator)) {
            est = est.get<std::string>() + "#" + hex64(fnv1a64(to_json(s->model()).dump()));
        }
    }
    const json j{{"schema", kRecordSchemaVersion}, {"experiment", spec.name},
                 {"problem", problem},             {"cell", cell.name()},
                 {"search", to_json(search)},      {"finetune", to_json(spec.finetune)},
                 {"estimator", est}};
    return hex64(fnv1a64(j.dump()));
}

RunContext make_context(const ExperimentSpec &spec, const MagicEstimator *estimator) {
    RunContext ctx;
    ctx.spec = &spec;
    ctx.estimator = estimator;
    ctx.reward = make_reward(spec.problem);
    ctx.objective = problem_objective(spec.problem);
    ctx.root = problem_root(spec.problem);
    return ctx;
}

RunRecord execute_run(const RunContext &ctx, const Cell &cell, std::size_t run_index,
                      std::uint64_t seed) {
    const auto &spec = *ctx.spec;
    RunRecord r;
    r.config_hash = config_hash(spec, cell, ctx.estimator);
    r.seed = seed;
    r.run_index = run_index;
    r.experiment = spec.name;
    r.problem_id = spec.problem.id;
    r.problem_kind = std::string(problem_kind_name(spec.problem.kind));
    r.cell = cell.name();
    r.variant = std::string(variant_name(cell.variant));
    r.magic_class = cell.variant == SearchVariant::Baseline
                        ? std::string()
                        : std::string(magic_class_name(cell.magic_class));
    std::ostringstream id;
    id << r.cell << "-r" << std::setw(3) << std::setfill('0') << run_index << '-'
       << hex64(fnv1a64(r.config_hash + std::to_string(seed))).substr(0, 8);
    r.id = id.str();

    SearchConfig cfg = spec.search;
    cfg.variant = cell.variant;
    cfg.magic_class = cell.magic_class;
    cfg.seed = seed;
    r.config = {{"search", to_json(cfg)},
                {"finetune", to_json(spec.finetune)},
                {"estimator", ctx.estimator ? json(ctx.estimator->describe()) : json(nullptr)},
                {"problem", to_json(spec.problem)}};

    const auto started = std::chrono::steady_clock::now();
    r.timestamps["started"] = iso_now();
    try {
        const auto res = run_search(ctx.reward, cfg, ctx.estimator, ctx.root);
        r.best_reward = res.best_reward;
        r.best_iteration = res.best_iteration;
        r.evaluations = res.evaluations;
        r.tree_m2_mean = res.tree_stats.magic.mean;
        r.tree_m2_median = res.tree_stats.magic.median;
        r.tree_m2_count = res.tree_stats.magic.count;
        r.search_summary = to_json(res, false);
        r.best_circuit = res.best_circuit;
        r.total_gates = res.best_circuit.size();
        r.parameterized_gates = res.best_circuit.parameter_count();
        r.timestamps["search_seconds"] = res.wall_seconds;

        r.exact_m2 = m2_exact(simulate(res.best_circuit)).value;
        r.qfi = qfi_trace(res.best_circuit);

        r.finetuned_circuit = res.best_circuit;
        if (ctx.objective) {
            auto [tuned, report] = adam_finetune(res.best_circuit, *ctx.objective, spec.finetune);
            r.finetuned_objective = report.final_objective;
            r.finetuned_reward = ctx.reward(tuned);
            if (spec.problem.kind == ProblemKind::GroundState) {
                r.final_energy = report.final_objective;
            } else if (spec.problem.kind == ProblemKind::StateApprox) {
                r.final_fidelity = 1.0 - report.final_objective;
            }
            r.finetuned_circuit = std::move(tuned);
            r.finetune = std::move(report);
        }
    } catch (const std::exception &e) {
        r.status = "error";
        r.error = e.what();
    }
    r.timestamps["finished"] = iso_now();
    r.timestamps["wall_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return r;
}

json to_json(const RunRecord &r) {
    json j{{"schema_version", r.schema_version},
           {"id", r.id},
           {"config_hash", r.config_hash},
           {"seed", r.seed},
           {"run_index", r.run_index},
           {"experiment", r.experiment},
           {"problem", r.problem_id},
           {"problem_kind", r.problem_kind},
           {"cell", r.cell},
           {"variant", r.variant},
           {"magic_class", r.magic_class},
           {"status", r.status},
           {"error", r.error},
           {"best_reward", r.best_reward},
           {"best_iteration", r.best_iteration},
           {"evaluations", r.evaluations},
           {"tree_m2_mean", r.tree_m2_mean},
           {"tree_m2_median", r.tree_m2_median},
           {"tree_m2_count", r.tree_m2_count},
           {"tree_m2_relative_change", optional_json(r.tree_m2_relative_change)},
           {"exact_m2", r.exact_m2},
           {"qfi", to_json(r.qfi)},
           {"total_gates", r.total_gates},
           {"parameterized_gates", r.parameterized_gates},
           {"finetune", r.finetune ? to_json(*r.finetune) : json(nullptr)},
           {"finetuned_objective", optional_json(r.finetuned_objective)},
           {"finetuned_reward", optional_json(r.finetuned_reward)},
           {"final_energy", optional_json(r.final_energy)},
           {"final_fidelity", optional_json(r.final_fidelity)},
           {"search", r.search_summary},
           {"config", r.config},
           {"best_circuit", to_json(r.best_circuit)},
           {"finetuned_circuit", to_json(r.finetuned_circuit)},
           {"timestamps", r.timestamps}};
    return j;
}

RunRecord record_from_json(const json &j) {
    RunRecord r;
    try {
        r.schema_version = j.at("schema_version").get<int>();
        if (r.schema_version != kRecordSchemaVersion) {
            throw std::invalid_argument("unsupported record schema version " +
                                        std::to_string(r.schema_version));
        }
        r.id = j.at("id").get<std::string>();
        r.config_hash = j.at("config_hash").get<std::string>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.run_index = j.at("run_index").get<std::size_t>();
        r.experiment = j.value("experiment", std::string());
        r.problem_id = j.at("problem").get<std::string>();
        r.problem_kind = j.value("problem_kind", std::string());
        r.cell = j.at("cell").get<std::string>();
        r.variant = j.value("variant", std::string());
        r.magic_class = j.value("magic_class", std::string());
        r.status = j.at("status").get<std::string>();
        r.error = j.value("error", std::string());
        r.best_reward = j.at("best_reward").get<double>();
        r.best_iteration = j.at("best_iteration").get<std::size_t>();
        r.evaluations = j.value("evaluations", std::size_t{0});
        r.tree_m2_mean = j.at("tree_m2_mean").get<double>();
        r.tree_m2_median = j.value("tree_m2_median", 0.0);
        r.tree_m2_count = j.value("tree_m2_count", std::size_t{0});
        r.tree_m2_relative_change = optional_double(j, "tree_m2_relative_change");
        r.exact_m2 = j.at("exact_m2").get<double>();
        const auto &q = j.at("qfi");
        r.qfi.trace = q.at("trace").get<double>();
        r.qfi.diagonal = q.at("diagonal").get<std::vector<double>>();
        r.qfi.parameter_count = q.at("parameter_count").get<std::size_t>();
        r.total_gates = j.at("total_gates").get<std::size_t>();
        r.parameterized_gates = j.at("parameterized_gates").get<std::size_t>();
        if (j.contains("finetune") && !j["finetune"].is_null()) {
            const auto &f = j["finetune"];
            FinetuneReport rep;
            rep.initial_objective = f.at("initial_objective").get<double>();
            rep.final_objective = f.at("final_objective").get<double>();
            rep.steps = f.at("steps").get<std::size_t>();
            rep.final_angles = f.at("final_angles").get<std::vector<double>>();
            if (f.contains("trace")) {
                rep.trace = f["trace"].get<std::vector<double>>();
            }
            rep.settings = adam_settings_from_json(f.at("settings"));
            r.finetune = std::move(rep);
        }
        r.finetuned_objective = optional_double(j, "finetuned_objective");
        r.finetuned_reward = optional_double(j, "finetuned_reward");
        r.final_energy = optional_double(j, "final_energy");
        r.final_fidelity = optional_double(j, "final_fidelity");
        r.search_summary = j.value("search", json::object());
        r.config = j.value("config", json::object());
        r.best_circuit = circuit_from_json(j.at("best_circuit"));
        r.finetuned_circuit = circuit_from_json(j.at("finetuned_circuit"));
        r.timestamps = j.value("timestamps", json::object());
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("malformed run record: ") + e.what());
    }
    return r;
}

std::string record_line(const RunRecord &r) { return to_json(r).dump(); }

std::vector<RunRecord> load_records(const fs::path &dir) {
    std::vector<RunRecord> out;
    if (!fs::exists(dir)) {
        return out;
    }
    std::vector<fs::path> files;
    for (const auto &entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    for (const auto &f : files) {
        try {
            out.push_back(record_from_json(json::parse(read_text_file(f))));
        } catch (const std::exception &e) {
            throw std::invalid_argument(f.string() + ": " + e.what());
        }
    }
    return out;
}

namespace {

void write_record(const fs::path &dir, const RunRecord &r) {
    const auto path = dir / (r.id + ".json");
    const auto tmp = dir / (r.id + ".json.tmp");
    write_text_file(tmp, record_line(r) + "\n");
    fs::rename(tmp, path);
}

double ok_tree_mean(const std::vector<RunRecord> &records) {
    std::vector<double> xs;
    for (const auto &r : records) {
        if (r.status == "ok" && r.tree_m2_count > 0) {
            xs.push_back(r.tree_m2_mean);
        }
    }
    return xs.empty() ? 0.0 : mean(xs);
}

} // namespace

std::vector<RunRecord> run_experiment(const ExperimentSpec &spec, const ProgressFn &progress) {
    const fs::path records_dir = spec.out / "records";
    fs::create_directories(records_dir);

    const auto estimator = make_estimator(spec.estimator, spec.out / "surrogate.json");
    const auto ctx = make_context(spec, estimator.get());

    std::map<std::pair<std::string, std::uint64_t>, RunRecord> existing;
    for (auto &r : load_records(records_dir)) {
        existing.emplace(std::make_pair(r.config_hash, r.seed), std::move(r));
    }

    std::vector<Cell> order = spec.cells;
    std::stable_partition(order.begin(), order.end(),
                          [](const Cell &c) { return c.variant == SearchVariant::Baseline; });

    std::map<std::string, std::vector<RunRecord>> by_cell;
    std::optional<double> baseline_mean;
    std::mutex writer;
    for (const auto &cell : order) {
        const auto hash = config_hash(spec, cell, estimator.get());
        auto &records = by_cell[cell.name()];
        records.resize(spec.runs);
        std::vector<std::size_t> todo;
        for (std::size_t run = 0; run < spec.runs; ++run) {
            const auto seed = run_seed(spec.seed, cell, run);
            if (auto it = existing.find({hash, seed}); it != existing.end()) {
                records[run] = it->second;
                if (progress) {
                    progress(records[run], true);
                }
            } else {
                todo.push_back(run);
            }
        }
        parallel_for(todo.size(), spec.jobs, [&](std::size_t k) {
            const std::size_t run = todo[k];
            RunRecord r = execute_run(ctx, cell, run, run_seed(spec.seed, cell, run));
            if (r.status == "ok" && r.tree_m2_count > 0) {
                if (cell.variant == SearchVariant::Baseline) {
                    r.tree_m2_relative_change = 0.0;
                } else if (baseline_mean && *baseline_mean != 0.0) {
                    r.tree_m2_relative_change = (r.tree_m2_mean - *baseline_mean) / *baseline_mean;
                }
            }
            std::lock_guard lock(writer);
            write_record(records_dir, r);
            if (progress) {
                progress(r, false);
            }
            records[run] = std::move(r);
        });
        if (cell.variant == SearchVariant::Baseline && !records.empty()) {
            baseline_mean = ok_tree_mean(records);
        }
    }

    std::vector<RunRecord> all;
    for (const auto &cell : spec.cells) {
        auto &records = by_cell[cell.name()];
        std::move(records.begin(), records.end(), std::back_inserter(all));
    }
    const std::vector<std::string> keys{"problem", "cell"};
    write_text_file(spec.out / "summary.csv", summary_csv(summarize(all, keys), keys));
    write_text_file(spec.out / "runs.csv", runs_csv(all));
    return all;
}

const std::vector<std::string> &summary_metrics() {
    static const std::vector<std::string> kMetrics{
        "best_reward",   "finetuned_objective", "finetuned_reward",
        "final_energy",  "final_fidelity",      "exact_m2",
        "qfi_trace",     "tree_m2_mean",        "tree_m2_relative_change",
        "total_gates",   "parameterized_gates", "adam_steps"};
    return kMetrics;
}

std::optional<double> metric_value(const RunRecord &r, const std::string &m) {
    if (m == "best_reward") {
        return r.best_reward;
    }
    if (m == "finetuned_objective") {
        return r.finetuned_objective;
    }
    if (m == "finetuned_reward") {
        return r.finetuned_reward;
    }
    if (m == "final_energy") {
        return r.final_energy;
    }
    if (m == "final_fidelity") {
        return r.final_fidelity;
    }
    if (m == "exact_m2") {
        return r.exact_m2;
    }
    if (m == "qfi_trace") {
        return r.qfi.trace;
    }
    if (m == "tree_m2_mean") {
        return r.tree_m2_count > 0 ? std::optional<double>(r.tree_m2_mean) : std::nullopt;
    }
    if (m == "tree_m2_relative_change") {
        return r.tree_m2_relative_change;
    }
    if (m == "total_gates") {
        return static_cast<double>(r.total_gates);
    }
    if (m == "parameterized_gates") {
        return static_cast<double>(r.parameterized_gates);
    }
    if (m == "adam_steps") {
        return r.finetune ? std::optional<double>(static_cast<double>(r.finetune->steps))
                          : std::nullopt;
    }
    throw std::invalid_argument("unknown metric '" + m + "'");
}

std::string group_value(const RunRecord &r, const std::string &key) {
    if (key == "cell") {
        return r.cell;
    }
    if (key == "variant") {
        return r.variant;
    }
    if (key == "magic_class") {
        return r.magic_class;
    }
    if (key == "problem") {
        return r.problem_id;
    }
    if (key == "experiment") {
        return r.experiment;
    }
    throw std::invalid_argument("unknown group key '" + key + "'");
}

std::vector<SummaryRow> summarize(std::span<const RunRecord> records,
                                  const std::vector<std::string> &group_by) {
    if (records.empty()) {
        throw std::invalid_argument("summarize needs at least one record");
    }
    std::vector<std::vector<std::string>> order;
    std::map<std::vector<std::string>, std::vector<const RunRecord *>> groups;
    for (const auto &r : records) {
        std::vector<std::string> key;
        for (const auto &k : group_by) {
            key.push_back(group_value(r, k));
        }
        auto [it, inserted] = groups.try_emplace(key);
        if (inserted) {
            order.push_back(key);
        }
        if (r.status == "ok") {
            it->second.push_back(&r);
        }
    }
    std::vector<SummaryRow> rows;
    for (const auto &key : order) {
        const auto &members = groups[key];
        if (members.empty()) {
            std::ostringstream msg;
            for (const auto &k : key) {
                msg << (msg.tellp() > 0 ? "/" : "") << k;
            }
            std::cerr << "warning: group " << msg.str() << " has no successful runs; omitted\n";
            continue;
        }
        for (const auto &metric : summary_metrics()) {
            std::vector<double> xs;
            for (const auto *r : members) {
                if (auto v = metric_value(*r, metric)) {
                    xs.push_back(*v);
                }
            }
            if (xs.empty()) {
                continue;
            }
            SummaryRow row;
            row.keys = key;
            row.metric = metric;
            row.median = median(xs);
            row.mean = mean(xs);
            row.std = xs.size() > 1 ? sample_std(xs) : 0.0;
            row.q1 = quantile(xs, 0.25);
            row.q3 = quantile(xs, 0.75);
            row.count = xs.size();
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string summary_csv(const std::vector<SummaryRow> &rows,
                        const std::vector<std::string> &group_by) {
    std::ostringstream out;
    out.precision(17);
    for (const auto &k : group_by) {
        out << k << ',';
    }
    out << "metric,median,mean,std,q1,q3,count\n";
    for (const auto &r : rows) {
        for (const auto &k : r.keys) {
            out << k << ',';
        }
        out << r.metric << ',' << r.median << ',' << r.mean << ',' << r.std << ',' << r.q1 << ','
            << r.q3 << ',' << r.count << '\n';
    }
    return out.str();
}

std::string runs_csv(std::span<const RunRecord> records) {
    std::ostringstream out;
    out.precision(17);
    out << "id,experiment,problem,cell,variant,magic_class,seed,run_index,status";
    for (const auto &m : summary_metrics()) {
        out << ',' << m;
    }
    out << '\n';
    for (const auto &r : records) {
        out << r.id << ',' << r.experiment << ',' << r.problem_id << ',' << r.cell << ','
            << r.variant << ',' << r.magic_class << ',' << r.seed << ',' << r.run_index << ','
            << r.status;
        for (const auto &m : summary_metrics()) {
            out << ',';
            if (r.status == "ok") {
                if (auto v = metric_value(r, m)) {
                    out << *v;
                }
            }
        }
        out << '\n';
    }
    return out.str();
}

std::string finetune_traces_csv(std::span<const RunRecord> records) {
    std::ostringstream out;
    out.precision(17);
    out << "id,cell,step,objective\n";
    for (const auto &r : records) {
        if (!r.finetune) {
            continue;
        }
        for (std::size_t i = 0; i < r.finetune->trace.size(); ++i) {
            out << r.id << ',' << r.cell << ',' << i << ',' << r.finetune->trace[i] << '\n';
        }
    }
    return out.str();
}

std::string format_mean_std(std::span<const double> xs, int decimals) {
    if (xs.empty()) {
        throw std::invalid_argument("format_mean_std of an empty sample");
    }
    const double sd = xs.size() > 1 ? sample_std(xs) : 0.0;
    std::ostringstream out;
    out << std::fixed << std::setprecision(decimals) << mean(xs) << "±" << sd;
    return out.str();
}

} // namespace mqas
