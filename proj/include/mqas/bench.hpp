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

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "mqas/estimator.hpp"
#include "mqas/finetune.hpp"
#include "mqas/problems.hpp"
#include "mqas/qfi.hpp"
#include "mqas/search.hpp"
#include "mqas/surrogate.hpp"

namespace mqas {

inline constexpr int kRecordSchemaVersion = 1;

/// One column of the variant matrix.
struct Cell {
    SearchVariant variant{SearchVariant::Baseline};
    MagicClass magic_class{MagicClass::High};

    /// "baseline", or "<variant>-<class>" such as "all-in-one-low".
    [[nodiscard]] std::string name() const;
    friend bool operator==(const Cell &, const Cell &) = default;
};

[[nodiscard]] std::optional<Cell> parse_cell(std::string_view name);
/// Baseline followed by the six magic-informed configurations.
[[nodiscard]] std::vector<Cell> full_matrix();

/// Where the search gets its M2 estimates.
struct EstimatorSpec {
    enum class Kind : std::uint8_t { None, Exact, Sampled, Surrogate } kind{Kind::Surrogate};
    /// Surrogate: load from here when set, otherwise train from `dataset`.
    std::optional<std::filesystem::path> model_path;
    DatasetSpec dataset{};
    double lambda{1e-3};
    /// Sampled estimator settings.
    std::size_t samples{1000};
    std::uint64_t sampling_seed{0};
};

[[nodiscard]] DatasetSpec dataset_spec_from_json(const nlohmann::json &j, DatasetSpec base = {});
[[nodiscard]] nlohmann::json to_json(const DatasetSpec &s);
[[nodiscard]] EstimatorSpec estimator_spec_from_json(const nlohmann::json &j,
                                                     const std::filesystem::path &base_dir = {});

/// Builds the estimator; a trained surrogate is also written to save_model
/// when given. Returns null for Kind::None.
[[nodiscard]] std::unique_ptr<MagicEstimator>
make_estimator(const EstimatorSpec &spec, const std::optional<std::filesystem::path> &save_model = {});

struct ExperimentSpec {
    std::string name{"experiment"};
    Problem problem;
    std::vector<Cell> cells{Cell{}};
    std::size_t runs{10};
    SearchConfig search{};
    AdamSettings finetune{};
    EstimatorSpec estimator{};
    std::filesystem::path out{"out"};
    std::uint64_t seed{0};
    std::size_t jobs{1};
};

/**
 * Experiment config file:
 *   {"name": ..., "problem": {...}, "variants": ["baseline", "all-in-one-low"],
 *    "runs": 10, "search": {...}, "finetune": {...}, "estimator": {...},
 *    "seed": 1, "out": "out/h2", "jobs": 1}
 * Relative paths inside resolve against base_dir.
 */
[[nodiscard]] ExperimentSpec experiment_from_json(const nlohmann::json &j,
                                                  const std::filesystem::path &base_dir = {});
[[nodiscard]] ExperimentSpec load_experiment(const std::filesystem::path &path);

/// seed = hash(master, cell, run index).
[[nodiscard]] std::uint64_t run_seed(std::uint64_t master, const Cell &cell, std::size_t run);

struct RunRecord {
    int schema_version{kRecordSchemaVersion};
    std::string id;
    /// Hash of everything that determines the run except the seed.
    std::string config_hash;
    std::uint64_t seed{0};
    std::size_t run_index{0};
    std::string experiment;
    std::string problem_id;
    std::string problem_kind;
    std::string cell;
    std::string variant;
    std::string magic_class;
    /// "ok" or "error".
    std::string status{"ok"};
    std::string error;

    double best_reward{0.0};
    std::size_t best_iteration{0};
    std::size_t evaluations{0};
    double tree_m2_mean{0.0};
    double tree_m2_median{0.0};
    std::size_t tree_m2_count{0};
    /// (cell mean tree M2 - baseline mean) / baseline mean, per record.
    std::optional<double> tree_m2_relative_change;
    double exact_m2{0.0};
    QfiSummary qfi;
    std::size_t total_gates{0};
    std::size_t parameterized_gates{0};
    std::optional<FinetuneReport> finetune;
    /// Objective, reward and physical value after finetuning.
    std::optional<double> finetuned_objective;
    std::optional<double> finetuned_reward;
    std::optional<double> final_energy;
    std::optional<double> final_fidelity;

    nlohmann::json search_summary = nlohmann::json::object();
    nlohmann::json config = nlohmann::json::object();
    Circuit best_circuit;
    Circuit finetuned_circuit;
    /// Wall-clock data; the only part that differs between replays.
    nlohmann::json timestamps = nlohmann::json::object();
};

[[nodiscard]] nlohmann::json to_json(const RunRecord &r);
[[nodiscard]] RunRecord record_from_json(const nlohmann::json &j);
/// Single-line JSON of the record.
[[nodiscard]] std::string record_line(const RunRecord &r);

/// Shared, read-only context for executing runs of one experiment.
struct RunContext {
    const ExperimentSpec *spec{nullptr};
    const MagicEstimator *estimator{nullptr};
    RewardFn reward;
    std::optional<Objective> objective;
    Circuit root;
};

[[nodiscard]] RunContext make_context(const ExperimentSpec &spec, const MagicEstimator *estimator);
[[nodiscard]] std::string config_hash(const ExperimentSpec &spec, const Cell &cell,
                                      const MagicEstimator *estimator);

/// search -> exact M2 + QFI of the best circuit -> Adam finetune -> record.
/// Failures come back as a record with status "error".
[[nodiscard]] RunRecord execute_run(const RunContext &ctx, const Cell &cell, std::size_t run_index,
                                    std::uint64_t seed);

using ProgressFn = std::function<void(const RunRecord &, bool resumed)>;

/**
 * Runs the cell x run matrix, writing one record file per run under
 * <out>/records and summary.csv at the end. Records already present (same
 * config hash and seed) are loaded instead of recomputed. The baseline cell
 * runs first so later records can carry the relative tree-M2 change.
 */
[[nodiscard]] std::vector<RunRecord> run_experiment(const ExperimentSpec &spec,
                                                    const ProgressFn &progress = {});

[[nodiscard]] std::vector<RunRecord> load_records(const std::filesystem::path &dir);

struct SummaryRow {
    std::vector<std::string> keys;
    std::string metric;
    double median{0.0};
    double mean{0.0};
    double std{0.0};
    double q1{0.0};
    double q3{0.0};
    std::size_t count{0};
};

/// Metric names summarize reports, in output order.
[[nodiscard]] const std::vector<std::string> &summary_metrics();
/// Value of a named metric on a record; nullopt when absent.
[[nodiscard]] std::optional<double> metric_value(const RunRecord &r, const std::string &metric);
/// Value of a grouping key ("cell", "variant", "magic_class", "problem",
/// "experiment").
[[nodiscard]] std::string group_value(const RunRecord &r, const std::string &key);

/// Per group and metric: median, mean, sample std, quartiles, count. Error
/// records are skipped; metrics without values in a group are omitted.
[[nodiscard]] std::vector<SummaryRow> summarize(std::span<const RunRecord> records,
                                                const std::vector<std::string> &group_by);

/// CSV with columns <group keys>,metric,median,mean,std,q1,q3,count.
[[nodiscard]] std::string summary_csv(const std::vector<SummaryRow> &rows,
                                      const std::vector<std::string> &group_by);
/// One row per record with the per-run values plots draw from.
[[nodiscard]] std::string runs_csv(std::span<const RunRecord> records);
/// record_id,step,objective for every finetune trace.
[[nodiscard]] std::string finetune_traces_csv(std::span<const RunRecord> records);

/// "16±4": mean and sample std rounded to `decimals` places.
[[nodiscard]] std::string format_mean_std(std::span<const double> xs, int decimals = 0);

} // namespace mqas
