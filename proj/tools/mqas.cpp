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

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mqas/bench.hpp"
#include "mqas/circuit_io.hpp"
#include "mqas/evaluation.hpp"
#include "mqas/finetune.hpp"
#include "mqas/targets.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace mqas;

namespace {

struct Common {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::string out;
    std::optional<std::string> variant;
    std::optional<std::string> magic_class;
    std::size_t jobs{1};
};

void add_common(CLI::App *cmd, Common &o, bool variant_flags) {
    cmd->add_option("--config", o.config, "JSON config file")->check(CLI::ExistingFile);
    cmd->add_option("--seed", o.seed, "Seed (master seed for bench)");
    cmd->add_option("--out", o.out, "Output directory");
    cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    if (variant_flags) {
        cmd->add_option("--variant", o.variant, "Search variant")
            ->check(CLI::IsMember({"baseline", "magic-pw", "magic-uct", "all-in-one"}));
        cmd->add_option("--magic-class", o.magic_class, "Magic class")
            ->check(CLI::IsMember({"high", "low"}));
    }
}

json read_json(const std::string &path) {
    if (path.empty()) {
        return json::object();
    }
    const auto text = read_text_file(path);
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(path + ": " + e.what(), e.byte,
                         line_column(text, e.byte == 0 ? 0 : e.byte - 1));
    }
}

std::optional<Cell> cell_from_flags(const Common &o) {
    if (!o.variant) {
        if (o.magic_class) {
            throw CLI::ValidationError("--magic-class", "needs --variant");
        }
        return std::nullopt;
    }
    Cell cell;
    cell.variant = *parse_variant(*o.variant);
    if (o.magic_class) {
        cell.magic_class = *parse_magic_class(*o.magic_class);
    }
    return cell;
}

ExperimentSpec experiment(const Common &o) {
    if (o.config.empty()) {
        throw CLI::RequiredError("--config");
    }
    auto spec = load_experiment(o.config);
    if (o.seed) {
        spec.seed = *o.seed;
    }
    if (!o.out.empty()) {
        spec.out = o.out;
    }
    spec.jobs = o.jobs;
    return spec;
}

void print_record(const RunRecord &r, bool resumed) {
    std::cerr << (resumed ? "[resume] " : "[run]    ") << r.id << "  " << r.status;
    if (r.status == "ok") {
        std::cerr << "  reward " << r.best_reward << "  tree M2 " << r.tree_m2_mean << "  exact M2 "
                  << r.exact_m2;
        if (r.final_energy) {
            std::cerr << "  E " << *r.final_energy;
        }
        if (r.final_fidelity) {
            std::cerr << "  F " << *r.final_fidelity;
        }
    } else {
        std::cerr << "  " << r.error;
    }
    std::cerr << '\n';
}

int gen_dataset(const Common &o) {
    auto spec = dataset_spec_from_json(read_json(o.config));
    if (o.seed) {
        spec.seed = *o.seed;
    }
    const fs::path out = o.out.empty() ? fs::path("out/dataset") : fs::path(o.out);
    const auto ds = generate_dataset(spec);
    save_dataset(ds, out / "dataset.jsonl");
    write_text_file(out / "dataset_spec.json", to_json(spec).dump(2) + "\n");
    std::cout << "wrote " << ds.items.size() << " circuits to " << (out / "dataset.jsonl") << '\n';
    return 0;
}

int train(const Common &o, const std::string &dataset, double lambda) {
    const fs::path out = o.out.empty() ? fs::path("out/surrogate") : fs::path(o.out);
    LabeledDataset ds;
    if (!dataset.empty()) {
        ds = load_dataset(dataset);
    } else {
        auto spec = dataset_spec_from_json(read_json(o.config));
        if (o.seed) {
            spec.seed = *o.seed;
        }
        ds = generate_dataset(spec);
    }
    const auto model = train_surrogate(ds, lambda);
    save_surrogate(model, out / "surrogate.json");
    std::cout << "trained on " << ds.items.size() << " circuits; model at "
              << (out / "surrogate.json") << '\n';
    return 0;
}

int eval_surrogate(const Common &o, const std::string &model_path) {
    EvaluationProtocol protocol;
    if (o.seed) {
        protocol.seed = *o.seed;
    }
    const auto est = SurrogateEstimator(load_surrogate(model_path));
    const auto report = evaluate_estimator(est, protocol);
    const fs::path out = o.out.empty() ? fs::path("out/eval") : fs::path(o.out);
    save_report(report, out);
    std::cout << "rmse " << report.rmse << "  spearman " << report.spearman << "  ("
              << report.count << " circuits)\n";
    for (const auto &row : report.per_n) {
        std::cout << "  n=" << row.n << "  rmse " << row.rmse << "  spearman " << row.spearman
                  << '\n';
    }
    return 0;
}

int gen_targets(const Common &o) {
    auto spec = target_spec_from_json(read_json(o.config));
    if (o.seed) {
        spec.seed = *o.seed;
    }
    spec.jobs = o.jobs;
    const auto set = generate_targets(spec, [](const std::string &m) { std::cerr << m << '\n'; });
    const fs::path out = o.out.empty() ? fs::path("out/targets") : fs::path(o.out);
    save_targets(set, out);
    for (const auto &t : set.triples) {
        std::cout << "n=" << t.n << "  M2 low/medium/high " << t.levels[0].m2 << " / "
                  << t.levels[1].m2 << " / " << t.levels[2].m2 << "  working " << t.working_m2
                  << '\n';
        if (t.working_m2 >= 1e-9) {
            std::cerr << "warning: n=" << t.n << " working circuit is not a stabilizer state\n";
        }
    }
    std::cout << "manifest at " << (out / "manifest.csv") << '\n';
    return 0;
}

int search(const Common &o) {
    auto spec = experiment(o);
    const Cell cell = cell_from_flags(o).value_or(spec.cells.front());
    spec.cells = {cell};
    const auto estimator = make_estimator(spec.estimator);
    const auto ctx = make_context(spec, estimator.get());
    const std::uint64_t seed = o.seed ? *o.seed : run_seed(spec.seed, cell, 0);
    const auto record = execute_run(ctx, cell, 0, seed);
    const fs::path out = o.out.empty() ? spec.out / "search" : fs::path(o.out);
    write_text_file(out / "record.json", record_line(record) + "\n");
    print_record(record, false);
    return record.status == "ok" ? 0 : 1;
}

int bench(const Common &o) {
    auto spec = experiment(o);
    if (const auto cell = cell_from_flags(o)) {
        spec.cells = {*cell};
    }
    const auto records = run_experiment(spec, print_record);
    std::size_t failed = 0;
    for (const auto &r : records) {
        failed += r.status == "ok" ? 0 : 1;
    }
    std::cout << records.size() << " records (" << failed << " failed); summary at "
              << (spec.out / "summary.csv") << '\n';
    return 0;
}

int finetune(const Common &o, const std::string &circuit_path) {
    auto spec = experiment(o);
    const auto objective = problem_objective(spec.problem);
    if (!objective) {
        throw std::invalid_argument("problem kind has no finetuning objective");
    }
    const auto c = load_circuit(circuit_path);
    const auto [tuned, report] = adam_finetune(c, *objective, spec.finetune);
    const fs::path out = o.out.empty() ? spec.out / "finetune" : fs::path(o.out);
    save_circuit(tuned, out / "circuit.json");
    write_text_file(out / "report.json", to_json(report).dump(2) + "\n");
    std::ostringstream csv;
    csv.precision(17);
    csv << "step,objective\n";
    for (std::size_t i = 0; i < report.trace.size(); ++i) {
        csv << i << ',' << report.trace[i] << '\n';
    }
    write_text_file(out / "trace.csv", csv.str());
    std::cout << "objective " << report.initial_objective << " -> " << report.final_objective
              << " in " << report.steps << " steps\n";
    return 0;
}

int report(const Common &o, const std::string &records_dir, std::vector<std::string> group_by) {
    const auto records = load_records(records_dir);
    if (records.empty()) {
        throw std::invalid_argument("no records in " + records_dir);
    }
    const fs::path out = o.out.empty() ? fs::path(records_dir).parent_path() : fs::path(o.out);
    write_text_file(out / "summary.csv", summary_csv(summarize(records, group_by), group_by));
    write_text_file(out / "runs.csv", runs_csv(records));
    write_text_file(out / "finetune_traces.csv", finetune_traces_csv(records));
    std::cout << records.size() << " records -> " << (out / "summary.csv") << ", "
              << (out / "runs.csv") << ", " << (out / "finetune_traces.csv") << '\n';
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Magic-aware quantum architecture search"};
    app.require_subcommand(1);

    Common o;
    std::string dataset;
    std::string model;
    std::string circuit;
    std::string records;
    std::vector<std::string> group_by{"problem", "cell"};
    double lambda = 1e-3;

    auto *gd = app.add_subcommand("gen-dataset", "Generate a labeled random-circuit dataset");
    add_common(gd, o, false);
    auto *ts = app.add_subcommand("train-surrogate", "Fit the ridge M2 surrogate");
    add_common(ts, o, false);
    ts->add_option("--dataset", dataset, "dataset.jsonl (generated from --config if absent)")
        ->check(CLI::ExistingFile);
    ts->add_option("--lambda", lambda, "Ridge penalty")->check(CLI::PositiveNumber);
    auto *es = app.add_subcommand("eval-surrogate", "Score a surrogate on the held-out protocol");
    add_common(es, o, false);
    es->add_option("--model", model, "surrogate.json")->required()->check(CLI::ExistingFile);
    auto *gt = app.add_subcommand("gen-targets", "Generate low/medium/high magic targets");
    add_common(gt, o, false);
    auto *se = app.add_subcommand("search", "Single search run, written as one record");
    add_common(se, o, true);
    auto *be = app.add_subcommand("bench", "Run the variant x run matrix of an experiment");
    add_common(be, o, true);
    auto *ft = app.add_subcommand("finetune", "Adam-finetune a circuit on an experiment's problem");
    add_common(ft, o, false);
    ft->add_option("--circuit", circuit, "Circuit JSON")->required()->check(CLI::ExistingFile);
    auto *rp = app.add_subcommand("report", "Emit summary CSVs from run records");
    add_common(rp, o, false);
    rp->add_option("--records", records, "Records directory")->required()->check(CLI::ExistingDirectory);
    rp->add_option("--group-by", group_by, "Grouping keys")
        ->delimiter(',')
        ->check(CLI::IsMember({"problem", "cell", "variant", "magic_class", "experiment"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        (void)app.exit(e);
        return 2;
    }

    try {
        if (*gd) {
            return gen_dataset(o);
        }
        if (*ts) {
            return train(o, dataset, lambda);
        }
        if (*es) {
            return eval_surrogate(o, model);
        }
        if (*gt) {
            return gen_targets(o);
        }
        if (*se) {
            return search(o);
        }
        if (*be) {
            return bench(o);
        }
        if (*ft) {
            return finetune(o, circuit);
        }
        if (*rp) {
            return report(o, records, group_by);
        }
    } catch (const CLI::ParseError &e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
