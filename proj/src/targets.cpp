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

#include "mqas/targets.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "mqas/circuit_io.hpp"
#include "mqas/hash.hpp"
#include "mqas/magic.hpp"
#include "mqas/parallel.hpp"
#include "mqas/problems.hpp"
#include "mqas/statevector.hpp"

namespace mqas {

std::string_view level_name(MagicLevel l) noexcept {
    switch (l) {
    case MagicLevel::Low:
        return "low";
    case MagicLevel::Medium:
        return "medium";
    case MagicLevel::High:
        return "high";
    }
    return "?";
}

const TargetCircuit &TargetSet::get(std::size_t n, MagicLevel level) const {
    for (const auto &t : triples) {
        if (t.n == n) {
            return t.levels[static_cast<std::size_t>(level)];
        }
    }
    throw std::out_of_range("no targets for n = " + std::to_string(n));
}

TargetSpec target_spec_from_json(const nlohmann::json &j, TargetSpec base) {
    if (!j.is_object()) {
        throw std::invalid_argument("target spec must be a JSON object");
    }
    // Search-side knobs live in SearchConfig; reuse its parser for them.
    nlohmann::json search = nlohmann::json::object();
    for (const auto &[key, value] : j.items()) {
        if (key == "qubit_counts") {
            base.qubit_counts = value.get<std::vector<std::size_t>>();
        } else if (key == "pool_size") {
            base.pool_size = value.get<std::size_t>();
        } else if (key == "num_gates") {
            base.num_gates = value.get<std::size_t>();
        } else if (key == "short_budget") {
            base.short_budget = value.get<std::size_t>();
        } else if (key == "long_budget") {
            base.long_budget = value.get<std::size_t>();
        } else if (key == "runs") {
            base.runs = value.get<std::size_t>();
        } else if (key == "max_attempts") {
            base.max_attempts = value.get<std::size_t>();
        } else if (key == "working_m2_limit") {
            base.working_m2_limit = value.get<double>();
        } else if (key == "seed") {
            base.seed = value.get<std::uint64_t>();
        } else if (key == "jobs") {
            base.jobs = value.get<std::size_t>();
        } else if (key == "dist" || key == "gate_set") {
            search[key] = value;
        } else {
            throw std::invalid_argument("unknown target spec key '" + key + "'");
        }
    }
    SearchConfig cfg;
    cfg.dist = base.dist;
    cfg.gate_set = base.gate_set;
    cfg = search_config_from_json(search, cfg);
    base.dist = cfg.dist;
    base.gate_set = cfg.gate_set;
    return base;
}

namespace {

double exact_m2(const Circuit &c) { return m2_exact(simulate(c)).value; }

TargetCircuit make_target(std::size_t n, MagicLevel level, Circuit c, double m2) {
    TargetCircuit t;
    t.n = n;
    t.level = level;
    t.cnot_count = c.count(GateKind::CX);
    t.t_count = c.count(GateKind::T);
    t.circuit = std::move(c);
    t.m2 = m2;
    return t;
}

} // namespace

TargetTriple generate_target_triple(std::size_t n, const TargetSpec &spec, std::uint64_t seed) {
    Rng rng(mix64(seed));
    std::vector<Circuit> pool;
    std::vector<double> m2s;
    for (std::size_t i = 0; i < spec.pool_size; ++i) {
        pool.push_back(random_circuit(n, spec.num_gates, spec.gate_set, rng));
        m2s.push_back(exact_m2(pool.back()));
    }
    const auto hi = static_cast<std::size_t>(std::max_element(m2s.begin(), m2s.end()) - m2s.begin());
    const auto lo = static_cast<std::size_t>(std::min_element(m2s.begin(), m2s.end()) - m2s.begin());

    TargetTriple out;
    out.n = n;
    out.seed = seed;
    out.working = pool[lo];
    out.working_m2 = m2s[lo];
    out.levels[0] = make_target(n, MagicLevel::Low, pool[hi], m2s[hi]);

    SearchConfig cfg;
    cfg.dist = spec.dist;
    cfg.gate_set = spec.gate_set;
    cfg.gate_cap = spec.num_gates;
    const auto reward = make_reward(magic_max_problem(n));

    auto campaign = [&](std::size_t budget, std::uint64_t tag) {
        std::vector<SearchResult> results(spec.runs);
        parallel_for(spec.runs, spec.jobs, [&](std::size_t r) {
            SearchConfig run_cfg = cfg;
            run_cfg.iterations = budget;
            run_cfg.seed = mix64(seed ^ mix64(tag + r));
            results[r] = run_search(reward, run_cfg, nullptr, out.working);
        });
        return results;
    };

    auto shorts = campaign(spec.short_budget, 0x5000);
    auto longs = campaign(spec.long_budget, 0x6000);
    auto by_reward = [](const SearchResult &a, const SearchResult &b) {
        return a.best_reward < b.best_reward;
    };
    const auto &med = *std::min_element(shorts.begin(), shorts.end(), by_reward);
    const auto &high = *std::max_element(longs.begin(), longs.end(), by_reward);
    out.levels[1] =
        make_target(n, MagicLevel::Medium, med.best_circuit, exact_m2(med.best_circuit));
    out.levels[2] =
        make_target(n, MagicLevel::High, high.best_circuit, exact_m2(high.best_circuit));
    return out;
}

TargetSet generate_targets(const TargetSpec &spec, const TargetLog &log) {
    if (spec.max_attempts == 0 || spec.runs == 0 || spec.pool_size == 0) {
        throw std::invalid_argument("target spec needs positive attempts, runs and pool size");
    }
    TargetSet set;
    set.spec = spec;
    for (std::size_t n : spec.qubit_counts) {
        bool done = false;
        for (std::size_t attempt = 0; attempt < spec.max_attempts && !done; ++attempt) {
            const std::uint64_t seed = spec.seed + 1000003 * n + attempt;
            auto triple = generate_target_triple(n, spec, seed);
            triple.attempts = attempt + 1;
            const double lo = triple.levels[0].m2;
            const double md = triple.levels[1].m2;
            const double hi = triple.levels[2].m2;
            const bool ordered = lo < md && md < hi;
            const bool stabilizer = triple.working_m2 < spec.working_m2_limit;
            if (ordered && stabilizer) {
                set.triples.push_back(std::move(triple));
                done = true;
            } else if (log) {
                std::ostringstream msg;
                msg << "n=" << n << " attempt " << attempt + 1 << " rejected (M2 low/medium/high "
                    << lo << "/" << md << "/" << hi << ", working " << triple.working_m2
                    << "); retrying with the next seed";
                log(msg.str());
            }
        }
        if (!done) {
            throw GenerationError("could not order low < medium < high targets for n = " +
                                  std::to_string(n) + " within " +
                                  std::to_string(spec.max_attempts) + " attempts");
        }
    }
    return set;
}

std::filesystem::path target_path(const std::filesystem::path &dir, std::size_t n,
                                  MagicLevel level) {
    return dir / ("n" + std::to_string(n) + "_" + std::string(level_name(level)) + ".json");
}

void save_targets(const TargetSet &set, const std::filesystem::path &dir) {
    std::ostringstream csv;
    csv.precision(17);
    csv << "n,level,m2,cnot_count,t_count\n";
    for (const auto &t : set.triples) {
        for (const auto &c : t.levels) {
            save_circuit(c.circuit, target_path(dir, c.n, c.level));
            csv << c.n << ',' << level_name(c.level) << ',' << c.m2 << ',' << c.cnot_count << ','
                << c.t_count << '\n';
        }
        save_circuit(t.working, dir / ("n" + std::to_string(t.n) + "_working.json"));
    }
    write_text_file(dir / "manifest.csv", csv.str());
}

} // namespace mqas
