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

#include "mqas/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "mqas/circuit_io.hpp"
#include "mqas/hash.hpp"
#include "mqas/magic.hpp"
#include "mqas/stats.hpp"

namespace mqas {

using nlohmann::json;

std::string_view variant_name(SearchVariant v) noexcept {
    switch (v) {
    case SearchVariant::Baseline:
        return "baseline";
    case SearchVariant::MagicPW:
        return "magic-pw";
    case SearchVariant::MagicUCT:
        return "magic-uct";
    case SearchVariant::AllInOne:
        return "all-in-one";
    }
    return "?";
}

std::optional<SearchVariant> parse_variant(std::string_view s) {
    for (auto v : {SearchVariant::Baseline, SearchVariant::MagicPW, SearchVariant::MagicUCT,
                   SearchVariant::AllInOne}) {
        if (variant_name(v) == s) {
            return v;
        }
    }
    return std::nullopt;
}

std::string_view magic_class_name(MagicClass m) noexcept {
    return m == MagicClass::High ? "high" : "low";
}

std::optional<MagicClass> parse_magic_class(std::string_view s) {
    if (s == "high") {
        return MagicClass::High;
    }
    if (s == "low") {
        return MagicClass::Low;
    }
    return std::nullopt;
}

void SearchConfig::validate(bool has_estimator) const {
    if (iterations == 0) {
        throw std::invalid_argument("iterations must be positive");
    }
    if (!(alpha_pw > 0.0 && alpha_pw <= 1.0)) {
        throw std::invalid_argument("alpha_pw must lie in (0, 1]");
    }
    if (!(beta_pw > 0.0)) {
        throw std::invalid_argument("beta_pw must be positive");
    }
    if (gamma < 1) {
        throw std::invalid_argument("gamma must be >= 1");
    }
    if (!(c_uct >= 0.0)) {
        throw std::invalid_argument("c_uct must be non-negative");
    }
    if (!(delta_theta > 0.0)) {
        throw std::invalid_argument("delta_theta must be positive");
    }
    if (gate_set.empty()) {
        throw std::invalid_argument("gate set is empty");
    }
    (void)dist.normalized();
    if (variant != SearchVariant::Baseline && !has_estimator) {
        throw std::invalid_argument(std::string(variant_name(variant)) +
                                    " search needs a magic estimator");
    }
}

std::size_t SearchConfig::effective_commit_budget() const noexcept {
    if (commit_budget > 0) {
        return commit_budget;
    }
    return std::max<std::size_t>(1, iterations / std::max<std::size_t>(1, max_commits));
}

MutationSettings SearchConfig::mutation() const {
    return MutationSettings{dist, gate_set, delta_theta, gate_cap};
}

json to_json(const SearchConfig &c) {
    json gates = json::array();
    for (auto k : c.gate_set) {
        gates.push_back(std::string(gate_name(k)));
    }
    return json{{"iterations", c.iterations},
                {"c_uct", c.c_uct},
                {"alpha_pw", c.alpha_pw},
                {"beta_pw", c.beta_pw},
                {"gamma", c.gamma},
                {"dist",
                 {{"add", c.dist.p_add},
                  {"swap", c.dist.p_swap},
                  {"change", c.dist.p_change},
                  {"delete", c.dist.p_delete}}},
                {"delta_theta", c.delta_theta},
                {"gate_set", gates},
                {"gate_cap", c.gate_cap},
                {"rollout_depth", c.rollout_depth},
                {"commit_budget", c.commit_budget},
                {"max_commits", c.max_commits},
                {"variant", std::string(variant_name(c.variant))},
                {"magic_class", std::string(magic_class_name(c.magic_class))},
                {"seed", c.seed}};
}

SearchConfig search_config_from_json(const json &j, SearchConfig base) {
    if (!j.is_object()) {
        throw std::invalid_argument("search config must be a JSON object");
    }
    static const std::set<std::string> kKeys{
        "iterations", "c_uct",       "alpha_pw",      "beta_pw",    "gamma",
        "dist",       "delta_theta", "gate_set",      "gate_cap",   "rollout_depth",
        "commit_budget", "max_commits", "variant",    "magic_class", "seed"};
    for (const auto &[key, _] : j.items()) {
        if (!kKeys.contains(key)) {
            throw std::invalid_argument("unknown search config key '" + key + "'");
        }
    }
    try {
        auto get = [&](const char *key, auto &field) {
            if (j.contains(key)) {
                field = j[key].get<std::remove_reference_t<decltype(field)>>();
            }
        };
        get("iterations", base.iterations);
        get("c_uct", base.c_uct);
        get("alpha_pw", base.alpha_pw);
        get("beta_pw", base.beta_pw);
        get("gamma", base.gamma);
        get("delta_theta", base.delta_theta);
        get("gate_cap", base.gate_cap);
        get("rollout_depth", base.rollout_depth);
        get("commit_budget", base.commit_budget);
        get("max_commits", base.max_commits);
        get("seed", base.seed);
        if (j.contains("dist")) {
            const auto &d = j["dist"];
            if (d.is_array()) {
                // (add, swap, change, delete) order
                if (d.size() != 4) {
                    throw std::invalid_argument("dist array needs 4 entries (A, S, C, D)");
                }
                base.dist = {d[0].get<double>(), d[1].get<double>(), d[2].get<double>(),
                             d[3].get<double>()};
            } else {
                base.dist.p_add = d.value("add", base.dist.p_add);
                base.dist.p_swap = d.value("swap", base.dist.p_swap);
                base.dist.p_change = d.value("change", base.dist.p_change);
                base.dist.p_delete = d.value("delete", base.dist.p_delete);
            }
        }
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
        if (j.contains("variant")) {
            const auto v = parse_variant(j["variant"].get<std::string>());
            if (!v) {
                throw std::invalid_argument("unknown variant '" + j["variant"].get<std::string>() +
                                            "'");
            }
            base.variant = *v;
        }
        if (j.contains("magic_class")) {
            const auto m = parse_magic_class(j["magic_class"].get<std::string>());
            if (!m) {
                throw std::invalid_argument("unknown magic class '" +
                                            j["magic_class"].get<std::string>() + "'");
            }
            base.magic_class = *m;
        }
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("bad search config value: ") + e.what());
    }
    return base;
}

std::size_t widening_limit(std::size_t visits, double alpha, double beta) {
    const double n = static_cast<double>(std::max<std::size_t>(visits, 1));
    const double k = std::ceil(beta * std::pow(n, alpha));
    return std::max<std::size_t>(1, static_cast<std::size_t>(k));
}

double uct_score(double q, std::size_t n_sa, std::size_t n_s, double c) {
    if (n_sa == 0) {
        return kUnvisitedScore;
    }
    const double nsa = static_cast<double>(n_sa);
    const double log_ns = std::log(static_cast<double>(std::max<std::size_t>(n_s, 1)));
    return q / nsa + c * std::sqrt(log_ns / nsa);
}

double magic_factor(double m2_hat, std::size_t n, MagicClass cls) {
    const double p = std::clamp(m2_hat / m2_max(n), 0.0, 1.0);
    return cls == MagicClass::High ? p : 1.0 - p;
}

double magic_uct_score(double q, std::size_t n_sa, std::size_t n_s, double c, double m2_hat,
                       std::size_t n, MagicClass cls) {
    return uct_score(q, n_sa, n_s, c * magic_factor(m2_hat, n, cls));
}

TreeSearch::TreeSearch(RewardFn reward, SearchConfig config, const MagicEstimator *estimator,
                       Circuit root)
    : reward_(std::move(reward)), config_(std::move(config)), mutation_(config_.mutation()),
      estimator_(estimator), rng_(mix64(config_.seed)) {
    config_.validate(estimator_ != nullptr);
    if (!reward_) {
        throw std::invalid_argument("search needs a reward function");
    }
    if (root.size() > config_.gate_cap) {
        throw std::invalid_argument("root circuit exceeds the gate cap");
    }
    SearchNode node;
    node.circuit = std::move(root);
    if (estimator_ != nullptr) {
        node.m2_hat = estimator_->estimate(node.circuit);
        node.p_m2 = magic_factor(*node.m2_hat, node.circuit.num_qubits(), config_.magic_class);
    }
    nodes_.push_back(std::move(node));
    result_.reward_trace.reserve(config_.iterations);
}

std::size_t TreeSearch::add_node(Circuit c, std::size_t parent, const Action &a,
                                 std::optional<double> m2_hat) {
    SearchNode node;
    node.circuit = std::move(c);
    node.parent = parent;
    node.action = a;
    node.depth = nodes_[parent].depth + 1;
    if (!m2_hat && estimator_ != nullptr) {
        m2_hat = estimator_->estimate(node.circuit);
    }
    if (m2_hat) {
        node.m2_hat = *m2_hat;
        node.p_m2 = magic_factor(*m2_hat, node.circuit.num_qubits(), config_.magic_class);
    }
    const std::size_t idx = nodes_.size();
    nodes_.push_back(std::move(node));
    nodes_[parent].children.push_back(idx);
    return idx;
}

std::optional<std::size_t> TreeSearch::expand(std::size_t node) {
    const std::size_t limit = widening_limit(nodes_[node].visits, config_.alpha_pw,
                                             config_.beta_pw);
    const std::size_t batch = uses_magic_widening(config_.variant) ? config_.gamma : 1;
    std::vector<Circuit> candidates;
    std::vector<Action> actions;
    try {
        for (std::size_t i = 0; i < batch; ++i) {
            auto [c, a] = apply_action(nodes_[node].circuit, mutation_, rng_);
            candidates.push_back(std::move(c));
            actions.push_back(a);
        }
    } catch (const NoFeasibleAction &) {
        nodes_[node].terminal = true;
        return std::nullopt;
    }

    std::size_t pick = 0;
    std::optional<double> picked_m2;
    if (estimator_ != nullptr) {
        const auto scores = estimator_->estimate_batch(candidates);
        if (uses_magic_widening(config_.variant)) {
            for (std::size_t i = 1; i < scores.size(); ++i) {
                const bool better = config_.magic_class == MagicClass::High
                                        ? scores[i] > scores[pick]
                                        : scores[i] < scores[pick];
                if (better) {
                    pick = i;
                }
            }
        }
        picked_m2 = scores[pick];
    }
    nodes_[node].limits_at_expansion.push_back(limit);
    return add_node(std::move(candidates[pick]), node, actions[pick], picked_m2);
}

double TreeSearch::evaluate(std::size_t node, bool own) {
    const Circuit *target = &nodes_[node].circuit;
    Circuit rolled;
    if (!own && config_.rollout_depth > 0) {
        rolled = nodes_[node].circuit;
        for (std::size_t d = 0; d < config_.rollout_depth; ++d) {
            try {
                rolled = apply_action(rolled, mutation_, rng_).first;
            } catch (const NoFeasibleAction &) {
                break;
            }
        }
        target = &rolled;
    }
    const double r = reward_(*target);
    ++result_.evaluations;
    if (target == &nodes_[node].circuit) {
        nodes_[node].reward = r;
    }
    if (r > result_.best_reward) {
        result_.best_reward = r;
        result_.best_circuit = *target;
        result_.best_iteration = iteration_ + 1;
    }
    return r;
}

std::optional<std::size_t> TreeSearch::select_child(std::size_t node) const {
    const auto &parent = nodes_[node];
    if (parent.children.empty()) {
        return std::nullopt;
    }
    const bool magic = uses_magic_selection(config_.variant);
    std::size_t best = parent.children.front();
    double best_score = -std::numeric_limits<double>::infinity();
    for (std::size_t idx : parent.children) {
        const auto &child = nodes_[idx];
        double c = config_.c_uct;
        if (magic) {
            c *= child.p_m2.value_or(1.0);
        }
        const double s = uct_score(child.total_reward, child.visits, parent.visits, c);
        if (s > best_score) {
            best_score = s;
            best = idx;
        }
    }
    return best;
}

void TreeSearch::step() {
    if (iteration_ >= config_.iterations) {
        return;
    }
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<std::size_t> path{root_};
    std::size_t node = root_;
    bool own = false;
    while (true) {
        auto &cur = nodes_[node];
        if (cur.visits == 0) {
            own = true;
            break;
        }
        const std::size_t limit = widening_limit(cur.visits, config_.alpha_pw, config_.beta_pw);
        if (!cur.terminal && cur.children.size() < limit) {
            if (auto child = expand(node)) {
                node = *child;
                path.push_back(node);
                break;
            }
        }
        if (nodes_[node].children.empty()) {
            own = true;
            break;
        }
        node = *select_child(node);
        path.push_back(node);
    }

    const double r = evaluate(node, own);
    ++nodes_[node].own_evaluations;
    for (std::size_t idx : path) {
        ++nodes_[idx].visits;
        nodes_[idx].total_reward += r;
    }
    ++iteration_;
    result_.reward_trace.push_back(result_.best_reward);
    maybe_commit();
    elapsed_ += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void TreeSearch::maybe_commit() {
    if (!committing_ || iteration_ % config_.effective_commit_budget() != 0) {
        return;
    }
    if (result_.committed_path.size() >= config_.max_commits) {
        committing_ = false;
        return;
    }
    const auto &root = nodes_[root_];
    if (root.children.empty()) {
        committing_ = false;
        return;
    }
    std::size_t best = root.children.front();
    for (std::size_t idx : root.children) {
        const auto &a = nodes_[idx];
        const auto &b = nodes_[best];
        if (a.visits > b.visits ||
            (a.visits == b.visits && a.total_reward / static_cast<double>(a.visits) >
                                         b.total_reward / static_cast<double>(b.visits))) {
            best = idx;
        }
    }
    root_ = best;
    result_.committed_path.push_back(*nodes_[best].action);
}

SearchResult TreeSearch::run() {
    while (iteration_ < config_.iterations) {
        step();
    }
    return result();
}

SearchResult TreeSearch::result() const {
    SearchResult r = result_;
    r.tree_stats = tree_stats(nodes_);
    r.wall_seconds = elapsed_;
    return r;
}

SearchResult run_search(const RewardFn &reward, const SearchConfig &config,
                        const MagicEstimator *estimator, const Circuit &root) {
    TreeSearch search(reward, config, estimator, root);
    return search.run();
}

TreeStats tree_stats(const std::vector<SearchNode> &nodes) {
    TreeStats s;
    s.node_count = nodes.size();
    for (const auto &n : nodes) {
        s.max_depth = std::max(s.max_depth, n.depth);
    }
    s.magic = tree_magic_stats(nodes);
    return s;
}

TreeMagicStats tree_magic_stats(const std::vector<SearchNode> &nodes,
                                const MagicEstimator *estimator) {
    std::vector<double> values;
    std::vector<Circuit> missing;
    for (const auto &n : nodes) {
        if (n.m2_hat) {
            values.push_back(*n.m2_hat);
        } else if (estimator != nullptr) {
            missing.push_back(n.circuit);
        }
    }
    if (!missing.empty()) {
        const auto extra = estimator->estimate_batch(missing);
        values.insert(values.end(), extra.begin(), extra.end());
    }
    TreeMagicStats s;
    s.count = values.size();
    if (!values.empty()) {
        s.mean = mean(values);
        s.median = median(values);
    }
    return s;
}

json to_json(const Action &a) {
    json j{{"class", std::string(action_name(a.cls))}, {"position", a.position}};
    if (a.cls == ActionClass::Add || a.cls == ActionClass::Swap) {
        j["gate"] = to_json(a.gate);
    }
    if (a.cls == ActionClass::Change) {
        j["epsilon"] = a.epsilon;
    }
    return j;
}

json to_json(const SearchResult &r, bool include_trace) {
    json path = json::array();
    for (const auto &a : r.committed_path) {
        path.push_back(to_json(a));
    }
    json j{{"best_reward", r.best_reward},
           {"best_iteration", r.best_iteration},
           {"best_circuit", to_json(r.best_circuit)},
           {"evaluations", r.evaluations},
           {"committed_path", path},
           {"tree",
            {{"node_count", r.tree_stats.node_count},
             {"max_depth", r.tree_stats.max_depth},
             {"m2_hat_count", r.tree_stats.magic.count},
             {"m2_hat_mean", r.tree_stats.magic.mean},
             {"m2_hat_median", r.tree_stats.magic.median}}}};
    if (include_trace) {
        j["reward_trace"] = r.reward_trace;
    }
    return j;
}

} // namespace mqas
