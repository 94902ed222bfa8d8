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
#include <functional>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mqas/actions.hpp"
#include "mqas/estimator.hpp"

namespace mqas {

enum class SearchVariant : std::uint8_t { Baseline, MagicPW, MagicUCT, AllInOne };
enum class MagicClass : std::uint8_t { High, Low };

[[nodiscard]] std::string_view variant_name(SearchVariant v) noexcept;
[[nodiscard]] std::optional<SearchVariant> parse_variant(std::string_view s);
[[nodiscard]] std::string_view magic_class_name(MagicClass m) noexcept;
[[nodiscard]] std::optional<MagicClass> parse_magic_class(std::string_view s);

[[nodiscard]] constexpr bool uses_magic_widening(SearchVariant v) noexcept {
    return v == SearchVariant::MagicPW || v == SearchVariant::AllInOne;
}
[[nodiscard]] constexpr bool uses_magic_selection(SearchVariant v) noexcept {
    return v == SearchVariant::MagicUCT || v == SearchVariant::AllInOne;
}

struct SearchConfig {
    std::size_t iterations{1000};
    double c_uct{0.4};
    double alpha_pw{0.5};
    double beta_pw{1.0};
    /// Candidates generated per new child slot under magic widening.
    std::size_t gamma{3};
    ActionDistribution dist{};
    double delta_theta{0.15};
    std::vector<GateKind> gate_set{kSearchGateSet};
    std::size_t gate_cap{30};
    std::size_t rollout_depth{0};
    /// Iterations between commits; 0 means iterations / max_commits.
    std::size_t commit_budget{0};
    std::size_t max_commits{20};
    SearchVariant variant{SearchVariant::Baseline};
    MagicClass magic_class{MagicClass::High};
    std::uint64_t seed{0};

    /// Throws std::invalid_argument on out-of-range values, or when a magic
    /// variant is configured without an estimator.
    void validate(bool has_estimator) const;
    [[nodiscard]] std::size_t effective_commit_budget() const noexcept;
    [[nodiscard]] MutationSettings mutation() const;
};

[[nodiscard]] nlohmann::json to_json(const SearchConfig &c);
/// Reads the keys present in j over a copy of base; unknown keys throw.
[[nodiscard]] SearchConfig search_config_from_json(const nlohmann::json &j,
                                                   SearchConfig base = {});

/// ceil(beta * max(N, 1)^alpha).
[[nodiscard]] std::size_t widening_limit(std::size_t visits, double alpha, double beta);

inline constexpr double kUnvisitedScore = std::numeric_limits<double>::infinity();

/// Q / N_sa + c * sqrt(ln N_s / N_sa); +inf when N_sa = 0.
[[nodiscard]] double uct_score(double q, std::size_t n_sa, std::size_t n_s, double c);

/// Normalized magic factor in [0, 1]: m2_hat / m2_max(n) for the high
/// class, one minus that for the low class.
[[nodiscard]] double magic_factor(double m2_hat, std::size_t n, MagicClass cls);

/// UCT with the exploration term scaled by magic_factor.
[[nodiscard]] double magic_uct_score(double q, std::size_t n_sa, std::size_t n_s, double c,
                                     double m2_hat, std::size_t n, MagicClass cls);

struct SearchNode {
    Circuit circuit;
    std::optional<std::size_t> parent;
    /// Action that produced this node from its parent (unset for the root).
    std::optional<Action> action;
    std::vector<std::size_t> children;
    /// N_s: iterations whose path passed through this node.
    std::size_t visits{0};
    /// Q_(parent, action): summed rewards of those iterations.
    double total_reward{0.0};
    /// Iterations whose path ended at this node.
    std::size_t own_evaluations{0};
    std::optional<double> m2_hat;
    std::optional<double> p_m2;
    /// Reward of this node's own circuit, once evaluated.
    std::optional<double> reward;
    std::size_t depth{0};
    /// Set when no mutation of the circuit is feasible.
    bool terminal{false};
    /// Widening limit in force when each child was attached.
    std::vector<std::size_t> limits_at_expansion;
};

struct TreeMagicStats {
    std::size_t count{0};
    double mean{0.0};
    double median{0.0};
};

struct TreeStats {
    std::size_t node_count{0};
    std::size_t max_depth{0};
    TreeMagicStats magic;
};

struct SearchResult {
    Circuit best_circuit;
    double best_reward{-std::numeric_limits<double>::infinity()};
    /// Iteration (1-based) at which best_reward was first reached.
    std::size_t best_iteration{0};
    /// Best-so-far reward after each iteration.
    std::vector<double> reward_trace;
    TreeStats tree_stats;
    std::vector<Action> committed_path;
    std::size_t evaluations{0};
    double wall_seconds{0.0};
};

using RewardFn = std::function<double(const Circuit &)>;

/**
 * Progressive-widening MCTS over circuits.
 *
 * Each step() is one iteration with exactly one reward evaluation: descend
 * from the current root through fully widened nodes by (magic) UCT, attach
 * one new child where the widening limit allows, optionally roll out, and
 * back the reward up the traversed path. Every effective_commit_budget()
 * iterations the root moves to its most visited child.
 */
class TreeSearch {
  public:
    /// estimator may be null for the baseline variant. It must outlive the
    /// search.
    TreeSearch(RewardFn reward, SearchConfig config, const MagicEstimator *estimator,
               Circuit root);

    void step();
    /// Runs the remaining iterations and returns the result.
    SearchResult run();

    [[nodiscard]] const std::vector<SearchNode> &nodes() const noexcept { return nodes_; }
    [[nodiscard]] std::size_t root() const noexcept { return root_; }
    [[nodiscard]] std::size_t iterations_done() const noexcept { return iteration_; }
    [[nodiscard]] const SearchConfig &config() const noexcept { return config_; }
    [[nodiscard]] SearchResult result() const;

    /// Index of the child selection would pick at `node` (nullopt if none).
    [[nodiscard]] std::optional<std::size_t> select_child(std::size_t node) const;

  private:
    std::size_t add_node(Circuit c, std::size_t parent, const Action &a,
                         std::optional<double> m2_hat);
    std::optional<std::size_t> expand(std::size_t node);
    double evaluate(std::size_t node, bool own);
    void maybe_commit();

    RewardFn reward_;
    SearchConfig config_;
    MutationSettings mutation_;
    const MagicEstimator *estimator_;
    Rng rng_;
    std::vector<SearchNode> nodes_;
    std::size_t root_{0};
    std::size_t iteration_{0};
    bool committing_{true};
    SearchResult result_;
    double elapsed_{0.0};
};

/// Convenience wrapper: constructs a TreeSearch and runs it to completion.
/// Throws std::invalid_argument if iterations == 0.
[[nodiscard]] SearchResult run_search(const RewardFn &reward, const SearchConfig &config,
                                      const MagicEstimator *estimator, const Circuit &root);

[[nodiscard]] TreeStats tree_stats(const std::vector<SearchNode> &nodes);

/// Magic statistics over every node; nodes without a cached estimate are
/// scored with `estimator` (when given) after the fact.
[[nodiscard]] TreeMagicStats tree_magic_stats(const std::vector<SearchNode> &nodes,
                                              const MagicEstimator *estimator = nullptr);

[[nodiscard]] nlohmann::json to_json(const Action &a);
[[nodiscard]] nlohmann::json to_json(const SearchResult &r, bool include_trace = true);

} // namespace mqas
