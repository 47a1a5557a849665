#ifndef INTERCLUST_SEARCH_HPP
#define INTERCLUST_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "interclust/blockmodel.hpp"
#include "interclust/ewens.hpp"
#include "interclust/partition.hpp"
#include "interclust/rng.hpp"

namespace interclust {

struct SearchConfig {
    int max_blocks = 2;          // k, hard bound on block count
    double alpha_tilde = 1.0;    // proposal intensity, unrelated to any model alpha
    int local_moves_per_global = 50;
    int total_global_steps = 200;
    int restarts = 20;
    std::uint64_t seed = 0;
    bool record_trace = false;
    bool parallel = true;        // restarts on threads; merge is order-deterministic

    void validate() const;
    ChainParams proposal_params() const { return {alpha_tilde, max_blocks}; }
};

struct SearchResult {
    Partition best_partition;
    double best_score = 0.0;
    std::vector<std::pair<long, double>> trace;  // (step, running best) when recorded
    std::vector<double> restart_scores;
    std::vector<Partition> co_optima;  // distinct partitions scoring within 1e-9 of best
};

/// One local move: remove a uniformly chosen entity, reseat it by the
/// Chinese-restaurant rule with (alpha_tilde, k), accept by Metropolis with
/// ratio exp(score(proposal) - score(current)). Since the reseat kernel is
/// reversible w.r.t. the Ewens--Pitman(alpha_tilde, k) law, the chain targets
/// that law tilted by exp(objective); with a constant objective it leaves the
/// Ewens--Pitman distribution exactly invariant.
Partition cocktail_step(const Partition& pi, const SearchConfig& cfg, const Objective& objective, Rng& rng);

/// One global move: a draw of the cut-and-paste kernel, always accepted.
Partition global_step(const Partition& pi, const SearchConfig& cfg, Rng& rng);

/// Randomized maximization: per restart, start from an Ewens--Pitman draw and
/// iterate {global move; local_moves_per_global cocktail moves}, tracking the
/// best scorer ever visited. Deterministic given the seed.
SearchResult maximize(int n, const Objective& objective, const SearchConfig& cfg);

/// Objective over k-labelings used by the label-switching optimizer.
using LabelObjective = std::function<double(const std::vector<int>&)>;

/// Greedy single-vertex label switching over k-labelings from random starts,
/// restarted cfg.restarts times. With no objective given, maximizes
/// Newman--Girvan modularity of the weight matrix (n x n, symmetric)
/// incrementally; a custom objective is evaluated whole.
SearchResult label_switch_maximize(const std::vector<double>& weights, int n, int k,
                                   const SearchConfig& cfg, const LabelObjective& objective = {});

}  // namespace interclust

#endif
