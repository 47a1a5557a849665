#include <doctest.h>

#include <cmath>
#include <map>
#include <numeric>

#include "interclust/ewens.hpp"
#include "interclust/network.hpp"
#include "interclust/search.hpp"
#include "interclust/simulate.hpp"

using namespace interclust;

namespace {

Objective constant_objective() {
    return [](const Partition&) { return 0.0; };
}

// exact one-step kernel of the cocktail move under a constant objective:
// uniform entity choice, CRP reseat, acceptance always one
std::map<std::string, double> exact_cocktail_row(const Partition& pi, double alpha, int k) {
    std::map<std::string, double> row;
    const int n = pi.size();
    for (int u = 0; u < n; ++u) {
        auto sizes = pi.block_sizes();
        --sizes[pi.block_of(u)];
        std::vector<int> blocks;
        std::vector<double> w;
        for (int b = 0; b < pi.num_blocks(); ++b)
            if (sizes[b] > 0) {
                blocks.push_back(b);
                w.push_back(sizes[b] + alpha);
            }
        const int r = static_cast<int>(blocks.size());
        if (r < k) w.push_back(alpha * (k - r));
        double total = std::accumulate(w.begin(), w.end(), 0.0);

        for (std::size_t c = 0; c < w.size(); ++c) {
            auto labels = pi.labels();
            labels[u] = c < static_cast<std::size_t>(r) ? blocks[c] : pi.num_blocks();
            row[Partition(std::move(labels)).to_string()] += (1.0 / n) * (w[c] / total);
        }
    }
    return row;
}

std::vector<double> clique_pair(int size) {
    // two disjoint cliques of the given size
    const int n = 2 * size;
    std::vector<double> w(static_cast<std::size_t>(n) * n, 0.0);
    auto link = [&](int i, int j) { w[static_cast<std::size_t>(i) * n + j] = w[static_cast<std::size_t>(j) * n + i] = 1.0; };
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j) {
            link(i, j);
            link(size + i, size + j);
        }
    return w;
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("single entity moves are no-ops") {
    SearchConfig cfg;
    cfg.max_blocks = 3;
    Rng rng(1);
    Partition one = Partition::single_block(1);
    CHECK(cocktail_step(one, cfg, constant_objective(), rng) == one);
    CHECK(global_step(one, cfg, rng) == one);
}

TEST_CASE("cocktail chain with constant objective is stationary for the partition law, exactly") {
    const double alpha = 1.0;
    const int k = 2;
    auto states = enumerate_partitions(4, k);
    std::map<std::string, double> flow;  // sum_pi EP(pi) K(pi, .)
    for (const auto& pi : states) {
        double ep = std::exp(ewens_pitman_log_prob(pi, {alpha, k}));
        for (auto& [to, p] : exact_cocktail_row(pi, alpha, k)) flow[to] += ep * p;
    }
    for (const auto& pj : states)
        CHECK(std::abs(flow[pj.to_string()] - std::exp(ewens_pitman_log_prob(pj, {alpha, k}))) < 1e-10);
}

TEST_CASE("cocktail chain occupation measure matches the partition law") {
    SearchConfig cfg;
    cfg.max_blocks = 2;
    cfg.alpha_tilde = 1.0;
    Rng rng(20240);
    auto objective = constant_objective();

    Partition state = ewens_pitman_sample(4, cfg.proposal_params(), rng);
    std::map<std::string, double> occ;
    const int burn = 1000, steps = 100000;
    for (int t = 0; t < burn; ++t) state = cocktail_step(state, cfg, objective, rng);
    for (int t = 0; t < steps; ++t) {
        state = cocktail_step(state, cfg, objective, rng);
        occ[state.to_string()] += 1.0 / steps;
    }
    double tv = 0;
    for (const auto& pi : enumerate_partitions(4, 2))
        tv += std::abs(occ[pi.to_string()] - std::exp(ewens_pitman_log_prob(pi, {1.0, 2})));
    CHECK(tv / 2 < 0.02);
}

TEST_CASE("strongly peaked objective is hit quickly") {
    const Partition target = Partition::parse("0,0,1,0,1,1");
    Objective peaked = [&](const Partition& pi) { return pi == target ? 100.0 : 0.0; };
    SearchConfig cfg;
    cfg.max_blocks = 2;

    int hits = 0;
    for (int run = 0; run < 100; ++run) {
        Rng rng(9000 + run);
        Partition state = ewens_pitman_sample(6, cfg.proposal_params(), rng);
        for (int t = 0; t < 10000; ++t) {
            if (state == target) break;
            state = cocktail_step(state, cfg, peaked, rng);
        }
        if (state == target) ++hits;
    }
    CHECK(hits >= 99);
}

TEST_CASE("every global transition has positive probability") {
    auto states = enumerate_partitions(4, 2);
    REQUIRE(states.size() == 8);
    for (const auto& pi : states)
        for (const auto& pj : states)
            CHECK(std::exp(cap_transition_log_prob(pi, pj, {1.0, 2})) > 0.0);
}

TEST_CASE("global step matches the kernel row from the single block") {
    SearchConfig cfg;
    cfg.max_blocks = 2;
    Rng rng(31337);
    Partition from = Partition::single_block(4);
    std::map<std::string, double> freq;
    const int draws = 100000;
    for (int t = 0; t < draws; ++t) freq[global_step(from, cfg, rng).to_string()] += 1.0 / draws;
    double tv = 0;
    for (const auto& pj : enumerate_partitions(4, 2))
        tv += std::abs(freq[pj.to_string()] - std::exp(cap_transition_log_prob(from, pj, {1.0, 2})));
    CHECK(tv / 2 < 0.01);
}

TEST_CASE("moves never exceed the block bound") {
    SearchConfig cfg;
    cfg.max_blocks = 3;
    Rng rng(77);
    Partition state = ewens_pitman_sample(8, cfg.proposal_params(), rng);
    auto objective = constant_objective();
    for (int t = 0; t < 2000; ++t) {
        state = (t % 10 == 0) ? global_step(state, cfg, rng) : cocktail_step(state, cfg, objective, rng);
        CHECK(state.num_blocks() <= 3);
    }
}

TEST_CASE("maximize is deterministic and parallel-safe") {
    Rng data_rng(3);
    auto a = simulate_poisson(Partition::parse("0,0,0,0,1,1,1,1"), 3.0, 0.2, data_rng);
    auto objective = make_profiled_objective(a);

    SearchConfig cfg;
    cfg.max_blocks = 2;
    cfg.restarts = 6;
    cfg.total_global_steps = 30;
    cfg.local_moves_per_global = 10;
    cfg.seed = 424242;
    cfg.record_trace = true;

    auto r1 = maximize(8, objective, cfg);
    auto r2 = maximize(8, objective, cfg);
    CHECK(r1.best_partition == r2.best_partition);
    CHECK(r1.best_score == r2.best_score);  // bit-for-bit
    CHECK(r1.restart_scores == r2.restart_scores);
    CHECK(r1.trace == r2.trace);

    SearchConfig serial = cfg;
    serial.parallel = false;
    auto r3 = maximize(8, objective, serial);
    CHECK(r3.best_partition == r1.best_partition);
    CHECK(r3.best_score == r1.best_score);
    CHECK(r3.restart_scores == r1.restart_scores);
}

TEST_CASE("best score dominates the trace and restart scores") {
    Rng data_rng(5);
    auto a = simulate_poisson(Partition::parse("0,1,0,1,0,1"), 2.0, 0.3, data_rng);
    SearchConfig cfg;
    cfg.max_blocks = 2;
    cfg.restarts = 4;
    cfg.total_global_steps = 20;
    cfg.local_moves_per_global = 5;
    cfg.seed = 9;
    cfg.record_trace = true;

    auto res = maximize(6, make_profiled_objective(a), cfg);
    for (auto& [step, score] : res.trace) CHECK(res.best_score >= score);
    for (double s : res.restart_scores) CHECK(res.best_score >= s - 1e-12);
    CHECK(res.best_score == doctest::Approx(make_profiled_objective(a)(res.best_partition)).epsilon(1e-12));
}

TEST_CASE("planted poisson partitions are recovered") {
    const Partition truth = Partition::parse("0,0,0,0,0,0,0,0,0,0,1,1,1,1,1,1,1,1,1,1");
    SearchConfig cfg;
    cfg.max_blocks = 2;
    cfg.restarts = 4;
    cfg.total_global_steps = 40;
    cfg.local_moves_per_global = 60;

    int ok = 0;
    for (int seed = 0; seed < 10; ++seed) {
        Rng rng(100 + seed);
        auto a = simulate_poisson(truth, 2.0, 0.1, rng);
        cfg.seed = 5000 + seed;
        auto res = maximize(20, make_profiled_objective(a), cfg);
        if (res.best_partition == truth) ++ok;
    }
    CHECK(ok == 10);
}

TEST_CASE("constant objective collects co-optima") {
    SearchConfig cfg;
    cfg.max_blocks = 2;
    cfg.restarts = 2;
    cfg.total_global_steps = 20;
    cfg.local_moves_per_global = 10;
    cfg.seed = 1;
    auto res = maximize(4, constant_objective(), cfg);
    CHECK(res.co_optima.size() > 1);  // every state ties
}

TEST_CASE("label switching separates two cliques") {
    auto w = clique_pair(5);
    SearchConfig cfg;
    cfg.restarts = 20;
    cfg.seed = 2;
    auto res = label_switch_maximize(w, 10, 2, cfg);
    CHECK(res.best_partition == Partition::parse("0,0,0,0,0,1,1,1,1,1"));
    CHECK(res.best_score == doctest::Approx(0.5).epsilon(1e-12));

    // exhaustive oracle over all 2^10 labelings
    double best = -1;
    for (int mask = 0; mask < (1 << 10); ++mask) {
        std::vector<int> lab(10);
        for (int i = 0; i < 10; ++i) lab[i] = (mask >> i) & 1;
        auto q = ng_modularity(w, 10, Partition(lab));
        if (q) best = std::max(best, *q);
    }
    CHECK(res.best_score == doctest::Approx(best).epsilon(1e-12));
}

TEST_CASE("complete graph has no community structure") {
    const int n = 6;
    std::vector<double> w(n * n, 1.0);
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i) * n + i] = 0.0;
    SearchConfig cfg;
    cfg.restarts = 10;
    cfg.seed = 3;
    auto res = label_switch_maximize(w, n, 2, cfg);
    CHECK(res.best_score <= 1e-12);
}

TEST_CASE("custom label objective agrees with the built-in modularity path") {
    auto w = clique_pair(4);
    const int n = 8;
    LabelObjective qobj = [&](const std::vector<int>& lab) {
        auto q = ng_modularity(w, n, Partition(lab));
        return q ? *q : -1.0;
    };
    SearchConfig cfg;
    cfg.restarts = 10;
    cfg.seed = 4;
    auto via_custom = label_switch_maximize(w, n, 2, cfg, qobj);
    auto via_builtin = label_switch_maximize(w, n, 2, cfg);
    CHECK(via_custom.best_partition == via_builtin.best_partition);
    CHECK(via_custom.best_score == doctest::Approx(via_builtin.best_score).epsilon(1e-12));
}

}  // TEST_SUITE
