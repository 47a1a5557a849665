#include "interclust/search.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <future>
#include <limits>

#include "interclust/errors.hpp"

namespace interclust {

namespace {

constexpr double kTieTol = 1e-9;
constexpr std::size_t kMaxCoOptima = 64;

struct BestTracker {
    Partition best;
    double best_score = -std::numeric_limits<double>::infinity();
    std::vector<Partition> co_optima;

    void offer(const Partition& pi, double score) {
        if (score > best_score + kTieTol) {
            best_score = score;
            best = pi;
            co_optima.clear();
            co_optima.push_back(pi);
            return;
        }
        if (score >= best_score - kTieTol) {
            if (score > best_score) {
                best_score = score;
                best = pi;
            }
            if (co_optima.size() < kMaxCoOptima &&
                std::find(co_optima.begin(), co_optima.end(), pi) == co_optima.end())
                co_optima.push_back(pi);
        }
    }

    void merge(const BestTracker& other) {
        if (other.best_score > best_score + kTieTol) {
            *this = other;
            return;
        }
        if (other.best_score >= best_score - kTieTol) {
            if (other.best_score > best_score) {
                best_score = other.best_score;
                best = other.best;
            }
            for (const auto& pi : other.co_optima)
                if (co_optima.size() < kMaxCoOptima &&
                    std::find(co_optima.begin(), co_optima.end(), pi) == co_optima.end())
                    co_optima.push_back(pi);
        }
    }
};

// One cocktail move with the current score cached; returns the new score.
double cocktail_move(Partition& pi, double score, const SearchConfig& cfg, const Objective& objective,
                     Rng& rng) {
    const int n = pi.size();
    if (n <= 1) return score;

    const int u = rng.uniform_index(n);
    const int cur = pi.block_of(u);
    auto sizes = pi.block_sizes();
    --sizes[cur];

    // non-empty blocks after removing u, then maybe a fresh block
    std::vector<int> blocks;
    std::vector<double> w;
    blocks.reserve(sizes.size() + 1);
    for (int b = 0; b < pi.num_blocks(); ++b) {
        if (sizes[b] > 0) {
            blocks.push_back(b);
            w.push_back(sizes[b] + cfg.alpha_tilde);
        }
    }
    const int r = static_cast<int>(blocks.size());
    if (r < cfg.max_blocks) w.push_back(cfg.alpha_tilde * (cfg.max_blocks - r));

    const int pick = rng.categorical(w);
    const bool fresh = pick >= r;
    const int target = fresh ? pi.num_blocks() : blocks[pick];
    const bool was_singleton = sizes[cur] == 0;
    if ((!fresh && target == cur) || (fresh && was_singleton)) return score;  // proposal equals current state

    auto labels = pi.labels();
    labels[u] = target;
    Partition proposal(std::move(labels));
    const double proposed = objective(proposal);
    const double delta = proposed - score;
    if (delta >= 0 || rng.uniform01() < std::exp(delta)) {
        pi = std::move(proposal);
        return proposed;
    }
    return score;
}

struct RestartOutcome {
    BestTracker tracker;
    std::vector<std::pair<long, double>> trace;
    double final_best = 0;
};

RestartOutcome run_restart(int n, const Objective& objective, const SearchConfig& cfg, int restart_index) {
    Rng rng = Rng(cfg.seed).substream(1, static_cast<std::uint64_t>(restart_index));
    const ChainParams prop = cfg.proposal_params();

    RestartOutcome out;
    Partition pi = ewens_pitman_sample(n, prop, rng);
    double score = objective(pi);
    long step = 0;
    out.tracker.offer(pi, score);
    if (cfg.record_trace) out.trace.emplace_back(step, score);

    for (int g = 0; g < cfg.total_global_steps; ++g) {
        pi = cap_transition_sample(pi, prop, rng);
        assert(pi.num_blocks() <= cfg.max_blocks);
        score = objective(pi);
        ++step;
        out.tracker.offer(pi, score);
        if (cfg.record_trace) out.trace.emplace_back(step, score);

        for (int l = 0; l < cfg.local_moves_per_global; ++l) {
            score = cocktail_move(pi, score, cfg, objective, rng);
            assert(pi.num_blocks() <= cfg.max_blocks);
            ++step;
            out.tracker.offer(pi, score);
            if (cfg.record_trace) out.trace.emplace_back(step, score);
        }
    }
    out.final_best = out.tracker.best_score;
    return out;
}

}  // namespace

void SearchConfig::validate() const {
    if (max_blocks < 1) throw config_error("search max_blocks must be >= 1");
    if (!(alpha_tilde > 0)) throw config_error("search alpha_tilde must be > 0");
    if (local_moves_per_global < 1) throw config_error("search local_moves_per_global must be >= 1");
    if (total_global_steps < 1) throw config_error("search total_global_steps must be >= 1");
    if (restarts < 1) throw config_error("search restarts must be >= 1");
}

Partition cocktail_step(const Partition& pi, const SearchConfig& cfg, const Objective& objective, Rng& rng) {
    cfg.validate();
    if (pi.num_blocks() > cfg.max_blocks) throw data_error("partition exceeds the search block bound");
    Partition state = pi;
    cocktail_move(state, objective(state), cfg, objective, rng);
    return state;
}

Partition global_step(const Partition& pi, const SearchConfig& cfg, Rng& rng) {
    cfg.validate();
    if (pi.num_blocks() > cfg.max_blocks) throw data_error("partition exceeds the search block bound");
    return cap_transition_sample(pi, cfg.proposal_params(), rng);
}

SearchResult maximize(int n, const Objective& objective, const SearchConfig& cfg) {
    cfg.validate();
    if (n < 1) throw data_error("maximize requires n >= 1");

    std::vector<RestartOutcome> outcomes(cfg.restarts);
    if (cfg.parallel && cfg.restarts > 1) {
        std::vector<std::future<RestartOutcome>> futs;
        futs.reserve(cfg.restarts);
        for (int r = 0; r < cfg.restarts; ++r)
            futs.push_back(std::async(std::launch::async, run_restart, n, std::cref(objective), std::cref(cfg), r));
        for (int r = 0; r < cfg.restarts; ++r) outcomes[r] = futs[r].get();
    } else {
        for (int r = 0; r < cfg.restarts; ++r) outcomes[r] = run_restart(n, objective, cfg, r);
    }

    SearchResult res;
    BestTracker total;
    int best_restart = 0;
    for (int r = 0; r < cfg.restarts; ++r) {
        res.restart_scores.push_back(outcomes[r].final_best);
        if (outcomes[r].tracker.best_score > total.best_score + kTieTol) best_restart = r;
        total.merge(outcomes[r].tracker);
    }
    res.best_partition = total.best;
    res.best_score = total.best_score;
    res.co_optima = std::move(total.co_optima);
    if (cfg.record_trace) res.trace = std::move(outcomes[best_restart].trace);
    return res;
}

namespace {

struct NgState {
    // incremental Newman--Girvan bookkeeping over a dense symmetric weight matrix
    const std::vector<double>& w;
    int n, k;
    double total = 0;  // m: total edge weight over unordered pairs
    std::vector<double> deg, dsum, esum;
    std::vector<int> lab;

    NgState(const std::vector<double>& weights, int n_, int k_, std::vector<int> labels)
        : w(weights), n(n_), k(k_), deg(n_, 0.0), dsum(k_, 0.0), esum(k_, 0.0), lab(std::move(labels)) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) deg[i] += w[static_cast<std::size_t>(i) * n + j];
        for (int i = 0; i < n; ++i) total += deg[i];
        total /= 2.0;
        for (int i = 0; i < n; ++i) {
            dsum[lab[i]] += deg[i];
            for (int j = i + 1; j < n; ++j)
                if (lab[i] == lab[j]) esum[lab[i]] += w[static_cast<std::size_t>(i) * n + j];
        }
    }

    double q() const {
        double v = 0;
        for (int g = 0; g < k; ++g) v += esum[g] / total - (dsum[g] / (2 * total)) * (dsum[g] / (2 * total));
        return v;
    }

    // weight from vertex i into label g, excluding i itself
    double strength_to(int i, int g) const {
        double s = 0;
        for (int j = 0; j < n; ++j)
            if (j != i && lab[j] == g) s += w[static_cast<std::size_t>(i) * n + j];
        return s;
    }

    void move(int i, int g) {
        const int h = lab[i];
        if (g == h) return;
        esum[h] -= strength_to(i, h);
        dsum[h] -= deg[i];
        lab[i] = g;
        esum[g] += strength_to(i, g);
        dsum[g] += deg[i];
    }
};

}  // namespace

SearchResult label_switch_maximize(const std::vector<double>& weights, int n, int k,
                                   const SearchConfig& cfg, const LabelObjective& objective) {
    cfg.validate();
    if (n < 1) throw data_error("label_switch_maximize requires n >= 1");
    if (static_cast<int>(weights.size()) != n * n) throw data_error("weight matrix size mismatch");
    if (k < 1) throw config_error("label_switch_maximize requires k >= 1");

    double total = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) total += weights[static_cast<std::size_t>(i) * n + j];
    if (!objective && total <= 0) throw data_error("modularity is undefined on a network with no edges");

    SearchResult res;
    BestTracker tracker;
    for (int r = 0; r < cfg.restarts; ++r) {
        Rng rng = Rng(cfg.seed).substream(2, static_cast<std::uint64_t>(r));
        std::vector<int> lab(n);
        for (int i = 0; i < n; ++i) lab[i] = rng.uniform_index(k);

        double score;
        if (objective) {
            score = objective(lab);
            bool improved = true;
            while (improved) {
                improved = false;
                for (int i = 0; i < n; ++i) {
                    int best_g = lab[i];
                    double best_s = score;
                    const int old = lab[i];
                    for (int g = 0; g < k; ++g) {
                        if (g == old) continue;
                        lab[i] = g;
                        double s = objective(lab);
                        if (s > best_s + 1e-12) {
                            best_s = s;
                            best_g = g;
                        }
                    }
                    lab[i] = best_g;
                    if (best_g != old) {
                        score = best_s;
                        improved = true;
                    }
                }
            }
        } else {
            NgState st(weights, n, k, lab);
            bool improved = true;
            while (improved) {
                improved = false;
                for (int i = 0; i < n; ++i) {
                    const int old = st.lab[i];
                    // moving i to g changes Q by [s_g - s_old]/m - deg_i*(d_g - d_old + deg_i)/(2m^2)
                    double s_old = st.strength_to(i, old);
                    int best_g = old;
                    double best_gain = 0;
                    for (int g = 0; g < st.k; ++g) {
                        if (g == old) continue;
                        double gain = (st.strength_to(i, g) - s_old) / st.total -
                                      st.deg[i] * (st.dsum[g] - st.dsum[old] + st.deg[i]) /
                                          (2.0 * st.total * st.total);
                        if (gain > best_gain + 1e-12) {
                            best_gain = gain;
                            best_g = g;
                        }
                    }
                    if (best_g != old) {
                        st.move(i, best_g);
                        improved = true;
                    }
                }
            }
            lab = st.lab;
            score = st.q();
        }
        tracker.offer(Partition(lab), score);
        res.restart_scores.push_back(score);
    }
    res.best_partition = tracker.best;
    res.best_score = tracker.best_score;
    res.co_optima = std::move(tracker.co_optima);
    return res;
}

}  // namespace interclust
