#include "interclust/ewens.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "interclust/errors.hpp"

namespace interclust {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

void ChainParams::validate() const {
    if (!(alpha > 0)) throw config_error("chain parameter alpha must be > 0");
    if (max_blocks < 1) throw config_error("chain parameter max_blocks must be >= 1");
}

double log_rising(double a, int j) {
    if (j == 0) return 0.0;
    return std::lgamma(a + j) - std::lgamma(a);
}

double log_falling(int k, int j) {
    if (j > k) return kNegInf;
    if (j == 0) return 0.0;
    return std::lgamma(k + 1.0) - std::lgamma(k - j + 1.0);
}

double ewens_pitman_log_prob(const Partition& pi, const ChainParams& params) {
    params.validate();
    const int n = pi.size();
    if (n < 1) throw data_error("partition over an empty entity set");
    if (pi.num_blocks() > params.max_blocks) return kNegInf;

    // summation in sorted order keeps the value exactly invariant under
    // entity relabeling (same multiset of terms, same order)
    auto sizes = pi.block_sizes();
    std::sort(sizes.begin(), sizes.end());
    double lp = log_falling(params.max_blocks, pi.num_blocks());
    for (int s : sizes) lp += log_rising(params.alpha, s);
    lp -= log_rising(params.alpha * params.max_blocks, n);
    return lp;
}

std::vector<double> crp_seat_weights(const std::vector<int>& block_sizes, const ChainParams& params) {
    std::vector<double> w;
    w.reserve(block_sizes.size() + 1);
    for (int s : block_sizes) w.push_back(s + params.alpha);
    if (static_cast<int>(block_sizes.size()) < params.max_blocks)
        w.push_back(params.alpha * (params.max_blocks - static_cast<int>(block_sizes.size())));
    return w;
}

Partition ewens_pitman_sample(int n, const ChainParams& params, Rng& rng) {
    params.validate();
    if (n < 1) throw data_error("ewens_pitman_sample requires n >= 1");

    std::vector<int> labels(n);
    std::vector<int> sizes;
    labels[0] = 0;
    sizes.push_back(1);
    for (int i = 1; i < n; ++i) {
        auto w = crp_seat_weights(sizes, params);
        int pick = rng.categorical(w);
        if (pick < static_cast<int>(sizes.size())) {
            labels[i] = pick;
            ++sizes[pick];
        } else {
            labels[i] = static_cast<int>(sizes.size());
            sizes.push_back(1);
        }
    }
    return Partition(std::move(labels));
}

double cap_transition_log_prob(const Partition& pi, const Partition& pi_next, const ChainParams& params) {
    params.validate();
    if (pi.size() != pi_next.size()) throw data_error("transition between partitions of different sizes");
    if (pi.num_blocks() > params.max_blocks) throw data_error("source partition exceeds the block bound");
    if (pi_next.num_blocks() > params.max_blocks) return kNegInf;

    const int r = pi.num_blocks();
    const int r2 = pi_next.num_blocks();
    // intersection sizes #(b & b')
    std::vector<int> inter(static_cast<std::size_t>(r) * r2, 0);
    for (int i = 0; i < pi.size(); ++i)
        ++inter[static_cast<std::size_t>(pi.block_of(i)) * r2 + pi_next.block_of(i)];

    // sorted accumulation for exact invariance under entity relabeling
    std::vector<int> cells;
    cells.reserve(inter.size());
    for (int c : inter)
        if (c > 0) cells.push_back(c);
    std::sort(cells.begin(), cells.end());
    auto sizes = pi.block_sizes();
    std::sort(sizes.begin(), sizes.end());

    const double frag_alpha = params.alpha / params.max_blocks;
    double lp = log_falling(params.max_blocks, r2);
    for (int c : cells) lp += log_rising(frag_alpha, c);
    for (int s : sizes) lp -= log_rising(params.alpha, s);
    return lp;
}

Partition cap_transition_sample(const Partition& pi, const ChainParams& params, Rng& rng) {
    params.validate();
    if (pi.num_blocks() > params.max_blocks) throw data_error("source partition exceeds the block bound");

    const int k = params.max_blocks;
    const ChainParams frag{params.alpha / k, k};
    std::vector<int> labels(pi.size());
    std::vector<int> label_pool(k);

    for (const auto& block : pi.blocks()) {
        const int m = static_cast<int>(block.size());
        Partition sub = ewens_pitman_sample(m, frag, rng);

        // uniform distinct labels for the fragments: partial Fisher-Yates over {0..k-1}
        for (int i = 0; i < k; ++i) label_pool[i] = i;
        for (int f = 0; f < sub.num_blocks(); ++f) {
            int j = f + rng.uniform_index(k - f);
            std::swap(label_pool[f], label_pool[j]);
        }
        for (int i = 0; i < m; ++i) labels[block[i]] = label_pool[sub.block_of(i)];
    }
    return Partition(std::move(labels));
}

}  // namespace interclust
