#ifndef INTERCLUST_EWENS_HPP
#define INTERCLUST_EWENS_HPP

#include <vector>

#include "interclust/partition.hpp"
#include "interclust/rng.hpp"

namespace interclust {

/// Parameters of the bounded-block Ewens--Pitman family and of the
/// cut-and-paste transition kernel: intensity alpha > 0 and a hard cap
/// max_blocks (k) on the number of blocks.
struct ChainParams {
    double alpha = 1.0;
    int max_blocks = 2;

    void validate() const;
};

/// log P(pi) under the Ewens--Pitman(-alpha, k*alpha) law on partitions with
/// at most k blocks:  k^(falling #pi) * prod_b alpha^(rising #b) / (alpha*k)^(rising n).
/// Returns -inf when #pi exceeds k.
double ewens_pitman_log_prob(const Partition& pi, const ChainParams& params);

/// Sequential Chinese-restaurant draw with the stationarity-consistent seating
/// rule: an entity joins an existing block b with weight #b + alpha and opens a
/// new block with weight alpha * (k - #blocks). Marginal law is the
/// Ewens--Pitman distribution above.
Partition ewens_pitman_sample(int n, const ChainParams& params, Rng& rng);

/// Seating weights for inserting one more entity given the current partition;
/// index i < num_blocks targets block i, the last entry (present only when
/// #blocks < k) opens a new block. Exposed for the cocktail move and for
/// roster extension in the temporal model.
std::vector<double> crp_seat_weights(const std::vector<int>& block_sizes, const ChainParams& params);

/// log P(pi -> pi_next) of the Ewens cut-and-paste kernel:
/// k^(falling #pi') * prod_{b in pi} prod_{b' in pi'} (alpha/k)^(rising #(b & b')) / alpha^(rising #b).
/// Returns -inf when #pi' exceeds k. Rows sum to one over all pi' with <= k blocks.
double cap_transition_log_prob(const Partition& pi, const Partition& pi_next, const ChainParams& params);

/// One generative transition of the cut-and-paste chain: fragment each block by
/// an Ewens--Pitman(alpha/k, k) draw, label every fragment uniformly without
/// replacement in {1..k} (independently across parent blocks), merge equal
/// labels. Distributed according to cap_transition_log_prob.
Partition cap_transition_sample(const Partition& pi, const ChainParams& params, Rng& rng);

// log rising factorial a^(j) = a(a+1)...(a+j-1), a > 0
double log_rising(double a, int j);
// log falling factorial k^(j) = k(k-1)...(k-j+1); -inf when j > k
double log_falling(int k, int j);

}  // namespace interclust

#endif
