#ifndef INTERCLUST_SIMULATE_HPP
#define INTERCLUST_SIMULATE_HPP

#include "interclust/interaction.hpp"
#include "interclust/partition.hpp"
#include "interclust/rng.hpp"
#include "interclust/temporal.hpp"

namespace interclust {

/// Symmetric count array with Poisson cells at the planted partition's
/// within/between intensities.
InteractionArray simulate_poisson(const Partition& planted, double lambda_in, double lambda_out, Rng& rng);

/// Symmetric trials-agreements array: every pair gets trials_per_pair trials
/// with the planted within/between success probabilities.
InteractionArray simulate_binomial(const Partition& planted, long trials_per_pair, double p_in,
                                   double p_out, Rng& rng);

/// One Binomial array per planted partition, constant roster.
TemporalSeries simulate_temporal(const std::vector<Partition>& planted, long trials_per_pair,
                                 double p_in, double p_out, Rng& rng);

}  // namespace interclust

#endif
