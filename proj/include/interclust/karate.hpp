#ifndef INTERCLUST_KARATE_HPP
#define INTERCLUST_KARATE_HPP

#include "interclust/interaction.hpp"
#include "interclust/partition.hpp"

namespace interclust {

/// Bundled 34-member karate club interaction counts (Zachary 1977). The table
/// is embedded and checksummed; projecting at cutoff 0 yields the standard
/// 78-edge unweighted club network.
const InteractionArray& karate_counts();

/// The two-faction membership recorded by Zachary's study, block 0 holding
/// the instructor's side.
const Partition& karate_reference_split();

}  // namespace interclust

#endif
