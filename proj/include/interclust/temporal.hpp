#ifndef INTERCLUST_TEMPORAL_HPP
#define INTERCLUST_TEMPORAL_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "interclust/blockmodel.hpp"
#include "interclust/ewens.hpp"
#include "interclust/interaction.hpp"
#include "interclust/partition.hpp"
#include "interclust/search.hpp"

namespace interclust {

/// One time step: a roster of entity ids and a trials-agreements array over
/// exactly that roster (array ids are the roster).
struct Term {
    std::string id;
    InteractionArray array;

    const std::vector<std::string>& roster() const { return array.ids(); }
};

struct TemporalSeries {
    std::vector<Term> terms;
};

struct FittedTerm {
    std::string id;
    std::vector<std::string> roster;
    Partition partition;
    BinomialParams params;
    double score = 0;  // log prior + profiled emission at the mode
};

struct ClusterSequence {
    std::vector<FittedTerm> terms;
    double joint_score = 0;

    /// Term-by-entity table matching the usual presentation: rows are entities
    /// (union of rosters in first-seen order), columns are terms, cells hold a
    /// display block symbol, blank when absent. Display labels are matched
    /// across terms by block overlap.
    void write_csv(std::ostream& out, std::span<const std::string> header_comments = {}) const;
    std::string format_table() const;
};

/// Posterior mode for the first term: maximize log EwensPitman(pi; params) +
/// profiled Binomial log-likelihood via the randomized search.
std::pair<Partition, BinomialParams> fit_initial(const Term& term, const ChainParams& params,
                                                 const SearchConfig& cfg);

/// Posterior mode for a subsequent term: restrict the previous partition to
/// the shared roster, extend to new members by the Chinese-restaurant
/// conditional seating (consuming align_rng), use the cut-and-paste transition
/// from the aligned state as prior, maximize prior + profiled emission.
std::pair<Partition, BinomialParams> fit_next(const std::vector<std::string>& prev_roster,
                                              const Partition& prev, const Term& term,
                                              const ChainParams& params, const SearchConfig& cfg,
                                              Rng& align_rng);

/// Sequential fit over all terms; when polish is set, single-entity
/// single-term reassignments that raise the joint score are applied to a
/// fixed point. Deterministic given cfg.seed.
ClusterSequence fit_sequence(const TemporalSeries& series, const ChainParams& params, bool polish,
                             const SearchConfig& cfg);

}  // namespace interclust

#endif
