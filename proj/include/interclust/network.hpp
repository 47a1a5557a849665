#ifndef INTERCLUST_NETWORK_HPP
#define INTERCLUST_NETWORK_HPP

#include <optional>
#include <string>
#include <vector>

#include "interclust/interaction.hpp"
#include "interclust/partition.hpp"
#include "interclust/search.hpp"

namespace interclust {

enum class ThresholdKind { RawCount, AgreementRatio };

/// Binary network obtained by thresholding: edge iff t(A_ij) > cutoff
/// (strict). RawCount uses the count itself; AgreementRatio uses
/// agreements/trials with t = 0 for pairs that share no trials.
struct ProjectedNetwork {
    int n = 0;
    std::vector<std::uint8_t> adj;  // dense symmetric, zero diagonal
    double cutoff = 0;
    ThresholdKind kind = ThresholdKind::RawCount;

    bool edge(int i, int j) const { return adj[static_cast<std::size_t>(i) * n + j] != 0; }
    int edge_count() const;
    std::vector<int> isolated() const;
    std::vector<double> weight_matrix() const;  // 0/1 doubles for the optimizers
};

double threshold_value(const InteractionArray& a, ThresholdKind kind, int i, int j);

ProjectedNetwork project(const InteractionArray& a, ThresholdKind kind, double cutoff);

/// Newman--Girvan modularity Q = sum_g [e_gg/m - (d_g/2m)^2] over a dense
/// symmetric weight matrix; nullopt when the network carries no weight.
std::optional<double> ng_modularity(const std::vector<double>& weights, int n, const Partition& b);
std::optional<double> ng_modularity(const ProjectedNetwork& net, const Partition& b);

struct ClassificationReport {
    int misclassified = 0;
    int nonclassified = 0;
    int total() const { return misclassified + nonclassified; }
};

/// Misclassified counts non-isolated entities in the wrong reference block,
/// minimized over bijections between inferred and reference block labels;
/// nonclassified counts the isolated entities.
ClassificationReport classification_report(const Partition& inferred, const Partition& reference,
                                           const std::vector<int>& isolated);

enum class PercentileRule { NearestRank, Linear };

/// Cutoff at percentile p of the off-diagonal threshold values (nearest-rank
/// on the sorted multiset by default).
double percentile_cutoff(const InteractionArray& a, ThresholdKind kind, double percentile,
                         PercentileRule rule = PercentileRule::NearestRank);

struct SweepRow {
    double percentile = 0;
    double cutoff = 0;
    int misclassified = 0;
    int nonclassified = 0;
    int total = 0;
};

struct SweepReport {
    std::vector<SweepRow> rows;
    void write_csv(std::ostream& out, std::span<const std::string> header_comments = {}) const;
};

/// For each percentile: project at that cutoff, maximize Newman--Girvan
/// modularity with label switching (k blocks from cfg), classify against the
/// reference. Rows are independent; each owns a seed substream.
SweepReport percentile_sweep(const InteractionArray& a, const std::vector<double>& percentiles,
                             const Partition& reference, const SearchConfig& cfg,
                             PercentileRule rule = PercentileRule::NearestRank);

}  // namespace interclust

#endif
