#include "interclust/network.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "interclust/errors.hpp"

namespace interclust {

int ProjectedNetwork::edge_count() const {
    int e = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (edge(i, j)) ++e;
    return e;
}

std::vector<int> ProjectedNetwork::isolated() const {
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
        bool any = false;
        for (int j = 0; j < n && !any; ++j)
            if (j != i && edge(i, j)) any = true;
        if (!any) out.push_back(i);
    }
    return out;
}

std::vector<double> ProjectedNetwork::weight_matrix() const {
    std::vector<double> w(static_cast<std::size_t>(n) * n, 0.0);
    for (std::size_t i = 0; i < adj.size(); ++i) w[i] = adj[i] ? 1.0 : 0.0;
    return w;
}

double threshold_value(const InteractionArray& a, ThresholdKind kind, int i, int j) {
    if (kind == ThresholdKind::RawCount) {
        if (a.kind() != ArrayKind::Count) throw data_error("raw-count threshold requires a count array");
        return a.count(i, j);
    }
    if (a.kind() != ArrayKind::TrialsAgreements)
        throw data_error("agreement-ratio threshold requires a trials-agreements array");
    double t = a.trials(i, j);
    return t > 0 ? a.agreements(i, j) / t : 0.0;
}

ProjectedNetwork project(const InteractionArray& a, ThresholdKind kind, double cutoff) {
    ProjectedNetwork net;
    net.n = a.size();
    net.cutoff = cutoff;
    net.kind = kind;
    net.adj.assign(static_cast<std::size_t>(net.n) * net.n, 0);
    for (int i = 0; i < net.n; ++i)
        for (int j = i + 1; j < net.n; ++j)
            if (threshold_value(a, kind, i, j) > cutoff) {
                net.adj[static_cast<std::size_t>(i) * net.n + j] = 1;
                net.adj[static_cast<std::size_t>(j) * net.n + i] = 1;
            }
    return net;
}

std::optional<double> ng_modularity(const std::vector<double>& weights, int n, const Partition& b) {
    if (b.size() != n) throw data_error("partition does not cover the network");
    double m = 0;
    std::vector<double> deg(n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) deg[i] += weights[static_cast<std::size_t>(i) * n + j];
    m = std::accumulate(deg.begin(), deg.end(), 0.0) / 2.0;
    if (m <= 0) return std::nullopt;

    std::vector<double> e(b.num_blocks(), 0.0), d(b.num_blocks(), 0.0);
    for (int i = 0; i < n; ++i) {
        d[b.block_of(i)] += deg[i];
        for (int j = i + 1; j < n; ++j)
            if (b.same_block(i, j)) e[b.block_of(i)] += weights[static_cast<std::size_t>(i) * n + j];
    }
    double q = 0;
    for (int g = 0; g < b.num_blocks(); ++g) q += e[g] / m - (d[g] / (2 * m)) * (d[g] / (2 * m));
    return q;
}

std::optional<double> ng_modularity(const ProjectedNetwork& net, const Partition& b) {
    return ng_modularity(net.weight_matrix(), net.n, b);
}

ClassificationReport classification_report(const Partition& inferred, const Partition& reference,
                                           const std::vector<int>& isolated) {
    if (inferred.size() != reference.size()) throw data_error("partitions cover different entity sets");
    std::vector<bool> iso(inferred.size(), false);
    for (int i : isolated) {
        if (i < 0 || i >= inferred.size()) throw data_error("isolated entity index out of range");
        iso[i] = true;
    }

    const int k = std::max(inferred.num_blocks(), reference.num_blocks());
    if (k > 10) throw data_error("classification_report supports at most 10 blocks");

    // overlap counts between inferred and reference blocks over non-isolated entities
    std::vector<std::vector<int>> overlap(k, std::vector<int>(k, 0));
    int classified = 0;
    for (int i = 0; i < inferred.size(); ++i) {
        if (iso[i]) continue;
        ++overlap[inferred.block_of(i)][reference.block_of(i)];
        ++classified;
    }

    // minimize wrong assignments over label bijections
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    int best_correct = -1;
    do {
        int correct = 0;
        for (int g = 0; g < k; ++g) correct += overlap[g][perm[g]];
        best_correct = std::max(best_correct, correct);
    } while (std::next_permutation(perm.begin(), perm.end()));

    ClassificationReport rep;
    rep.misclassified = classified - best_correct;
    rep.nonclassified = static_cast<int>(isolated.size());
    return rep;
}

double percentile_cutoff(const InteractionArray& a, ThresholdKind kind, double percentile,
                         PercentileRule rule) {
    if (percentile < 0 || percentile > 100) throw config_error("percentile must be in [0, 100]");
    std::vector<double> vals;
    const int n = a.size();
    vals.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) vals.push_back(threshold_value(a, kind, i, j));
    std::sort(vals.begin(), vals.end());
    const auto N = static_cast<long>(vals.size());

    if (rule == PercentileRule::NearestRank) {
        long rank = static_cast<long>(std::ceil(percentile / 100.0 * N));
        rank = std::clamp(rank, 1L, N);
        return vals[rank - 1];
    }
    // linear interpolation between closest ranks
    double h = (N - 1) * percentile / 100.0;
    long lo = static_cast<long>(std::floor(h));
    long hi = std::min(lo + 1, N - 1);
    return vals[lo] + (h - lo) * (vals[hi] - vals[lo]);
}

SweepReport percentile_sweep(const InteractionArray& a, const std::vector<double>& percentiles,
                             const Partition& reference, const SearchConfig& cfg, PercentileRule rule) {
    if (a.kind() != ArrayKind::TrialsAgreements)
        throw data_error("percentile_sweep requires a trials-agreements array");
    cfg.validate();

    SweepReport report;
    for (std::size_t idx = 0; idx < percentiles.size(); ++idx) {
        const double p = percentiles[idx];
        SweepRow row;
        row.percentile = p;
        row.cutoff = percentile_cutoff(a, ThresholdKind::AgreementRatio, p, rule);
        ProjectedNetwork net = project(a, ThresholdKind::AgreementRatio, row.cutoff);

        auto iso = net.isolated();
        if (net.edge_count() == 0) {
            // nothing to optimize; every entity is unclassifiable
            row.misclassified = 0;
            row.nonclassified = a.size();
        } else {
            SearchConfig row_cfg = cfg;
            row_cfg.seed = Rng(cfg.seed).substream(3, idx).seed();
            auto result = label_switch_maximize(net.weight_matrix(), net.n, cfg.max_blocks, row_cfg);
            auto rep = classification_report(result.best_partition, reference, iso);
            row.misclassified = rep.misclassified;
            row.nonclassified = rep.nonclassified;
        }
        row.total = row.misclassified + row.nonclassified;
        report.rows.push_back(row);
    }
    return report;
}

void SweepReport::write_csv(std::ostream& out, std::span<const std::string> header_comments) const {
    for (const auto& c : header_comments) out << "# " << c << '\n';
    out << "percentile,cutoff,misclassified,nonclassified,total\n";
    for (const auto& r : rows)
        out << r.percentile << ',' << r.cutoff << ',' << r.misclassified << ',' << r.nonclassified
            << ',' << r.total << '\n';
}

}  // namespace interclust
