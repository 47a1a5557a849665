#ifndef INTERCLUST_BLOCKMODEL_HPP
#define INTERCLUST_BLOCKMODEL_HPP

#include <functional>
#include <optional>
#include <vector>

#include "interclust/interaction.hpp"
#include "interclust/partition.hpp"

namespace interclust {

/// Block-pair parameter table for the general model variants, indexed by the
/// (row block, column block) of a pair.
using BlockMatrix = std::vector<std::vector<double>>;

/// Two-parameter Poisson intensities; a stratum with no pairs under the fitted
/// partition leaves its estimate unset. The optional general table overrides
/// the two-parameter form when present.
struct PoissonParams {
    std::optional<double> lambda_in;
    std::optional<double> lambda_out;
    std::optional<BlockMatrix> general;

    static PoissonParams two(double in, double out) { return {in, out, std::nullopt}; }
};

struct BinomialParams {
    std::optional<double> p_in;
    std::optional<double> p_out;
    std::optional<BlockMatrix> general;

    static BinomialParams two(double in, double out) { return {in, out, std::nullopt}; }
};

/// Log-likelihood of a count array under the Poisson blockmodel, summed over
/// unordered pairs i<j; includes the -log(a!) constant. Conventions:
/// 0*log 0 = 0; lambda = 0 with a positive count gives -inf.
double poisson_log_lik(const InteractionArray& a, const Partition& b, const PoissonParams& params);

/// Profiled two-parameter MLE: stratum means of the counts.
PoissonParams poisson_mle(const InteractionArray& a, const Partition& b);

/// General block-pair MLE (per block-pair means).
PoissonParams poisson_mle_general(const InteractionArray& a, const Partition& b);

/// Log-likelihood of a trials-agreements array under the Binomial blockmodel;
/// includes the log C(n, v) constant; pairs with zero trials contribute zero.
double binomial_log_lik(const InteractionArray& a, const Partition& b, const BinomialParams& params);

/// Pooled-proportion MLE per stratum; pairs with zero trials excluded.
BinomialParams binomial_mle(const InteractionArray& a, const Partition& b);

BinomialParams binomial_mle_general(const InteractionArray& a, const Partition& b);

/// g(B) = log-likelihood at the family's profiled MLE; the scalar the
/// partition search maximizes. Family chosen by the array kind.
double profiled_objective(const InteractionArray& a, const Partition& b);

/// Same objective as a reusable closure with per-array precomputation;
/// this is what the search loops call.
using Objective = std::function<double(const Partition&)>;
Objective make_profiled_objective(const InteractionArray& a);

}  // namespace interclust

#endif
