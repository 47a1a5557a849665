#include "interclust/simulate.hpp"

#include "interclust/errors.hpp"

namespace interclust {

InteractionArray simulate_poisson(const Partition& planted, double lambda_in, double lambda_out, Rng& rng) {
    if (lambda_in < 0 || lambda_out < 0) throw config_error("Poisson intensities must be non-negative");
    const int n = planted.size();
    auto arr = InteractionArray::counts(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            arr.set_count(i, j, static_cast<double>(
                                    rng.poisson(planted.same_block(i, j) ? lambda_in : lambda_out)));
    return arr;
}

InteractionArray simulate_binomial(const Partition& planted, long trials_per_pair, double p_in,
                                   double p_out, Rng& rng) {
    if (trials_per_pair < 0) throw config_error("trials_per_pair must be non-negative");
    if (p_in < 0 || p_in > 1 || p_out < 0 || p_out > 1)
        throw config_error("success probabilities must lie in [0,1]");
    const int n = planted.size();
    auto arr = InteractionArray::trials_agreements(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double p = planted.same_block(i, j) ? p_in : p_out;
            arr.set_pair(i, j, static_cast<double>(trials_per_pair),
                         static_cast<double>(rng.binomial(trials_per_pair, p)));
        }
    return arr;
}

TemporalSeries simulate_temporal(const std::vector<Partition>& planted, long trials_per_pair,
                                 double p_in, double p_out, Rng& rng) {
    if (planted.empty()) throw config_error("simulate_temporal needs at least one term");
    TemporalSeries series;
    for (std::size_t t = 0; t < planted.size(); ++t) {
        if (planted[t].size() != planted[0].size())
            throw config_error("simulate_temporal requires a constant roster");
        Term term{"t" + std::to_string(t), simulate_binomial(planted[t], trials_per_pair, p_in, p_out, rng)};
        series.terms.push_back(std::move(term));
    }
    return series;
}

}  // namespace interclust
