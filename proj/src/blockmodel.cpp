#include "interclust/blockmodel.hpp"

#include <cmath>
#include <limits>
#include <memory>

#include "interclust/errors.hpp"

namespace interclust {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double log_choose(double n, double v) {
    return std::lgamma(n + 1) - std::lgamma(v + 1) - std::lgamma(n - v + 1);
}

// a*log(lambda) - lambda - log(a!) with the 0*log0 convention
double poisson_term(double a, double lambda) {
    double t = -lambda - std::lgamma(a + 1);
    if (a > 0) {
        if (lambda <= 0) return kNegInf;
        t += a * std::log(lambda);
    }
    return t;
}

// log C(n,v) + v*log p + (n-v)*log(1-p); zero-trials pairs contribute zero
double binomial_term(double n, double v, double p) {
    if (n <= 0) return 0.0;
    double t = log_choose(n, v);
    if (v > 0) {
        if (p <= 0) return kNegInf;
        t += v * std::log(p);
    }
    if (n - v > 0) {
        if (p >= 1) return kNegInf;
        t += (n - v) * std::log1p(-p);
    }
    return t;
}

// visit each scored pair once: unordered i<j for symmetric arrays, ordered
// i != j otherwise
template <typename F>
void for_each_pair(const InteractionArray& a, F&& f) {
    const int n = a.size();
    if (a.symmetric()) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) f(i, j);
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) f(i, j);
    }
}

void check_cover(const InteractionArray& a, const Partition& b) {
    if (a.size() != b.size()) throw data_error("partition does not cover the interaction array");
}

double stratum_log_lik(double S, double N) {
    // profiled Poisson stratum: S*log(S/N) - S, zero when the stratum is empty
    if (N <= 0 || S <= 0) return -S;
    return S * std::log(S / N) - S;
}

double binomial_stratum_log_lik(double V, double N) {
    if (N <= 0) return 0.0;
    double r = 0.0;
    if (V > 0) r += V * std::log(V / N);
    if (N - V > 0) r += (N - V) * std::log((N - V) / N);
    return r;
}

}  // namespace

double poisson_log_lik(const InteractionArray& a, const Partition& b, const PoissonParams& params) {
    if (a.kind() != ArrayKind::Count) throw data_error("poisson_log_lik requires a count array");
    check_cover(a, b);
    double ll = 0.0;
    for_each_pair(a, [&](int i, int j) {
        double lambda;
        if (params.general) {
            lambda = (*params.general)[b.block_of(i)][b.block_of(j)];
        } else {
            auto& opt = b.same_block(i, j) ? params.lambda_in : params.lambda_out;
            if (!opt) return;  // stratum without an estimate carries no score
            lambda = *opt;
        }
        if (std::isnan(lambda)) return;
        ll += poisson_term(a.count(i, j), lambda);
    });
    return ll;
}

PoissonParams poisson_mle(const InteractionArray& a, const Partition& b) {
    if (a.kind() != ArrayKind::Count) throw data_error("poisson_mle requires a count array");
    check_cover(a, b);
    double Sw = 0, Sb = 0;
    long Nw = 0, Nb = 0;
    for_each_pair(a, [&](int i, int j) {
        if (b.same_block(i, j)) {
            Sw += a.count(i, j);
            ++Nw;
        } else {
            Sb += a.count(i, j);
            ++Nb;
        }
    });
    PoissonParams p;
    if (Nw > 0) p.lambda_in = Sw / Nw;
    if (Nb > 0) p.lambda_out = Sb / Nb;
    return p;
}

PoissonParams poisson_mle_general(const InteractionArray& a, const Partition& b) {
    if (a.kind() != ArrayKind::Count) throw data_error("poisson_mle_general requires a count array");
    check_cover(a, b);
    const int k = b.num_blocks();
    BlockMatrix sum(k, std::vector<double>(k, 0.0)), cnt(k, std::vector<double>(k, 0.0));
    for_each_pair(a, [&](int i, int j) {
        int g = b.block_of(i), h = b.block_of(j);
        sum[g][h] += a.count(i, j);
        cnt[g][h] += 1;
        if (a.symmetric() && g != h) {
            sum[h][g] += a.count(i, j);
            cnt[h][g] += 1;
        }
    });
    BlockMatrix lam(k, std::vector<double>(k, kNaN));
    for (int g = 0; g < k; ++g)
        for (int h = 0; h < k; ++h)
            if (cnt[g][h] > 0) lam[g][h] = sum[g][h] / cnt[g][h];
    PoissonParams p;
    p.general = std::move(lam);
    return p;
}

double binomial_log_lik(const InteractionArray& a, const Partition& b, const BinomialParams& params) {
    if (a.kind() != ArrayKind::TrialsAgreements)
        throw data_error("binomial_log_lik requires a trials-agreements array");
    check_cover(a, b);
    double ll = 0.0;
    for_each_pair(a, [&](int i, int j) {
        if (a.trials(i, j) <= 0) return;
        double p;
        if (params.general) {
            p = (*params.general)[b.block_of(i)][b.block_of(j)];
        } else {
            auto& opt = b.same_block(i, j) ? params.p_in : params.p_out;
            if (!opt) return;
            p = *opt;
        }
        if (std::isnan(p)) return;
        ll += binomial_term(a.trials(i, j), a.agreements(i, j), p);
    });
    return ll;
}

BinomialParams binomial_mle(const InteractionArray& a, const Partition& b) {
    if (a.kind() != ArrayKind::TrialsAgreements)
        throw data_error("binomial_mle requires a trials-agreements array");
    check_cover(a, b);
    double Vw = 0, Nw = 0, Vb = 0, Nb = 0;
    for_each_pair(a, [&](int i, int j) {
        if (b.same_block(i, j)) {
            Vw += a.agreements(i, j);
            Nw += a.trials(i, j);
        } else {
            Vb += a.agreements(i, j);
            Nb += a.trials(i, j);
        }
    });
    BinomialParams p;
    if (Nw > 0) p.p_in = Vw / Nw;
    if (Nb > 0) p.p_out = Vb / Nb;
    return p;
}

BinomialParams binomial_mle_general(const InteractionArray& a, const Partition& b) {
    if (a.kind() != ArrayKind::TrialsAgreements)
        throw data_error("binomial_mle_general requires a trials-agreements array");
    check_cover(a, b);
    const int k = b.num_blocks();
    BlockMatrix vs(k, std::vector<double>(k, 0.0)), ns(k, std::vector<double>(k, 0.0));
    for_each_pair(a, [&](int i, int j) {
        int g = b.block_of(i), h = b.block_of(j);
        vs[g][h] += a.agreements(i, j);
        ns[g][h] += a.trials(i, j);
        if (a.symmetric() && g != h) {
            vs[h][g] += a.agreements(i, j);
            ns[h][g] += a.trials(i, j);
        }
    });
    BlockMatrix pm(k, std::vector<double>(k, kNaN));
    for (int g = 0; g < k; ++g)
        for (int h = 0; h < k; ++h)
            if (ns[g][h] > 0) pm[g][h] = vs[g][h] / ns[g][h];
    BinomialParams p;
    p.general = std::move(pm);
    return p;
}

Objective make_profiled_objective(const InteractionArray& a) {
    struct Pair {
        int i, j;
        double x, v;
    };
    auto pairs = std::make_shared<std::vector<Pair>>();
    double constant = 0.0;

    if (a.kind() == ArrayKind::Count) {
        for_each_pair(a, [&](int i, int j) {
            pairs->push_back({i, j, a.count(i, j), 0.0});
            constant -= std::lgamma(a.count(i, j) + 1);
        });
        return [pairs, constant](const Partition& b) {
            double Sw = 0, Sb = 0;
            long Nw = 0, Nb = 0;
            for (const auto& p : *pairs) {
                if (b.same_block(p.i, p.j)) {
                    Sw += p.x;
                    ++Nw;
                } else {
                    Sb += p.x;
                    ++Nb;
                }
            }
            return stratum_log_lik(Sw, static_cast<double>(Nw)) +
                   stratum_log_lik(Sb, static_cast<double>(Nb)) + constant;
        };
    }

    for_each_pair(a, [&](int i, int j) {
        if (a.trials(i, j) <= 0) return;
        pairs->push_back({i, j, a.trials(i, j), a.agreements(i, j)});
        constant += log_choose(a.trials(i, j), a.agreements(i, j));
    });
    return [pairs, constant](const Partition& b) {
        double Vw = 0, Nw = 0, Vb = 0, Nb = 0;
        for (const auto& p : *pairs) {
            if (b.same_block(p.i, p.j)) {
                Vw += p.v;
                Nw += p.x;
            } else {
                Vb += p.v;
                Nb += p.x;
            }
        }
        return binomial_stratum_log_lik(Vw, Nw) + binomial_stratum_log_lik(Vb, Nb) + constant;
    };
}

double profiled_objective(const InteractionArray& a, const Partition& b) {
    check_cover(a, b);
    return make_profiled_objective(a)(b);
}

}  // namespace interclust
