#include "interclust/temporal.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "interclust/errors.hpp"

namespace interclust {

namespace {

// Carry the previous clustering onto a new roster: keep shared members'
// blocks, seat each new member by the Chinese-restaurant conditional rule.
Partition align_to_roster(const std::vector<std::string>& prev_roster, const Partition& prev,
                          const std::vector<std::string>& roster, const ChainParams& params, Rng& rng) {
    std::map<std::string, int> prev_index;
    for (std::size_t i = 0; i < prev_roster.size(); ++i) prev_index[prev_roster[i]] = static_cast<int>(i);

    const int n = static_cast<int>(roster.size());
    std::vector<int> labels(n, -1);
    std::vector<int> sizes;
    int shared = 0;

    // shared members keep their block structure (labels re-derived canonically below)
    std::map<int, int> block_remap;
    for (int i = 0; i < n; ++i) {
        auto it = prev_index.find(roster[i]);
        if (it == prev_index.end()) continue;
        int old_block = prev.block_of(it->second);
        auto [mit, inserted] = block_remap.emplace(old_block, static_cast<int>(sizes.size()));
        if (inserted) sizes.push_back(0);
        labels[i] = mit->second;
        ++sizes[mit->second];
        ++shared;
    }
    if (shared == 0) throw data_error("consecutive rosters share no members");

    for (int i = 0; i < n; ++i) {
        if (labels[i] != -1) continue;
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

Objective make_posterior(const Objective& emission, const ChainParams& params,
                         const Partition* aligned_prev) {
    if (aligned_prev == nullptr) {
        return [emission, params](const Partition& pi) {
            return ewens_pitman_log_prob(pi, params) + emission(pi);
        };
    }
    Partition anchor = *aligned_prev;
    return [emission, params, anchor](const Partition& pi) {
        return cap_transition_log_prob(anchor, pi, params) + emission(pi);
    };
}

}  // namespace

std::pair<Partition, BinomialParams> fit_initial(const Term& term, const ChainParams& params,
                                                 const SearchConfig& cfg) {
    params.validate();
    if (term.array.kind() != ArrayKind::TrialsAgreements)
        throw data_error("temporal fitting requires trials-agreements arrays");
    auto emission = make_profiled_objective(term.array);
    auto result = maximize(term.array.size(), make_posterior(emission, params, nullptr), cfg);
    return {result.best_partition, binomial_mle(term.array, result.best_partition)};
}

std::pair<Partition, BinomialParams> fit_next(const std::vector<std::string>& prev_roster,
                                              const Partition& prev, const Term& term,
                                              const ChainParams& params, const SearchConfig& cfg,
                                              Rng& align_rng) {
    params.validate();
    if (term.array.kind() != ArrayKind::TrialsAgreements)
        throw data_error("temporal fitting requires trials-agreements arrays");
    Partition aligned = align_to_roster(prev_roster, prev, term.roster(), params, align_rng);
    auto emission = make_profiled_objective(term.array);
    auto result = maximize(term.array.size(), make_posterior(emission, params, &aligned), cfg);
    return {result.best_partition, binomial_mle(term.array, result.best_partition)};
}

ClusterSequence fit_sequence(const TemporalSeries& series, const ChainParams& params, bool polish,
                             const SearchConfig& cfg) {
    params.validate();
    cfg.validate();
    if (series.terms.empty()) throw data_error("temporal series is empty");
    const int T = static_cast<int>(series.terms.size());

    std::vector<Objective> emissions;
    emissions.reserve(T);
    for (const auto& term : series.terms) {
        if (term.array.kind() != ArrayKind::TrialsAgreements)
            throw data_error("temporal fitting requires trials-agreements arrays");
        emissions.push_back(make_profiled_objective(term.array));
    }

    const Rng root(cfg.seed);
    auto term_cfg = [&](int t) {
        SearchConfig c = cfg;
        c.seed = root.substream(4, static_cast<std::uint64_t>(t)).seed();
        return c;
    };
    // alignment draws come from a per-step substream so the aligned state is a
    // deterministic function of (seed, t, previous partition)
    auto aligned_into = [&](int t, const Partition& prev_pi) {
        Rng r = root.substream(5, static_cast<std::uint64_t>(t));
        return align_to_roster(series.terms[t - 1].roster(), prev_pi, series.terms[t].roster(), params, r);
    };

    std::vector<Partition> fit(T);
    {
        auto res = maximize(series.terms[0].array.size(), make_posterior(emissions[0], params, nullptr),
                            term_cfg(0));
        fit[0] = res.best_partition;
    }
    for (int t = 1; t < T; ++t) {
        Partition aligned = aligned_into(t, fit[t - 1]);
        auto res = maximize(series.terms[t].array.size(), make_posterior(emissions[t], params, &aligned),
                            term_cfg(t));
        fit[t] = res.best_partition;
    }

    auto prior_score = [&](int t, const Partition& prev_pi, const Partition& pi) {
        if (t == 0) return ewens_pitman_log_prob(pi, params);
        return cap_transition_log_prob(aligned_into(t, prev_pi), pi, params);
    };
    auto term_score = [&](int t, const Partition& prev_pi, const Partition& pi) {
        return prior_score(t, prev_pi, pi) + emissions[t](pi);
    };

    if (polish) {
        // single-entity single-term reassignments to a fixed point
        for (int pass = 0; pass < 100; ++pass) {
            bool improved = false;
            for (int t = 0; t < T; ++t) {
                const int n = series.terms[t].array.size();
                for (int e = 0; e < n; ++e) {
                    const int k_here = fit[t].num_blocks();
                    const int targets = std::min(params.max_blocks, k_here + 1);
                    double cur = term_score(t, t > 0 ? fit[t - 1] : Partition(), fit[t]);
                    if (t + 1 < T) cur += term_score(t + 1, fit[t], fit[t + 1]);

                    for (int g = 0; g < targets; ++g) {
                        if (g == fit[t].block_of(e)) continue;
                        auto labels = fit[t].labels();
                        labels[e] = g;
                        Partition cand(std::move(labels));
                        if (cand.num_blocks() > params.max_blocks) continue;
                        double alt = term_score(t, t > 0 ? fit[t - 1] : Partition(), cand);
                        if (t + 1 < T) alt += term_score(t + 1, cand, fit[t + 1]);
                        if (alt > cur + 1e-12) {
                            fit[t] = cand;
                            cur = alt;
                            improved = true;
                        }
                    }
                }
            }
            if (!improved) break;
        }
    }

    ClusterSequence seq;
    seq.joint_score = 0;
    for (int t = 0; t < T; ++t) {
        FittedTerm ft;
        ft.id = series.terms[t].id;
        ft.roster = series.terms[t].roster();
        ft.partition = fit[t];
        ft.params = binomial_mle(series.terms[t].array, fit[t]);
        ft.score = term_score(t, t > 0 ? fit[t - 1] : Partition(), fit[t]);
        seq.joint_score += ft.score;
        seq.terms.push_back(std::move(ft));
    }
    return seq;
}

namespace {

// Display labels matched across terms by shared-member overlap so the same
// community keeps the same symbol column to column.
std::vector<std::vector<int>> display_labels(const ClusterSequence& seq) {
    std::vector<std::vector<int>> out;
    int next_display = 0;
    std::map<std::string, int> prev_display;  // entity id -> display label at previous term

    for (const auto& term : seq.terms) {
        const int k = term.partition.num_blocks();
        std::vector<std::map<int, int>> votes(k);  // block -> display -> count
        for (std::size_t i = 0; i < term.roster.size(); ++i) {
            auto it = prev_display.find(term.roster[i]);
            if (it != prev_display.end()) ++votes[term.partition.block_of(static_cast<int>(i))][it->second];
        }
        // assign display labels greedily by decreasing overlap
        std::vector<int> assign(k, -1);
        std::vector<bool> used;
        std::vector<std::tuple<int, int, int>> cand;  // (count, block, display)
        int max_display = next_display;
        for (int b = 0; b < k; ++b)
            for (auto [d, c] : votes[b]) {
                cand.emplace_back(c, b, d);
                max_display = std::max(max_display, d + 1);
            }
        used.assign(max_display, false);
        std::sort(cand.begin(), cand.end(), [](const auto& x, const auto& y) {
            if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) > std::get<0>(y);
            if (std::get<1>(x) != std::get<1>(y)) return std::get<1>(x) < std::get<1>(y);
            return std::get<2>(x) < std::get<2>(y);
        });
        for (auto& [c, b, d] : cand) {
            if (assign[b] != -1 || used[d]) continue;
            assign[b] = d;
            used[d] = true;
        }
        for (int b = 0; b < k; ++b)
            if (assign[b] == -1) assign[b] = next_display++;
        next_display = std::max(next_display, *std::max_element(assign.begin(), assign.end()) + 1);

        prev_display.clear();
        for (std::size_t i = 0; i < term.roster.size(); ++i)
            prev_display[term.roster[i]] = assign[term.partition.block_of(static_cast<int>(i))];
        out.push_back(std::move(assign));
    }
    return out;
}

std::vector<std::string> entity_union(const ClusterSequence& seq) {
    std::vector<std::string> order;
    std::set<std::string> seen;
    for (const auto& term : seq.terms)
        for (const auto& id : term.roster)
            if (seen.insert(id).second) order.push_back(id);
    return order;
}

}  // namespace

void ClusterSequence::write_csv(std::ostream& out, std::span<const std::string> header_comments) const {
    for (const auto& c : header_comments) out << "# " << c << '\n';
    auto disp = display_labels(*this);
    auto entities = entity_union(*this);

    out << "entity";
    for (const auto& term : terms) out << ',' << term.id;
    out << '\n';
    for (const auto& id : entities) {
        out << id;
        for (std::size_t t = 0; t < terms.size(); ++t) {
            out << ',';
            const auto& roster = terms[t].roster;
            auto it = std::find(roster.begin(), roster.end(), id);
            if (it != roster.end()) {
                int pos = static_cast<int>(it - roster.begin());
                out << disp[t][terms[t].partition.block_of(pos)];
            }
        }
        out << '\n';
    }
}

std::string ClusterSequence::format_table() const {
    auto disp = display_labels(*this);
    auto entities = entity_union(*this);
    const char symbols[] = "*o+x#%&@";

    std::size_t width = 6;
    for (const auto& id : entities) width = std::max(width, id.size());

    std::ostringstream out;
    out << std::string(width, ' ');
    for (const auto& term : terms) {
        std::string t = term.id;
        if (t.size() > 6) t = t.substr(t.size() - 6);
        out << ' ' << t;
    }
    out << '\n';
    for (const auto& id : entities) {
        out << id << std::string(width - id.size(), ' ');
        for (std::size_t t = 0; t < terms.size(); ++t) {
            std::string tid = terms[t].id;
            if (tid.size() > 6) tid = tid.substr(tid.size() - 6);
            const auto& roster = terms[t].roster;
            auto it = std::find(roster.begin(), roster.end(), id);
            std::string cell(tid.size(), ' ');
            if (it != roster.end()) {
                int pos = static_cast<int>(it - roster.begin());
                int d = disp[t][terms[t].partition.block_of(pos)];
                cell[cell.size() / 2] = symbols[d % 8];
            }
            out << ' ' << cell;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace interclust
